"""Immutable simple undirected graphs over vertex ids ``0..n-1``.

Every vertex carries its open neighbourhood both as a ``frozenset`` and as a
Python ``int`` bitmask (bit ``u`` set iff ``u`` is a neighbour).  The bitmask
form makes ball intersections and neighbourhood equality tests word-parallel,
which is what keeps the twin detection and the certifiers near O(n^2 / 64).
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import GraphError


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Ascending list of the set bits of ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    __slots__ = ("n", "adj", "nbr", "ball", "m")

    def __init__(self, n: int, adj: Iterable[Iterable[int]]):
        self.n = n
        self.adj = tuple(frozenset(a) for a in adj)
        if len(self.adj) != n:
            raise GraphError(f"adjacency has {len(self.adj)} rows, expected {n}")
        self.nbr = tuple(mask_of(a) for a in self.adj)
        self.ball = tuple(self.nbr[v] | (1 << v) for v in range(n))
        self.m = sum(len(a) for a in self.adj) // 2

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise GraphError("negative vertex count")
        adj: list[set[int]] = [set() for _ in range(n)]
        dups = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if v in adj[u]:
                dups += 1
                continue
            adj[u].add(v)
            adj[v].add(u)
        if dups:
            warnings.warn(f"{dups} duplicate edge(s) collapsed", stacklevel=2)
        return cls(n, adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.nbr == other.nbr

    def __hash__(self) -> int:
        return hash((self.n, self.nbr))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield u, v

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def average_degree(self) -> Fraction:
        return Fraction(2 * self.m, self.n) if self.n else Fraction(0)

    def closed_ball(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adj[v] | {v}

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")


# Module-level spellings of the accessors, matching how the rest of the
# package calls them.

def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


def closed_ball(g: Graph, v: int) -> frozenset[int]:
    return g.closed_ball(v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def max_degree(g: Graph) -> int:
    return g.max_degree()


def is_triangle_free(g: Graph) -> bool:
    nbr = g.nbr
    for u, v in g.edges():
        if nbr[u] & nbr[v]:
            return False
    return True


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    nbr = g.nbr
    for u, v in g.edges():
        common = nbr[u] & nbr[v]
        if common:
            return u, v, bits(common & -common)[0]
    return None


def is_identifiable(g: Graph) -> bool:
    seen: set[int] = set()
    for b in g.ball:
        if b in seen:
            return False
        seen.add(b)
    return True


def twin_pairs(g: Graph) -> list[tuple[int, int]]:
    """All pairs ``u < v`` with equal closed balls."""
    groups: dict[int, list[int]] = {}
    for v, b in enumerate(g.ball):
        groups.setdefault(b, []).append(v)
    return [(a, b) for grp in groups.values() for i, a in enumerate(grp) for b in grp[i + 1:]]


@dataclass(frozen=True)
class FalseTwinPartition:
    classes: tuple[frozenset[int], ...]

    @property
    def nontrivial(self) -> tuple[frozenset[int], ...]:
        return tuple(c for c in self.classes if len(c) >= 2)

    @property
    def X(self) -> frozenset[int]:
        return frozenset().union(*self.nontrivial)

    def Y(self, n: int) -> frozenset[int]:
        return frozenset(range(n)) - self.X


def false_twin_classes(g: Graph) -> FalseTwinPartition:
    # Equal open neighbourhoods force non-adjacency (no loops), so grouping by
    # the neighbourhood bitmask is exactly the false-twin relation.
    groups: dict[int, list[int]] = {}
    for v, nb in enumerate(g.nbr):
        groups.setdefault(nb, []).append(v)
    classes = sorted((frozenset(grp) for grp in groups.values()), key=min)
    return FalseTwinPartition(tuple(classes))


def components(g: Graph) -> list[frozenset[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def induced_subgraph(g: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Relabelled ``G[S]`` plus ``back`` where ``back[i]`` is the original id of vertex ``i``."""
    back = sorted(set(S))
    for v in back:
        g._check(v)
    index = {v: i for i, v in enumerate(back)}
    adj = [[index[w] for w in g.adj[v] if w in index] for v in back]
    return Graph(len(back), adj), back


def is_independent(g: Graph, S: Iterable[int]) -> bool:
    mask = mask_of(S)
    return all(not (g.nbr[v] & mask) for v in bits(mask))


def bfs_distances(g: Graph, source: int, limit: int | None = None) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if limit is not None and dist[u] >= limit:
            continue
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_two(g: Graph, v: int) -> int:
    """Bitmask of the vertices at distance exactly 2 from ``v``."""
    reach = 0
    for w in g.adj[v]:
        reach |= g.nbr[w]
    return reach & ~g.ball[v]
