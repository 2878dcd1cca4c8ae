"""Named graph families, seeded random generators, and known identifying-code numbers.

All generators return triangle-free graphs.  Random kinds draw from
``random.Random(seed)`` only, so a spec always produces the same graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .bounds import tree_gamma
from .errors import GraphError
from .graph import Graph, components, induced_subgraph, is_triangle_free

KINDS = {
    "path": 1,
    "cycle": 1,
    "star": 1,
    "complete_bipartite": 2,
    "kary_tree": 2,
    "subdivided_complete": 1,
    "random_bipartite": 4,
    "random_triangle_free": 3,
    # connected variants with a degree cap, used by the test suites
    "random_connected_triangle_free": 4,
    "random_connected_bipartite": 5,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    args: tuple = ()
    name: str = ""

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")
        if len(self.args) != KINDS[self.kind]:
            raise GraphError(f"{self.kind} takes {KINDS[self.kind]} arguments, got {len(self.args)}")

    @property
    def label(self) -> str:
        return self.name or "_".join([self.kind, *map(str, self.args)])


# -- convenience constructors ------------------------------------------------

def path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def star(n: int) -> FamilySpec:
    """``K_{1,n-1}``: ``n`` vertices in total, centre 0."""
    return FamilySpec("star", (n,))


def complete_bipartite(a: int, b: int) -> FamilySpec:
    return FamilySpec("complete_bipartite", (a, b))


def kary_tree(arity: int, height: int) -> FamilySpec:
    return FamilySpec("kary_tree", (arity, height))


def subdivided_complete(n: int) -> FamilySpec:
    return FamilySpec("subdivided_complete", (n,))


def random_bipartite(a: int, b: int, p: float, seed: int) -> FamilySpec:
    return FamilySpec("random_bipartite", (a, b, p, seed))


def random_triangle_free(n: int, m: int, seed: int) -> FamilySpec:
    return FamilySpec("random_triangle_free", (n, m, seed))


def random_connected_triangle_free(n: int, m: int, max_degree: int, seed: int) -> FamilySpec:
    return FamilySpec("random_connected_triangle_free", (n, m, max_degree, seed))


def random_connected_bipartite(a: int, b: int, m: int, max_degree: int, seed: int) -> FamilySpec:
    return FamilySpec("random_connected_bipartite", (a, b, m, max_degree, seed))


# -- generators --------------------------------------------------------------

def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def _path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def _star(n: int) -> Graph:
    _need(n >= 1, "star needs n >= 1")
    return Graph.from_edge_list(n, [(0, i) for i in range(1, n)])


def _complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete_bipartite needs a, b >= 1")
    return Graph.from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _kary_tree(arity: int, height: int) -> Graph:
    _need(arity >= 1 and height >= 0, "kary_tree needs arity >= 1 and height >= 0")
    edges = []
    level = [0]
    n = 1
    for _ in range(height):
        nxt = []
        for p in level:
            for _ in range(arity):
                edges.append((p, n))
                nxt.append(n)
                n += 1
        level = nxt
    return Graph.from_edge_list(n, edges)


def _subdivided_complete(k: int) -> Graph:
    # every edge xy of K_k becomes the path x a b y
    _need(k >= 1, "subdivided_complete needs n >= 1")
    edges = []
    n = k
    for x, y in combinations(range(k), 2):
        a, b = n, n + 1
        n += 2
        edges += [(x, a), (a, b), (b, y)]
    return Graph.from_edge_list(n, edges)


def _random_bipartite(a: int, b: int, p: float, seed: int) -> Graph:
    _need(a >= 1 and b >= 1, "random_bipartite needs a, b >= 1")
    _need(0 <= p <= 1, "p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p]
    return Graph.from_edge_list(a + b, edges)


def _random_triangle_free(n: int, m: int, seed: int) -> Graph:
    """Propose uniform non-edges; accept unless the endpoints share a neighbour.

    Stops at ``m`` edges or after ``50 m`` rejected proposals.
    """
    _need(n >= 1 and m >= 0, "random_triangle_free needs n >= 1, m >= 0")
    rng = random.Random(seed)
    adj = [0] * n
    edges: list[tuple[int, int]] = []
    rejections = 0
    while len(edges) < m and rejections < 50 * m and n >= 2:
        u, v = rng.sample(range(n), 2)
        if (adj[u] >> v) & 1 or adj[u] & adj[v]:
            rejections += 1
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        edges.append((u, v))
    return Graph.from_edge_list(n, edges)


def _grow_connected(n: int, m: int, max_degree: int, rng: random.Random, allowed) -> Graph:
    # random spanning tree first (connected, triangle-free), then extra edges
    # with the same rejection rule; ``allowed(u, v)`` restricts candidate pairs
    adj = [0] * n
    deg = [0] * n
    edges: list[tuple[int, int]] = []

    def add(u: int, v: int) -> None:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        edges.append((u, v))

    order = list(range(n))
    rng.shuffle(order)
    placed = [order[0]]
    pending = order[1:]
    while pending:
        # vertices with no admissible attachment point yet wait for a later pass
        waiting = []
        for v in pending:
            cands = [u for u in placed if deg[u] < max_degree and allowed(u, v)]
            if cands:
                add(rng.choice(cands), v)
                placed.append(v)
            else:
                waiting.append(v)
        if len(waiting) == len(pending):
            raise GraphError("degree cap too small to build a spanning tree")
        pending = waiting
    rejections = 0
    while len(edges) < m and rejections < 50 * m:
        u, v = rng.sample(range(n), 2)
        if (
            not allowed(u, v)
            or (adj[u] >> v) & 1
            or adj[u] & adj[v]
            or deg[u] >= max_degree
            or deg[v] >= max_degree
        ):
            rejections += 1
            continue
        add(u, v)
    return Graph.from_edge_list(n, edges)


def _random_connected_triangle_free(n: int, m: int, max_degree: int, seed: int) -> Graph:
    _need(n >= 2 and max_degree >= 2, "needs n >= 2 and max_degree >= 2")
    return _grow_connected(n, m, max_degree, random.Random(seed), lambda u, v: True)


def _random_connected_bipartite(a: int, b: int, m: int, max_degree: int, seed: int) -> Graph:
    _need(a >= 1 and b >= 1 and max_degree >= 2, "needs a, b >= 1 and max_degree >= 2")
    return _grow_connected(a + b, m, max_degree, random.Random(seed), lambda u, v: (u < a) != (v < a))


_GENERATORS = {
    "path": _path,
    "cycle": _cycle,
    "star": _star,
    "complete_bipartite": _complete_bipartite,
    "kary_tree": _kary_tree,
    "subdivided_complete": _subdivided_complete,
    "random_bipartite": _random_bipartite,
    "random_triangle_free": _random_triangle_free,
    "random_connected_triangle_free": _random_connected_triangle_free,
    "random_connected_bipartite": _random_connected_bipartite,
}


def generate(spec: FamilySpec) -> Graph:
    g = _GENERATORS[spec.kind](*spec.args)
    assert is_triangle_free(g), f"{spec.label} produced a triangle"
    return g


def known_gamma_id(spec: FamilySpec) -> int | None:
    """Closed-form identifying-code number, or ``None`` outside the covered cases.

    Covered: odd cycles of order at least 7, complete ``(Δ-1)``-ary trees of
    height at least 2, ``K_{Δ,Δ}`` with ``Δ >= 3`` and stars on at least 3
    vertices.
    """
    k, a = spec.kind, spec.args
    if k == "cycle" and a[0] >= 7 and a[0] % 2 == 1:
        return (a[0] + 3) // 2
    if k == "kary_tree" and a[0] >= 2 and a[1] >= 2:
        arity, height = a
        n = sum(arity ** i for i in range(height + 1))
        return tree_gamma(n, arity + 1)
    if k == "complete_bipartite" and a[0] == a[1] and a[0] >= 3:
        return 2 * a[0] - 2
    if k == "star" and a[0] >= 3:
        return a[0] - 1
    return None


# -- helpers -----------------------------------------------------------------

def largest_component(g: Graph) -> Graph:
    """Relabelled induced subgraph on a largest component (lowest ids win ties)."""
    comps = components(g)
    if not comps:
        return g
    best = max(comps, key=lambda c: (len(c), -min(c)))
    return induced_subgraph(g, best)[0]


def plant_false_twins(g: Graph, classes: int, size: int, seed: int) -> Graph:
    """Give ``classes`` random non-isolated vertices ``size - 1`` extra copies each.

    A copy gets exactly the original's neighbours, so it is a false twin of
    it; since neighbourhoods of a triangle-free graph are independent, no
    triangle appears.
    """
    _need(size >= 2 and classes >= 0, "size must be >= 2")
    rng = random.Random(seed)
    pool = [v for v in range(g.n) if g.adj[v]]
    _need(classes <= len(pool), "not enough non-isolated vertices")
    edges = list(g.edges())
    n = g.n
    for v in sorted(rng.sample(pool, classes)):
        for _ in range(size - 1):
            edges += [(n, w) for w in sorted(g.adj[v])]
            n += 1
    return Graph.from_edge_list(n, edges)


def covered_specs() -> list[FamilySpec]:
    """Small members of every family with a known value, all within exact-search reach."""
    return [
        cycle(7),
        cycle(9),
        cycle(11),
        cycle(13),
        cycle(15),
        kary_tree(2, 2),
        kary_tree(2, 3),
        kary_tree(3, 2),
        complete_bipartite(3, 3),
        complete_bipartite(4, 4),
        complete_bipartite(5, 5),
        star(3),
        star(5),
        star(8),
        star(12),
    ]


__all__ = [
    "FamilySpec",
    "complete_bipartite",
    "covered_specs",
    "cycle",
    "generate",
    "kary_tree",
    "known_gamma_id",
    "largest_component",
    "path",
    "plant_false_twins",
    "random_bipartite",
    "random_connected_bipartite",
    "random_connected_triangle_free",
    "random_triangle_free",
    "star",
    "subdivided_complete",
]
