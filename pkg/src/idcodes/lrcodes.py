"""Strong induced matchings and small quasi-identifying codes around them.

Given a strong induced matching ``M`` with endpoint set ``R`` and outer
neighbourhood ``L``, the routines here produce a set ``C`` inside ``L | R``
that separates everything in ``G[L | R]`` except L-vertices with equal
neighbourhoods there, covers each matching edge, and leaves at least ``|L|/3``
vertices of ``L | R`` out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .certify import is_quasi_identifying, is_strong_induced_matching
from .errors import GraphError, PreconditionError
from .graph import Graph, bits, is_independent, mask_of


@dataclass(frozen=True)
class StrongMatching:
    M: tuple[tuple[int, int], ...]
    R: frozenset[int]
    L: frozenset[int]
    R1: frozenset[int]
    R2: frozenset[int]
    L1: frozenset[int]
    L2: frozenset[int]
    partner: dict[int, int] = field(compare=False, repr=False)

    @property
    def LR(self) -> frozenset[int]:
        return self.L | self.R

    def edges_within(self, part: frozenset[int]) -> tuple[tuple[int, int], ...]:
        return tuple(e for e in self.M if e[0] in part)


@dataclass(frozen=True)
class QuasiCode:
    C: frozenset[int]
    leftover: frozenset[int]
    variant: str = "deg2"
    sizes: dict[str, int] = field(default_factory=dict, compare=False)


def strong_matching(g: Graph, M: Iterable[tuple[int, int]]) -> StrongMatching:
    """Wrap an edge list as a :class:`StrongMatching` with the R1/R2/L1/L2 split."""
    M = tuple(sorted((min(u, v), max(u, v)) for u, v in M))
    if not is_strong_induced_matching(g, M):
        raise GraphError("not a strong induced matching")
    partner = {}
    for u, v in M:
        partner[u], partner[v] = v, u
    R = frozenset(partner)
    rmask = mask_of(R)
    lmask = 0
    for r in R:
        lmask |= g.nbr[r]
    L = frozenset(bits(lmask & ~rmask))
    R1 = frozenset(r for r in R if len(g.adj[r]) == 2 and len(g.adj[partner[r]]) == 2)
    L1 = frozenset(l for r in R1 for l in g.adj[r] if l in L)
    return StrongMatching(M, R, L, R1, R - R1, L1, L - L1, partner)


def extract_strong_matching(g: Graph, S: Iterable[int]) -> StrongMatching:
    """All edges ``uv`` (both of degree >= 2) whose other neighbours all lie in ``S``."""
    S = frozenset(S)
    if not is_independent(g, S):
        raise GraphError("S is not independent")
    smask = mask_of(S)
    M = []
    for u, v in g.edges():
        if len(g.adj[u]) < 2 or len(g.adj[v]) < 2:
            continue
        around = (g.nbr[u] | g.nbr[v]) & ~((1 << u) | (1 << v))
        if not around & ~smask:
            M.append((u, v))
    sm = strong_matching(g, M)
    lr = mask_of(sm.LR)
    # G[L u R] has no twins for a strong induced matching
    traces = {g.ball[x] & lr for x in sm.LR}
    assert len(traces) == len(sm.LR), "G[L u R] not identifiable"
    return sm


def _c_isolated(g: Graph, C: set[int] | frozenset[int], among: Iterable[int]) -> list[int]:
    cmask = mask_of(C)
    return [x for x in among if x in C and not g.nbr[x] & cmask]


def quasi_code_deg2(g: Graph, sm: StrongMatching) -> QuasiCode:
    """(L1, R1)-quasi-identifying code for the part of the matching whose vertices all have degree 2.

    Each 3-path ``l1 r1 r2 l2`` through a matching edge becomes an arc between
    ``l1`` and ``l2``; the R-vertex next to the arc's head joins the code along
    with all of L1.  Arcs are flipped bottom-up along a DFS spanning tree so
    that no non-root L-vertex ends with in-degree 1, and a root that does is
    swapped out for the far end of its unique code edge.
    """
    if any(len(g.adj[r]) != 2 for r in sm.R1):
        raise PreconditionError("R1 vertex of degree != 2")
    # arc i: (l1, r1, r2, l2); head[i] is l1 or l2
    paths: list[tuple[int, int, int, int]] = []
    for a, b in sm.edges_within(sm.R1):
        (la,) = g.adj[a] - {b}
        (lb,) = g.adj[b] - {a}
        paths.append((la, a, b, lb))
    head = [max(p[0], p[3]) for p in paths]
    indeg = {l: 0 for l in sm.L1}
    incident: dict[int, list[int]] = {l: [] for l in sm.L1}
    for i, (l1, _, _, l2) in enumerate(paths):
        indeg[head[i]] += 1
        incident[l1].append(i)
        incident[l2].append(i)

    def other(i: int, l: int) -> int:
        p = paths[i]
        return p[3] if p[0] == l else p[0]

    roots = []
    visited: set[int] = set()
    for root in sorted(sm.L1):
        if root in visited:
            continue
        roots.append(root)
        visited.add(root)
        depth = {root: 0}
        parent_arc: dict[int, int] = {}
        stack = [root]
        while stack:
            x = stack.pop()
            for i in sorted(incident[x], reverse=True):
                y = other(i, x)
                if y not in visited:
                    visited.add(y)
                    depth[y] = depth[x] + 1
                    parent_arc[y] = i
                    stack.append(y)
        for v in sorted(parent_arc, key=lambda v: (-depth[v], v)):
            if indeg[v] != 1:
                continue
            i = parent_arc[v]
            p = other(i, v)
            if head[i] == v:
                head[i] = p
                indeg[v] -= 1
                indeg[p] += 1
            else:
                head[i] = v
                indeg[v] += 1
                indeg[p] -= 1

    def code_r(i: int) -> int:
        l1, r1, r2, l2 = paths[i]
        return r2 if head[i] == l2 else r1

    C = set(sm.L1) | {code_r(i) for i in range(len(paths))}
    for root in roots:
        if indeg[root] != 1:
            continue
        (i,) = [i for i in incident[root] if head[i] == root]
        r = code_r(i)
        C.discard(root)
        C.add(sm.partner[r])

    C = frozenset(C)
    part = sm.L1 | sm.R1
    assert 2 * len(C) == 2 * len(sm.L1) + len(sm.R1)
    assert 2 * len(C & sm.L1) >= len(sm.L1)
    assert not _c_isolated(g, C, sm.R1), "R1 vertex isolated in C1"
    assert is_quasi_identifying(g, sm.edges_within(sm.R1), C), "C1 not quasi-identifying"
    return QuasiCode(C, part - C, "deg2", {"C1": len(C)})


def _repair_isolated(g: Graph, sm: StrongMatching, C: set[int]) -> None:
    for l in sorted(sm.L):
        if l in C and not g.nbr[l] & mask_of(C):
            C.discard(l)
            C.add(min(r for r in g.adj[l] if r in sm.R))


def _pairs(sm: StrongMatching) -> list[tuple[int, int]]:
    return list(sm.edges_within(sm.R2))


def build_code_a(g: Graph, sm: StrongMatching, C1: frozenset[int]) -> set[int]:
    L = sm.L
    Ca = set(C1) | set(sm.L2)
    stars = []
    for r, rp in _pairs(sm):
        star = min(x for x in (r, rp) if len(g.adj[x] & L) >= 2)
        Ca.add(star)
        stars.append(star)
    for star in stars:
        if len(g.adj[star] & L & Ca) < 2:
            Ca.add(min(g.adj[star] & (L - Ca)))
    _repair_isolated(g, sm, Ca)
    return Ca


def build_code_b(g: Graph, sm: StrongMatching, C1: frozenset[int]) -> set[int]:
    L = sm.L
    Cb = set(C1) | set(sm.R2)
    for r, rp in _pairs(sm):
        Cb.add(min((g.adj[r] | g.adj[rp]) & L))
    _repair_isolated(g, sm, Cb)
    return Cb


def quasi_code_general(g: Graph, sm: StrongMatching) -> QuasiCode:
    """(L, R)-quasi-identifying code without C-isolated vertices, leaving at least |L|/3 out.

    Builds both candidate codes (one keeping all of L2, one keeping all of R2)
    on top of the degree-2 code for R1 and returns the smaller, preferring the
    first on ties.
    """
    C1 = quasi_code_deg2(g, sm).C
    Ca = build_code_a(g, sm, C1)
    Cb = build_code_b(g, sm, C1)
    l1, r1, l2, r2 = len(sm.L1), len(sm.R1), len(sm.L2), len(sm.R2)
    # size ledgers, doubled to stay in integers
    assert 2 * len(Ca) <= 2 * l1 + r1 + 2 * l2 + r2 + min(l1, r2), "C_a exceeds its size ledger"
    assert 2 * len(Cb) <= 2 * l1 + r1 + 3 * r2, "C_b exceeds its size ledger"
    for name, cand in (("a", Ca), ("b", Cb)):
        assert is_quasi_identifying(g, sm, cand), f"C_{name} not quasi-identifying"
        assert not _c_isolated(g, cand, cand), f"C_{name} has isolated vertices"
        for u, v in sm.M:
            assert u in cand or v in cand
    variant, C = ("a", Ca) if len(Ca) <= len(Cb) else ("b", Cb)
    C = frozenset(C)
    leftover = sm.LR - C
    assert 3 * len(leftover) >= len(sm.L), "fewer than |L|/3 vertices left out"
    return QuasiCode(C, leftover, variant, {"C1": len(C1), "C_a": len(Ca), "C_b": len(Cb)})
