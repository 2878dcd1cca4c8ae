"""Independent sets with guaranteed sizes in triangle-free graphs.

The Shearer set is built by a derandomised greedy.  With
``f(d) = (d(ln d - 1) + 1) / (d - 1)^2`` and potential ``Phi(H) = f(avg deg H) |V(H)|``,
deleting a closed ball ``B(v)`` leaves a graph whose potential is bounded
below, by convexity of ``f``, by a quantity linear in ``deg(v)`` and in the
degree sum ``s(v)`` of v's neighbours.  The average of that linear bound over
all v is at least ``Phi(H) - 1`` (this is exactly the differential equation
``(d+1) f = 1 + (d - d^2) f'`` that defines ``f``), so the vertex maximising
it never loses more than one unit of potential per pick.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import bounds
from .errors import ColouringError, PreconditionError
from .graph import (
    Graph,
    bfs_distances,
    distance_two,
    false_twin_classes,
    find_triangle,
    induced_subgraph,
    is_independent,
    mask_of,
)


def _assert_independent(g: Graph, S: Iterable[int]) -> None:
    if not is_independent(g, S):
        raise AssertionError("constructed set is not independent")


def _peel_matching(g: Graph, alive: np.ndarray) -> list[int]:
    """Max-degree <= 1 remainder: every isolated vertex and one end of each edge."""
    out = []
    for v in np.flatnonzero(alive):
        v = int(v)
        if not alive[v]:
            continue
        out.append(v)
        alive[v] = False
        for w in g.adj[v]:
            alive[w] = False
    return out


def shearer_independent_set(g: Graph) -> frozenset[int]:
    """Independent set of size at least ``f(avg degree) * n``; the bound is asserted on return."""
    tri = find_triangle(g)
    if tri is not None:
        raise PreconditionError("triangle", f"triangle {tri} present")
    n = g.n
    if n == 0:
        return frozenset()
    alive = np.ones(n, dtype=bool)
    deg = np.array([len(a) for a in g.adj], dtype=np.float64)
    nbsum = np.array([sum(len(g.adj[w]) for w in g.adj[v]) for v in range(n)], dtype=np.float64)
    n_alive, m_alive = n, g.m
    chosen: list[int] = []

    def drop(x: int) -> None:
        # remove x; neighbours lose one degree, their neighbours see that in nbsum
        nonlocal m_alive
        alive[x] = False
        for y in g.adj[x]:
            if not alive[y]:
                continue
            m_alive -= 1
            nbsum[y] -= deg[x]
            deg[y] -= 1
            for z in g.adj[y]:
                if alive[z]:
                    nbsum[z] -= 1

    while n_alive:
        if m_alive == 0 or deg[alive].max() <= 1:
            chosen.extend(_peel_matching(g, alive))
            break
        dbar = 2.0 * m_alive / n_alive
        f = bounds.shearer_fraction_float(dbar)
        fp = bounds.shearer_slope_float(dbar)
        score = (deg + 1.0) * (dbar * fp - f) - 2.0 * fp * nbsum
        score[~alive] = -np.inf
        v = int(np.argmax(score))
        chosen.append(v)
        ball = [v] + [w for w in g.adj[v] if alive[w]]
        for x in ball:
            drop(x)
        n_alive -= len(ball)

    S = frozenset(chosen)
    _assert_independent(g, S)
    need = bounds.scale(bounds.shearer_fraction(g.average_degree()), n)
    if not bounds.at_least(len(S), need):
        raise AssertionError(f"Shearer guarantee violated: |S|={len(S)} < {bounds.to_float(need):.4f}")
    return S


def chromatic_independent_set(g: Graph, k: int) -> frozenset[int]:
    """Largest colour class of a proper ``k``-colouring (so ``k |S| >= n``)."""
    colour = _two_colouring(g) if k == 2 else _greedy_colouring(g, k)
    if colour is None:
        raise ColouringError("colouring", f"could not find a proper {k}-colouring")
    classes: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(colour):
        classes[c].append(v)
    S = frozenset(max(classes, key=len)) if g.n else frozenset()
    _assert_independent(g, S)
    assert k * len(S) >= g.n
    return S


def _two_colouring(g: Graph) -> list[int] | None:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        for v, d in bfs_distances(g, s).items():
            colour[v] = d % 2
    for u, v in g.edges():
        if colour[u] == colour[v]:
            return None
    return colour


def _greedy_by_order(g: Graph, order: list[int], k: int) -> list[int] | None:
    colour = [-1] * g.n
    for v in order:
        used = {colour[w] for w in g.adj[v]}
        c = next(c for c in range(len(used) + 1) if c not in used)
        if c >= k:
            return None
        colour[v] = c
    return colour


def smallest_last_order(g: Graph) -> list[int]:
    deg = [len(a) for a in g.adj]
    removed = [False] * g.n
    stack = []
    for _ in range(g.n):
        v = min((u for u in range(g.n) if not removed[u]), key=lambda u: (deg[u], u))
        removed[v] = True
        stack.append(v)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
    return stack[::-1]


def _greedy_colouring(g: Graph, k: int) -> list[int] | None:
    by_degree = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    colour = _greedy_by_order(g, by_degree, k)
    if colour is None:
        # smallest-last uses at most degeneracy + 1 colours
        colour = _greedy_by_order(g, smallest_last_order(g), k)
    return colour


@dataclass(frozen=True)
class FractionProvider:
    """Where the independent sets come from, and the fraction of vertices they guarantee.

    ``fraction(delta)`` must hold for every subgraph of the input; the
    construction uses ``min(1/3, fraction(delta))``.
    """

    kind: str
    fraction: Callable[[int], bounds.Real]
    independent_set: Callable[[Graph], frozenset[int]]
    k: int | None = None
    label: str = field(default="")

    def guaranteed_fraction(self, delta: int) -> bounds.Real:
        return bounds.rmin(Fraction(1, 3), self.fraction(delta))

    @property
    def name(self) -> str:
        return self.label or (f"{self.kind}({self.k})" if self.k else self.kind)

    @classmethod
    def shearer(cls) -> FractionProvider:
        return cls("shearer", bounds.degree_fraction, shearer_independent_set)

    @classmethod
    def chromatic(cls, k: int) -> FractionProvider:
        if k < 1:
            raise ValueError("k must be positive")
        return cls(
            "chromatic",
            lambda delta: Fraction(1, k),
            lambda h: chromatic_independent_set(h, k),
            k=k,
        )

    @classmethod
    def custom(cls, fraction, independent_set, label: str = "custom") -> FractionProvider:
        return cls("custom", fraction, independent_set, label=label)


def good_independent_set(g: Graph, Y: Iterable[int], provider: FractionProvider | None = None) -> frozenset[int]:
    """Independent ``S`` inside ``Y`` (the vertices without a false twin) such that

    1. every degree-1 vertex of ``g`` has a vertex at distance 2 outside ``S``;
    2. ``|S| >= f'(Δ) |Y|`` where ``f'`` comes from ``provider`` (Shearer by default).

    Degree-1 vertices of ``Y`` go into ``S`` directly; each one reserves its
    neighbour and the lowest-id vertex at distance 2, and the rest of ``Y`` is
    handed to the provider.
    """
    provider = provider or FractionProvider.shearer()
    Y = sorted(set(Y))
    delta = g.max_degree()
    if delta < 3:
        raise PreconditionError("maximum degree < 3")
    if set(Y) & false_twin_classes(g).X:
        raise PreconditionError("Y contains a vertex with a false twin")
    S1 = [y for y in Y if len(g.adj[y]) == 1]
    T1: set[int] = set()
    hub_of: dict[int, int] = {}
    for s in S1:
        (w,) = g.adj[s]
        # two degree-1 vertices of Y sharing a neighbour would be false twins
        if w in hub_of:
            raise AssertionError(f"degree-1 vertices {hub_of[w]} and {s} closer than 3")
        hub_of[w] = s
        others = sorted(g.adj[w] - {s})
        if not others:
            raise PreconditionError("not identifiable", f"isolated edge {s}-{w}")
        T1.update((s, w, others[0]))
    Yset = set(Y)
    Y2 = sorted(Yset - T1)
    sub, back = induced_subgraph(g, Y2)
    S2 = {back[i] for i in provider.independent_set(sub)}
    S = frozenset(S1) | frozenset(S2)
    _assert_independent(g, S)
    if not bounds.at_least(len(S), bounds.scale(provider.guaranteed_fraction(delta), len(Y))):
        raise AssertionError("independent set smaller than the guaranteed fraction of Y")
    smask = mask_of(S)
    for u in range(g.n):
        if len(g.adj[u]) == 1 and not distance_two(g, u) & ~smask:
            raise AssertionError(f"degree-1 vertex {u} has every distance-2 vertex in S")
    return S
