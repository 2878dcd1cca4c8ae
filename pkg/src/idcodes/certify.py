"""Checkers for the definitional properties of (quasi-)identifying codes.

Every check works on traces ``B(u) & C`` held as integer bitmasks.  Vertices
are grouped by trace, so a pair is unseparated exactly when it lands in the
same group; this keeps full failure enumeration linear in n plus the size of
the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .errors import GraphError
from .graph import Graph, bits, distance_two, is_independent, mask_of


@dataclass(frozen=True, order=True)
class SeparationFailure:
    u: int
    v: int | None
    reason: Literal["undominated", "unseparated"]


def _trace_groups(ball: Sequence[int], vertices: Iterable[int], cmask: int) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = {}
    for u in vertices:
        groups.setdefault(ball[u] & cmask, []).append(u)
    return groups


def _failures_from_groups(groups: dict[int, list[int]]) -> list[SeparationFailure]:
    out = []
    for trace, members in groups.items():
        if trace == 0:
            out.extend(SeparationFailure(u, None, "undominated") for u in members)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                out.append(SeparationFailure(min(u, v), max(u, v), "unseparated"))
    out.sort(key=lambda f: (f.reason != "undominated", f.u, -1 if f.v is None else f.v))
    return out


def is_dominating(g: Graph, C: Iterable[int], U: Iterable[int] | None = None) -> bool:
    cmask = mask_of(C)
    targets = range(g.n) if U is None else U
    return all(g.ball[u] & cmask for u in targets)


def identifying_failures(g: Graph, C: Iterable[int]) -> list[SeparationFailure]:
    """Every undominated vertex and every unseparated pair; empty iff ``C`` identifies ``g``."""
    cmask = mask_of(C)
    if cmask >> g.n:
        raise GraphError("code contains out-of-range vertices")
    return _failures_from_groups(_trace_groups(g.ball, range(g.n), cmask))


def is_identifying_code(g: Graph, C: Iterable[int]) -> bool:
    cmask = mask_of(C)
    seen = set()
    for b in g.ball:
        t = b & cmask
        if not t or t in seen:
            return False
        seen.add(t)
    return True


def is_s_identifying(g: Graph, S: Iterable[int], C: Iterable[int]) -> bool:
    """Whether ``C`` is an identifying code of ``G[S]``.

    For ``C`` inside ``S`` the trace of ``u`` in ``G[S]`` equals ``B_G(u) & C``,
    so no relabelled subgraph is needed.
    """
    smask, cmask = mask_of(S), mask_of(C)
    if cmask & ~smask:
        raise GraphError("C is not a subset of S")
    seen = set()
    for u in bits(smask):
        t = g.ball[u] & cmask
        if not t or t in seen:
            return False
        seen.add(t)
    return True


def s_isolated_vertices(g: Graph, S: Iterable[int]) -> frozenset[int]:
    smask = mask_of(S)
    return frozenset(x for x in bits(smask) if not g.nbr[x] & smask)


def matching_sides(g: Graph, M: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Bitmasks ``(R, L)`` with ``R`` the endpoints of ``M`` and ``L = N(R) \\ R``."""
    rmask = 0
    for u, v in M:
        rmask |= (1 << u) | (1 << v)
    nb = 0
    for r in bits(rmask):
        nb |= g.nbr[r]
    return rmask, nb & ~rmask


def is_strong_induced_matching(g: Graph, M) -> bool:
    M = getattr(M, "M", M)
    endpoints: set[int] = set()
    for u, v in M:
        if v not in g.adj[u]:
            raise GraphError(f"({u}, {v}) is not an edge")
        if u in endpoints or v in endpoints:
            return False
        endpoints.update((u, v))
    rmask, lmask = matching_sides(g, M)
    # induced: inside R every vertex sees exactly its partner
    for u, v in M:
        if g.nbr[u] & rmask != 1 << v or g.nbr[v] & rmask != 1 << u:
            return False
    if any(g.nbr[x] & lmask for x in bits(lmask)):
        return False
    return all(g.nbr[r] & lmask for r in bits(rmask))


def is_quasi_identifying(g: Graph, M, C: Iterable[int]) -> bool:
    """The three (L, R)-quasi-identifying conditions, evaluated inside ``G[L u R]``.

    ``M`` is either a list of matching edges or anything with an ``M`` attribute
    (a :class:`~idcodes.lrcodes.StrongMatching`).
    """
    M = getattr(M, "M", M)
    rmask, lmask = matching_sides(g, M)
    lr = rmask | lmask
    cmask = mask_of(C)
    if cmask & ~lr:
        raise GraphError("C is not a subset of L u R")
    for u, v in M:
        if not (cmask >> u) & 1 and not (cmask >> v) & 1:
            return False
    groups = _trace_groups(g.ball, bits(lr), cmask)
    if 0 in groups:
        return False
    for members in groups.values():
        if len(members) < 2:
            continue
        # only L-vertices with equal neighbourhoods in G[L u R] may share a trace
        if any(not (lmask >> u) & 1 for u in members):
            return False
        if len({g.nbr[u] & lr for u in members}) != 1:
            return False
    return True


def check_complement_code_conditions(g: Graph, S: Iterable[int]) -> bool:
    """Whether independent ``S`` meets the four conditions making ``V \\ S`` a code.

    (1) no isolated vertex of G in S; (2) no false-twin pair inside S; (3) each
    degree-1 vertex has a vertex at distance 2 outside S; (4) ``G[V \\ S]`` has
    no isolated edge.  When they hold, the complement is re-checked directly.
    """
    S = sorted(set(S))
    if not is_independent(g, S):
        raise GraphError("S is not independent")
    smask = mask_of(S)
    if any(not g.nbr[x] for x in S):
        return False
    if len({g.nbr[x] for x in S}) != len(S):
        return False
    for v in range(g.n):
        if len(g.adj[v]) == 1 and not distance_two(g, v) & ~smask:
            return False
    cmask = ((1 << g.n) - 1) & ~smask
    for u in bits(cmask):
        inner = g.nbr[u] & cmask
        if inner and inner & (inner - 1) == 0:
            w = inner.bit_length() - 1
            if g.nbr[w] & cmask == 1 << u:
                return False
    complement = bits(cmask)
    if identifying_failures(g, complement):
        raise AssertionError("complement of S fails to identify despite all four conditions")
    return True
