"""Exhaustive minimum identifying codes for small graphs.

Two independent routes: a branch-and-bound hitting-set search over the
separating sets ``B(u) ^ B(v)`` and the domination sets ``B(u)``, and a plain
subset enumeration kept deliberately dumb so the two can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bounds import lower_bound as _lower_bound
from .certify import is_identifying_code
from .errors import PreconditionError
from .graph import Graph, bits, is_identifiable

DEFAULT_VERTEX_LIMIT = 16


@dataclass(frozen=True)
class ExactResult:
    size: int
    witness: frozenset[int]
    explored: int


def lower_bound(n: int, delta: int) -> int:
    return _lower_bound(n, delta)


def _check_input(g: Graph, vertex_limit: int) -> None:
    if g.n > vertex_limit:
        raise PreconditionError("vertex limit", f"n={g.n} exceeds the exact-search limit {vertex_limit}")
    if not is_identifiable(g):
        raise PreconditionError("not identifiable", "graph has twins (equal closed balls)")


def separation_constraints(g: Graph) -> list[int]:
    """Minimal family of vertex sets that an identifying code must hit."""
    sets = set(g.ball)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            sets.add(g.ball[u] ^ g.ball[v])
    # any superset of another constraint is implied by it
    ordered = sorted(sets, key=lambda s: (s.bit_count(), s))
    kept: list[int] = []
    for s in ordered:
        if not any(k & s == k for k in kept):
            kept.append(s)
    return kept


class _Search:
    def __init__(self, constraints: list[int]):
        self.constraints = constraints
        self.explored = 0

    def _packing_bound(self, unhit: list[int], allowed: int) -> int:
        # pairwise-disjoint unhit constraints each need their own code vertex
        used = 0
        count = 0
        for s in sorted(unhit, key=lambda s: (s & allowed).bit_count()):
            s &= allowed
            if not s & used:
                used |= s
                count += 1
        return count

    def run(self, chosen: int, forbidden: int, budget: int) -> int | None:
        self.explored += 1
        allowed = ~forbidden
        unhit = [s for s in self.constraints if not s & chosen]
        if not unhit:
            return chosen
        if budget == 0:
            return None
        best = min(unhit, key=lambda s: (s & allowed).bit_count())
        candidates = best & allowed
        if not candidates:
            return None
        if self._packing_bound(unhit, allowed) > budget:
            return None
        for x in bits(candidates):
            found = self.run(chosen | (1 << x), forbidden, budget - 1)
            if found is not None:
                return found
            forbidden |= 1 << x
        return None


def min_identifying_code(g: Graph, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> ExactResult:
    _check_input(g, vertex_limit)
    if g.n == 0:
        return ExactResult(0, frozenset(), 0)
    search = _Search(separation_constraints(g))
    for k in range(lower_bound(g.n, max(g.max_degree(), 1)), g.n + 1):
        found = search.run(0, 0, k)
        if found is not None:
            witness = frozenset(bits(found))
            assert is_identifying_code(g, witness)
            return ExactResult(len(witness), witness, search.explored)
    raise AssertionError("identifiable graph without an identifying code")


def naive_min_identifying_code(g: Graph, vertex_limit: int = 12) -> ExactResult:
    """Smallest identifying code by enumerating every subset, smallest size first."""
    _check_input(g, vertex_limit)
    explored = 0
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            explored += 1
            if is_identifying_code(g, combo):
                return ExactResult(k, frozenset(combo), explored)
    raise AssertionError("identifiable graph without an identifying code")
