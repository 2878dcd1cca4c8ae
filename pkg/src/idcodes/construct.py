"""Identifying codes of size at most ``n - n / (Δ + 3Δ / (ln Δ - 1))`` in triangle-free graphs.

Two routes, chosen by how many vertices have a false twin:

* few twins: take a large independent set ``S`` among twin-free vertices,
  complement it, and patch the isolated edges of ``G - S`` with a
  quasi-identifying code on the strong induced matching they form;
* many twins: drop one representative from every false-twin class.

Every returned code is re-certified and compared against its bound before
the report is handed back.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator

from . import bounds
from .certify import identifying_failures, is_s_identifying
from .errors import CertificationError, ColouringError, PreconditionError
from .graph import (
    FalseTwinPartition,
    Graph,
    false_twin_classes,
    find_triangle,
    is_connected,
    is_identifiable,
    mask_of,
)
from .indep import FractionProvider, chromatic_independent_set, good_independent_set
from .lrcodes import extract_strong_matching, quasi_code_general

CASE1 = "case1_matching"
CASE2 = "case2_false_twins"


@dataclass
class ConstructionReport:
    code: frozenset[int]
    case_taken: str
    variant: str
    n: int
    delta: int
    bound_value: bounds.Real
    certified: bool = False
    timings: dict[str, float] = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    # intermediate objects of the chosen branch (independent set, matching, quasi-code)
    artifacts: dict = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return len(self.code)

    @property
    def bound_float(self) -> float:
        return bounds.to_float(self.bound_value)


class _Clock:
    def __init__(self) -> None:
        self.timings: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = self.timings.get(name, 0.0) + time.perf_counter() - t0


def check_preconditions(g: Graph, min_degree: int = 3) -> None:
    if g.n == 0:
        raise PreconditionError("empty graph")
    if not is_connected(g):
        raise PreconditionError("disconnected", "graph is not connected")
    if not is_identifiable(g):
        raise PreconditionError("not identifiable", "graph has twins (equal closed balls)")
    tri = find_triangle(g)
    if tri is not None:
        raise PreconditionError("triangle", f"triangle {tri} present")
    if g.max_degree() < min_degree:
        raise PreconditionError(
            "maximum degree < 3",
            "paths and cycles are outside this construction, use the exact solver",
        )


def _is_c4(g: Graph) -> bool:
    return g.n == 4 and g.m == 4 and all(len(a) == 2 for a in g.adj)


def case2_false_twin_code(g: Graph, p: FalseTwinPartition | None = None) -> frozenset[int]:
    """All vertices except the lowest id of each nontrivial false-twin class (size ``n - |F|``)."""
    if not is_connected(g) or not is_identifiable(g) or find_triangle(g) is not None:
        raise PreconditionError("needs a connected identifiable triangle-free graph")
    if _is_c4(g):
        raise PreconditionError("C4", "the false-twin code does not apply to C4")
    p = p or false_twin_classes(g)
    if g.n == 3 and g.m == 2:
        # P3: the two leaves form the only code of size n - |F| = 2
        code = frozenset(v for v in range(3) if len(g.adj[v]) == 1)
    else:
        code = frozenset(range(g.n)) - {min(c) for c in p.nontrivial}
    failures = identifying_failures(g, code)
    if failures:
        raise CertificationError(f"false-twin code fails: {failures[:5]}")
    return code


def _case1(g: Graph, Y, provider: FractionProvider, clock: _Clock) -> tuple[frozenset[int], dict, dict]:
    with clock.phase("independent_set"):
        S = good_independent_set(g, Y, provider)
    with clock.phase("matching"):
        sm = extract_strong_matching(g, S)
    assert sm.L <= S
    with clock.phase("quasi_code"):
        if sm.LR:
            qc = quasi_code_general(g, sm)
            C1, leftover, qsizes, qvariant = qc.C, qc.leftover, qc.sizes, qc.variant
        else:
            qc = None
            C1, leftover, qsizes, qvariant = frozenset(), frozenset(), {}, None
    with clock.phase("complement"):
        rest = frozenset(range(g.n)) - sm.LR
        rest_mask = mask_of(rest)
        traces = {g.ball[x] & rest_mask for x in rest}
        if len(traces) != len(rest):
            raise CertificationError("G - (L u R) is not identifiable")
        C2 = rest - S
        if not is_s_identifying(g, rest, C2):
            raise CertificationError("complement of S is not an identifying code of G - (L u R)")
        for l in sm.L:
            if any(w in rest and w not in C2 for w in g.adj[l]):
                raise CertificationError(f"neighbour of L-vertex {l} outside the code")
        code = C1 | C2
        outside = frozenset(range(g.n)) - code
        if outside != (S - sm.L) | leftover or 3 * len(outside) < len(S):
            raise CertificationError("complement accounting failed")
    details = {
        "Y": len(Y),
        "S": len(S),
        "M": len(sm.M),
        "L": len(sm.L),
        "R": len(sm.R),
        "L1": len(sm.L1),
        "R1": len(sm.R1),
        "L2": len(sm.L2),
        "R2": len(sm.R2),
        "leftover": len(leftover),
        "quasi_variant": qvariant,
        **qsizes,
    }
    return code, details, {"S": S, "matching": sm, "quasi_code": qc}


def _run(
    g: Graph,
    provider: FractionProvider,
    variant: str,
    bound: bounds.Real,
    threshold: bounds.Real | None,
    clock: _Clock,
) -> ConstructionReport:
    n, delta = g.n, g.max_degree()
    with clock.phase("twins"):
        partition = false_twin_classes(g)
        Y = partition.Y(n)
    nontrivial = partition.nontrivial
    assert all(len(c) <= delta for c in nontrivial)
    cmp = 1 if threshold is None else bounds.compare(len(Y), threshold)
    candidates = []
    if cmp is None or cmp >= 0:
        code, details, art = _case1(g, Y, provider, clock)
        candidates.append((code, CASE1, details, art))
    if cmp is None or cmp < 0:
        with clock.phase("false_twin_code"):
            code = case2_false_twin_code(g, partition)
        assert len(code) == n - len(nontrivial) or (n == 3 and len(code) == 2)
        details = {"Y": len(Y), "F": len(nontrivial), "X": n - len(Y)}
        candidates.append((code, CASE2, details, {"partition": partition}))
    # boundary ties run both branches; keep the smaller, case 1 on equal size
    code, case, details, art = min(candidates, key=lambda c: len(c[0]))
    report = ConstructionReport(code, case, variant, n, delta, bound, details=details, artifacts=art)
    if cmp is None:
        report.notes.append("threshold undecided at working precision; both cases executed")
    with clock.phase("certify"):
        failures = identifying_failures(g, code)
        if failures:
            raise CertificationError(f"constructed code fails: {failures[:5]}")
        if not bounds.at_most(len(code), bound):
            raise CertificationError(f"|code|={len(code)} exceeds bound {bounds.to_float(bound):.6f}")
    report.certified = True
    report.timings = dict(clock.timings)
    return report


def build_identifying_code(g: Graph) -> ConstructionReport:
    """Certified code of size at most ``n - n / (Δ + 3Δ / (ln Δ - 1))``.

    ``g`` must be connected, identifiable, triangle-free and have maximum
    degree at least 3.
    """
    clock = _Clock()
    with clock.phase("checks"):
        check_preconditions(g)
    n, delta = g.n, g.max_degree()
    return _run(
        g,
        FractionProvider.shearer(),
        "main",
        bounds.main_bound(n, delta),
        bounds.case1_threshold(n, delta),
        clock,
    )


def build_with_fraction(g: Graph, provider: FractionProvider) -> ConstructionReport:
    """Same pipeline with independent sets from ``provider``; bound ``n - n / (Δ + 3/f'(Δ))``.

    A chromatic provider whose colouring fails falls back to the main variant
    and says so in ``notes``.
    """
    if provider.kind == "shearer":
        return build_identifying_code(g)
    clock = _Clock()
    with clock.phase("checks"):
        check_preconditions(g)
    n, delta = g.n, g.max_degree()
    if provider.kind == "chromatic":
        variant = "bipartite" if provider.k == 2 else f"chromatic({provider.k})"
    else:
        variant = f"generalized({provider.name})"
    try:
        if provider.kind == "chromatic":
            with clock.phase("colouring"):
                chromatic_independent_set(g, provider.k)
        fprime = provider.guaranteed_fraction(delta)
        return _run(
            g,
            provider,
            variant,
            bounds.fraction_bound(n, delta, fprime),
            bounds.case1_threshold(n, delta, fprime),
            clock,
        )
    except ColouringError as exc:
        report = build_identifying_code(g)
        report.notes.append(f"{variant} colouring failed ({exc}); fell back to main variant")
        return report


def build_no_false_twins(g: Graph) -> ConstructionReport:
    """Independent-set route with ``Y = V``; bound ``n - n (ln Δ - 1) / (3Δ)``."""
    clock = _Clock()
    with clock.phase("checks"):
        check_preconditions(g)
        if false_twin_classes(g).nontrivial:
            raise PreconditionError("false twins present", "graph has a nontrivial false-twin class")
    n, delta = g.n, g.max_degree()
    return _run(
        g,
        FractionProvider.shearer(),
        "no_false_twins",
        bounds.no_false_twins_bound(n, delta),
        None,
        clock,
    )


def code_vertices(report: ConstructionReport) -> list[int]:
    return sorted(report.code)


__all__ = [
    "CASE1",
    "CASE2",
    "ConstructionReport",
    "build_identifying_code",
    "build_no_false_twins",
    "build_with_fraction",
    "case2_false_twin_code",
    "check_preconditions",
    "code_vertices",
]

