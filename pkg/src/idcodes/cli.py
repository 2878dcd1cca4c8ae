"""Command-line interface: construct, verify, exact and bench.

Exit codes: 0 success, 1 verification or certification failure, 2 input
could not be parsed, 3 an input precondition does not hold.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import exact
from .certify import identifying_failures
from .construct import (
    ConstructionReport,
    build_identifying_code,
    build_no_false_twins,
    build_with_fraction,
)
from .errors import CertificationError, ParseError, PreconditionError
from .families import (
    FamilySpec,
    complete_bipartite,
    generate,
    kary_tree,
    largest_component,
    random_connected_bipartite,
    random_connected_triangle_free,
    random_triangle_free,
    star,
    subdivided_complete,
)
from .graph import Graph, false_twin_classes
from .indep import FractionProvider, chromatic_independent_set

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


@dataclass
class RunRecord:
    input_id: str
    n: int
    delta: int
    variant: str
    case_taken: str
    code_size: int | None
    bound_value: float | None
    exact_size: int | None = None
    wall_time_ms: float | None = None


FIELDS = [f.name for f in fields(RunRecord)]


def _round(x: float | None) -> float | None:
    return None if x is None else round(x, 6)


# -- variants ----------------------------------------------------------------

def parse_variant(text: str) -> tuple[str, Callable[[Graph], ConstructionReport]]:
    if text == "main":
        return text, build_identifying_code
    if text == "bipartite":
        return text, lambda g: build_with_fraction(g, FractionProvider.chromatic(2))
    if text == "nofalsetwins":
        return text, build_no_false_twins
    if text.startswith("chromatic:"):
        try:
            k = int(text.split(":", 1)[1])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad colour count in {text!r}") from None
        if k < 2:
            raise argparse.ArgumentTypeError("chromatic:k needs k >= 2")
        return text, lambda g: build_with_fraction(g, FractionProvider.chromatic(k))
    raise argparse.ArgumentTypeError(f"unknown variant {text!r}")


def _record(input_id: str, g: Graph, report: ConstructionReport, exact_size, elapsed, timing) -> RunRecord:
    return RunRecord(
        input_id,
        g.n,
        g.max_degree(),
        report.variant,
        report.case_taken,
        report.size,
        _round(report.bound_float),
        exact_size,
        _round(elapsed * 1000) if timing else None,
    )


def _load(path: str) -> Graph:
    from .io import read_graph

    return read_graph(path)


# -- subcommands -------------------------------------------------------------

def cmd_construct(args, out) -> int:
    g = _load(args.path)
    _, build = args.variant
    t0 = time.perf_counter()
    report = build(g)
    elapsed = time.perf_counter() - t0
    if args.json:
        rec = asdict(_record(Path(args.path).name, g, report, None, elapsed, args.timing))
        rec["code"] = sorted(report.code)
        print(json.dumps(rec), file=out)
    else:
        print("code: " + " ".join(map(str, sorted(report.code))), file=out)
        print(f"size: {report.size}", file=out)
        print(f"bound: {report.bound_float:.6f}", file=out)
        print(f"case: {report.case_taken}", file=out)
        print(f"variant: {report.variant}", file=out)
        for note in report.notes:
            print(f"note: {note}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = _load(args.path)
    code = args.code
    bad = [v for v in code if not 0 <= v < g.n]
    if bad:
        raise ParseError(f"vertex ids out of range: {bad}")
    failures = identifying_failures(g, code)
    if not failures:
        print("OK", file=out)
        return EXIT_OK
    print(f"FAIL ({len(failures)} problems)", file=out)
    for f in failures:
        if f.v is None:
            print(f"  {f.u} undominated", file=out)
        else:
            print(f"  ({f.u},{f.v}) unseparated", file=out)
    return EXIT_FAIL


def cmd_exact(args, out) -> int:
    g = _load(args.path)
    res = exact.min_identifying_code(g, vertex_limit=args.limit)
    print(f"gamma_id: {res.size}", file=out)
    print("witness: " + " ".join(map(str, sorted(res.witness))), file=out)
    return EXIT_OK


# -- bench -------------------------------------------------------------------

def family_suite() -> list[FamilySpec]:
    """Deterministic instances with maximum degree at least 3."""
    return [
        star(4),
        star(5),
        star(8),
        complete_bipartite(3, 3),
        complete_bipartite(4, 4),
        complete_bipartite(5, 5),
        kary_tree(2, 2),
        kary_tree(2, 3),
        kary_tree(3, 2),
        kary_tree(2, 5),
        kary_tree(3, 3),
        subdivided_complete(4),
        subdivided_complete(5),
        subdivided_complete(7),
        random_connected_bipartite(40, 40, 140, 5, 1),
        random_connected_triangle_free(120, 300, 8, 2),
    ]


def _is_bipartite(g: Graph) -> bool:
    try:
        chromatic_independent_set(g, 2)
    except PreconditionError:
        return False
    return True


@dataclass
class _Outcome:
    record: RunRecord
    ok: bool
    error: str = ""


def _run_variant(input_id, g, variant, build, exact_size, timing) -> _Outcome:
    t0 = time.perf_counter()
    try:
        report = build(g)
    except PreconditionError as exc:
        rec = RunRecord(input_id, g.n, g.max_degree(), variant, f"rejected: {exc.which}", None, None, exact_size)
        return _Outcome(rec, True, str(exc))
    except CertificationError as exc:
        rec = RunRecord(input_id, g.n, g.max_degree(), variant, "certification_failed", None, None, exact_size)
        return _Outcome(rec, False, str(exc))
    rec = _record(input_id, g, report, exact_size, time.perf_counter() - t0, timing)
    ok = report.certified and (exact_size is None or exact_size <= report.size)
    return _Outcome(rec, ok)


def bench_instance(input_id: str, g: Graph, exact_limit: int, timing: bool) -> list[_Outcome]:
    exact_size = None
    if g.n <= exact_limit:
        try:
            exact_size = exact.min_identifying_code(g, vertex_limit=exact_limit).size
        except PreconditionError:
            pass
    runs = [("main", build_identifying_code)]
    if _is_bipartite(g):
        runs.append(("bipartite", parse_variant("bipartite")[1]))
    if not false_twin_classes(g).nontrivial:
        runs.append(("nofalsetwins", build_no_false_twins))
    return [_run_variant(input_id, g, v, b, exact_size, timing) for v, b in runs]


def random_suite(n: int, m: int, count: int, seed: int) -> list[tuple[str, Graph]]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        s = rng.randrange(2**31)
        g = largest_component(generate(random_triangle_free(n, m, s)))
        out.append((f"random_{n}_{m}_{seed}_{i}", g))
    return out


def _girth_at_least_5(g: Graph) -> bool:
    # triangle-free already; a 4-cycle means two vertices share two neighbours
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = g.nbr[u] & g.nbr[v]
            if common & (common - 1):
                return False
    return True


def summary_lines(instances: list[tuple[str, Graph]], outcomes: list[list[_Outcome]]) -> list[str]:
    lines = ["summary (achieved size vs bound; 'external' rows are reference values only):"]
    for (name, g), outs in zip(instances, outcomes):
        for o in outs:
            r = o.record
            if r.code_size is None:
                status = "rejected" if o.ok else "FAILED"
                lines.append(f"  {name:<34} {r.variant:<13} {status}: {r.case_taken}")
                continue
            viol = "ok" if o.ok and r.code_size <= r.bound_value else "VIOLATION"
            lines.append(f"  {name:<34} {r.variant:<13} size {r.code_size:>5} <= {r.bound_value:>12.4f}  {viol}")
        mindeg = min((len(a) for a in g.adj), default=0)
        if g.n and mindeg >= 2 and _girth_at_least_5(g):
            lines.append(f"  {name:<34} {'girth5':<13} reference 7n/8+1 = {Fraction(7 * g.n, 8) + 1}  external")
    return lines


def cmd_bench(args, out) -> int:
    instances: list[tuple[str, Graph]] = []
    if args.families:
        instances += [(s.label, generate(s)) for s in family_suite()]
    if args.random:
        n, m, count, seed = args.random
        instances += random_suite(n, m, count, seed)
    if not instances:
        instances = [(s.label, generate(s)) for s in family_suite()]
    outcomes = [bench_instance(name, g, args.exact_limit, args.timing) for name, g in instances]
    records = [o.record for outs in outcomes for o in outs]
    if args.csv:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: ("" if v is None else v) for k, v in asdict(r).items()})
        out.write(buf.getvalue())
    elif args.json:
        print(json.dumps([asdict(r) for r in records], indent=1), file=out)
    else:
        for line in summary_lines(instances, outcomes):
            print(line, file=out)
    failed = [o for outs in outcomes for o in outs if not o.ok]
    for o in failed:
        print(f"failure: {o.record.input_id} {o.record.variant}: {o.error}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="idcodes", description="Identifying codes in triangle-free graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a certified identifying code")
    c.add_argument("path")
    c.add_argument("--variant", type=parse_variant, default=parse_variant("main"),
                   help="main | bipartite | chromatic:k | nofalsetwins")
    c.add_argument("--json", action="store_true", help="emit a JSON run record")
    c.add_argument("--timing", action="store_true", help="include wall_time_ms")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check whether a vertex set is an identifying code")
    v.add_argument("path")
    v.add_argument("code", nargs="*", type=int)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("exact", help="minimum identifying code by exhaustive search")
    e.add_argument("path")
    e.add_argument("--limit", type=int, default=exact.DEFAULT_VERTEX_LIMIT)
    e.set_defaults(func=cmd_exact)

    b = sub.add_parser("bench", help="run the family and/or random suites")
    b.add_argument("--families", action="store_true")
    b.add_argument("--random", nargs=4, type=int, metavar=("N", "M", "COUNT", "SEED"))
    b.add_argument("--csv", action="store_true")
    b.add_argument("--json", action="store_true")
    b.add_argument("--timing", action="store_true", help="include wall_time_ms (breaks byte-identical output)")
    b.add_argument("--exact-limit", type=int, default=exact.DEFAULT_VERTEX_LIMIT)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        detail = "" if str(exc) == exc.which else f" ({exc})"
        print(f"precondition failed: {exc.which}{detail}", file=sys.stderr)
        return EXIT_PRECONDITION
    except CertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
