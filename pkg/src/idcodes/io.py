"""Reading and writing graphs as plain edge lists or DIMACS edge files.

Edge list: first non-comment line ``n m``, then ``m`` lines ``u v`` with
0-based ids.  DIMACS: ``p edge n m`` followed by ``e u v`` lines with 1-based
ids.  ``#`` starts a comment in the edge-list format, ``c`` lines are
comments in DIMACS.
"""

from __future__ import annotations

import warnings
from pathlib import Path

from .errors import GraphError, ParseError
from .graph import Graph


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> Graph:
    lines = []
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((i, line.split()))
    if not lines:
        raise ParseError("empty input")
    dimacs = any(t[0] == "p" for _, t in lines)
    return _parse_dimacs(lines) if dimacs else _parse_edge_list(lines)


def _build(n: int, m: int, edges: list[tuple[int, int]]) -> Graph:
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return Graph.from_edge_list(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def _parse_edge_list(lines) -> Graph:
    (lineno, head), *body = lines
    if len(head) != 2:
        raise ParseError(f"line {lineno}: header must be 'n m'")
    n, m = _ints(head, lineno)
    edges = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        u, v = _ints(toks, lineno)
        edges.append((u, v))
    return _build(n, m, edges)


def _parse_dimacs(lines) -> Graph:
    header = None
    edges = []
    for lineno, toks in lines:
        kind = toks[0]
        if kind == "c":
            continue
        if kind == "p":
            if header is not None or len(toks) != 4:
                raise ParseError(f"line {lineno}: bad or repeated problem line")
            header = _ints(toks[2:], lineno)
        elif kind == "e":
            if header is None or len(toks) != 3:
                raise ParseError(f"line {lineno}: malformed edge line")
            u, v = _ints(toks[1:], lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unknown line type {kind!r}")
    n, m = header
    return _build(n, m, edges)


def read_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_graph(text)


def format_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(rows) + "\n"


def format_dimacs(g: Graph) -> str:
    rows = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(rows) + "\n"


def write_graph(g: Graph, path: str | Path, dimacs: bool = False) -> None:
    Path(path).write_text(format_dimacs(g) if dimacs else format_edge_list(g))
