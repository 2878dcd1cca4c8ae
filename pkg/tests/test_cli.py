import io
import json

import pytest

from idcodes import cli
from idcodes.families import generate, kary_tree
from idcodes.io import format_dimacs, format_edge_list, parse_graph, write_graph
from idcodes.errors import ParseError


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    def w(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return {
        "k33": w("k33.edges", "6 9\n" + "".join(f"{i} {j}\n" for i in range(3) for j in range(3, 6))),
        "c6": w("c6.edges", "# six-cycle\n6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"),
        "c4": w("c4.edges", "4 4\n0 1\n1 2\n2 3\n3 0\n"),
        "c7": w("c7.edges", "7 7\n" + "".join(f"{i} {(i + 1) % 7}\n" for i in range(7))),
        "p3": w("p3.dimacs", "c path\np edge 3 2\ne 1 2\ne 2 3\n"),
        "k2": w("k2.edges", "2 1\n0 1\n"),
        "tree": w("tree_2_2.edges", format_edge_list(generate(kary_tree(2, 2)))),
        "bad": w("bad.edges", "3 2\n0 1\n"),
    }


def test_construct(files):
    code, out = run("construct", files["k33"])
    assert code == 0 and "size: 4" in out and "case: case2_false_twins" in out
    code, _ = run("construct", files["c6"])
    assert code == 3
    code, out = run("construct", files["tree"], "--json")
    rec = json.loads(out)
    assert code == 0 and list(rec)[:9] == cli.FIELDS
    assert rec["code_size"] <= rec["bound_value"] and rec["code"] == sorted(rec["code"])
    code, out = run("construct", files["tree"], "--variant", "bipartite")
    assert code == 0 and "variant: bipartite" in out
    code, out = run("construct", files["tree"], "--variant", "chromatic:3")
    assert code == 0
    assert run("construct", files["k33"], "--variant", "nofalsetwins")[0] == 3
    assert run("construct", files["k33"], "--variant", "bogus")[0] == 2


def test_verify(files):
    assert run("verify", files["p3"], "0", "2") == (0, "OK\n")
    code, out = run("verify", files["p3"], "0", "1")
    assert code == 1 and "(0,1) unseparated" in out
    assert run("verify", files["c4"], "0", "1", "2")[0] == 0
    assert run("verify", files["c4"], "0", "9")[0] == 2


def test_exact(files):
    code, out = run("exact", files["c7"])
    assert code == 0 and out.startswith("gamma_id: 5")
    assert run("exact", files["p3"])[1].startswith("gamma_id: 2")
    assert run("exact", files["k2"])[0] == 3
    assert run("exact", files["c7"], "--limit", "5")[0] == 3


def test_parse_errors(files):
    assert run("exact", files["bad"])[0] == 2
    assert run("exact", "/nonexistent/file")[0] == 2
    for text in ["", "3\n", "2 1\n0 x\n", "2 1\n0 0\n", "p edge 2 1\ne 1 3\n", "p edge 2 1\nq 1 2\n"]:
        with pytest.raises(ParseError):
            parse_graph(text)


def test_round_trip(tmp_path):
    g = generate(kary_tree(3, 2))
    for dimacs in (False, True):
        p = tmp_path / f"g{dimacs}"
        write_graph(g, p, dimacs=dimacs)
        assert set(parse_graph(p.read_text()).edges()) == set(g.edges())
    assert parse_graph(format_dimacs(g)) == g


def test_bench_families():
    code, out = run("bench", "--families")
    assert code == 0 and "VIOLATION" not in out and "FAILED" not in out
    assert "external" in out
    code, out = run("bench", "--families", "--json")
    rows = json.loads(out)
    tree = [r for r in rows if r["input_id"] == "kary_tree_2_3" and r["variant"] == "main"][0]
    assert tree["exact_size"] is not None and tree["exact_size"] <= tree["code_size"] <= tree["bound_value"]


def test_bench_random_csv():
    code, out = run("bench", "--random", "200", "400", "50", "7", "--csv")
    lines = out.strip().split("\n")
    assert code == 0 and lines[0] == ",".join(cli.FIELDS)
    ids = {line.split(",")[0] for line in lines[1:]}
    assert len(ids) == 50
    assert run("bench", "--random", "200", "400", "50", "7", "--csv")[1] == out
