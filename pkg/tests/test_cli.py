from __future__ import annotations

import csv
import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from egc import cli
from egc.egc_engine import verify_egc
from egc.graph_core import EdgeColoring, Graph


def run(*argv, stdin: str = ""):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv, stdin: str = ""):
    code, out, err = run(*argv, stdin=stdin)
    return code, json.loads(out) if out.strip() else None


class TestGen:
    def test_torus(self, tmp_path):
        path = tmp_path / "t.json"
        code, _, _ = run("gen", "torus44", "6", "3", "3", "--out", str(path))
        doc = json.loads(path.read_text())
        assert code == 0 and doc["graph"]["n"] == 18
        assert doc["tool"] == "egc" and doc["config"]["command"] == "gen"

    def test_named(self):
        code, doc = run_json("gen", "named", "heawood-complement")
        assert code == 0 and doc["graph"]["n"] == 14

    def test_degenerate(self):
        code, out, err = run("gen", "torus44", "2", "1", "0")
        assert code == 3 and "degenerate cutout" in err and out == ""

    @pytest.mark.parametrize(
        "argv",
        [("gen", "nope"), ("gen", "torus44", "6", "x", "1"), ("gen", "torus44", "6"), ("bogus",), ("egc", "find")],
    )
    def test_bad_parameters_exit_3(self, argv):
        assert run(*argv)[0] == 3

    def test_signature_and_girth(self):
        code, doc = run_json("signature", "petersen")
        assert code == 0 and doc["signature"] == [4, 4, 4] and doc["label"] == "4^3"
        code, doc = run_json("girth", "k33")
        assert code == 0 and doc["girth"] == 4


class TestEgcCommands:
    def test_find_impossible(self, tmp_path):
        path = tmp_path / "hc.json"
        run("gen", "named", "heawood-complement", "--out", str(path))
        code, doc = run_json("egc", "find", str(path))
        assert code == 1 and doc["verdict"]["status"] == "impossible"

    def test_find_colored_and_verify_pipeline(self):
        code, out, _ = run("egc", "find", "q4")
        assert code == 0
        assert run("egc", "verify", "-", stdin=out)[0] == 0

    def test_find_timeout_exit_2(self, tmp_path):
        path = tmp_path / "big.json"
        assert run("nabla", "apply", "bridged", "7", "--out", str(path))[0] == 0
        doc = json.loads(path.read_text())
        assert doc["graph"]["n"] > 0
        big = tmp_path / "flower.json"
        from egc import families as fam

        big.write_text(json.dumps({"graph": fam.nabla(fam.flower_snark(15)).to_json()}))
        assert run("egc", "find", str(big), "--timeout", "0.2")[0] == 2

    @pytest.mark.parametrize("name,params", [("zigzag", ["6", "3", "3"]), ("aw", [])])
    def test_construct_then_verify(self, name, params):
        code, out, _ = run("egc", "construct", name, *params)
        assert code == 0
        code, doc = run_json("egc", "verify", "-", stdin=out)
        assert code == 0 and doc["egc"] and doc["violations"] == []

    def test_top_level_aliases(self):
        code, out, _ = run("construct", "q4-f1")
        assert code == 0 and run("verify", "-", stdin=out)[0] == 0

    def test_verify_reports_violations(self):
        code, out, _ = run("egc", "construct", "q4-f0")
        code, doc = run_json("egc", "verify", "-", stdin=out)
        assert code == 1 and doc["violations"]

    def test_construct_not_applicable_exit_1(self):
        assert run("egc", "construct", "zigzag", "6", "3", "1")[0] == 1

    def test_construct_explain(self):
        code, doc = run_json("egc", "construct", "wreath", "7", "--explain")
        assert code == 0 and "explain" in doc

    def test_verify_with_separate_coloring(self, tmp_path):
        code, out, _ = run("egc", "construct", "q4-f2")
        doc = json.loads(out)
        g_path, c_path = tmp_path / "g.json", tmp_path / "c.json"
        g_path.write_text(json.dumps({"graph": doc["graph"]}))
        c_path.write_text(json.dumps(doc["coloring"]))
        assert run("egc", "verify", str(g_path), "--coloring", str(c_path))[0] == 0

    def test_obstruct(self):
        code, doc = run_json("obstruct", "folkman")
        assert code == 1 and doc["obstruction"] is not None
        assert run("obstruct", "q4")[0] == 0

    def test_find_via_triangles(self):
        code, out, _ = run("nabla", "apply", "k33")
        assert code == 0
        code, doc = run_json("egc", "find", "-", "--via-triangles", stdin=out)
        assert code == 0 and doc["verdict"]["status"] == "colored"

    def test_nabla_round_trip(self):
        code, out, _ = run("nabla", "apply", "theta")
        assert code == 0
        code, doc = run_json("nabla", "invert", "-", stdin=out)
        assert code == 0 and doc["multigraph"]["n"] == 2


class TestStarAndSweeps:
    def test_star_formula_and_oracle(self):
        code, doc = run_json("star", "formula", "12", "2", "4")
        assert code == 0 and doc["star"] == [1, 4, 3]
        code, doc = run_json("star", "oracle", "10", "2", "4")
        assert code == 0 and doc["star"] == [1, 2, 1]

    def test_star_not_applicable(self):
        assert run("star", "formula", "10", "1", "3")[0] == 1

    def test_table_ix_csv_columns_and_sorting(self):
        code, out, _ = run("sweep", "table-ix", "--r", "6-14:2", "--t", "5", "--s", "1,3,5", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and rows[0] == cli.CSV_HEADER
        keys = [(int(r[0]), int(r[1]), int(r[2])) for r in rows[1:]]
        assert keys == sorted(keys) and all(r[-1] == "true" for r in rows[1:])

    def test_display_x_json_has_printed_cells(self):
        code, doc = run_json("sweep", "display-x", "--format", "json")
        assert code == 0 and len(doc["rows"]) == 16
        assert all(r["agree"] for r in doc["rows"])
        assert sum(r["matches_print"] for r in doc["rows"]) == 11

    def test_theorem_sweep_csv(self):
        code, out, _ = run("sweep", "theorem-re", "--item", "3c", "--r", "6,8", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and rows[0][:5] == ["item", "surface", "r", "t", "s"]
        agree = rows[0].index("agree")
        engine = rows[0].index("engine")
        assert all(r[agree] == "true" for r in rows[1:] if r[engine] != "degenerate")

    def test_csv_meta_file(self, tmp_path):
        path = tmp_path / "x.csv"
        assert run("sweep", "display-x", "--format", "csv", "--out", str(path))[0] == 0
        meta = json.loads((tmp_path / "x.csv.meta.json").read_text())
        assert meta["config"]["command"] == "sweep display-x"

    def test_conjecture_wording(self):
        code, doc = run_json("conjecture", "2egcs")
        assert code == 0 and doc["summary"] == "no counterexample within budget"

    @pytest.mark.parametrize("text,expected", [("6-14", list(range(6, 15))), ("6-30:2", list(range(6, 31, 2))), ("1,3,5", [1, 3, 5])])
    def test_parse_range(self, text, expected):
        assert cli.parse_range(text) == expected


class TestExport:
    def test_dot_of_k4_has_six_colored_edges(self):
        code, out, _ = run("egc", "find", "k4")
        code, dot, _ = run("export", "-", "--format", "dot", stdin=out)
        lines = [ln for ln in dot.splitlines() if "--" in ln]
        assert code == 0 and len(lines) == 6
        assert all("color=" in ln for ln in lines)
        used = {ln.split('color="')[1].split('"')[0] for ln in lines}
        assert used == {"red", "blue", "green"}

    def test_dot_color_map(self):
        assert cli.DOT_COLORS == {1: "red", 2: "blue", 3: "green", 4: "goldenrod", 5: "black"}

    @given(st.integers(3, 9), st.data())
    def test_dot_round_trip(self, n, data):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = data.draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1))
        g = Graph.build(n, edges)
        c = EdgeColoring(5, tuple(data.draw(st.integers(1, 5)) for _ in g.edges))
        h, d = cli.parse_dot(cli.to_dot(g, c))
        assert h.n == g.n and h.edges == g.edges and d == c

    def test_export_csv_and_json(self):
        code, out, _ = run("export", "petersen", "--format", "csv")
        assert code == 0 and out.splitlines()[0].startswith("u,v")
        code, doc = run_json("export", "petersen", "--format", "json")
        assert code == 0 and doc["graph"]["n"] == 10


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("egc", "find", "q4"),
            ("egc", "find", "heawood-complement"),
            ("sweep", "display-x", "--format", "csv"),
            ("sweep", "theorem-re", "--item", "3b", "--r", "8-12"),
        ],
    )
    def test_same_config_same_bytes(self, argv):
        assert run(*argv) == run(*argv)

    def test_jobs_do_not_change_results(self):
        a = json.loads(run("sweep", "theorem-re", "--item", "3b", "--r", "8-12", "--format", "json")[1])
        b = json.loads(run("sweep", "theorem-re", "--item", "3b", "--r", "8-12", "--jobs", "3", "--format", "json")[1])
        assert a["rows"] == b["rows"] and a["config"]["jobs"] != b["config"]["jobs"]


class TestCatalog:
    def test_catalog_lists_and_checks(self):
        code, doc = run_json("catalog", "--check")
        assert code == 0 and "petersen" in {e["name"] for e in doc["graphs"]}

    def test_version(self):
        assert run("--version")[0] == 0


def test_verify_via_library_matches_cli():
    code, out, _ = run("egc", "construct", "q4-f1")
    doc = json.loads(out)
    g = Graph.from_json(doc["graph"])
    c = EdgeColoring.from_json(doc["coloring"])
    assert verify_egc(g, c) == []
