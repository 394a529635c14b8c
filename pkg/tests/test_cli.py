import json

import pytest

from sparseramsey.cli import main
from sparseramsey.color import read_coloring
from sparseramsey.graph import complete_graph, cycle_graph, disjoint_union, p3_witness, read_edgelist, write_edgelist


@pytest.fixture
def graphs(tmp_path):
    paths = {}
    for name, G in {
        "k6": complete_graph(6),
        "k5": complete_graph(5),
        "c5": cycle_graph(5),
        "p3w": p3_witness(),
        "k5c6": disjoint_union(complete_graph(5), cycle_graph(6)),
    }.items():
        p = tmp_path / f"{name}.el"
        write_edgelist(G, p)
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main([*argv, "--log", "-"])
    return code, capsys.readouterr().out


def test_density(capsys, graphs):
    code, out = run(capsys, "density", "--param", "m", graphs["k6"])
    assert code == 0 and "value = 5/2" in out.splitlines()
    code, out = run(capsys, "density", "--param", "m1k", "--k", "7", graphs["k6"])
    assert code == 0 and "value = 0" in out and "note =" in out


def test_verify_ramsey(capsys, graphs, tmp_path):
    code, out = run(capsys, "verify", "ramsey", "--pattern", "path:3", "--r", "2", graphs["p3w"])
    assert code == 0 and "is_ramsey = true" in out
    cert = tmp_path / "cert.col"
    code, out = run(capsys, "verify", "ramsey", "--pattern", "path:3", "--r", "2", "--out", str(cert), graphs["c5"])
    assert code == 1 and "is_ramsey = false" in out
    code, out = run(capsys, "verify", "coloring", "--pattern", "path:3", graphs["c5"], str(cert))
    assert code == 0 and "valid = true" in out
    assert read_coloring(cert).host == read_edgelist(graphs["c5"])


def test_budget_exit_code(capsys, graphs):
    code, out = run(capsys, "verify", "ramsey", "--pattern", "clique:3", "--r", "2", "--budget", "20", graphs["k6"])
    assert code == 2 and "nodes =" in out


def test_bounds(capsys):
    code, out = run(capsys, "bounds", "--pattern", "biclique:2,2", "--r", "2")
    assert code == 0 and "11/6 <= m* <= 21/10" in out
    assert "lower_rule = biclique-forest 11/6" in out


def test_bounds_with_bad_table(capsys, tmp_path):
    t = tmp_path / "t.txt"
    t.write_text("clique 3 | r=2 | 7 6 | x\n")
    code, _ = run(capsys, "bounds", "--pattern", "clique:3", "--r", "2", "--table", str(t))
    assert code == 74


def test_decompose_and_contract(capsys, graphs, tmp_path):
    code, out = run(capsys, "decompose", "forests", graphs["k6"])
    assert code == 0 and "classes = 3" in out
    code, out = run(capsys, "decompose", "stars", graphs["k5"])
    assert code == 0 and "classes = 6" in out
    code, out = run(capsys, "decompose", "ad", "--d", "2", graphs["c5"])
    assert code == 0 and "value = 2" in out
    code, out = run(capsys, "decompose", "orient", "--k", "2", graphs["k5"])
    assert code == 1 and "witness = 0 1 2 3 4" in out
    code, out = run(capsys, "contract", "--r", "2", graphs["k5c6"])
    assert code == 0 and "member = 0 1 2 3 4" in out


def test_color_engines(capsys, graphs, tmp_path):
    out_path = tmp_path / "c.col"
    code, out = run(capsys, "color", "cycle-free", "--l", "4", "--r", "2", "--out", str(out_path), graphs["k5c6"])
    assert code == 0 and "R = 6" in out
    code, out = run(capsys, "verify", "coloring", "--pattern", "cycle:4", graphs["k5c6"], str(out_path))
    assert code == 0
    code, out = run(capsys, "color", "greedy", "--r", "2", "--delta", "2", graphs["k5"])
    assert code == 1 and "PreconditionError" in out


def test_construct(capsys, tmp_path):
    g = tmp_path / "g.el"
    s = tmp_path / "g.struct"
    code, out = run(capsys, "construct", "gnkm", "--n", "4", "--k", "2", "--m", "1", "--out", str(g), "--structure", str(s))
    assert code == 0 and "vertices = 10" in out and "edges = 12" in out
    assert read_edgelist(g).num_edges == 12 and s.read_text().startswith("# G(4,2,1)")
    ov = tmp_path / "ov.txt"
    ov.write_text("n = 3 3\nm = 2 2\n")
    code, out = run(capsys, "construct", "gstar", "--l", "3", "--k", "2", "--r", "2", "--override", str(ov), "--relax")
    assert code == 0 and "canonical = false" in out and "vertices = 15" in out
    code, out = run(capsys, "construct", "kpq", "--a", "2", "--b", "2", "--r", "2")
    assert code == 0 and "vertices = 10" in out
    code, out = run(capsys, "construct", "named", "complete-bipartite", "3", "7")
    assert code == 0 and "edges = 21" in out


def test_usage_and_io_errors(capsys, tmp_path):
    assert main(["density", "--log", "-"]) == 64
    assert main(["nonsense"]) == 64
    assert main(["density", "--param", "m1k", str(tmp_path / "missing.el"), "--log", "-"]) == 74
    bad = tmp_path / "bad.el"
    bad.write_text("3 2\n0 1\n")
    assert main(["density", "--param", "m", str(bad), "--log", "-"]) == 74
    assert main(["bounds", "--pattern", "cycle:2", "--r", "2", "--log", "-"]) == 64
    capsys.readouterr()


def test_manifest_is_reproducible(capsys, graphs, tmp_path):
    log = tmp_path / "runs.log"
    for threads in ("1", "4"):
        main(["verify", "ramsey", "--pattern", "clique:3", "--r", "2", "--deterministic",
              "--threads", threads, "--log", str(log), graphs["k5"]])
    capsys.readouterr()
    recs = [json.loads(line) for line in log.read_text().splitlines()]
    assert len(recs) == 2
    assert recs[0]["result_sha256"] == recs[1]["result_sha256"]
    assert recs[0]["exit_code"] == 1 and recs[0]["subcommand"] == "verify"
    assert recs[0]["digest_graph"] == recs[1]["digest_graph"]
    assert all(not isinstance(v, (dict, list)) for v in recs[0].values())
