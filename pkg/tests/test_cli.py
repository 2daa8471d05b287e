import json

import pytest

from chordal_forge.chordality import is_chordal, replay_certificate
from chordal_forge.cli import main
from chordal_forge.graph_core import from_edge_list_text, to_edge_list_text

from conftest import cycle_graph


def run(*argv):
    return main(list(argv))


def test_construct_turan_plus_edge(tmp_path):
    out = tmp_path / "g.txt"
    assert run("construct", "--variant", "turan-plus-edge", "--k", "3",
               "--n", "6", "--out", str(out)) == 0
    g = from_edge_list_text(out.read_text())
    assert g.n == 6 and g.m == 13


def test_extract_k3_report(tmp_path):
    gpath = tmp_path / "g.txt"
    rpath = tmp_path / "r.json"
    run("construct", "--variant", "turan-plus-edge", "--k", "3", "--n", "6",
        "--out", str(gpath))
    assert run("extract", "--alg", "k3", "--graph", str(gpath),
               "--json-report", str(rpath)) == 0
    data = json.loads(rpath.read_text())
    assert data["schema_version"] == 1
    assert data["achieved"] >= 12 and data["guarantee"] == 12
    # report re-validates from disk
    assert run("revalidate", "--report", str(rpath), "--graph", str(gpath)) == 0


def test_report_replay_detects_tampering(tmp_path):
    gpath = tmp_path / "g.txt"
    rpath = tmp_path / "r.json"
    run("construct", "--variant", "turan-plus-edge", "--k", "2", "--n", "6",
        "--out", str(gpath))
    run("extract", "--alg", "k2", "--graph", str(gpath),
        "--json-report", str(rpath))
    data = json.loads(rpath.read_text())
    data["achieved"] += 1
    rpath.write_text(json.dumps(data))
    assert run("revalidate", "--report", str(rpath), "--graph", str(gpath)) == 1


def test_check_emits_certificate_json(tmp_path):
    gpath = tmp_path / "c5.txt"
    gpath.write_text(to_edge_list_text(cycle_graph(5)))
    wpath = tmp_path / "w.json"
    assert run("check", "--graph", str(gpath), "--json", str(wpath)) == 0
    data = json.loads(wpath.read_text())
    assert data["verdict"] == "not-chordal"
    assert data["peo"] is None and len(data["hole"]) == 5


def test_oracle_commands(tmp_path):
    gpath = tmp_path / "c4.txt"
    gpath.write_text(to_edge_list_text(cycle_graph(4)))
    jpath = tmp_path / "o.json"
    assert run("oracle", "max-chordal", "--graph", str(gpath),
               "--json", str(jpath)) == 0
    data = json.loads(jpath.read_text())
    assert data["max_edges"] == 3
    sub = replay_certificate(4, [("add", op["v"], tuple(op["clique"]))
                                 for op in data["certificate"]])
    assert is_chordal(sub.to_graph()).chordal

    tpath = tmp_path / "table.json"
    assert run("oracle", "f-table", "--n", "4", "--m", "5",
               "--out", str(tpath)) == 0
    rows = json.loads(tpath.read_text())
    assert rows == [{"n": 4, "m": 5, "f": 5,
                     "witness_edges": rows[0]["witness_edges"]}]


def test_bounds_table(capsys):
    assert run("bounds", "--n", "6", "--m", "10") == 0
    out = capsys.readouterr().out
    assert "11" in out and "(  3,  2)" in out


def test_verify_suite_exit_codes(tmp_path):
    jpath = tmp_path / "checks.json"
    assert run("verify", "--suite", "lemmas", "--nmax", "12",
               "--json", str(jpath)) == 0
    payload = json.loads(jpath.read_text())
    assert payload["schema_version"] == 1
    assert all(c["passed"] for c in payload["checks"])


def test_usage_errors_exit_2(tmp_path):
    assert run("extract", "--alg", "k1", "--graph",
               str(tmp_path / "missing.txt")) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    assert run("check", "--graph", str(bad)) == 2
    assert run("construct", "--variant", "k2-bipartite", "--n", "4",
               "--t", "2", "--r", "3", "--out", str(tmp_path / "x.txt")) == 2


def test_guarantee_violation_exit_1(tmp_path, monkeypatch):
    gpath = tmp_path / "g.txt"
    run("construct", "--variant", "turan-plus-edge", "--k", "2", "--n", "20",
        "--out", str(gpath))
    import chordal_forge.cli as cli_mod

    real = cli_mod.extract_general

    def lowball(g, k, params=None):
        rep = real(g, k, params)
        rep.guarantee = rep.achieved + 1
        return rep

    monkeypatch.setattr(cli_mod, "extract_general", lowball)
    assert run("extract", "--alg", "general", "--k", "2",
               "--graph", str(gpath)) == 1
