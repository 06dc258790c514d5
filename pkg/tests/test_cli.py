import json
import subprocess
import sys
from math import comb

import pytest

from exactchroma import edgelist
from exactchroma.cli import main
from exactchroma.generators import cycle, random_ktree, star, triangle_strip


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def graph_file(tmp_path):
    def write(G, name="g.txt"):
        path = tmp_path / name
        edgelist.write(G, path)
        return str(path)

    return write


def test_gen_to_stdout_is_edge_list(capsys):
    assert main(["gen", "--model", "ktree", "--n", "12", "--k", "3", "--seed", "5"]) == 0
    G = edgelist.loads(capsys.readouterr().out)
    assert G == random_ktree(12, 3, 5)


def test_gen_to_file(capsys, tmp_path):
    out = tmp_path / "t.txt"
    code, rep = run(capsys, "gen", "--model", "dary", "--delta", "3", "--radius", "2", "--out", str(out))
    assert code == 0 and rep["outcome"] == "pass"
    assert rep["result"]["n"] == 10 and rep["result"]["m"] == 9
    assert edgelist.read(out).n == 10


def test_gen_cycle_and_bad_params(capsys):
    main(["gen", "--model", "cycle", "--n", "4"])
    assert edgelist.loads(capsys.readouterr().out) == cycle(4)
    code, rep = run(capsys, "gen", "--model", "ktree", "--n", "10")
    assert code == 2 and rep["outcome"] == "error"


def test_color_odd(capsys, graph_file):
    code, rep = run(capsys, "color", graph_file(triangle_strip(9)), "--p", "3")
    res = rep["result"]
    assert code == 0 and res["proper"]
    assert res["t"] == 3 and res["bound"] == comb(3, 2) * 4
    assert res["colors_used"] <= 12 and len(res["colors"]) == 9
    assert rep["input_digest"].startswith("sha256:")


def test_color_distance_set(capsys, graph_file):
    G = random_ktree(20, 2, 3)
    code, rep = run(capsys, "color", graph_file(G), "--p", "5", "--set", "3,5")
    res = rep["result"]
    assert code == 0 and res["S"] == [3, 5]
    assert res["bound"] == comb(3, 2) ** 2 * 6


def test_color_non_chordal_reports_cycle(capsys, graph_file):
    code, rep = run(capsys, "color", graph_file(cycle(4)), "--p", "2")
    assert code == 2 and rep["outcome"] == "error"
    assert sorted(rep["induced_cycle"]) == [0, 1, 2, 3]


def test_chi_star(capsys, graph_file):
    code, rep = run(capsys, "chi", graph_file(star(7)), "--p", "2")
    res = rep["result"]
    assert code == 0
    assert res["chi"] == 6 and res["bound"] == 18 and res["ok"]
    assert res["bound_tw"] is None


def test_chi_non_chordal_and_too_large(capsys, graph_file):
    code, rep = run(capsys, "chi", graph_file(cycle(5)), "--p", "2")
    assert code == 0 and rep["result"]["chi"] == 3 and not rep["result"]["chordal"]
    assert sorted(rep["result"]["induced_cycle"]) == [0, 1, 2, 3, 4]
    code, rep = run(capsys, "chi", graph_file(cycle(20)), "--p", "2")
    assert code == 2


def test_props(capsys, graph_file):
    code, rep = run(capsys, "props", graph_file(random_ktree(25, 3, 1)), "--suite", "shadow")
    assert code == 0 and rep["result"]["suites"][0]["ok"]
    code, rep = run(capsys, "props", graph_file(cycle(4), "c4.txt"), "--suite", "shadow")
    assert code == 1 and rep["outcome"] == "fail"
    assert rep["result"]["suites"][0]["witness"]


def test_facefill(capsys):
    code, rep = run(capsys, "facefill", "--k", "7", "--check")
    res = rep["result"]
    assert code == 0 and res["n"] == 13 and res["distances_preserved"]
    code, rep = run(capsys, "facefill", "--k", "3")
    assert code == 2


def test_usage_errors(capsys, tmp_path):
    code, rep = run(capsys, "color", str(tmp_path / "missing.txt"), "--p", "2")
    assert code == 2 and "cannot read" in rep["error"]
    code, rep = run(capsys, "bogus")
    assert code == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    code, rep = run(capsys, "color", str(bad), "--p", "2")
    assert code == 2


def test_timing_flag_only_when_requested(capsys):
    _, rep = run(capsys, "facefill", "--k", "5")
    assert "seconds" not in rep
    _, rep = run(capsys, "--timing", "facefill", "--k", "5")
    assert rep["seconds"] >= 0


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "exactchroma", "facefill", "--k", "6", "--check"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["distances_preserved"]
