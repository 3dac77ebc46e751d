import json

import pytest
from click.testing import CliRunner

from speedcops.cli import main


@pytest.fixture
def run(tmp_path):
    runner = CliRunner()

    def invoke(*args, env=None):
        return runner.invoke(main, [str(a) for a in args], env=env, catch_exceptions=False)

    return invoke


@pytest.fixture
def graph_file(tmp_path, run):
    def make(*family):
        path = tmp_path / ("_".join(map(str, family)) + ".txt")
        path.write_text(run("gen", *family).output)
        return path

    return make


def test_gen_text_and_json(run):
    assert run("gen", "subdivided_clique", 2, 0).output == "n 2\n0 1\n"
    doc = json.loads(run("gen", "ia_gap", 1, 1, 4, "--format", "json").output)
    assert doc["n"] == 6


def test_param(run, graph_file):
    path = graph_file("subdivided_clique", 4, 1)
    res = run("param", "sdeg", "-s", 2, path)
    assert res.exit_code == 0 and json.loads(res.output)["value"] == 3
    assert json.loads(run("param", "pw", path).output)["value"] == 3


def test_solve_copwidth(run, graph_file):
    res = run("solve", "--visibility", "invisible", "-s", 1, graph_file("ia_gap", 1, 1, 4))
    doc = json.loads(res.output)
    assert res.exit_code == 0
    assert doc["copwidth"] == 4 and doc["verified"] and doc["lose_verified"]


def test_solve_robber_wins(run, graph_file):
    res = run("solve", "--activity", "lazy", "-s", 2, "-k", 3, graph_file("subdivided_clique", 4, 1))
    doc = json.loads(res.output)
    assert res.exit_code == 0
    assert doc["winner"] == "robber" and doc["verified"]


def test_solve_then_verify(run, graph_file, tmp_path):
    out = tmp_path / "cert.json"
    run("solve", "--monotone", "cop", graph_file("ia_gap", 1, 1, 4), "-o", out)
    doc = json.loads(out.read_text())
    (tmp_path / "strategy.json").write_text(json.dumps(doc["win"]))
    res = run("verify", tmp_path / "strategy.json")
    assert res.exit_code == 0 and json.loads(res.output)["winner"] == "cops"


def test_simulate(run, tmp_path):
    g = tmp_path / "p3.txt"
    g.write_text("n 3\n0 1\n1 2\n")
    script = tmp_path / "script.txt"
    script.write_text("1\n0 1\n1 2\n")
    res = run("simulate", g, "--script", script)
    assert res.exit_code == 0 and json.loads(res.output)["outcome"] == "cleared@3"
    script.write_text("0\n1\n2\n")
    assert run("simulate", g, "--script", script, "--variant", "ia_inf").exit_code == 1


def test_funnel_round_trip(run, graph_file, tmp_path):
    path = graph_file("backpath_tree", 2, 2, 1, 2)
    built = run("funnel", "build", path)
    assert built.exit_code == 0
    fun = tmp_path / "funnel.json"
    fun.write_text(built.output)
    assert json.loads(run("funnel", "check", path, "--funnel", fun).output)["status"] == "monotone"
    compiled = run("funnel", "compile", path, "--funnel", fun)
    assert compiled.exit_code == 0 and json.loads(compiled.output)["verified"]


def test_funnel_impossible(run, tmp_path):
    g = tmp_path / "c4.txt"
    g.write_text("n 4\n0 1\n1 2\n2 3\n0 3\n")
    res = run("funnel", "build", g, "-k", 2)
    assert res.exit_code == 1 and json.loads(res.output)["hideout"] == [0, 1, 2, 3]


def test_suite(run, tmp_path):
    cfg = tmp_path / "suite.cfg"
    cfg.write_text("[corpus]\nexhaustive_n = 3\n[relations]\ndefaults = identities\nspeeds = 1\n")
    res = run("suite", cfg)
    assert res.exit_code == 0 and json.loads(res.output)["totals"]["fail"] == 0
    cfg.write_text("[corpus]\nexhaustive_n = 3\n[relations]\ndefaults = none\nextra = pw = tw+1\n")
    assert run("suite", cfg).exit_code == 1


def test_hunt(run):
    res = run("hunt", "ia_1", "cm-ia_1", "-s", 1, "--nmax", 4)
    assert res.exit_code == 1 and json.loads(res.output)["witnesses"]


def test_exit_codes(run, graph_file, tmp_path):
    assert run("solve", tmp_path / "missing.txt").exit_code == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("n 2\n0 0\n")
    assert run("param", "wcol", bad).exit_code == 3
    path = graph_file("subdivided_clique", 4, 1)
    assert run("solve", "--visibility", "invisible", path, env={"SPEEDCOPS_BUDGET": "10"}).exit_code == 2
