import io
import json
import subprocess
import sys

import pytest

from oracles import parse_dot
from parallelo import cli, report
from parallelo.venkov import GainReport

EXAMPLE = "n=5; edges=1-2,2-3,3-4,4-5,5-1,2-5"
ROW8 = (
    "F1: {1} and {2,3,4,5}; F2: {1,2} and {3,4,5}; F3: {1,5} and {2,3,4}; F4: {1,2,3} and {4,5}; "
    "F5: {1,2,5} and {3,4}; F6: {1,4,5} and {2,3}; F7: {1,2,3,4} and {5}; F8: {1,2,3,5} and {4}; "
    "F9: {1,2,4,5} and {3}; F10: {1,3,4,5} and {2}"
)


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def serial(monkeypatch):
    monkeypatch.setenv("PARALLELO_JOBS", "1")


def test_analyze_json():
    code, out = run("analyze", "--graph", EXAMPLE, "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert {"graph", "facets", "belts", "venkov", "projections", "cycle_dim", "gain_rank", "pass"} <= set(data)
    assert (data["cycle_dim"], data["gain_rank"], data["pass"]) == (21, 21, True)
    assert data["venkov"] == {"V": 10, "E": 30}
    assert len(data["facets"]) == 10 and len(data["belts"]) == 13
    assert [b["id"] for b in data["belts"] if not b["primitive"]] == ["f3", "f5", "f6"]


def test_analyze_markdown_row():
    code, out = run("analyze", "--graph", EXAMPLE, "--format", "md")
    assert code == 0
    assert f"| {ROW8} |" in out


def test_analyze_dot():
    code, out = run("analyze", "--graph", EXAMPLE, "--format", "dot")
    _, nodes, edges = parse_dot(out)
    assert code == 0 and len(nodes) == 10 and len(edges) == 30


def test_graph_from_file(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"n": 5, "edges": [[1, 2], [2, 3], [3, 4], [4, 5], [5, 1], [2, 5]]}), encoding="utf-8")
    code, out = run("analyze", "--graph", str(path))
    assert code == 0 and json.loads(out)["cycle_dim"] == 21


@pytest.mark.parametrize(
    "graph, message",
    [("n=5; edges=1-2,3-4", "graph not connected"), ("n=5; edges=1-2,2~3", "line 1, column 16")],
)
def test_analyze_input_errors(graph, message, capsys):
    code, _ = run("analyze", "--graph", graph)
    assert code == 2
    assert message in capsys.readouterr().err


def test_usage_errors():
    assert run("analyze")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("analyze", "--graph", EXAMPLE, "--format", "pdf")[0] == 2
    assert run("d4", "--all", "--config", "x.json")[0] == 2


@pytest.mark.parametrize("value", ["0", "-3", "many"])
def test_bad_jobs_variable(monkeypatch, value):
    monkeypatch.setenv("PARALLELO_JOBS", value)
    assert run("oracle-crosscheck")[0] == 2


def test_jobs_cap(monkeypatch):
    monkeypatch.setenv("PARALLELO_JOBS", "3")
    assert report.jobs_from_env(8) == 3
    assert report.jobs_from_env(2) == 2
    monkeypatch.delenv("PARALLELO_JOBS")
    assert report.jobs_from_env(5) == 5


def test_failing_case_exits_one(monkeypatch):
    def broken(g, method=None):
        return GainReport(cycle_dim=21, gain_rank=20, passed=False)

    monkeypatch.setattr(report, "check_gain_generation", broken)
    assert run("analyze", "--graph", EXAMPLE)[0] == 1
    assert run("sweep")[0] == 1


def test_sweep_manifest():
    code, out = run("sweep")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "pass"
    assert data["summary"]["zonotope_classes"] == 16
    assert data["summary"]["classes_agree_with_matroid_isomorphism"]
    assert len(data["cases"]) == 22
    k33 = data["cases"][-1]
    assert k33["facets"] == 30 and k33["note"] == "all belts size 6; Zhitomirskii"
    c5 = next(c for c in data["cases"] if c["graph"] == "n=5; edges=1-2,1-3,2-4,3-5,4-5")
    assert c5["zhitomirskii"]
    assert data["input_digest"].startswith("sha256:")


def test_sweep_markdown():
    code, out = run("sweep", "--format", "md")
    rows = [l for l in out.splitlines() if l.startswith("| ") and not l.startswith("| #")]
    assert code == 0 and len(rows) == 17
    assert "up to graph isomorphism" in out
    assert "every projection along a zone vector is a rhombic dodecahedron" in out


def test_reports_are_byte_stable():
    for argv in (("sweep",), ("oracle-crosscheck",), ("analyze", "--graph", EXAMPLE), ("d4",)):
        assert run(*argv) == run(*argv)


def test_parallel_matches_serial():
    serial = report.zonotopal_sweep(jobs=1).dumps()
    assert report.zonotopal_sweep(jobs=2).dumps() == serial


def test_d4_default_and_config(tmp_path):
    code, out = run("d4")
    data = json.loads(out)
    assert code == 0 and data["cases"][0]["all_2faces_triangular"]
    assert data["summary"]["census_ok"]
    assert all(v["count"] == 4 for v in data["summary"]["families"].values())
    cfg = tmp_path / "c.json"
    cfg.write_text('{"F1": [0, 2], "F2": [], "F3": [1]}', encoding="utf-8")
    code, out = run("d4", "--config", str(cfg))
    case = json.loads(out)["cases"][0]
    assert code == 0 and case["pass"] and not case["all_2faces_triangular"]


@pytest.mark.parametrize(
    "text, message",
    [
        ('{"F1": [0, 1, 2, 3]}', "new vertex"),
        ('{"F1": [7]}', "out of range"),
        ('{"F1": [0, 0]}', "chosen twice"),
        ('{"F1": [0]', "line 1"),
        ("[1, 2]", "JSON object"),
    ],
)
def test_d4_bad_configs(tmp_path, capsys, text, message):
    cfg = tmp_path / "c.json"
    cfg.write_text(text, encoding="utf-8")
    assert run("d4", "--config", str(cfg))[0] == 2
    assert message in capsys.readouterr().err


def test_missing_config_file(capsys):
    assert run("d4", "--config", "/nonexistent/c.json")[0] == 2
    assert "cannot read" in capsys.readouterr().err


def test_oracle_crosscheck_command():
    code, out = run("oracle-crosscheck")
    data = json.loads(out)
    assert code == 0 and len(data["cases"]) == 21


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "parallelo", "analyze", "--graph", "n=5; edges=1-2,3-4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2 and "graph not connected" in proc.stderr
