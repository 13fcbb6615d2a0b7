import json

import mlflow
import networkx as nx
import pytest

from metrics.report import RunReport
from solve_vc import main

PETERSEN = "".join(
    "{} {}\n".format(u, v)
    for u, v in [
        (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
    ]
)


@pytest.fixture
def p3_file(tmp_path):
    path = tmp_path / "p3.el"
    path.write_text("0 1\n1 2\n")
    return str(path)


@pytest.fixture
def petersen_file(tmp_path):
    path = tmp_path / "petersen.el"
    path.write_text(PETERSEN)
    return str(path)


def run_cli(capsys, *argv):
    status = main(["--debug", *argv])
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_mvc_json(capsys, p3_file):
    status, out, _ = run_cli(capsys, "--input", p3_file, "--mode", "mvc", "--strategy", "seq")
    assert status == 0
    report = RunReport.from_json(out)
    assert report.size == 1
    assert report.cover == [1]
    assert report.n == 3 and report.m == 2
    assert report.file == p3_file


def test_pvc_hybrid(capsys, petersen_file):
    status, out, _ = run_cli(
        capsys, "--input", petersen_file, "--mode", "pvc", "--k", "6", "--strategy", "hybrid", "--workers", "8"
    )
    assert status == 0
    data = json.loads(out)
    assert data["feasible"] is True
    assert data["size"] <= 6
    assert data["workers"] == 8


def test_pvc_infeasible_is_not_an_error(capsys, petersen_file):
    status, out, _ = run_cli(capsys, "--input", petersen_file, "--mode", "pvc", "--k", "5", "--strategy", "seq")
    assert status == 0
    assert json.loads(out)["feasible"] is False


@pytest.mark.parametrize("strategy", ["seq", "stackonly", "hybrid"])
def test_compiled_engine_flag(capsys, petersen_file, strategy):
    status, out, _ = run_cli(
        capsys, "--input", petersen_file, "--strategy", strategy, "--workers", "4", "--depth", "2", "--no-phase-timing"
    )
    assert status == 0
    report = RunReport.from_json(out)
    assert report.size == 6
    assert report.status == "complete"


def test_dimacs_complement(capsys, tmp_path):
    path = tmp_path / "p3.clq"
    path.write_text("c path\np edge 3 2\ne 1 2\ne 2 3\n")
    status, out, _ = run_cli(
        capsys, "--input", str(path), "--format", "dimacs", "--complement", "--strategy", "stackonly", "--depth", "1"
    )
    assert status == 0
    data = json.loads(out)
    assert data["m"] == 1
    assert data["complemented"] is True
    assert data["depth"] == 1
    assert data["size"] == 1


def test_csv_report_file(capsys, tmp_path, petersen_file):
    report = tmp_path / "out" / "report.csv"
    status, out, _ = run_cli(
        capsys,
        "--input",
        petersen_file,
        "--strategy",
        "hybrid",
        "--workers",
        "2",
        "--output",
        "csv",
        "--report",
        str(report),
    )
    assert status == 0
    assert out == ""
    header, row = report.read_text().splitlines()[:2]
    assert "cover" not in header.split(",")
    assert "max_load_ratio" in header


def test_missing_k(capsys, p3_file):
    status, _, err = run_cli(capsys, "--input", p3_file, "--mode", "pvc")
    assert status == 1
    assert "needs k" in err


def test_missing_input(capsys):
    assert run_cli(capsys, "--strategy", "seq")[0] == 1


def test_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.el"
    path.write_text("0 1\n1 two\n")
    status, _, _ = run_cli(capsys, "--input", str(path))
    assert status == 1


def test_unknown_flag_value(capsys, p3_file):
    status, _, _ = run_cli(capsys, "--input", p3_file, "--strategy", "dfs")
    assert status == 1


def test_oracle_too_large(capsys, tmp_path):
    path = tmp_path / "path21.el"
    path.write_text("".join("{} {}\n".format(v, v + 1) for v in range(21)))
    status, _, _ = run_cli(capsys, "--input", str(path), "--strategy", "oracle")
    assert status == 1


def test_depth_warning_with_hybrid(capsys, p3_file):
    status = main(["--debug", "--input", p3_file, "--strategy", "hybrid", "--workers", "2", "--depth", "4"])
    captured = capsys.readouterr()
    assert status == 0
    assert "Config warning" in captured.err
    assert json.loads(captured.out)["depth"] is None


def test_node_budget_exit_status(capsys, tmp_path):
    g = nx.complement(nx.gnp_random_graph(60, 0.1, seed=3))
    path = tmp_path / "hard.el"
    path.write_text("".join("{} {}\n".format(u, v) for u, v in g.edges()))
    status, out, _ = run_cli(capsys, "--input", str(path), "--strategy", "seq", "--node-budget", "5")
    assert status == 2
    assert json.loads(out)["status"] == "budget"


def test_mlflow_tracking(capsys, tmp_path, p3_file):
    tracking = (tmp_path / "mlruns").as_uri()
    status = main(["--input", p3_file, "--strategy", "seq", "--path_mlflow", tracking])
    capsys.readouterr()
    assert status == 0

    runs = mlflow.search_runs(experiment_names=["Default"])
    assert len(runs) == 1
    assert runs["metrics.size"][0] == 1
    assert runs["params.solver.strategy"][0] == "seq"
