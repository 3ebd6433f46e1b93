import csv
import io
import json
import subprocess
import sys

import pytest

from adamsops.cli import main
from adamsops.ktheory import ConsistencyError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_json_round_trip(capsys):
    code, out, err = run(
        capsys, "compute", "--group", "U", "--rank", "2", "--l", "2", "--format", "json"
    )
    assert code == 0
    assert err == ""
    doc = json.loads(out)
    assert doc["group"] == "U"
    assert doc["rank"] == 2
    assert doc["l"] == 2
    assert doc["basis"] == ["d(L^1 s_2)", "d(L^2 s_2)"]
    assert doc["matrix"] == [["4", "0"], ["-2", "2"]]


def test_compute_g2_needs_no_rank(capsys):
    code, out, _ = run(capsys, "compute", "--group", "G2", "--l", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["rank"] == 2
    assert doc["basis"] == ["d(rho1)", "d(rho2)"]
    assert doc["matrix"] == [["12", "-208"], ["-2", "56"]]


def test_compute_csv(capsys):
    code, out, _ = run(
        capsys, "compute", "--group", "Sp", "--rank", "2", "--l", "2", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["d(L^1 s_4)", "d(L^2 s_4)"]
    assert rows[1] == ["8", "-16"]
    assert rows[2] == ["-2", "12"]


def test_compute_pretty(capsys):
    code, out, _ = run(capsys, "compute", "--group", "SpinOdd", "--rank", "2", "--l", "2")
    assert code == 0
    assert "psi^2 on Spin(5)" in out
    assert "d(S)" in out


def test_compute_missing_rank_is_usage_error(capsys):
    code, out, err = run(capsys, "compute", "--group", "U", "--l", "2")
    assert code == 2
    assert out == ""
    assert "rank" in err


def test_compute_invalid_rank_and_l(capsys):
    code, _, err = run(capsys, "compute", "--group", "SpinEven", "--rank", "2", "--l", "2")
    assert code == 2
    assert "SpinEven" in err
    code, _, err = run(capsys, "compute", "--group", "U", "--rank", "3", "--l", "0")
    assert code == 2


def test_unknown_family_rejected_by_argparse(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(["compute", "--group", "SO", "--rank", "3", "--l", "2"])
    assert exc_info.value.code == 2


def test_compute_internal_failure_exits_3(capsys, monkeypatch):
    def broken(group, l, cross_check=True):
        raise ConsistencyError("forced disagreement")

    monkeypatch.setattr("adamsops.cli.adams_matrix", broken)
    code, out, err = run(capsys, "compute", "--group", "U", "--rank", "2", "--l", "2")
    assert code == 3
    assert "forced disagreement" in err


def test_eigen_symbolic_eigenvalues(capsys):
    code, out, _ = run(capsys, "eigen", "--rank", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert "matrix" not in doc and "l" not in doc
    assert doc["eigen"]["levels"] == [0, 1]
    assert doc["eigen"]["eigenvalues"] == ["l^2", "l^1"]
    assert doc["eigen"]["vectors"] == [["1", "-1"], ["0", "2"]]


def test_eigen_with_concrete_l(capsys):
    code, out, _ = run(capsys, "eigen", "--rank", "3", "--l", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["l"] == 2
    assert doc["matrix"] == [["6", "-2", "0"], ["-2", "6", "0"], ["0", "-6", "2"]]
    assert doc["eigen"]["eigenvalues"] == ["8", "4", "2"]
    # fractional coordinates serialize as exact fraction strings
    code, out, _ = run(capsys, "eigen", "--rank", "4", "--format", "json")
    doc = json.loads(out)
    assert doc["eigen"]["vectors"][2] == ["4/3", "2/3", "4/3", "-22/3"]


def test_eigen_integral_display(capsys):
    code, out, _ = run(capsys, "eigen", "--rank", "4", "--integral", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    # same vector scaled by 3; still an eigenvector, now with integer entries
    assert doc["eigen"]["vectors"][2] == ["4", "2", "4", "-22"]


def test_eigen_csv(capsys):
    code, out, _ = run(capsys, "eigen", "--rank", "2", "--l", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["level", "eigenvalue", "d(L^1 s_2)", "d(L^2 s_2)"]
    assert rows[1] == ["0", "9", "1", "-1"]
    assert rows[2] == ["1", "3", "0", "2"]


def test_eigen_invalid_rank(capsys):
    code, _, err = run(capsys, "eigen", "--rank", "0")
    assert code == 2


def test_mu_value(capsys):
    code, out, _ = run(capsys, "mu", "3", "2", "1", "1")
    assert code == 0
    assert out.strip() == "3"


def test_mu_check_agrees(capsys):
    code, out, _ = run(capsys, "mu", "4", "3", "2", "2", "--check")
    assert code == 0
    assert out.strip() == "19"  # x^4 coefficient of (1 + x + x^2)^4


def test_mu_check_disagreement_exits_3(capsys, monkeypatch):
    monkeypatch.setattr("adamsops.cli.mu_enumerate", lambda *a: 999)
    code, out, err = run(capsys, "mu", "3", "2", "1", "1", "--check")
    assert code == 3
    assert "999" in err


def test_mu_invalid_arguments(capsys):
    code, _, err = run(capsys, "mu", "0", "2", "1", "1")
    assert code == 2
    code, _, err = run(capsys, "mu", "3", "2", "-1", "1")
    assert code == 2


def test_verify_counts_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "counts", "--max-rank", "3", "--max-l", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setattr("adamsops.cli.mu_enumerate", lambda *a: 999)
    code, out, _ = run(capsys, "verify", "--suite", "counts", "--max-rank", "2", "--max-l", "2")
    assert code == 1
    assert "FAIL" in out


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-rank", "3", "--max-l", "2")
    assert code == 0
    assert "FAIL" not in out
    # all four suites contribute lines
    assert "count:" in out and "matrix:" in out and "eigen:" in out and "oracle:" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "adamsops", "mu", "3", "2", "1", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3"
