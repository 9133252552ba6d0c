import io
import json
import subprocess
import sys

from doublehurwitz.cli import run


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_compute_hurwitz_oracle_example():
    code, out, _ = run_cli(
        "compute-hurwitz", "--genus", "0", "--lambda", "2", "--mu", "2", "--method", "oracle"
    )
    assert code == 0
    assert out == "1/2\n"


def test_compute_hurwitz_methods_agree(tmp_path):
    results = []
    for method in ("oracle", "cutjoin", "frobenius"):
        code, out, _ = run_cli(
            "--cache-dir",
            str(tmp_path),
            "compute-hurwitz",
            "--genus",
            "0",
            "--lambda",
            "2",
            "--mu",
            "1,1",
            "--method",
            method,
        )
        assert code == 0
        results.append(out)
    assert results == ["1/2\n"] * 3


def test_compute_hurwitz_mixed_profile():
    # degree 3, profiles (2,1) and (3), one transposition: 6 factorizations / 3!
    for method in ("oracle", "cutjoin", "frobenius"):
        code, out, _ = run_cli(
            "compute-hurwitz", "--genus", "0", "--lambda", "2,1", "--mu", "3",
            "--method", method,
        )
        assert code == 0
        assert out == "1/1\n"


def test_h_series_pretty_format():
    code, out, _ = run_cli("h-series", "--lambda", "2", "--max-q-weight", "2")
    assert code == 0
    assert out == "1/2 * q_2\n1/2 * q_1^2\n"


def test_h_series_csv_rows():
    code, out, _ = run_cli(
        "h-series", "--lambda", "2", "--max-q-weight", "2", "--format", "csv"
    )
    assert code == 0
    assert out == "monomial,coeff\nq_2,1/2\nq_1^2,1/2\n"


def test_h_series_json_round_trip():
    code, out, _ = run_cli(
        "h-series", "--lambda", "2", "--max-q-weight", "3", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["truncation"] == {"q_weight": 3}
    assert {"monomial": [["q", 2, 1]], "coeff": "1/2"} in data["terms"]


def test_h_poly_pretty():
    code, out, _ = run_cli("h-poly", "--lambda", "2")
    assert code == 0
    assert out == "z_{0,1} + z_{1,1}\n"


def test_h_poly_json():
    code, out, _ = run_cli("h-poly", "--lambda", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == [
        {"gens": [[0, 1]], "coeff": "1/1"},
        {"gens": [[1, 1]], "coeff": "1/1"},
    ]


def test_z_series_output():
    code, out, _ = run_cli(
        "z-series", "--d", "1", "--r", "1", "--max-q-weight", "2", "--format", "csv"
    )
    assert code == 0
    assert out == "monomial,coeff\nq_1,-1/1\nq_2,-1/2\n"


def test_x_table_write_and_reload(tmp_path):
    path = tmp_path / "cache.json"
    code, out, _ = run_cli(
        "x-table",
        "--max-lambda-weight",
        "3",
        "--max-r",
        "2",
        "--max-nu-weight",
        "1",
        "--out",
        str(path),
    )
    assert code == 0
    assert "wrote" in out and str(path) in out
    blob = json.loads(path.read_text())
    assert blob["version"].startswith("xtable-")
    assert blob["entries"]


def test_x_table_deterministic_bytes(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code, _, _ = run_cli(
            "x-table", "--max-lambda-weight", "2", "--max-r", "2",
            "--max-nu-weight", "1", "--out", str(path),
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_kp_check_passes():
    code, out, _ = run_cli("kp-check", "--max-t-weight", "5")
    assert code == 0
    assert out.startswith("pass")


def test_verify_suite_json_schema():
    code, out, _ = run_cli("verify", "--suite", "eqzred", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "eqzred"
    assert report["checks"]
    for check in report["checks"]:
        assert set(check) == {"name", "status", "detail"}
        assert check["status"] in ("pass", "fail")


def test_verify_pretty_output_deterministic():
    first = run_cli("verify", "--suite", "paper-examples")
    second = run_cli("verify", "--suite", "paper-examples")
    assert first == second
    assert first[0] == 0


def test_usage_errors_exit_2():
    code, _, _ = run_cli("no-such-command")
    assert code == 2
    code, _, err = run_cli("h-poly", "--lambda", "2,x")
    assert code == 2
    assert "error:" in err
    code, _, err = run_cli("compute-hurwitz", "--genus", "0", "--lambda", "2", "--mu", "3")
    assert code == 2


def test_budget_error_exit_3():
    code, _, err = run_cli(
        "oracle", "--genus", "0", "--lambda", "7", "--mu", "7"
    )
    assert code == 3
    assert "resource-budget" in err


def test_oracle_prints_rational_and_raw_count():
    code, out, _ = run_cli("oracle", "--genus", "0", "--lambda", "2", "--mu", "1,1")
    assert code == 0
    assert out == "1/2 1\n"


def test_kp_check_failure_exit_code(monkeypatch):
    import doublehurwitz.cli as cli
    from doublehurwitz.series import GradedSeries, Truncation, mono_from_vars, svar
    from fractions import Fraction

    def broken_residual(bound):
        tr = Truncation(s_weight=bound)
        return GradedSeries(tr, {mono_from_vars([(svar(1), 1)]): Fraction(1, 3)})

    monkeypatch.setattr(cli, "kp_residual", broken_residual)
    code, out, _ = run_cli("kp-check", "--max-t-weight", "4")
    assert code == 1
    assert out.startswith("fail:") and "t_1" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "doublehurwitz", "h-poly", "--lambda", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "z_{0,1}" in proc.stdout


def test_output_bytes_stable_across_hash_seeds(tmp_path):
    import os

    outputs = []
    for seed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run(
            [
                sys.executable, "-m", "doublehurwitz",
                "h-series", "--lambda", "2,2", "--max-q-weight", "5",
                "--format", "json",
            ],
            capture_output=True,
            env=env,
        )
        assert proc.returncode == 0
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]
