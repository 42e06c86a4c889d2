import csv
import io
import json
import subprocess
import sys

import mpmath
import pytest
from mpmath import mpf

from polyzeta import cli
from polyzeta.cli import RunConfig, UsageError, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_compute_i2(capsys):
    code, rep = run_json(capsys, "compute", "I", "2", "--digits", "30")
    assert code == 0
    assert rep["schema"] == "polyzeta-report/1"
    r = rep["result"]
    assert r["note"] == "= 9/2*zeta(4)"
    assert abs(mpf(r["value"]) - 4.5 * mpmath.zeta(4)) < 1e-25
    assert {m["method"] for m in r["methods"]} >= {"exact reduction", "quadrature"}
    assert all(isinstance(m["value"], str) for m in r["methods"])


def test_compute_zeta2(capsys):
    code, rep = run_json(capsys, "compute", "zeta", "2", "--digits", "20")
    assert code == 0
    assert rep["result"]["value"].startswith("1.6449340668")


def test_compute_iminus1(capsys):
    code, rep = run_json(capsys, "compute", "Iminus1", "--digits", "20")
    assert code == 0
    assert rep["result"]["value"].startswith("1.7330025")


@pytest.mark.parametrize("argv, prefix", [
    (("gamma",), "0.57721566"),
    (("mzv", "2", "1"), "1.2020569"),
    (("liHalf", "2"), "0.5822405"),
    (("L", "3"), "0.9015426"),
    (("J", "1", "1"), "1.2020569"),
])
def test_compute_other_targets(capsys, argv, prefix):
    code, rep = run_json(capsys, "compute", *argv, "--digits", "20")
    assert code == 0
    assert rep["result"]["value"].startswith(prefix)


def test_reduce_outputs(capsys):
    _, rep = run_json(capsys, "reduce", "I", "3")
    assert rep["result"]["text"] == "36*zeta(5) - 12*zeta(2)*zeta(3)"
    assert rep["result"]["weight"] == 5
    _, rep = run_json(capsys, "reduce", "mzv", "3", "1")
    assert rep["result"]["text"] == "1/4*zeta(4)"
    _, rep = run_json(capsys, "reduce", "L", "3")
    assert rep["result"]["text"] == "6*zeta(3) - 6*Li[3](1/2) - 6*ln2*Li[2](1/2) - 2*ln2^3"
    _, rep = run_json(capsys, "reduce", "I", "2", "--canonical")
    assert rep["result"]["text"] == "1/20*pi^4"


def test_reduce_json_polynomial_round_trips(capsys):
    from polyzeta.symbolic import ZetaPolynomial, i_n_reduce

    _, rep = run_json(capsys, "reduce", "I", "5")
    assert ZetaPolynomial.from_json(rep["result"]["polynomial"]) == i_n_reduce(5)


def test_text_and_csv_output(capsys):
    code, out, _ = run(capsys, "reduce", "mzv", "3", "1", "--output", "text")
    assert code == 0 and out == "mzv(3,1) = 1/4*zeta(4)\n"
    code, out, _ = run(capsys, "compute", "zeta", "3", "--output", "csv", "--digits", "20")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and set(rows[0]) == {"target", "method", "value"}
    assert rows[0]["value"].startswith("1.2020569")


def test_verify_success_and_schema(capsys):
    code, rep = run_json(capsys, "verify", "prop3", "--digits", "30")
    assert code == 0
    assert rep["passed"] and rep["n_failed"] == 0
    for c in rep["checks"]:
        assert set(c) == {"suite", "check", "pass", "delta", "tolerance", "exact"}


def test_verify_failure_exit_code(capsys):
    code, rep = run_json(capsys, "verify", "duality", "--digits", "20", "--tolerance-scale", "1e-80")
    assert code == 1
    assert not rep["passed"] and rep["n_failed"] > 0


@pytest.mark.parametrize("argv", [
    ("compute", "I"),
    ("compute", "nosuch", "1"),
    ("verify", "nosuch"),
    ("compute", "zeta", "2", "--digits", "10"),
    ("compute", "zeta", "2", "--seed", "-1"),
    ("compute", "zeta", "2", "--tolerance-scale", "0"),
    (),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert json.loads(out)["error"]["kind"] == "usage"
    assert "error" in err


@pytest.mark.parametrize("argv", [("compute", "zeta", "1"), ("reduce", "K", "6", "6"), ("asympt", "-1")])
def test_domain_errors_exit_2(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert json.loads(out)["error"]["kind"] == "domain"


def test_weight_cap_flag(capsys):
    code, rep = run_json(capsys, "reduce", "K", "6", "6", "--weight-cap", "12")
    assert code == 0 and rep["result"]["weight"] == 12


def test_env_digits(capsys, monkeypatch):
    monkeypatch.setenv("POLYZETA_DIGITS", "25")
    _, rep = run_json(capsys, "compute", "zeta", "2")
    assert rep["config"]["digits"] == 25
    _, rep = run_json(capsys, "compute", "zeta", "2", "--digits", "40")
    assert rep["config"]["digits"] == 40
    monkeypatch.setenv("POLYZETA_DIGITS", "abc")
    code, _, _ = run(capsys, "compute", "zeta", "2")
    assert code == 2


def test_asympt_table(capsys):
    code, rep = run_json(capsys, "asympt")
    assert code == 0 and rep["rows"] == []
    _, rep = run_json(capsys, "asympt", "8", "-K", "1", "--digits", "30")
    row = rep["rows"][0]
    assert row["approximation"] == "2.0"
    assert abs(mpf(row["error"]) - mpf(6) / 2 ** 10) < 2e-3
    _, rep = run_json(capsys, "asympt", "12", "-K", "4", "--digits", "30")
    assert mpf(rep["rows"][0]["error"]) < mpf(70) / 5 ** 14 * 10


def test_logs_go_to_stderr():
    proc = subprocess.run([sys.executable, "-m", "polyzeta", "compute", "zeta", "2", "--digits", "20"],
                          capture_output=True, text=True, check=False)
    assert "finished" in proc.stderr and "finished" not in proc.stdout
    json.loads(proc.stdout)


def test_deterministic_report(capsys):
    _, first, _ = run(capsys, "verify", "lemma1", "--digits", "20")
    _, second, _ = run(capsys, "verify", "lemma1", "--digits", "20")
    assert first == second


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig(precision_digits=14)
    with pytest.raises(UsageError):
        RunConfig(seed=2 ** 64)
    with pytest.raises(UsageError):
        RunConfig(output="xml")
    assert RunConfig().precision_digits == 50


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polyzeta", "reduce", "I", "1", "--output", "text"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "I(1) = 2*zeta(3)\n"


def test_render_is_pure():
    report = cli._envelope("asympt", RunConfig(), {"K": 1, "rows": []})
    assert cli.render(report, "json") == cli.render(report, "json")
    assert cli.render(report, "csv") == ""
