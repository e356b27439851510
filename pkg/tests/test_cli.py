import json
import subprocess
import sys

import pytest

from modp_llc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, json.loads(out), err


def test_predict_determined(capsys):
    code, rep, err = run(capsys, "predict", "--p", "5", "--k", "14", "--ap-val", "1/2")
    assert code == 0 and rep["status"] == "ok"
    pred = rep["result"]["prediction"]
    assert pred["kind"] == "determined" and pred["label"]["text"] == "ind(omega2^1)"
    assert "Determined" in err and rep["inputs"]["ap_val"] == "1/2"


def test_predict_ambiguous(capsys):
    code, rep, err = run(capsys, "predict", "--p", "5", "--k", "11", "--ap-val", "1/2")
    pred = rep["result"]["prediction"]
    assert code == 0 and pred["kind"] == "ambiguous" and err.startswith("Ambiguous")
    assert pred["irreducible_option"]["text"] == "ind(omega2^2)"
    assert pred["reducible_option"]["inertia_omega_powers"] == [1, 1]
    assert any("k=2p+1" in n for n in pred["notes"])


def test_predict_ordinary(capsys):
    code, rep, _ = run(capsys, "predict", "--p", "5", "--k", "12", "--ap-val", "0", "--ap-residue", "2")
    assert code == 0
    assert rep["result"]["prediction"]["label"]["text"] == "mu_3 + mu_2*omega^3"


@pytest.mark.parametrize("argv", [
    ["predict", "--p", "5", "--k", "12", "--ap-val", "0"],
    ["predict", "--p", "5", "--k", "20", "--ap-val", "3/2"],
    ["predict", "--p", "6", "--k", "12", "--ap-val", "1/2"],
    ["derive", "--p", "2", "--k", "10"],
    ["derive", "--p", "5", "--k", "7"],
    ["slopes", "--p", "5"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, rep, err = run(capsys, *argv)
    assert code == 2 and rep["status"] == "ERROR" and err.startswith("error:")


def test_derive_p2_message(capsys):
    _, rep, _ = run(capsys, "derive", "--p", "2", "--k", "10")
    assert "p=2 unsupported" in rep["error"]


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["predict", "--p", "5", "--k", "12", "--ap-val", "x"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nope"])


@pytest.mark.parametrize("k,n", [(14, 1), (15, 2)])
def test_derive_agrees(capsys, k, n):
    code, rep, err = run(capsys, "derive", "--p", "5", "--k", str(k))
    assert code == 0 and rep["result"]["agreement"] == "PASS"
    assert len(rep["result"]["candidates"]) == n and "agreement PASS" in err


@pytest.mark.parametrize("suite", ["hecke-identities", "ash-stevens", "dictionary", "divisibility"])
def test_verify_suites_pass(capsys, suite):
    code, rep, _ = run(capsys, "verify", "--suite", suite, "--p-max", "5", "--samples", "5")
    assert code == 0 and rep["result"]["failed"] == 0
    assert all(c["status"] == "PASS" for c in rep["result"]["cases"])


def test_verify_failure_exits_1(capsys, monkeypatch):
    from modp_llc import verify
    from modp_llc.cli import SUITES
    monkeypatch.setitem(SUITES, "divisibility", lambda p_max=13: [verify.CaseResult("x", "forced", False)])
    code, rep, _ = run(capsys, "verify", "--suite", "divisibility")
    assert code == 1 and rep["status"] == "FAIL" and rep["result"]["failed"] == 1


def test_slopes_single(capsys, tmp_path):
    code, rep, err = run(capsys, "slopes", "--p", "2", "--k", "12", "--cache", str(tmp_path))
    assert code == 0 and rep["result"]["slopes"] == [{"slope": "3/1", "multiplicity": 1}]
    assert err.strip() == "2, 12, 1, 3/1"


def test_slopes_p59_k74(capsys):
    code, rep, _ = run(capsys, "slopes", "--p", "59", "--k", "74", "--no-cache")
    assert code == 0 and rep["result"]["slopes_in_open_unit_interval"] == ["1/2"]


def test_slopes_sweep(capsys, tmp_path):
    code, rep, err = run(capsys, "slopes", "--sweep-pmax", "53", "--cache", str(tmp_path))
    assert code == 0 and rep["result"]["all_ordinary"]
    assert "no slopes in (0,1)" in err


def test_slopes_precision_error(capsys):
    code, rep, _ = run(capsys, "slopes", "--p", "5", "--k", "24", "--precision", "3", "--no-cache")
    assert code == 2 and rep["status"] == "ERROR"


def test_slopes_cache_io_error(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, rep, _ = run(capsys, "slopes", "--p", "5", "--k", "24", "--cache", str(blocker / "sub"))
    assert code == 3 and rep["status"] == "ERROR"


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MODP_LLC_CACHE", str(tmp_path))
    assert run(capsys, "slopes", "--p", "3", "--k", "24")[0] == 0
    assert any(tmp_path.iterdir())


def test_reports_are_byte_identical(tmp_path):
    argv = [sys.executable, "-m", "modp_llc", "predict", "--p", "7", "--k", "21", "--ap-val", "1/3"]
    a = subprocess.run(argv, capture_output=True, check=True)
    b = subprocess.run(argv, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.stdout
    argv = [sys.executable, "-m", "modp_llc", "slopes", "--p", "59", "--k", "16", "--cache", str(tmp_path)]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout  # served from the cache
    assert first == second
