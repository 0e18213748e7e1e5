import json
import subprocess
import sys

import pytest

from negcurve.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys):
    code, out, _ = run(["classify", "--family", "1", "--m", "2", "--alpha", "1/16", "--beta", "13/49"], capsys)
    assert code == 0 and json.loads(out)["verdict"] == "NotMDS"


def test_xi(capsys):
    code, out, _ = run(["xi", "--family", "1", "--m", "2"], capsys)
    assert json.loads(out)["terms"] == [[-1, -1, "1"], [0, 0, "-3"], [1, 0, "1"], [0, 1, "1"]]


def test_wps_example(capsys):
    code, out, _ = run(["wps", "--family", "2", "--m", "1", "--example"], capsys)
    assert json.loads(out)["weights"] == [17, 592, 1053]


def test_tilde_family_one_m_one(capsys):
    code, _, err = run(["tilde", "--family", "1", "--m", "1"], capsys)
    assert code == 2 and "m = 1" in err


def test_malformed_rational(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--family", "1", "--m", "2", "--alpha", "1/x"])
    assert exc.value.code == 2


def test_validation_error(capsys):
    code, _, _ = run(["hc", "--family", "2", "--m", "1", "--alpha", "1/24", "--beta", "1/24"], capsys)
    assert code == 2
    code, _, _ = run(["charp-search", "--family", "2", "--m", "1", "--example"], capsys)
    assert code == 2


def test_hc_with_primes(capsys, monkeypatch):
    monkeypatch.setenv("NEGCURVE_PRIMES", "1009")
    code, out, _ = run(["hc", "--family", "1", "--m", "2", "--beta", "1/5", "--primes"], capsys)
    doc = json.loads(out)
    assert doc["exact"]["member"] and list(doc["cross_char"]["by_prime"]) == ["1009"]


def test_charp(capsys):
    code, out, _ = run(["charp-search", "--family", "2", "--m", "1", "--example", "--field", "fp:2"], capsys)
    doc = json.loads(out)
    assert doc["status"] in ("found", "inconclusive")
    if doc["status"] == "found":
        assert doc["recheck"]["member"]


def test_triangle_and_tilde(capsys, tmp_path):
    path = tmp_path / "t.json"
    code, out, _ = run(["triangle", "--family", "1", "--m", "2", "--beta", "1/5", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    doc = json.loads(path.read_text())
    assert doc["delta_prime"] == [["-4/3", "-2/3"], ["2", "1"], ["0", "3"]]
    code, out, _ = run(["tilde", "--family", "2", "--m", "2"], capsys)
    assert json.loads(out)["height"] == "10"


def test_byte_stable_subprocess():
    cmd = [sys.executable, "-m", "negcurve.cli", "scan", "--family", "2", "--m", "1", "--step", "1/24"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["nodes"]
