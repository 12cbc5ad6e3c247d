import json

import pytest

from skewlab.cli import main

F4 = "GF(2)^2/y^2+y+1"


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_documented_examples(capsys):
    rc, out, _ = run(capsys, "mclm", "--tower", F4, "t^2+g")
    assert rc == 0 and "hhat = x^2+x+1\n" in out and "h = t^4+t^2+1\n" in out
    rc, out, _ = run(capsys, "decide", "--tower", "GF(2)^3/y^3+y+1", "t^2+1")
    assert out == "TRUE step=1 witness=t+1\n"
    rc, out, _ = run(capsys, "mul", "--tower", F4, "t+g", "t+1")
    assert out == "t^2+(g+1)*t+g\n"


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["divmod", "t^2+g", "t+g"], "q = t+g+1\nr = g+1\n"),
        (["divmod", "--side", "left", "g*t", "t"], "q = g+1\nr = 0\n"),
        (["gcrd", "t^2+1", "t^2+(g+1)*t+g"], "t+1\n"),
        (["lclm", "t+1", "t+g"], "t^2+1\n"),
        (["tpow", "--k", "1", "t^2+t+1"], "true\n"),
        (["certify", "t^2+(g+1)*t+g"], "NONE\n"),
        (["decide", "--literal-step3", "t^2+t+1"], "TRUE step=3\n"),
        (["decide", "--certify", "t^2+g"], "IRREDUCIBLE reason=hhat-irreducible\n"),
    ],
)
def test_commands(capsys, argv, expected):
    rc, out, _ = run(capsys, *argv)
    assert rc == 0 and out == expected


def test_factor_and_reports(capsys):
    rc, out, _ = run(capsys, "factor", "t^2+(g+1)*t+g")
    assert out.splitlines()[:2] == ["(t+g)*(t+1)", "l = 2"]
    rc, out, _ = run(capsys, "nucleus", "t^2+g")
    assert out == "d = 2\ndegree_over_F = 2\nbasis = 1, g\n"
    rc, out, _ = run(capsys, "eigenring", "--with-factorization", "t^2+1")
    assert "dim = 4" in out and "l = 2" in out and "k = 2" in out


def test_json_is_canonical(capsys):
    rc, out, _ = run(capsys, "eigenring", "--format", "json", "t^2+g")
    data = json.loads(out)
    assert data["dim"] == 2 and data["hhat"] == "x^2+x+1"
    assert out.strip() == json.dumps(data, sort_keys=True)


@pytest.mark.parametrize(
    "argv,code,tag",
    [
        (["mul", "t+", "t"], 2, "PARSE"),
        (["mul", "--tower", "GF(2)^x", "t", "t"], 2, "PARSE"),
        (["mul", "--tower", "GF(4)^2", "t", "t"], 3, "NON_PRIME_P"),
        (["decide", "--tower", "GF(2)^4", "t^2+g"], 3, "HYPOTHESIS_VIOLATED"),
        (["nucleus", "t^2+1"], 3, "RIGHT_INVARIANT"),
        (["gcrd", "0", "0"], 3, "BOTH_ZERO"),
    ],
)
def test_error_codes(capsys, argv, code, tag):
    rc, out, err = run(capsys, *argv)
    assert rc == code and err.startswith(f"error[{tag}")


def test_inconclusive_exit_code(capsys, monkeypatch):
    import skewlab.reducibility as red

    monkeypatch.setattr(red, "SCAN_BUDGET", 0)
    monkeypatch.setattr(red, "_eigenring_split", lambda f: (None, False))
    monkeypatch.setattr(red, "cp_is_irreducible", lambda p: False)
    rc, out, err = run(capsys, "factor", "t^3+g")
    assert rc == 4 and err.startswith("error[INCONCLUSIVE]")


def test_selftest_and_fixtures(capsys, tmp_path):
    rc, out, _ = run(capsys, "selftest", "--level", "fast")
    assert rc == 0 and out.count("[PASS]") == 9
    path = tmp_path / "fx.json"
    rc, out, _ = run(capsys, "gen-fixtures", "--out", str(path))
    data = json.loads(path.read_text())
    row = data["fixtures"][0]
    assert (row["f"], row["hhat"], row["h"]) == ("t^2+g", "x^2+x+1", "t^4+t^2+1")
