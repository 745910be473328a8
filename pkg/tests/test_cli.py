import csv
import io
import json

import pytest

from cpq.cli import main, parse_q


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cp1_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--ell", "1", "--N", "0", "--q", "0.5", "--levels", "10",
                       "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["degree", "level", "weight", "eigenvalue_sq", "eigenvalue", "multiplicity"]
    plus = [r for r in rows if not r["eigenvalue"].startswith("-") and r["eigenvalue"] != "0"]
    for k, r in enumerate(plus[:5], 1):
        qk = lambda n: (0.5 ** n - 2.0 ** n) / (0.5 - 2.0)
        assert float(r["eigenvalue_sq"]) == pytest.approx(qk(k) * qk(k + 1), rel=1e-13)
        assert int(r["multiplicity"]) == 2 * k + 1


def test_output_is_deterministic(capsys):
    args = ("spectrum", "--ell", "2", "--N", "1", "--levels", "3", "--format", "json")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b
    data = json.loads(a)
    assert set(data["params"]) >= {"ell", "N", "q", "r"}


def test_symbolic_values_parse_back(capsys):
    from cpq.qscalar import QScalar, qnum
    _, out, _ = run(capsys, "spectrum", "--ell", "1", "--levels", "2", "--format", "json")
    rows = json.loads(out)["rows"]
    nz = [r for r in rows if r["eigenvalue_sq"] != "0"]
    assert QScalar.parse(nz[0]["eigenvalue_sq"]) == qnum(1) * qnum(2)


def test_classical_json(capsys):
    code, out, _ = run(capsys, "classical", "--ell", "3", "--N", "2", "--levels", "5", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert {r["level"] for r in rows} == set(range(6))


def test_verify_all_success(capsys):
    code, out, _ = run(capsys, "verify", "all", "--ell", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["params"]["failures"] == []


def test_verify_failure_exit_code(capsys, monkeypatch):
    import cpq.cli as cli
    monkeypatch.setattr(cli, "run_verification", lambda s, e: [("broken", False, 3)])
    code, out, _ = run(capsys, "verify", "scalar", "--format", "json")
    assert code == 1
    assert json.loads(out)["params"]["failures"] == ["scalar: broken"]


@pytest.mark.parametrize("argv", [
    ["spectrum", "--ell", "0"],
    ["spectrum", "--ell", "2", "--q", "3/2"],
    ["spectrum", "--ell", "2", "--q", "abc"],
    ["casimir", "--ell", "2", "--weight", "1"],
    ["verify", "nope"],
    ["frobnicate"],
])
def test_invalid_input_exit_two(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as e:
        code = e.code
    _, err = capsys.readouterr()
    assert code == 2
    assert "usage" in err


def test_atomic_output(tmp_path, capsys):
    target = tmp_path / "qdim.csv"
    assert main(["qdim", "--ell", "3", "--q", "1", "--format", "csv", "--output", str(target)]) == 0
    text = target.read_text()
    assert text.splitlines()[0] == "degree,dim,qdim,matches_qbinom"
    assert "1,3,3,True" in text
    assert [p.name for p in tmp_path.iterdir()] == ["qdim.csv"]


def test_casimir_and_decompose(capsys):
    code, out, _ = run(capsys, "casimir", "--ell", "2", "--weight", "1,1", "--q", "1", "--format", "csv")
    assert code == 0 and "1 1,8,3,3" in out
    code, out, _ = run(capsys, "decompose", "--ell", "2", "--N", "0", "--levels", "1", "--k", "0",
                       "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 3


def test_parse_q():
    from fractions import Fraction
    assert parse_q("1") == 1
    assert parse_q("symbolic") == "symbolic"
    assert parse_q("1/3") == Fraction(1, 3)
