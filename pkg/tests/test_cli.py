import json

import pytest

from diagquiver.cli import FORMAT_ENV, main
from diagquiver.points import ProjectivePoint, to_json, wild_family


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_text_and_json(capsys):
    code, out, _ = run(capsys, "matrix", "--family", "A", "--n", "2", "--d", "2")
    assert code == 0 and "(1,1)" in out
    code, out, _ = run(capsys, "--format", "json", "matrix", "--family", "C", "--n", "2", "--p", "1", "--q", "1")
    doc = json.loads(out)
    assert code == 0
    assert doc["entries"] == [[4, 0], [3, 1]]
    assert doc["labels"] == ["((1),(1))", "((),())"]


def test_format_after_subcommand(capsys):
    code, out, _ = run(capsys, "matrix", "--family", "A", "--n", "2", "--d", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "(1),2"


def test_env_sets_default_format(capsys, monkeypatch):
    monkeypatch.setenv(FORMAT_ENV, "json")
    code, out, _ = run(capsys, "matrix", "--family", "E", "--n", "2", "--p", "0")
    assert code == 0
    assert json.loads(out)["entries"] == [[1]]


def test_matrix_dot(capsys):
    code, out, _ = run(capsys, "--format", "dot", "matrix", "--family", "A", "--n", "2", "--d", "2")
    assert code == 0 and out.startswith("digraph")


def test_output_file(capsys, tmp_path):
    target = tmp_path / "m.json"
    code, out, _ = run(capsys, "--format", "json", "--output", str(target),
                       "matrix", "--family", "D", "--n", "2", "--p", "2")
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["family"] == "D"


@pytest.mark.parametrize("argv", [
    ("matrix", "--family", "D", "--n", "3", "--p", "1"),
    ("matrix", "--family", "Z", "--n", "2", "--d", "1"),
    ("matrix", "--family", "A", "--n", "2"),
    ("chartable", "11"),
    ("coeff", "nosuch", "(1)", "(1)", "()"),
    ("k0", "--family", "C", "--n", "2", "--p", "1", "--q", "1", "--vector", "1,0,0"),
    ("dimcheck", "--family", "A", "--n", "2", "--d", "3", "--k", "1"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


@pytest.mark.parametrize("argv, expected", [
    (("coeff", "lr", "(3,2,1)", "(2,1)", "(2,1)"), "2"),
    (("coeff", "lr_multi", "(2,1)", "(1)", "(1)", "(1)"), "2"),
    (("coeff", "c_pair", "((1),(1))", "((1),())", "((),(1))"), "1"),
    (("coeff", "cap_F", "(1)", "(1)", "(1)", "(1)"), "3"),
])
def test_coeff(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_chartable(capsys):
    code, out, _ = run(capsys, "chartable", "3")
    rows = [line.split(",") for line in out.splitlines()]
    assert code == 0
    assert [r[-1] for r in rows[1:]] == ["1", "2", "1"]


def test_spectra(capsys):
    code, out, _ = run(capsys, "spectra", "--family", "A", "--n", "2", "--d", "2")
    doc = json.loads(out)
    assert code == 0 and doc["verified"]
    assert sorted(doc["eigenvalues"]) == [2, 4]
    code, out, _ = run(capsys, "spectra", "--family", "C", "--n", "2", "--p", "1", "--q", "1")
    assert code == 0 and sorted(json.loads(out)["eigenvalues"]) == [1, 4]


def test_quiver_verdicts(capsys):
    _, out, _ = run(capsys, "quiver", "--family", "A", "--n", "2", "--d", "3")
    assert out.startswith("Simple")
    _, out, _ = run(capsys, "quiver", "--family", "D", "--n", "2", "--p", "2")
    assert out.startswith("Inconclusive")
    _, out, _ = run(capsys, "quiver", "--family", "A", "--n", "2", "--d", "1", "--dot")
    assert "digraph" in out


def test_dimcheck(capsys):
    code, out, _ = run(capsys, "dimcheck", "--family", "E", "--n", "2", "--p", "3")
    assert code == 0 and "PASS" in out


def test_bratteli(capsys):
    code, out, _ = run(capsys, "bratteli", "--loops", "2", "--stages", "5")
    assert code == 0
    assert json.loads(out)["stages"] == [[1], [2], [4], [8], [16]]


def test_k0(capsys):
    code, out, _ = run(capsys, "--format", "json", "k0", "--family", "A", "--n", "2", "--d", "2",
                       "--vector", "3,-1", "--against", "5,5")
    doc = json.loads(out)
    assert code == 0
    assert doc["positive"] is True
    assert doc["order_unit_witness"] >= 1
    code, out, _ = run(capsys, "k0", "--loops", "2", "--vector", "-1")
    assert code == 0 and "False" in out


def test_points_equiv(capsys, tmp_path):
    x, y = ProjectivePoint((1, 0)), ProjectivePoint((1, 1))
    files = {}
    for name, pts in {"a": [x, y], "b": [x.scaled(3), y, x, y], "c": [y, x]}.items():
        files[name] = tmp_path / f"{name}.json"
        files[name].write_text(to_json(wild_family(2, pts)))
    code, out, _ = run(capsys, "points-equiv", str(files["a"]), str(files["b"]))
    assert code == 0 and out.strip() == "equivalent"
    code, out, _ = run(capsys, "points-equiv", str(files["a"]), str(files["c"]))
    assert code == 1 and out.strip() == "inequivalent"


def test_verify_appendix_reports_single_disagreement(capsys):
    code, out, _ = run(capsys, "verify-appendix")
    assert code == 1
    assert out.splitlines()[-1] == "22/23 tables match"
    assert [line for line in out.splitlines() if line.startswith("FAIL")] == ["FAIL E^2_4"]
