import json

import pytest

from conflab.cli import main, parse_params

NS_FILE = {
    "name": "NS",
    "basis": [{"name": "L", "parity": "even"}, {"name": "G", "parity": "odd"}],
    "brackets": {
        "L,L": {"L": "d + 2*l"},
        "L,G": {"G": "d + 3/2*l"},
        "G,G": {"L": "2"},
    },
}


def records(out: str) -> list[dict]:
    return [json.loads(line) for line in out.splitlines() if line.strip()]


@pytest.fixture
def algebra_file(tmp_path):
    def write(document, name="algebra.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return write


def test_parse_params():
    assert parse_params("a=1, b=0,Q=d+2*l") == {"a": "1", "b": "0", "Q": "d+2*l"}
    assert parse_params(None) == {}
    with pytest.raises(ValueError):
        parse_params("a")
    with pytest.raises(ValueError):
        parse_params("a=1,a=2")


def test_verify_single_family(capsys):
    assert main(["verify-catalog", "--family", "NS"]) == 0
    out = capsys.readouterr().out
    assert "skew NS" in out
    assert "jacobi NS" in out
    assert "FAIL" not in out


def test_injected_fault_fails(capsys):
    assert main(["verify-catalog", "--family", "NS", "--inject-fault", "--json"]) == 1
    failed = [r for r in records(capsys.readouterr().out) if r["status"] == "fail"]
    assert failed
    assert failed[0]["target"] == "NS[fault]"
    assert failed[0]["witness"]


def test_unknown_family_is_unusable_input():
    assert main(["verify-catalog", "--family", "Z9"]) == 2


def test_check_file(algebra_file, capsys):
    assert main(["check", algebra_file(NS_FILE), "--json"]) == 0
    checks = [(r["check"], r["status"]) for r in records(capsys.readouterr().out)]
    assert checks == [("skew", "pass"), ("jacobi", "pass")]


def test_check_file_with_broken_bracket(algebra_file):
    broken = json.loads(json.dumps(NS_FILE))
    broken["brackets"]["G,G"] = {"L": "2*l"}
    assert main(["check", algebra_file(broken)]) == 1


@pytest.mark.parametrize(
    "document",
    [
        {"basis": []},
        {"basis": [{"name": "d"}]},
        {"basis": [{"name": "L"}], "brackets": {"L,L": {"L": "d + k"}}},
        {"basis": [{"name": "L"}], "brackets": {"L,G": {"L": "1"}}},
    ],
    ids=["empty", "reserved", "undeclared", "unknown_generator"],
)
def test_check_rejects_bad_files(algebra_file, document):
    assert main(["check", algebra_file(document)]) == 2


def test_check_missing_file(tmp_path):
    assert main(["check", str(tmp_path / "absent.json")]) == 2


def test_json_stream_is_deterministic(capsys):
    args = ["verify-catalog", "--family", "HVS", "--json"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    for record in records(first):
        assert set(record) >= {"check", "target", "status"}
        assert "elapsed" not in record


def test_timings_add_elapsed(capsys):
    assert main(["verify-catalog", "--family", "Vir", "--json", "--timings"]) == 0
    for record in records(capsys.readouterr().out):
        assert record["elapsed"] >= 0


def test_series(capsys):
    assert main(["series", "B2", "--json"]) == 0
    series = records(capsys.readouterr().out)[0]
    assert series["check"] == "series"
    assert series["detail"]["perfect"] is True
    assert series["detail"]["solvable"] is False


def test_series_needs_numeric_parameters():
    assert main(["series", "D1"]) == 2


def test_solve_shift(capsys):
    args = ["solve", "shift", "--params", "a=2,b=0,alpha=3/2,beta=0", "--degree", "3"]
    assert main(args + ["--json"]) == 0
    (record,) = records(capsys.readouterr().out)
    assert record["detail"]["dimension"] == 1
    assert record["detail"]["basis"] == ["f = 1"]


def test_solve_input_errors():
    assert main(["solve", "fgh"]) == 2
    assert main(["solve", "shift", "--params", "gamma=1"]) == 2
    assert main(["solve", "odd"]) == 2


def test_solve_fgh(capsys):
    assert main(["solve", "fgh", "--params", "f=x+1", "--degree", "2", "--json"]) == 0
    (record,) = records(capsys.readouterr().out)
    assert record["detail"]["dimension"] == 0


def test_ann(capsys):
    assert main(["ann", "HVS", "--level", "2", "--json"]) == 0
    checks = [r["check"] for r in records(capsys.readouterr().out)]
    assert checks == ["antisymmetry", "super_jacobi", "closed_form"]


def test_ann_without_closed_form(capsys):
    assert main(["ann", "B2", "--level", "2", "--json"]) == 0
    statuses = {r["check"]: r["status"] for r in records(capsys.readouterr().out)}
    assert statuses["closed_form"] == "skipped"


def test_aut(capsys):
    assert main(["aut", "A3", "--params", "phi3=l", "--samples", "4", "--json"]) == 0
    checks = {r["check"] for r in records(capsys.readouterr().out)}
    assert {"group_axioms", "family_soundness", "necessity"} <= checks


def test_modules_probe(capsys):
    assert main(["modules", "V", "--params", "delta=0,a=1", "--json"]) == 0
    probe = records(capsys.readouterr().out)[-1]
    assert probe["check"] == "irreducibility"
    assert probe["detail"]["reducible"] is True
    assert probe["witness"] == "(d + 1)*v"


def test_modules_symbolic_parameters_are_skipped(capsys):
    assert main(["modules", "V", "--json"]) == 0
    statuses = [r["status"] for r in records(capsys.readouterr().out)]
    assert statuses == ["pass", "skipped"]


def test_check_reports_lambda_dependent_odd_bracket(algebra_file, capsys):
    document = {
        "basis": [{"name": "A"}, {"name": "B"}, {"name": "X", "parity": "odd"}],
        "brackets": {"A,A": {"A": "d + 2*l"}, "X,X": {"B": "l"}},
    }
    assert main(["check", algebra_file(document), "--json"]) == 1
    skew = records(capsys.readouterr().out)[0]
    assert skew["status"] == "fail"
    assert skew["witness"].startswith("(X,X,B):")


def test_solve_shift_with_linear_basis(capsys):
    args = ["solve", "shift", "--params", "a=0,b=0,alpha=1,beta=0", "--json"]
    assert main(args) == 0
    (record,) = records(capsys.readouterr().out)
    assert record["detail"]["basis"] == ["f = x"]
