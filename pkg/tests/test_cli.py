import json

import pytest

from superjacobi.cli import main, parse_range

FIX = "fixtures"


@pytest.fixture
def run(capsys, fixture_dir):
    def _run(*args):
        args = [a.replace("@", str(fixture_dir) + "/") for a in args]
        code = main(list(args))
        return code, capsys.readouterr().out
    return _run


def test_parse_range():
    assert parse_range("2..4") == (2, 3, 4)
    assert parse_range("3") == (3,)
    with pytest.raises(Exception):
        parse_range("4..2")


def test_verify_quaternions(run):
    code, out = run("verify", "@quaternions.json", "--suite", "all")
    assert code == 0


def test_verify_octonions_fundamental(run):
    code, out = run("verify", "@octonions.json", "--suite", "fundamental", "--format", "json")
    assert code == 1
    report = json.loads(out)
    assert report["schema"] == 1 and report["exit"] == 1
    failing = [r for r in report["results"] if r["status"] == "nonzero"]
    assert failing and len(failing[0]["witness"]) == 3


def test_verify_zero(run):
    assert run("verify", "@zero.json", "--suite", "all")[0] == 0


def test_verify_catalog_without_file(run):
    code, out = run("--format", "json", "verify", "--suite", "catalog")
    assert code == 0
    assert json.loads(out)["command"] == "verify"


def test_verify_poisson_file(run):
    assert run("verify", "@poisson_canonical_1_0.json")[0] == 0
    assert run("verify", "@poisson_counterexample.json")[0] == 1


def test_theorem_quaternion_tables(run):
    code, out = run("theorem", "@quaternion_brackets.json", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1


def test_theorem_su2(run):
    code, out = run("theorem", "@su2_brackets.json")
    assert code == 0
    assert "hypothesis (JIantiI & JIantiII): fails" in out
    assert "conclusion (reconstructed product associative): no" in out
    assert "not violated" in out


def test_theorem_bad_symmetry(run, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dim": 2, "parity": [0, 0], "f": [[0, 1, 0, "1"]], "c": []}))
    assert run("theorem", str(bad))[0] == 2


def test_theorem_proof(run):
    assert run("theorem", "--proof")[0] == 0


def test_input_errors(run, tmp_path):
    garbage = tmp_path / "g.json"
    garbage.write_text("{not json")
    assert run("verify", str(garbage))[0] == 2
    assert run("verify", str(tmp_path / "missing.json"))[0] == 2
    odd = tmp_path / "odd.json"
    odd.write_text(json.dumps({"dim": 2, "parity": [0, 1], "F": [[0, 0, 1, "1"]]}))
    assert run("verify", str(odd))[0] == 2


def test_fuzz_deterministic(run):
    args = ("fuzz", "--dim", "2..3", "--trials", "60", "--seed", "7", "--format", "json")
    code, first = run(*args)
    assert code == 0
    assert run(*args)[1] == first
    assert run("--seed", "7", "--format", "json", "fuzz", "--dim", "2..3", "--trials", "60")[1] == first
    assert run("fuzz", "--dim", "2..3", "--trials", "60", "--seed", "8", "--format", "json")[1] != first


def test_fuzz_zero_trials():
    with pytest.raises(SystemExit) as exc:
        main(["fuzz", "--trials", "0"])
    assert exc.value.code == 2


def test_gen_identity(run):
    code, out = run("gen-identity", "--family", "mixed", "--n", "4", "--format", "json")
    assert code == 0
    ident = json.loads(out)["identity"]
    assert ident["text"] == "[X1,X2X3X4] - {X4,X1X2X3} + {X3,X4X1X2} + [X2,X3X4X1]"
    assert run("gen-identity", "--family", "wever")[0] == 0
    assert run("gen-identity", "--family", "chain")[0] == 0
    assert run("gen-identity", "--family", "mixed", "--n", "3")[0] == 2


def test_poisson_commands(run):
    code, out = run("poisson", "--canonical", "1", "0", "--bracket", "z1^2", "z2")
    assert code == 0 and "2*z1" in out
    code, out = run("poisson", "--counterexample", "--jacobiator", "z1", "z2", "z3", "--format", "json")
    assert json.loads(out)["schema"] == 1
    assert run("poisson", "--counterexample")[0] == 1
