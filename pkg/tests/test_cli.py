"""CLI surface: exit codes, JSON schemas, determinism."""

import json

from lpifc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_word_invariants(capsys):
    code, record, _ = run_json(capsys, "word", "X*Y^-1")
    assert code == 0
    assert record == {
        "word": "X*Y^-1",
        "B": "X",
        "E": "Y^-1",
        "N": 1,
        "M": 0,
        "sgn": -1,
        "C": 2,
        "Cprime": 2,
    }


def test_obstruct_commutator(capsys):
    code, record, _ = run_json(capsys, "obstruct", "X*Y - Y*X")
    assert code == 1  # certificate found
    assert record["matrix"] == [["0", "1"], ["0", "0"]]
    assert record["verdict"].startswith("NOT an LPI")


def test_obstruct_inconclusive(capsys):
    # X^2 and X*Y^-1*X share cumulus 2, beginning X, end X, and sign +1, so
    # their difference has a vanishing obstruction matrix
    code, record, _ = run_json(capsys, "obstruct", "X^2 - X*Y^-1*X")
    assert code == 0
    assert record["nonzero"] is False
    assert record["verdict"] == "no obstruction found (inconclusive)"


def test_eval_exit_codes(capsys):
    code, record, _ = run_json(capsys, "eval", "X - 1")
    assert code == 1 and record["nonzero"]
    code, record, _ = run_json(capsys, "eval", "X - X")
    assert code == 0 and not record["nonzero"]


def test_eval_units_flag(capsys):
    code, record, _ = run_json(capsys, "eval", "X - 1", "--units", "alternate")
    assert code == 1
    assert record["units"] == "alternate"


def test_in_l(capsys):
    code, record, _ = run_json(capsys, "in-l", "a*b - b*a")
    assert code == 0
    assert record["in_l"] is False
    code, record, _ = run_json(capsys, "in-l", "1 - 1")
    assert record["in_l"] is True


def test_extract_g(capsys):
    code, record, _ = run_json(capsys, "extract-g", "X - 1")
    assert code == 1
    assert record["g"] == "T^2"
    assert record["sigma"] == "a" and record["tau"] == "ab"


def test_thekey(capsys):
    code, record, _ = run_json(capsys, "thekey", "--field", "3")
    assert code == 0
    assert record["zero_space"] is True
    relations = {r["relation"]: r["holds"] for r in record["relations"]}
    assert relations == {"C = 0": True, "A = D": True, "B = -(1+T)*A": True}


def test_expand(capsys):
    code, record, _ = run_json(capsys, "expand", "X*Y*X^-1*Y^-1 - 1", "--trunc", "4")
    assert code == 0
    assert record["minimal_degree"] == 2
    assert record["components"]["1,1"] == "X*Y - Y*X"


def test_verify_tables(capsys):
    code, record, _ = run_json(capsys, "verify-tables", "--cmax", "2", "--field", "3")
    assert code == 0
    assert record["failed"] == 0


def test_support3(capsys):
    code, record, _ = run_json(capsys, "support3", "--cmax", "2", "--field", "2")
    assert code == 0
    assert record["failed"] == 0
    assert record["checked"] > 0


def test_cprime_bound(capsys):
    code, record, _ = run_json(capsys, "cprime-bound", "--cmax", "2")
    assert code == 0
    assert record["failed"] == 0


def test_grpalg_info_and_falsify(capsys):
    code, record, _ = run_json(capsys, "grpalg", "--group", "sym:3", "--field", "2")
    assert code == 0
    assert record["dim"] == 6
    code, record, _ = run_json(
        capsys, "grpalg", "--group", "sym:3", "--field", "2", "--lpi", "X*Y - Y*X"
    )
    assert code == 1
    assert record["found"] is True
    code, record, _ = run_json(
        capsys, "grpalg", "--group", "cyclic:6", "--field", "2", "--lpi", "X*Y - Y*X"
    )
    assert code == 0
    assert record["found"] is False


def test_grpalg_predicates(capsys):
    code, record, _ = run_json(capsys, "grpalg", "--group", "cyclic:4", "--field", "3", "--predicates")
    assert code == 0
    assert record["all_idempotents_central"] is True


def test_p1_and_bac(capsys):
    code, record, _ = run_json(
        capsys, "p1", "--algebra", "sqzero2", "--field", "2", "--g", "T^2"
    )
    assert code == 0 and record["holds"]
    code, record, _ = run_json(capsys, "p1", "--algebra", "m2", "--field", "2", "--g", "T")
    assert code == 1 and not record["holds"]
    code, record, _ = run_json(
        capsys, "bac", "--algebra", "sqzero2", "--field", "2", "--g", "T^2"
    )
    assert code == 0 and record["holds"]


def test_finitecondi(capsys):
    code, record, _ = run_json(capsys, "finitecondi", "--q", "2", "--g", "T")
    assert code == 1  # witness found and printed
    assert record["r"] == "1"
    assert record["g_of_ab"] == "e11"


def test_standard_poly(capsys):
    code, record, _ = run_json(
        capsys, "standard-poly", "--algebra", "m2", "--field", "2", "--k", "4"
    )
    assert code == 0 and record["holds"]
    code, record, _ = run_json(
        capsys,
        "standard-poly", "--algebra", "m2", "--field", "2", "--k", "2",
        "--elements", "1,0,0,0;0,1,0,0",
    )
    assert code == 0
    assert record["value"] == "e12"


def test_parse_error_exit_2(capsys):
    code, out, err = run(capsys, "word", "X*Z")
    assert code == 2
    assert "error" in err


def test_usage_error_exit_2(capsys):
    code, _, _ = run(capsys, "grpalg", "--field", "2")
    assert code == 2


def test_json_byte_identical_reruns(capsys):
    _, out1, _ = run(capsys, "support3", "--cmax", "1", "--field", "3", "--seed", "9", "--json")
    _, out2, _ = run(capsys, "support3", "--cmax", "1", "--field", "3", "--seed", "9", "--json")
    assert out1 == out2
    _, det1, _ = run(capsys, "verify-tables", "--cmax", "2", "--field", "5", "--json")
    _, det2, _ = run(capsys, "verify-tables", "--cmax", "2", "--field", "5", "--json")
    assert det1 == det2


def test_timings_flag_adds_duration(capsys):
    _, record, _ = run_json(capsys, "support3", "--cmax", "1", "--field", "2", "--timings")
    assert "duration_ms" in record


def test_grpalg_group_file(tmp_path, capsys):
    path = tmp_path / "s3.grp"
    path.write_text("perm-group\ndegree 3\ngen 1 0 2\ngen 1 2 0\n")
    code, record, _ = run_json(
        capsys, "grpalg", "--group-file", str(path), "--field", "2", "--lpi", "X*Y - Y*X"
    )
    assert code == 1 and record["found"]


def test_grpalg_algebra_file(tmp_path, capsys):
    path = tmp_path / "dual.alg"
    path.write_text(
        "algebra\ndim 2\nlabel 0 1\nlabel 1 x\nunity 1 0\n"
        "sc 0 0 0 1\nsc 0 1 1 1\nsc 1 0 1 1\n"
    )
    code, record, _ = run_json(capsys, "grpalg", "--algebra-file", str(path), "--field", "2")
    assert code == 0 and record["dim"] == 2


def test_invalid_field_rejected(capsys):
    code, _, err = run(capsys, "obstruct", "X", "--field", "4")
    assert code == 2
    assert "prime" in err
