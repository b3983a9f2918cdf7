import json

import pytest

from radiolab import documents
from radiolab.cli import EXIT_CONFLICT, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dist(capsys):
    assert run(capsys, "dist", "one-and-t", "5", "0", "12") == (EXIT_OK, "4\n", "")


def test_dist_general_family(capsys):
    code, out, _ = run(capsys, "dist", "general", "2,3", "0", "1")
    assert code == EXIT_OK and out == "2\n"


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "consecutive", "2", "3")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0].startswith("lower 10") and lines[1].startswith("upper 12")


def test_table_json(capsys):
    code, out, err = run(capsys, "table", "--families", "consecutive", "--t", "2..2", "--k", "2..3",
                         "--out", "json", "--budget", "5", "--no-cache")
    rows = json.loads(out)
    assert code == EXIT_OK and len(rows) == 2
    assert "2 rows, 0 conflicts" in err


def test_table_conflict_exits_2(capsys, tmp_path):
    ref = tmp_path / "ref.csv"
    ref.write_text("family,t,k,lower,upper,exact,source\nconsecutive,2,2,7,7,true,made-up\n")
    code, _, err = run(capsys, "table", "--families", "consecutive", "--t", "2", "--k", "2",
                       "--ref", str(ref), "--no-cache")
    assert code == EXIT_CONFLICT and "1 conflicts" in err


def test_pattern_build_and_verify(capsys, tmp_path):
    path = tmp_path / "p.json"
    assert run(capsys, "pattern", "build", "two-consecutive", "3", "3", "-o", str(path))[0] == EXIT_OK
    code, out, _ = run(capsys, "pattern", "verify", str(path))
    assert code == EXIT_OK and out.startswith("accept span=14")


def test_pattern_verify_rejects_corrupted(capsys, tmp_path):
    path = tmp_path / "p.json"
    run(capsys, "pattern", "build", "consecutive", "2", "2", "-o", str(path))
    doc = documents.load(path)
    doc["labels"] = [0] * doc["period"]
    doc["span"] = 0
    documents.dump(doc, path)
    code, out, _ = run(capsys, "pattern", "verify", str(path))
    assert code == EXIT_CONFLICT and out.startswith("reject")


def test_pattern_build_uncovered_cell(capsys):
    assert run(capsys, "pattern", "build", "one-and-t", "4", "2")[0] == EXIT_USAGE


def test_pattern_verify_missing_file(capsys, tmp_path):
    assert run(capsys, "pattern", "verify", str(tmp_path / "nope.json"))[0] == EXIT_USAGE


def test_prove_lower(capsys, tmp_path):
    path = tmp_path / "proof.json"
    code, out, _ = run(capsys, "prove-lower", "consecutive", "2", "2", "5", "--prefix", "20", "-o", str(path))
    assert code == EXIT_OK and out.startswith("proven rl_2 > 5")
    assert documents.load(path)["verdict"] == "proven-greater-than"
    code, out, _ = run(capsys, "prove-lower", "consecutive", "2", "2", "6", "--prefix", "20")
    assert out.startswith("inconclusive: witness-found")


def test_find_pattern(capsys):
    code, out, _ = run(capsys, "find-pattern", "one-and-t", "3", "2", "6", "--periods", "5..8")
    assert code == EXIT_OK and json.loads(out)["span"] <= 6
    code, out, _ = run(capsys, "find-pattern", "consecutive", "2", "2", "5", "--periods", "3,7")
    assert out == "none\n"


def test_exact(capsys):
    code, out, _ = run(capsys, "exact", "one-and-t", "3", "3", "--time", "10")
    assert code == EXIT_OK and out.startswith("exact 11 11")


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["dist", "consecutive", "2", "0"],
    ["bounds", "consecutive", "2", "3", "--bogus"],
    ["dist", "nosuch", "2", "0", "1"],
    ["dist", "consecutive", "x", "0", "1"],
    ["table", "--t", "a..b"],
    ["table", "--families", "nosuch"],
    ["find-pattern", "consecutive", "2", "2", "6", "--periods", "x"],
])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == EXIT_USAGE
