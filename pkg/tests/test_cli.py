"""Command-line behavior: exit codes, formats, determinism."""

import json

import pytest

from picturehang.cli import main
from picturehang.puzzles import fixture_by_id
from picturehang.words import format_word


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_one_of(capsys):
    code, out, _ = run(capsys, "construct", "one-of", "--n", "4")
    assert code == 0
    assert out.split() == "x1 x2 X1 X2 x3 x4 X3 X4 x2 x1 X2 X1 x4 x3 X4 X3".split()


def test_construct_classes(capsys):
    code, out, _ = run(capsys, "construct", "classes", "--classes", "1,2/3,4")
    assert code == 0
    assert out.strip() == "x1 x2 x3 x4 X2 X1 X4 X3"


def test_construct_k_of_json(capsys):
    code, out, _ = run(capsys, "construct", "k-of", "--k", "4", "--n", "4", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["verified"] is True
    assert report["reduced_length"] == 108


def test_compile_formula_reports(capsys):
    code, out, err = run(capsys, "compile", "--formula", "r1 & r2")
    assert code == 0
    assert out.strip() == "x1 x1 x1 x1 X2 X2 X2 X2"
    report = json.loads(err)
    assert report["verified"] is True
    assert report["depth"] == 1


def test_compile_spec_file(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text('{"n": 3, "subsets": [[1], [2, 3]]}')
    code, out, _ = run(capsys, "compile", "--spec", str(spec), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["verified"] is True


def test_compile_budget_exceeded_is_usage_error(capsys):
    code, _, err = run(capsys, "compile", "--formula", "r1 | r2", "--budget", "10")
    assert code == 2
    assert "budget" in err


def test_verify_ok_and_corrupted(capsys, tmp_path):
    fx = fixture_by_id(7)
    spec = tmp_path / "spec.json"
    spec.write_text('{"n": 4, "subsets": [[1, 2], [3, 4]]}')
    word = tmp_path / "ws.txt"
    word.write_text(format_word(fx.word))
    code, out, _ = run(capsys, "verify", "--word", str(word), "--spec", str(spec))
    assert code == 0
    assert "verified" in out

    tokens = format_word(fx.word).split()
    del tokens[3]
    word.write_text(" ".join(tokens))
    code, out, _ = run(capsys, "verify", "--word", str(word), "--spec", str(spec))
    assert code == 1
    assert "mismatch at subset {" in out


def test_solve_min_fell_and_max_survive(capsys, tmp_path):
    word = tmp_path / "w.txt"
    word.write_text("x1 x2 x3 X1 X2 X3")
    code, out, _ = run(capsys, "solve", "min-fell", "--word", str(word), "--n", "3")
    assert code == 0
    assert out.strip() == "{1,2} (size 2)"
    code, out, _ = run(capsys, "solve", "max-survive", "--word", str(word), "--n", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"members": [1], "size": 1}


def test_render_text_and_vector(capsys, tmp_path):
    word = tmp_path / "w.txt"
    word.write_text("x1 X2")
    code, out, _ = run(capsys, "render", "--word", str(word), "--n", "2")
    assert code == 0
    assert "legend: 2 letters" in out
    code, out, _ = run(capsys, "render", "--word", str(word), "--format", "vector")
    assert code == 0
    assert out.startswith("<svg")


def test_puzzles_listing_and_detail(capsys):
    code, out, _ = run(capsys, "puzzles")
    assert code == 0
    assert len(out.strip().splitlines()) == 11
    code, out, _ = run(capsys, "puzzles", "--id", "2")
    assert code == 0
    assert out.splitlines()[0] == "x1 x2 x3 X1 X2 X3"
    assert json.loads(out.splitlines()[1]) == {"n": 3, "threshold_k": 2}
    code, out, _ = run(capsys, "puzzles", "--id", "12")
    assert code == 2


def test_table_lists_all_subsets(capsys, tmp_path):
    word = tmp_path / "w.txt"
    word.write_text("x1 x2 X1 X2")
    code, out, _ = run(capsys, "table", "--word", str(word), "--n", "2")
    assert code == 0
    assert out.splitlines() == ["{} hangs", "{1} falls", "{2} falls", "{1,2} falls"]


def test_word_json_file_accepted(capsys, tmp_path):
    word = tmp_path / "w.json"
    word.write_text("[1, 2, -1, -2]")
    code, out, _ = run(capsys, "table", "--word", str(word), "--n", "2")
    assert code == 0
    assert out.splitlines()[0] == "{} hangs"


def test_usage_errors_exit_two(capsys, tmp_path):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "construct", "one-of")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("x1 y2")
    assert run(capsys, "table", "--word", str(bad), "--n", "2")[0] == 2
    missing = tmp_path / "missing.txt"
    assert run(capsys, "table", "--word", str(missing), "--n", "2")[0] == 2
    assert run(capsys, "compile", "--formula", "r1 &")[0] == 2


def test_outputs_are_deterministic(capsys):
    first = run(capsys, "puzzles", "--id", "11")
    second = run(capsys, "puzzles", "--id", "11")
    assert first == second
