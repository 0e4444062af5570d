"""End-to-end command line coverage with frozen outputs."""

import io
import json
import subprocess
import sys

import pytest

from exocone.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2")
    assert code == 0
    assert out.splitlines() == [
        "lambda=2 a=2 mu=2 nu=-",
        "lambda=2 a=1 mu=1 nu=1",
        "lambda=2 a=- mu=- nu=2",
        "lambda=1,1 a=0,1 mu=1,1 nu=-",
        "lambda=1,1 a=- mu=- nu=1,1",
    ]


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == [
        {"lambda": [1], "a": [1], "mu": [1], "nu": []},
        {"lambda": [1], "a": [], "mu": [], "nu": [1]},
    ]


def test_convert_both_directions(capsys):
    code, out, _ = run(capsys, "convert", "--lambda", "2", "--a", "1")
    assert (code, out) == (0, "mu=1 nu=1\n")
    code, out, _ = run(
        capsys, "convert", "--mu", "1", "--nu", "1", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"lambda": [2], "a": [1]}


def test_convert_requires_a_side(capsys):
    code, _, err = run(capsys, "convert")
    assert code == 2
    assert "either --lambda/--a or --mu/--nu" in err


def test_dpoly(capsys):
    code, out, _ = run(capsys, "dpoly", "--mu", "1,1", "--nu", "")
    assert (code, out) == (0, "e1^2 - e2^2\n")
    code, out, _ = run(
        capsys, "dpoly", "--mu", "", "--nu", "1,1", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {
        "vars": 2,
        "terms": [{"c": "1", "e": [3, 1]}, {"c": "-1", "e": [1, 3]}],
    }


def test_joseph(capsys):
    code, out, _ = run(
        capsys, "joseph", "--n", "2", "--ambient", "exotic",
        "--span", "1,1;1,-1",
    )
    assert (code, out) == (0, "e1*e2\n")
    code, out, _ = run(capsys, "joseph", "--n", "2", "--ambient", "ordinary")
    assert (code, out) == (0, "4*e1^3*e2 - 4*e1*e2^3\n")
    code, out, _ = run(capsys, "joseph", "--n", "2", "--span", "all")
    assert (code, out) == (0, "1\n")


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "--lambda", "2", "--a", "1")
    assert (code, out) == (0, "6\n")
    code, out, _ = run(capsys, "dim", "--n", "3")
    assert (code, out) == (0, "18\n")


def test_dim_rejects_bad_mark(capsys):
    code, _, err = run(capsys, "dim", "--lambda", "2", "--a", "3")
    assert code == 2
    assert "mark 3 out of range for part 2" in err


def test_special(capsys):
    code, out, _ = run(capsys, "special", "--lambda", "2", "--a", "1")
    assert (code, out) == (0, "e1 -> e2, e2 -> -e1\n")
    code, out, _ = run(
        capsys, "special", "--lambda", "1,1", "--a", "0,1",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out) == {"image": [[1, -1], [2, 1]]}


def test_rep(capsys):
    code, out, _ = run(capsys, "rep", "--lambda", "1,1", "--a", "0,1")
    assert code == 0
    assert json.loads(out) == {
        "n": 2, "x1": ["0", "1", "0", "0"], "x2_upper": [],
    }


def test_rep_invariant_round_trip(capsys, monkeypatch):
    code, out, _ = run(capsys, "rep", "--lambda", "2", "--a", "1")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "invariant")
    assert (code, out) == (0, "lambda=2 a=1\n")


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "2", "--q", "2")
    assert (code, out) == (0, "exotic=256 nilpotent=256 ml_bijective=true\n")
    code, out, _ = run(
        capsys, "count", "--n", "1", "--q", "4", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {
        "n": 1, "q": 4, "exotic": 16, "nilpotent": 16, "ml_bijective": True,
    }


def test_count_needs_long_flag(capsys):
    code, _, err = run(capsys, "count", "--n", "2", "--q", "4")
    assert code == 2
    assert "pass long=True" in err


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "table-n2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 11
    assert all(line.startswith("PASS ") for line in lines[:10])
    assert lines[-1] == "suite table-n2: PASS"


def test_argparse_failures(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["badcmd"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nosuch"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_deterministic_output(capsys):
    first = run(capsys, "enumerate", "--n", "3", "--format", "json")
    second = run(capsys, "enumerate", "--n", "3", "--format", "json")
    assert first == second


def test_console_script_pipe():
    rep = subprocess.run(
        [sys.executable, "-c",
         "from exocone.cli import main; raise SystemExit(main())",
         "rep", "--lambda", "2", "--a", "2"],
        capture_output=True, text=True,
    )
    assert rep.returncode == 0
    inv = subprocess.run(
        [sys.executable, "-c",
         "from exocone.cli import main; raise SystemExit(main())",
         "invariant"],
        input=rep.stdout, capture_output=True, text=True,
    )
    assert inv.returncode == 0
    assert inv.stdout == "lambda=2 a=2\n"
