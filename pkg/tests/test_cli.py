import io
import json
import subprocess
import sys

import pytest

from tategb.cli import parse_input, run
from tategb.poly import ParseError, parse_polynomial


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(list(argv), out=out, err=err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_parse_input_examples():
    names, groups = parse_input("x + 2*x^2", ["x"])
    assert groups == [[parse_polynomial("x + 2*x^2", ["x"])]]
    names, groups = parse_input("-3/8*x*y^2")
    assert names == ["x", "y"]
    assert groups[0][0].coefficient((1, 2)) == parse_polynomial("-3/8", ["x"]).coefficient((0,))
    with pytest.raises(ParseError):
        parse_input("x +")


def test_parse_input_blocks_comments_and_zero():
    warnings = []
    names, groups = parse_input("vars: y, x\n# note\nx - x\ny\n---\nx*y\n", warn=warnings.append)
    assert names == ["y", "x"]
    assert len(groups) == 2 and len(groups[0]) == 1 and warnings


def test_gb_katsura_file(tmp_path):
    # small system from the same family; the larger ones are covered by the acceptance run
    f = tmp_path / "in.txt"
    f.write_text("x^2 - 2*y\nx*y - 1\n")
    code, out, _ = call("gb", str(f), "--prime", "2", "--radii", "0,0", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["basis"] and rep["minimal"] and "pairs" in rep["stats"]
    for k in ("reduction_steps", "max_t_size"):
        assert k in rep["stats"]


def test_wnf_looping_example():
    code, out, _ = call("wnf", "--poly", "x", "--poly", "x - 2*x^2", "--prime", "2", "--radii", "0", "--certify")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0" and "# certificate: ok" in lines


def test_bad_radii_exit_code():
    code, _, err = call("gb", "--poly", "x", "--poly", "y", "--radii", "0,zz")
    assert code == 2 and "log-radii" in err


def test_syntax_error_exit_code():
    code, _, err = call("gb", "--poly", "x +")
    assert code == 2 and "column" in err


def test_no_input():
    assert call("gb")[0] == 2


def test_ideal_commands():
    assert call("intersect", "-", stdin="x\n---\ny\n")[1].strip() == "x*y"
    assert call("colon", "-", stdin="x^2\n---\nx\n")[1].strip() == "x"
    assert call("saturate", "-", "--cross-check", stdin="x^2*y\n---\nx\n")[1].strip() == "y"
    code, out, _ = call("eliminate", "--poly", "t*x", "--poly", "t - 1", "--var", "t")
    assert code == 0 and out.strip() == "x"
    code, out, _ = call("eliminate", "--poly", "t*x", "--poly", "t-1", "--var", "t", "--mode", "finite:4")
    assert code == 0 and out.strip() == "x"
    assert call("eliminate", "--poly", "x", "--var", "q")[0] == 2
    assert call("eliminate", "--poly", "x", "--var", "x", "--mode", "nope")[0] == 2


def test_finite_elimination_failure_exit_code():
    code, _, err = call(
        "eliminate", "--vars", "t,x", "--poly", "2*t - x", "--poly", "t^2 - 3", "--var", "t", "--mode", "finite:-3"
    )
    assert code == 1 and "too small" in err


def test_fan_command():
    code, out, _ = call("fan", "--poly", "x + 2*x^2", "--samples", "0;1/4;1/2;3/4;1", "--universal", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert len(rep["entries"]) == 2 and rep["universal_ok"] is True
    code, out, _ = call("fan", "--poly", "x + 2*x^2", "--grid", "0:1:1/10")
    assert code == 0 and len(out.splitlines()) == 2
    assert call("fan", "--poly", "x")[0] == 2


def test_overconvergent_flags():
    code, out, err = call("wnf", "--poly", "x", "--poly", "x - 2*x^2", "--s-radii", "1", "--budget", "-5")
    assert code == 0 and "budget" in err and out.startswith("0")
    code, out, _ = call("gb", "--poly", "x + 2*x^2", "--s-radii", "1")
    assert code == 0 and out.strip() == "x + 2*x^2"
    assert call("gb", "--poly", "x", "--s-radii", "-1", "--radii", "0")[0] == 2


def test_bench_timeout_is_expected_outcome(tmp_path):
    stats = tmp_path / "s.json"
    code, out, _ = call("bench", "--system", "cyclic:5", "--timeout", "0.5", "--stats-file", str(stats))
    assert code == 0 and "timeout" in out
    rep = json.loads(stats.read_text())
    assert rep["runs"][0]["status"] == "timeout"
    code, out, _ = call("bench", "--system", "cyclic:3", "--timeout", "30", "--repeat", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and [r["status"] for r in rep["runs"]] == ["ok", "ok"]
    assert call("bench", "--system", "noether:3")[0] == 2


def test_output_is_deterministic_and_round_trips():
    args = ("gb", "--poly", "x^2 - 3*y", "--poly", "x*y + 9", "--prime", "3", "--format", "json")
    a, b = call(*args)[1], call(*args)[1]
    assert a == b
    rep = json.loads(a)
    names, groups = parse_input("\n".join(rep["basis"]), rep["variables"])
    assert [str(x) for x in groups[0]] == [str(parse_polynomial(s, names)) for s in rep["basis"]]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tategb", "wnf", "--poly", "x^2*y", "--poly", "x^2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "0"
