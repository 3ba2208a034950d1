import json
import math
import subprocess
import sys

import pytest

from mlvds.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_product(capsys):
    assert run(capsys, "product", "--op", "stuffle", "--level", "3", "z(2,1)", "z(3,2)") == (0, "z(2,1)z(3,2) + z(3,2)z(2,1) + z(5,0)", "")
    code, out, _ = run(capsys, "product", "--op", "shuffle", "x", "y1")
    assert (code, out) == (0, "x y1 + y1 x")
    code, out, _ = run(capsys, "product", "--op", "stuffleN", "--level", "2", "Y(2,1)", "Y(3,1)")
    assert out == "Y(2,1)Y(3,1) + Y(3,1)Y(2,1) + 2*Y(5,1)"


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "product", "--op", "shuffle", "z(2,", "x")
    assert code == 2
    lines = err.splitlines()
    assert lines[1] == "z(2," and lines[2].index("^") == 4


def test_domain_error_exit(capsys):
    code, _, err = run(capsys, "product", "--op", "stuffle", "y1 x", "y1")
    assert code == 3 and "domain" in err
    assert run(capsys, "map", "--which", "I", "x")[0] == 3


def test_map(capsys):
    assert run(capsys, "map", "--which", "I", "--level", "3", "z(2,1)z(3,1)")[:2] == (0, "z(2,1)z(3,2)")
    assert run(capsys, "map", "--which", "reg-star", "y0")[:2] == (0, "deg0: 0, deg1: 1")
    assert run(capsys, "map", "--which", "Jinv", "--level", "3", "Y(2,1)Y(1,1)")[:2] == (0, "Y(2,2)Y(1,1)")
    assert run(capsys, "map", "--which", "J", "--level", "3", "Y(2,1)Y(1,2)")[:2] == (0, "Y(2,2)Y(1,2)")
    code, out, _ = run(capsys, "map", "--which", "reg-shuffle", "--format", "json", "y0 x y0")
    assert json.loads(out)["result"] == {"deg0": "-2*z(2,0)z(1,0)", "deg1": "z(2,0)"}


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--level", "1", "z(2,0)", "--format", "json")
    d = json.loads(out)
    assert code == 0 and abs(d["value"]["re"] - math.pi**2 / 6) < 1e-8 and d["err"] < 1e-8
    assert set(d) >= {"value", "err", "trunc", "level"}
    code, out, _ = run(capsys, "eval", "--level", "2", "z(1,1)")
    assert out.startswith("-0.693147180")
    code, _, err = run(capsys, "eval", "--level", "1", "z(1,0)")
    assert code == 4 and "diverg" in err
    code, out, _ = run(capsys, "eval", "--level", "2", "Y(2,1)", "--format", "json")
    assert abs(json.loads(out)["value"]["re"] - math.pi**2 / 4) < 1e-10


def test_eval_series_trunc(capsys, monkeypatch):
    code, out, _ = run(capsys, "eval", "z(2,0)", "--method", "series", "--trunc", "1000", "--format", "json")
    d = json.loads(out)
    assert d["trunc"] == 1000 and d["err"] > 1e-4 and not d["within_tol"]
    monkeypatch.setenv("MLVDS_TRUNC", "2000")
    monkeypatch.setenv("MLVDS_METHOD", "series")
    from mlvds.cli import build_parser

    args = build_parser().parse_args(["eval", "z(2,0)"])
    assert args.trunc == 2000 and args.method == "series"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "corollaries", "--level", "1", "--kmax", "8")
    assert code == 0 and out.endswith("0 failed, 30 total")
    code, out, _ = run(capsys, "verify", "--suite", "lemmas", "--level", "2", "--kmax", "5", "--format", "json")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and lines[-1]["summary"]["failed"] == 0
    assert all(x["symbolic"] == "equal" for x in lines[:-1])


def test_verify_failure_exit(capsys, monkeypatch):
    import mlvds.formulas.verify as v

    real = v.verify_instance

    def broken(inst, cfg=None):
        r = real(inst, cfg)
        r.passed = False
        return r

    monkeypatch.setattr(v, "verify_instance", broken)
    code, out, _ = run(capsys, "verify", "--suite", "corollaries", "--level", "1", "--kmax", "3")
    assert code == 1 and "FAIL" in out and "params=" in out


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "mlvds.cli", "product", "--op", "shuffle", "x", "y1"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "x y1 + y1 x"
