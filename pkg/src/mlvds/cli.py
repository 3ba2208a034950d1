"""
Command-line interface: ``mlvds {product,map,eval,verify}``.

Defaults for the common flags can be set through the environment:
MLVDS_LEVEL, MLVDS_TRUNC, MLVDS_TOL, MLVDS_FORMAT, MLVDS_JOBS, MLVDS_KMAX, MLVDS_METHOD.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error, 4 divergence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .core import LEVEL, MLV, AlgebraError
from .evaluator import HOLDER, SERIES, DivergenceError, EvalConfig, eval_any
from .grammar import ParseError, format_poly, parse_poly
from .leveln import map_J, map_J_inv, shuffle_N, stuffle_N
from .mlv import map_I, map_I_inv, reg_shuffle, reg_star, shuffle, stuffle

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN, EXIT_DIVERGENT = 0, 1, 2, 3, 4

PRODUCTS = {
    "stuffle": (stuffle, MLV),
    "shuffle": (shuffle, MLV),
    "stuffleN": (stuffle_N, LEVEL),
    "shuffleN": (shuffle_N, LEVEL),
}
MAPS = {
    "I": (map_I, MLV),
    "Iinv": (map_I_inv, MLV),
    "J": (map_J, LEVEL),
    "Jinv": (map_J_inv, LEVEL),
    "reg-star": (reg_star, MLV),
    "reg-shuffle": (reg_shuffle, MLV),
}


@dataclass(frozen=True)
class CliConfig:
    command: str
    level: Optional[int]
    trunc: Optional[int]
    tol: float
    format: str
    jobs: int
    kmax: int
    method: str
    suite: Optional[str] = None

    def __post_init__(self):
        if self.level is not None and self.level < 1:
            raise ValueError("--level must be positive")
        if self.jobs < 1:
            raise ValueError("--jobs must be positive")
        if self.kmax < 3:
            raise ValueError("--kmax must be at least 3")

    def eval_config(self, N: int) -> EvalConfig:
        return EvalConfig(N, self.trunc, self.tol, self.method)


def _env(name, default, cast=str):
    v = os.environ.get(name)
    return cast(v) if v else default


def _parse_with_level(texts, level, family):
    """Parse all inputs over one alphabet; without --level use the smallest level fitting every input."""
    if level is None:
        level = max(parse_poly(t, None, family).alphabet.N for t in texts)
    return [parse_poly(t, level, family) for t in texts]


def _emit(cfg: CliConfig, text: str, payload: dict):
    print(json.dumps(payload, sort_keys=True) if cfg.format == "json" else text)


def cmd_product(cfg: CliConfig, op: str, lhs: str, rhs: str) -> int:
    fn, family = PRODUCTS[op]
    p, q = _parse_with_level([lhs, rhs], cfg.level, family)
    r = fn(p, q)
    _emit(cfg, format_poly(r), {"op": op, "level": r.alphabet.N, "result": format_poly(r)})
    return EXIT_OK


def cmd_map(cfg: CliConfig, which: str, expr: str) -> int:
    fn, family = MAPS[which]
    (p,) = _parse_with_level([expr], cfg.level, family)
    r = fn(p)
    if which.startswith("reg"):
        parts = {f"deg{i}": format_poly(c) for i, c in enumerate(r.coefficients)}
        _emit(cfg, str(r), {"map": which, "level": p.alphabet.N, "result": parts})
    else:
        _emit(cfg, format_poly(r), {"map": which, "level": p.alphabet.N, "result": format_poly(r)})
    return EXIT_OK


def cmd_eval(cfg: CliConfig, expr: str) -> int:
    p = parse_poly(expr, cfg.level)
    N = p.alphabet.N
    ecfg = cfg.eval_config(N)
    v = eval_any(p, ecfg)
    trunc = ecfg.trunc if ecfg.trunc is not None else ecfg.truncation(1)
    payload = {
        "value": {"re": v.re, "im": v.im},
        "err": v.err,
        "trunc": trunc if cfg.method == SERIES else None,
        "level": N,
        "method": cfg.method,
        "within_tol": v.err <= cfg.tol,
    }
    text = f"{v.re:.12g} {'-' if v.im < 0 else '+'} {abs(v.im):.12g}i  +/- {v.err:.2e}"
    if v.err > cfg.tol:
        text += f"  (bound above --tol {cfg.tol:g})"
    _emit(cfg, text, payload)
    return EXIT_OK


def cmd_verify(cfg: CliConfig) -> int:
    from .formulas.verify import run_suite, summary

    if cfg.level is None:
        levels = (1, 2, 3)
    else:
        levels = (cfg.level,)
    reports = []
    for N in levels:
        reports += run_suite(cfg.suite, N, cfg.kmax, cfg.jobs, cfg.eval_config(N))
    for r in reports:
        if cfg.format == "json":
            print(r.to_json())
        elif not r.passed:
            print(f"{r.line()} params={r.params}")
    failed = sum(not r.passed for r in reports)
    if cfg.format == "json":
        print(json.dumps({"summary": {"passed": len(reports) - failed, "failed": failed, "total": len(reports)}}))
    else:
        print(summary(reports))
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--level", type=int, default=_env("MLVDS_LEVEL", None, int))
    common.add_argument("--trunc", type=int, default=_env("MLVDS_TRUNC", None, int), help="series truncation (series method only)")
    common.add_argument("--tol", type=float, default=_env("MLVDS_TOL", 1e-8, float))
    common.add_argument("--format", choices=("text", "json"), default=_env("MLVDS_FORMAT", "text"))
    common.add_argument("--jobs", type=int, default=_env("MLVDS_JOBS", 1, int))
    common.add_argument("--kmax", type=int, default=_env("MLVDS_KMAX", 8, int))
    common.add_argument("--method", choices=(HOLDER, SERIES), default=_env("MLVDS_METHOD", HOLDER))

    ap = argparse.ArgumentParser(prog="mlvds", description="Double shuffle algebras of multiple L-values.")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("product", parents=[common], help="product of two expressions")
    p.add_argument("--op", choices=tuple(PRODUCTS), required=True)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p = sub.add_parser("map", parents=[common], help="translation maps and regularizations")
    p.add_argument("--which", choices=tuple(MAPS), required=True)
    p.add_argument("expr")
    p = sub.add_parser("eval", parents=[common], help="numerical value with an error bound")
    p.add_argument("expr")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=("algebra", "lemmas", "theorems", "corollaries", "all"), default="all")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = CliConfig(args.command, args.level, args.trunc, args.tol, args.format, args.jobs, args.kmax, args.method, getattr(args, "suite", None))
        if args.command == "product":
            return cmd_product(cfg, args.op, args.lhs, args.rhs)
        if args.command == "map":
            return cmd_map(cfg, args.which, args.expr)
        if args.command == "eval":
            return cmd_eval(cfg, args.expr)
        return cmd_verify(cfg)
    except ParseError as e:
        print(f"parse error:\n{e.caret()}", file=sys.stderr)
        return EXIT_PARSE
    except DivergenceError as e:
        print(f"divergent: {e}", file=sys.stderr)
        return EXIT_DIVERGENT
    except (AlgebraError, ValueError) as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
