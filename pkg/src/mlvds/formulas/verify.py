"""
Verification of identity instances and the suites driven by the command line.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional

from ..core import MLV, IndexVector, NCPoly, Subspace, classify, level_alphabet, mlv_alphabet
from ..evaluator import EvalConfig
from ..leveln import fds_N_element, map_J, map_J_inv
from ..mlv import fds_element, map_I, map_I_inv, rds_element, reg_shuffle, reg_star, shuffle, stuffle
from . import catalog, lemmas, theorems
from .catalog import IdentityInstance
from .combination import Combination

SUITES = ("algebra", "lemmas", "theorems", "corollaries", "all")


@dataclass
class VerificationReport:
    id: str
    family: str
    params: dict
    symbolic: str
    residual: Optional[float]
    residual_re: Optional[float]
    residual_im: Optional[float]
    err: Optional[float]
    budget: Optional[float]
    tol: float
    expect_zero: bool
    passed: bool
    seconds: float
    note: str = ""

    def to_json(self) -> str:
        d = asdict(self)
        d["params"] = {k: list(v) if isinstance(v, tuple) else v for k, v in self.params.items()}
        return json.dumps(d, sort_keys=True)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        num = "" if self.residual is None else f" residual={self.residual:.3e} budget={self.budget:.1e}"
        exp = "" if self.expect_zero else " (expected nonzero)"
        return f"{status} {self.id} symbolic={self.symbolic}{num}{exp}"


def verify_instance(inst: IdentityInstance, cfg: Optional[EvalConfig] = None) -> VerificationReport:
    """Symbolic comparison (if any) and numeric evaluation (if any) of one instance.

    The numeric part passes when ``|value| <= budget`` where the budget is the
    propagated error bound, and that budget is itself below the tolerance.
    """
    t0 = time.perf_counter()
    if inst.symbolic is None:
        sym = "not-applicable"
    else:
        lhs, rhs = inst.symbolic
        sym = "equal" if lhs == rhs else "not-equal"
    residual = re_ = im_ = err = budget = None
    numeric_ok = True
    if inst.element is not None:
        N = inst.element.N
        v = inst.element.evaluate((cfg or EvalConfig(N)).with_level(N))
        residual, re_, im_, err = abs(v), v.re, v.im, v.err
        budget = err
        vanishes = residual <= budget and budget <= inst.tol
        numeric_ok = vanishes if inst.expect_zero else residual > inst.tol
    passed = sym != "not-equal" and numeric_ok and inst.admissible
    return VerificationReport(
        inst.id,
        inst.family,
        dict(inst.params),
        sym,
        residual,
        re_,
        im_,
        err,
        budget,
        inst.tol,
        inst.expect_zero,
        passed,
        time.perf_counter() - t0,
        inst.note,
    )


def verify_all(instances, jobs: int = 1, cfg: Optional[EvalConfig] = None) -> list:
    """Reports in input order; ``jobs > 1`` spreads instances over worker processes."""
    instances = list(instances)
    if jobs <= 1 or len(instances) < 2:
        return [verify_instance(i, cfg) for i in instances]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(verify_instance, instances, itertools.repeat(cfg), chunksize=8))


# ---------------------------------------------------------------------------
# lemma and theorem instances


def _pair(fid, params, lhs, rhs) -> IdentityInstance:
    suffix = "/".join(f"{k}={v}" for k, v in params.items())
    return IdentityInstance(f"{fid}/{suffix}", fid, params, symbolic=(lhs, rhs))


def lemma41_check(k: int, n: int, a: int, avec, N: int):
    """Both stuffle closed forms as ``(first, second)`` symbolic instances."""
    lemmas.check_range(k, n, a, avec, N)
    p = {"N": N, "k": k, "n": n, "a": (a,) + tuple(avec)}
    return (
        _pair("stuffle-inserted-one", p, lemmas.stuffle_first_lhs(k, n, a, avec, N), lemmas.stuffle_first_rhs(k, n, a, avec, N)),
        _pair("stuffle-inserted-any", p, lemmas.stuffle_second_lhs(k, n, a, avec, N), lemmas.stuffle_second_rhs(k, n, a, avec, N)),
    )


def lemma42_check(k: int, n: int, a: int, avec, N: int):
    """Both shuffle closed forms as ``(first, second)`` symbolic instances."""
    lemmas.check_range(k, n, a, avec, N)
    p = {"N": N, "k": k, "n": n, "a": (a,) + tuple(avec)}
    return (
        _pair("shuffle-inserted-one", p, lemmas.shuffle_first_lhs(k, n, a, avec, N), lemmas.shuffle_first_rhs(k, n, a, avec, N)),
        _pair("shuffle-inserted-any", p, lemmas.shuffle_second_lhs(k, n, a, avec, N), lemmas.shuffle_second_rhs(k, n, a, avec, N)),
    )


def general_shuffle_check(l: int, a: int, ks, avec, N: int) -> IdentityInstance:
    p = {"N": N, "l": l, "ks": tuple(ks), "a": (a,) + tuple(avec)}
    brute = shuffle(lemmas.z(N, (l,), (a,)), lemmas.z(N, ks, avec))
    return _pair("binomial-shuffle", p, brute, lemmas.general_shuffle(l, a, ks, avec, N))


def _tol(N):
    return 1e-7 if N <= 2 else 1e-6


def thm43_element(k: int, n: int, a: int, avec, N: int) -> IdentityInstance:
    """Sum formula instance; symbolic check against its double shuffle origin."""
    el = theorems.sum_formula_element(k, n, a, avec, N)
    origin = theorems.sum_formula_origin(k, n, a, avec, N)
    p = {"N": N, "k": k, "n": n, "a": (a,) + tuple(avec)}
    suffix = "/".join(f"{key}={v}" for key, v in p.items())
    return IdentityInstance(f"sum-formula/{suffix}", "sum-formula", p, Combination.from_ncpoly(el), (el, origin), tol=_tol(N), extra={"poly": el})


def thm44_element(k: int, n: int, a: int, avec, N: int) -> IdentityInstance:
    """Weighted formula instance; the closed form must equal the double shuffle construction and lie in A^0."""
    el = theorems.weighted_formula_element(k, n, a, avec, N)
    origin = theorems.weighted_formula_origin(k, n, a, avec, N)
    p = {"N": N, "k": k, "n": n, "a": (a,) + tuple(avec)}
    suffix = "/".join(f"{key}={v}" for key, v in p.items())
    in_a0 = classify(el) is Subspace.A0
    return IdentityInstance(
        f"weighted-sum/{suffix}", "weighted-sum", p, Combination.from_ncpoly(el), (el, origin), tol=_tol(N), admissible=in_a0, extra={"poly": el}
    )


def specialization_checks(k: int, N: int):
    """At depth two the theorem elements coincide with the double L-value corollaries."""
    out = []
    for a, a1 in itertools.product(range(N), repeat=2):
        p = {"N": N, "k": k, "a": (a, a1)}
        out.append(_pair("sum-formula->double-sum", p, theorems.sum_formula_element(k, 2, a, (a1,), N), theorems.double_sum_element(k, a, a1 - a, N)))
        out.append(_pair("weighted-sum->double-weighted", p, theorems.weighted_formula_element(k, 2, a, (a1,), N), theorems.double_weighted_element(k, a, a1, N)))
    return out


# ---------------------------------------------------------------------------
# weighted level-2 derivation


def _level2_poly(comb: Combination) -> NCPoly:
    return comb.expand().apply_depth_one_level2().to_ncpoly()


def derive_weighted_level2(k: int, reports=None) -> list:
    """The two weighted level-2 double-value identities as exact combinations of the three weighted ones.

    With ``reports`` given, the constituent identities must already have passed.
    """
    ws = {inst.family: inst for inst in catalog.level2_weighted(k)}
    if reports is not None:
        done = {r.id: r.passed for r in reports}
        for inst in ws.values():
            if not done.get(inst.id, False):
                raise ValueError(f"constituent {inst.id} has not been verified")
    z00, z0111, z10 = (_level2_poly(ws[f].element) for f in ("ws-00", "ws-01-11", "ws-10"))
    target = [_level2_poly(i.element) for i in catalog.level2_zeta2_weighted(k)]
    out = []
    t0 = time.perf_counter()
    for line, (combo, tgt) in enumerate(((z00 + z0111 + z10, target[0]), (z00 + z10 - z0111, target[1]))):
        nonzero = all(bool(p) for p in (z00, z0111, z10))
        eq = combo == tgt
        out.append(
            VerificationReport(
                f"derive-weighted2/N=2/k={k}/line={line + 1}",
                "derive-weighted2",
                {"N": 2, "k": k, "line": line + 1},
                "equal" if eq else "not-equal",
                None,
                None,
                None,
                None,
                None,
                0.0,
                True,
                eq and nonzero,
                time.perf_counter() - t0,
            )
        )
    return out


# ---------------------------------------------------------------------------
# algebra suite


def _depth_one_a0(N: int, kmax: int, family: str):
    if family == MLV:
        for k in range(1, kmax + 1):
            for a in range(N):
                if k >= 2 or a != 0:
                    yield lemmas.z(N, (k,), (a,))
    else:
        al = level_alphabet(N)
        for k in range(2, kmax + 1):
            for a in range(1, N + 1):
                yield NCPoly.generators(IndexVector((k,), (a,)), al)


def kernel_instance(fid: str, params: dict, poly: NCPoly, kind: str = "star", tol: float = 1e-6) -> IdentityInstance:
    suffix = "/".join(f"{k}={v}" for k, v in params.items())
    if poly.alphabet.family == MLV and kind == "shuffle":
        # L_sh(w) = L_*(I^-1 w): evaluate through the twist conversion
        poly = map_I_inv(poly)
    comb = Combination.from_ncpoly(poly)
    return IdentityInstance(f"{fid}/{suffix}", fid, params, comb, tol=tol)


def algebra_instances(N: int, kmax: int) -> list:
    """Double shuffle kernel elements and exact map/regularization identities at level N."""
    out = []
    wmax = min(kmax, 6)
    al = mlv_alphabet(N)
    gens = list(_depth_one_a0(N, wmax - 1, MLV))
    for w1, w2 in itertools.combinations_with_replacement(gens, 2):
        if w1.weight() + w2.weight() > wmax:
            continue
        p = {"N": N, "w1": str(w1), "w2": str(w2)}
        out.append(kernel_instance("fds-star", p, fds_element(w1, w2, "stuffle"), "star"))
        out.append(kernel_instance("fds-shuffle", p, fds_element(w1, w2, "shuffle"), "shuffle"))
    y_letters = [lemmas.z(N, (1,), (a,)) for a in range(N)]
    for w0 in gens:
        for w1 in y_letters:
            if w0.weight() + 1 > wmax:
                continue
            p = {"N": N, "w0": str(w0), "w1": str(w1)}
            out.append(kernel_instance("rds-star", p, rds_element(w0, w1, "stuffle"), "star"))
            out.append(kernel_instance("rds-shuffle", p, rds_element(w0, w1, "shuffle"), "shuffle"))
    lgens = list(_depth_one_a0(N, wmax - 2, "level"))
    for w1, w2 in itertools.combinations_with_replacement(lgens, 2):
        if w1.weight() + w2.weight() > wmax:
            continue
        p = {"N": N, "w1": str(w1), "w2": str(w2)}
        out.append(kernel_instance("fdsN", p, fds_N_element(w1, w2)))
    # exact identities on a small generator grid
    words = [lemmas.z(N, ks, tw) for d in (1, 2) for ks in lemmas.compositions(4, d) for tw in itertools.product(range(N), repeat=d)]
    for w in words:
        p = {"N": N, "w": str(w)}
        out.append(_pair("I-inverse", p, map_I_inv(map_I(w)), w))
        for reg, prod in ((reg_star, stuffle), (reg_shuffle, shuffle)):
            yw = stuffle(lemmas.z(N, (1,), (0,)), w) if prod is stuffle else shuffle(lemmas.z(N, (1,), (0,)), w)
            out.append(_pair(f"reg-{reg.__name__[4:]}", p, reg(yw).reconstruct(), yw))
    lal = level_alphabet(N)
    for ks in lemmas.compositions(4, 2):
        for tw in itertools.product(range(1, N + 1), repeat=2):
            w = NCPoly.generators(IndexVector(ks, tw), lal)
            out.append(_pair("J-inverse", {"N": N, "w": str(w)}, map_J_inv(map_J(w)), w))
    return out


def lemma_instances(N: int, kmax: int, seed: int = 0, random_tuples: int = 50) -> list:
    rng = random.Random(seed)
    out = []
    for n in (2, 3, 4):
        tuples = lemmas.twist_tuples(n, N) if N <= 2 else lemmas.twist_tuples(n, N, random_tuples, rng)
        for k in range(n + 1, min(kmax, n + 5) + 1):
            for tw in tuples:
                out += lemma41_check(k, n, tw[0], tw[1:], N)
                out += lemma42_check(k, n, tw[0], tw[1:], N)
    for l in range(1, 4):
        for ks in ((2,), (1, 3), (2, 1, 2)):
            tw = tuple(rng.randrange(N) for _ in range(len(ks) + 1))
            out.append(general_shuffle_check(l, tw[0], ks, tw[1:], N))
    return out


def binomial_reports(max_alpha: int = 12) -> list:
    out = []
    for name, params, lhs, rhs in lemmas.binomial_subidentities(max_alpha):
        out.append(
            VerificationReport(
                f"binomial/{name}/alpha={params}", "binomial", {"alpha": params}, "equal" if lhs == rhs else "not-equal",
                None, None, None, None, None, 0.0, True, lhs == rhs, 0.0,
            )
        )
    return out


def theorem_instances(N: int, kmax: int, seed: int = 0, random_tuples: int = 12) -> list:
    rng = random.Random(seed)
    out = []
    for n in (2, 3):
        tuples = lemmas.twist_tuples(n, N) if N <= 2 else lemmas.twist_tuples(n, N, random_tuples, rng)
        for k in range(max(3, n + 1), kmax + 1):
            for tw in tuples:
                out.append(thm43_element(k, n, tw[0], tw[1:], N))
                out.append(thm44_element(k, n, tw[0], tw[1:], N))
    for k in range(3, kmax + 1):
        out += specialization_checks(k, N)
    return out


def corollary_instances(N: int, kmax: int) -> list:
    out = []
    for k in range(3, kmax + 1):
        out += catalog.corollary_catalog(N, k)
    return out


def run_suite(suite: str, N: int, kmax: int, jobs: int = 1, cfg: Optional[EvalConfig] = None) -> list:
    """Reports for one suite at one level, in a deterministic order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    parts = SUITES[:-1] if suite == "all" else (suite,)
    reports = []
    for part in parts:
        if part == "algebra":
            reports += verify_all(algebra_instances(N, kmax), jobs, cfg)
        elif part == "lemmas":
            reports += verify_all(lemma_instances(N, kmax), jobs, cfg)
            reports += binomial_reports()
        elif part == "theorems":
            reports += verify_all(theorem_instances(N, kmax), jobs, cfg)
        elif part == "corollaries":
            if N not in (1, 2, 3):
                raise ValueError("named corollaries exist only for levels 1, 2, 3")
            got = verify_all(corollary_instances(N, kmax), jobs, cfg)
            reports += got
            if N == 2:
                for k in range(3, kmax + 1):
                    reports += derive_weighted_level2(k, got)
    return reports


def summary(reports) -> str:
    passed = sum(r.passed for r in reports)
    return f"{passed} passed, {len(reports) - passed} failed, {len(reports)} total"
