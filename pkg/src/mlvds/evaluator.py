"""
Floating-point values of multiple L-values, level-N multiple zeta values and
the level-3 auxiliary double series, each returned with an absolute error bound.

Two independent routes are available for every quantity:

* ``"holder"``: the iterated-integral form split at an interior point, giving
  geometrically convergent power series (accurate to ~1e-13).
* ``"series"``: the defining nested series truncated at ``M`` terms, summed in a
  single compensated pass, with a rigorous tail bound (accuracy ~1/M).

The default is ``"holder"``; ``"series"`` serves as the independent cross-check.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import holder, series
from .core import LEVEL, MLV, AlgebraError, DomainError, IndexVector, NCPoly, indices_from_word, word_to_runs
from .cyclotomic import Cyclo, root_powers
from .grammar import format_word
from .leveln import expansion_coefficients

HOLDER = "holder"
SERIES = "series"


class DivergenceError(AlgebraError):
    """The requested series does not converge."""


class RouteDisagreementError(ArithmeticError):
    """Two evaluation routes differ by more than their combined error bounds."""


@dataclass(frozen=True)
class ComplexApprox:
    re: float
    im: float
    err: float = 0.0

    def __post_init__(self):
        if not self.err >= 0:
            raise ValueError(f"error bound must be non-negative, got {self.err}")

    @classmethod
    def of(cls, z: complex, err: float = 0.0) -> "ComplexApprox":
        z = complex(z)
        return cls(z.real, z.imag, float(err))

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return abs(self.value)

    def __add__(self, other):
        if isinstance(other, ComplexApprox):
            return ComplexApprox.of(self.value + other.value, self.err + other.err)
        return ComplexApprox.of(self.value + complex(other), self.err)

    __radd__ = __add__

    def __neg__(self):
        return ComplexApprox(-self.re, -self.im, self.err)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ComplexApprox):
            err = abs(self) * other.err + abs(other) * self.err + self.err * other.err
            return ComplexApprox.of(self.value * other.value, err)
        if isinstance(other, Cyclo):
            c = other.to_complex()
            # the numeric image of an exact coefficient carries a few ulps
            err = abs(c) * self.err + 4 * series.EPS * other.abs_bound() * abs(self)
            return ComplexApprox.of(self.value * c, err)
        c = complex(float(other)) if isinstance(other, Fraction) else complex(other)
        return ComplexApprox.of(self.value * c, abs(c) * self.err)

    __rmul__ = __mul__

    def within(self, tol: float) -> bool:
        """True when the interval around the value contains no point farther than ``tol`` from 0."""
        return abs(self) + self.err < tol

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re:.15g} {sign} {abs(self.im):.15g}i  (err {self.err:.2e})"


ZERO = ComplexApprox(0.0, 0.0, 0.0)


def _env_int(name, default):
    v = os.environ.get(name)
    return int(v) if v else default


@dataclass(frozen=True)
class EvalConfig:
    N: int = 1
    trunc: Optional[int] = None
    target_tol: float = 1e-8
    method: str = HOLDER
    cross_check: bool = False

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("level must be positive")
        if self.trunc is not None and self.trunc < 100:
            raise ValueError("truncation must be at least 100")
        if not self.target_tol > 0:
            raise ValueError("tolerance must be positive")
        if self.method not in (HOLDER, SERIES):
            raise ValueError(f"unknown method {self.method!r}")

    def truncation(self, depth: int) -> int:
        if self.trunc is not None:
            return self.trunc
        return _env_int("MLVDS_TRUNC", 10**6 if depth <= 2 else 10**5)

    def with_level(self, N: int) -> "EvalConfig":
        return replace(self, N=N)


# ---------------------------------------------------------------------------
# L-values


def _check_convergent(ks, twists, N):
    if ks and ks[0] == 1 and twists[0] % N == 0:
        raise DivergenceError(f"L({','.join(map(str, ks))};{','.join(map(str, twists))}) diverges: leading exponent 1 with twist 0")


@lru_cache(maxsize=None)
def _L_star(ks: tuple, twists: tuple, N: int, method: str, M: int) -> ComplexApprox:
    if method == HOLDER:
        v, e = holder.L_value(ks, twists, N)
        return ComplexApprox.of(v, e)
    res = series.evaluate(ks, series.twisted_tables(twists, N, root_powers(N)), M)
    return ComplexApprox.of(res.value, res.err)


def eval_L_star(iv: IndexVector, cfg: EvalConfig) -> ComplexApprox:
    """``sum_{m1>...>mn>0} w^{a1 m1 + ... + an mn} / (m1^k1 ... mn^kn)``."""
    if iv.depth == 0:
        return ComplexApprox(1.0, 0.0, 0.0)
    N = cfg.N
    twists = tuple(a % N for a in iv.twists)
    _check_convergent(iv.ks, twists, N)
    return _L_star(iv.ks, twists, N, cfg.method, cfg.truncation(iv.depth))


def shuffle_to_star_twists(twists, N: int) -> tuple:
    """``(a1, a2, ..., an) -> (a1, a2 - a1, ..., an - a_{n-1})`` mod N."""
    out, prev = [], 0
    for a in twists:
        out.append((a - prev) % N)
        prev = a
    return tuple(out)


def star_to_shuffle_twists(twists, N: int) -> tuple:
    out, acc = [], 0
    for a in twists:
        acc = (acc + a) % N
        out.append(acc)
    return tuple(out)


def eval_L_shuffle(iv: IndexVector, cfg: EvalConfig) -> ComplexApprox:
    return eval_L_star(IndexVector(iv.ks, shuffle_to_star_twists(iv.twists, cfg.N)), cfg)


def _word_index(word: tuple, p: NCPoly) -> IndexVector:
    try:
        runs = word_to_runs(word)
    except DomainError:
        raise DomainError(f"word {format_word(word, p.alphabet, False)} ends with x and cannot be evaluated") from None
    return IndexVector(tuple(k for k, _ in runs), tuple(p.alphabet.twist_of(c) for _, c in runs))


def eval_poly(p: NCPoly, cfg: Optional[EvalConfig] = None, kind: str = "star") -> ComplexApprox:
    """Linear extension of ``L_*`` (or ``L_sh`` with ``kind="shuffle"``) to an MLV polynomial."""
    if p.alphabet.family == LEVEL:
        return eval_level_poly(p, cfg)
    cfg = (cfg or EvalConfig(p.alphabet.N)).with_level(p.alphabet.N)
    one = eval_L_star if kind == "star" else eval_L_shuffle
    total = ZERO
    for word, c in p.sorted_items():
        iv = _word_index(word, p)
        try:
            v = one(iv, cfg)
        except DivergenceError:
            raise DivergenceError(f"word {format_word(word, p.alphabet)} is not admissible (divergent)") from None
        total = total + v * c
    return total


# ---------------------------------------------------------------------------
# level-N values


def _check_level(iv: IndexVector, N: int):
    if iv.depth and iv.ks[0] < 2:
        raise DivergenceError(f"level-{N} value {iv} diverges: leading exponent 1")
    for a in iv.twists:
        if not 1 <= a <= N:
            raise DomainError(f"level twist {a} outside 1..{N}")


@lru_cache(maxsize=None)
def _zeta_N_expansion(iv: IndexVector, N: int) -> ComplexApprox:
    total = ZERO
    for idx, coeff in sorted(expansion_coefficients(iv, N).items(), key=lambda t: t[0].twists):
        if coeff:
            total = total + _L_star(idx.ks, idx.twists, N, HOLDER, 0) * coeff
    return total


@lru_cache(maxsize=None)
def _zeta_N_series(iv: IndexVector, N: int, M: int) -> ComplexApprox:
    res = series.evaluate(iv.ks, series.congruence_tables(iv.twists, N), M)
    return ComplexApprox.of(res.value, res.err)


def zeta_N_routes(iv: IndexVector, cfg: EvalConfig):
    """``(congruence series, root-of-unity expansion)`` values of ``zeta_N(iv)``."""
    N = cfg.N
    _check_level(iv, N)
    if iv.depth == 0:
        one = ComplexApprox(1.0, 0.0, 0.0)
        return one, one
    return _zeta_N_series(iv, N, cfg.truncation(iv.depth)), _zeta_N_expansion(iv, N)


def agree(a: ComplexApprox, b: ComplexApprox, slack: float = 0.0) -> bool:
    return abs(a.value - b.value) <= a.err + b.err + slack


def eval_zeta_N(iv: IndexVector, cfg: EvalConfig) -> ComplexApprox:
    """``sum_{m1>...>mn>0, mi = ai mod N} N^n / (m1^k1 ... mn^kn)`` with twists in ``1..N``.

    The expansion route is returned since its error is ~1e-13 against ~1/M for
    the congruence series; with ``cfg.cross_check`` both are computed and must agree.
    """
    N = cfg.N
    _check_level(iv, N)
    if iv.depth == 0:
        return ComplexApprox(1.0, 0.0, 0.0)
    if cfg.method == SERIES:
        return _zeta_N_series(iv, N, cfg.truncation(iv.depth))
    value = _zeta_N_expansion(iv, N)
    if cfg.cross_check:
        direct = _zeta_N_series(iv, N, cfg.truncation(iv.depth))
        if not agree(direct, value):
            raise RouteDisagreementError(f"zeta_{N}{iv}: series {direct} vs expansion {value}")
    # the value is real; the imaginary part is pure rounding
    return ComplexApprox(value.re, 0.0, value.err + abs(value.im))


def eval_level_poly(p: NCPoly, cfg: Optional[EvalConfig] = None) -> ComplexApprox:
    if p.alphabet.family != LEVEL:
        raise DomainError("expected a level-N polynomial")
    N = p.alphabet.N
    cfg = (cfg or EvalConfig(N)).with_level(N)
    total = ZERO
    for word, c in p.sorted_items():
        iv = _word_index(word, p)
        try:
            v = eval_zeta_N(iv, cfg)
        except DivergenceError:
            raise DivergenceError(f"word {format_word(word, p.alphabet)} is not admissible (divergent)") from None
        total = total + v * c
    return total


def eval_any(p: NCPoly, cfg: Optional[EvalConfig] = None) -> ComplexApprox:
    if p.alphabet.family == MLV:
        return eval_poly(p, cfg)
    return eval_level_poly(p, cfg)


# ---------------------------------------------------------------------------
# level-3 auxiliary double series

BAR_TAGS = ((0, 1), (1, 2), (2, 0))
TILDE_TAGS = ((1, 0), (0, 2), (2, 1))

# numerator (1 - w) w^{m+s} * sign * (w^{m+t} - 1) for each tag
_AUX_NUMERATOR = {
    (0, 1): (2, -2, 1),
    (1, 2): (1, 0, 1),
    (2, 0): (0, 2, 1),
    (1, 0): (2, -2, -1),
    (0, 2): (0, 2, -1),
    (2, 1): (1, 0, -1),
}


def _aux_shift(tag) -> int:
    # inner factor 1 + w^{m-c} + w^{2(m-c)}: c = 1 for bar tags, -1 for tilde tags
    return 1 if tuple(tag) in BAR_TAGS else -1


def _check_aux(tag, k):
    if tuple(tag) not in _AUX_NUMERATOR:
        raise DomainError(f"unknown auxiliary tag {tag}")
    if k < 3:
        raise DomainError(f"auxiliary series needs k >= 3, got {k}")


def aux_tables(tag) -> list:
    """Period-3 weight tables (outer, inner) of the auxiliary double series."""
    s, t, sign = _AUX_NUMERATOR[tuple(tag)]
    c = _aux_shift(tag)
    w = root_powers(3)
    outer = [(1 - w[1]) * w[(m + s) % 3] * sign * (w[(m + t) % 3] - 1) for m in range(3)]
    inner = [sum(w[(j * (m - c)) % 3] for j in range(3)) for m in range(3)]
    return [outer, inner]


def aux_expansion(tag, k: int) -> dict:
    """The auxiliary series as ``{IndexVector: Cyclo}``, a combination of level-3 L-values.

    Expanding both numerator factors gives
    ``sign (1-w) sum_j w^{-jc} [w^{s+t} L(1,k-1; 2,j) - w^s L(1,k-1; 1,j)]``.
    """
    _check_aux(tag, k)
    s, t, sign = _AUX_NUMERATOR[tuple(tag)]
    c = _aux_shift(tag)
    pref = Cyclo(3, (1, -1)) * sign
    out = {}
    for j in range(3):
        for a1, power in ((2, s + t), (1, s)):
            coeff = pref * Cyclo.power(3, power - j * c) * (1 if a1 == 2 else -1)
            iv = IndexVector((1, k - 1), (a1, j))
            out[iv] = out.get(iv, Cyclo(3)) + coeff
    return out


def eval_zeta3_aux(tag, k: int, cfg: Optional[EvalConfig] = None) -> ComplexApprox:
    """One of the six level-3 auxiliary double series at weight ``k``."""
    _check_aux(tag, k)
    cfg = (cfg or EvalConfig(3)).with_level(3)
    if cfg.method == SERIES:
        return _aux_series(tuple(tag), k, cfg.truncation(2))
    total = ZERO
    for iv, coeff in sorted(aux_expansion(tag, k).items(), key=lambda t: t[0].twists):
        if coeff:
            total = total + _L_star(iv.ks, iv.twists, 3, HOLDER, 0) * coeff
    if cfg.cross_check:
        direct = _aux_series(tuple(tag), k, cfg.truncation(2))
        if not agree(direct, total):
            raise RouteDisagreementError(f"aux{tag} k={k}: series {direct} vs expansion {total}")
    return total


@lru_cache(maxsize=None)
def _aux_series(tag: tuple, k: int, M: int) -> ComplexApprox:
    res = series.evaluate((1, k - 1), aux_tables(tag), M)
    return ComplexApprox.of(res.value, res.err)


def aux_partial_sum(tag, k: int, M: int) -> complex:
    """Direct double loop over ``M >= m1 > m2 > 0`` (reference for short truncations)."""
    s, t, sign = _AUX_NUMERATOR[tuple(tag)]
    c = _aux_shift(tag)
    w = lambda e: root_powers(3)[e % 3]
    total = 0j
    for m1 in range(2, M + 1):
        num1 = (1 - w(1)) * w(m1 + s) * sign * (w(m1 + t) - 1)
        for m2 in range(1, m1):
            num2 = 1 + w(m2 - c) + w(2 * (m2 - c))
            total += num1 * num2 / (m1 * m2 ** (k - 1))
    return total


def closed_form_zeta_even(n: int) -> float:
    """``zeta(2n)`` from exact Bernoulli numbers."""
    B = bernoulli(2 * n)
    return float(abs(B) * (2 * math.pi) ** (2 * n) / (2 * math.factorial(2 * n)))


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number ``B_n`` (``B_1 = -1/2``) by the standard recurrence."""
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(math.comb(m + 1, j) * B[j] for j in range(m)) / Fraction(m + 1))
    return B[n]
