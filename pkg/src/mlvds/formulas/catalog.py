"""
Named sum and weighted-sum identities at levels 1, 2 and 3.

Each identity is stored as ``lhs - rhs`` in a :class:`Combination`.  Notation:
at level 2 a barred argument is twist 1 of ``L_*``; at level 3 bar is twist 1
and tilde twist 2.  For level-N values ``zeta_N`` the plain argument is the
residue class ``N``, bar is 1 and tilde is 2.

Sums written with upper limit ``k`` in the level-3 statements stop at ``k-1``:
the last term would have a zero exponent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

from ..cyclotomic import Cyclo
from .combination import AUX, L, Z, Combination
from .theorems import double_sum_element, double_weighted_element


@dataclass(frozen=True)
class IdentityInstance:
    """One identity at one parameter point.

    ``element`` must evaluate to zero.  ``symbolic`` is an optional pair of
    objects that must be exactly equal (polynomials or combinations).
    """

    id: str
    family: str
    params: dict
    element: Optional[Combination] = None
    symbolic: Optional[tuple] = None
    tol: float = 1e-8
    admissible: bool = True
    note: str = ""
    expect_zero: bool = True
    extra: dict = field(default_factory=dict, compare=False)


def _tol(N: int) -> float:
    return {1: 1e-8, 2: 1e-7}.get(N, 1e-5)


class _Builder:
    """Accumulates ``lhs - rhs`` for one identity."""

    def __init__(self, N):
        self.N = N
        self.terms = Combination(N)

    def add(self, c, key):
        self.terms = self.terms + Combination(self.N, {key: c})
        return self

    def L(self, c, ks, tw):
        return self.add(c, L(self.N, ks, tw))

    def Z(self, c, ks, tw):
        return self.add(c, Z(self.N, ks, tw))

    def aux(self, c, tag, k):
        return self.add(c, AUX(tag, k))


def _instance(fid, N, k, b: _Builder, note="", expect_zero=True, **params) -> IdentityInstance:
    p = {"N": N, "k": k, **params}
    suffix = "".join(f"/{name}={val}" for name, val in params.items())
    return IdentityInstance(f"{fid}/N={N}/k={k}{suffix}", fid, p, b.terms, tol=_tol(N), note=note, expect_zero=expect_zero)


# ---------------------------------------------------------------------------
# generic depth-two identities


def cor_sum_double(N: int, k: int, a1: int, a2: int) -> IdentityInstance:
    el = Combination.from_ncpoly(double_sum_element(k, a1, a2, N))
    return IdentityInstance(f"double-sum/N={N}/k={k}/a=({a1},{a2})", "double-sum", {"N": N, "k": k, "a": (a1, a2)}, el, tol=_tol(N))


def cor_weighted_double(N: int, k: int, a1: int, a2: int) -> IdentityInstance:
    el = Combination.from_ncpoly(double_weighted_element(k, a1, a2, N))
    return IdentityInstance(f"double-weighted/N={N}/k={k}/a=({a1},{a2})", "double-weighted", {"N": N, "k": k, "a": (a1, a2)}, el, tol=_tol(N))


def classical(k: int):
    """Level-1 sum, weighted sum and the ``2^j - 3`` weighted identity."""
    out = []
    b = _Builder(1)
    for j in range(2, k):
        b.L(1, (j, k - j), (0, 0))
    out.append(_instance("sum", 1, k, b.L(-1, (k,), (0,))))
    b = _Builder(1)
    for j in range(2, k):
        b.L(2**j, (j, k - j), (0, 0))
    out.append(_instance("weighted", 1, k, b.L(-(k + 1), (k,), (0,))))
    b = _Builder(1)
    for j in range(2, k):
        b.L(2**j - 3, (j, k - j), (0, 0))
    out.append(_instance("double-00", 1, k, b.L(-(k - 2), (k,), (0,))))
    return out


# ---------------------------------------------------------------------------
# level 2


def level2_sum(k: int):
    N = 2
    lines = []
    b = _Builder(N)
    for j in range(2, k):
        b.L(1, (j, k - j), (0, 0))
    lines.append(b.L(-1, (k,), (0,)))
    b = _Builder(N)
    for j in range(2, k):
        b.L(1, (j, k - j), (0, 1))
    lines.append(b.L(-1, (k - 1, 1), (1, 0)).L(1, (k - 1, 1), (1, 1)).L(-1, (k,), (1,)))
    b = _Builder(N)
    for j in range(1, k):
        b.L(1, (j, k - j), (1, 1))
    lines.append(b.L(-1, (1, k - 1), (1, 0)).L(-1, (k,), (1,)))
    b = _Builder(N)
    for j in range(1, k):
        b.L(1, (j, k - j), (1, 0))
    lines.append(b.L(-1, (k - 1, 1), (1, 1)).L(1, (k - 1, 1), (1, 0)).L(-1, (1, k - 1), (1, 1)).L(-1, (k,), (0,)))
    return [_instance("sum2", N, k, b, line=i + 1) for i, b in enumerate(lines)]


def level2_double(k: int):
    N = 2
    out = []
    b = _Builder(N)
    for j in range(2, k):
        b.L(2**j - 3, (j, k - j), (0, 0))
    out.append(_instance("double-00", N, k, b.L(-(k - 2), (k,), (0,))))
    b = _Builder(N)
    for j in range(2, k):
        b.L(2 ** (j - 1) - 1, (j, k - j), (0, 1)).L(2 ** (j - 1) - 1, (j, k - j), (1, 1)).L(-1, (j, k - j), (1, 0))
    out.append(_instance("double-01", N, k, b.L(-(k - 2), (k,), (1,))))
    b = _Builder(N)
    for j in range(1, k):
        b.L(2 ** (j - 1), (j, k - j), (1, 1))
    for j in range(2, k):
        b.L(2 ** (j - 1) - 2, (j, k - j), (0, 1))
    for j in range(1, k - 1):
        b.L(-1, (j, k - j), (1, 0))
    out.append(_instance("double-10", N, k, b.L(-1, (k - 1, 1), (1, 1)).L(-(k - 2), (k,), (1,))))
    b = _Builder(N)
    for j in range(2, k):
        b.L(2**j - 1, (j, k - j), (1, 0)).L(-2, (j, k - j), (1, 1))
    b.L(-1, (k - 1, 1), (1, 0)).L(1, (k - 1, 1), (1, 1)).L(-1, (1, k - 1), (1, 1)).L(1, (1, k - 1), (1, 0))
    out.append(_instance("double-11", N, k, b.L(-(k - 2), (k,), (0,))))
    return out


def level2_weighted(k: int):
    N = 2
    out = []
    b = _Builder(N)
    for j in range(2, k):
        b.L(2**j, (j, k - j), (0, 0))
    out.append(_instance("ws-00", N, k, b.L(-(k + 1), (k,), (0,))))
    b = _Builder(N)
    for j in range(2, k):
        b.L(2**j, (j, k - j), (0, 1)).L(2**j, (j, k - j), (1, 1))
    out.append(_instance("ws-01-11", N, k, b.L(-2, (k,), (0,)).L(-2 * k, (k,), (1,))))
    b = _Builder(N)
    for j in range(2, k):
        b.L(2**j, (j, k - j), (1, 0))
    out.append(_instance("ws-10", N, k, b.L(-(k - 1), (k,), (0,)).L(-2, (k,), (1,))))
    return out


# rows: zeta_2(k,l), zeta_2(kbar,l), zeta_2(k,lbar), zeta_2(kbar,lbar)
CONVERSION_ROWS = (((2, 2), (1, 1, 1, 1)), ((1, 2), (1, -1, 1, -1)), ((2, 1), (1, 1, -1, -1)), ((1, 1), (1, -1, -1, 1)))
CONVERSION_COLS = ((0, 0), (1, 0), (0, 1), (1, 1))


def level2_conversion(k: int):
    """The 4x4 sign matrix expressing level-2 double values by alternating ones, for each split of k."""
    N = 2
    out = []
    for j in range(2, k):
        for r, (zt, signs) in enumerate(CONVERSION_ROWS):
            b = _Builder(N).Z(1, (j, k - j), zt)
            for s, tw in zip(signs, CONVERSION_COLS):
                b.L(-s, (j, k - j), tw)
            inst = _instance("conv2", N, k, b, j=j, row=r + 1)
            # the expansion of the level value must reproduce the row exactly
            lhs = Combination(N, {Z(N, (j, k - j), zt): 1}).expand()
            rhs = Combination.of(N, *((s, L(N, (j, k - j), tw)) for s, tw in zip(signs, CONVERSION_COLS)))
            out.append(_with_symbolic(inst, lhs, rhs))
    return out


def _with_symbolic(inst: IdentityInstance, lhs, rhs) -> IdentityInstance:
    return replace(inst, symbolic=(lhs, rhs))


def level2_closed_form(k: int):
    b = _Builder(2).L(1, (k,), (1,)).L(-(Fraction(2) ** (1 - k) - 1), (k,), (0,))
    return [_instance("zbar2", 2, k, b)]


def level2_zeta2_sum(k: int):
    N = 2
    lines = []
    b = _Builder(N)
    for j in range(2, k):
        b.Z(1, (j, k - j), (2, 2))
    lines.append(b.L(-Fraction(1, 2 ** (k - 2)), (k,), (0,)))
    b = _Builder(N)
    for j in range(2, k):
        b.Z(1, (j, k - j), (1, 2))
    lines.append(b.L(-2, (k - 1, 1), (1, 0)).L(2, (k - 1, 1), (1, 1)))
    b = _Builder(N)
    for j in range(2, k):
        b.Z(1, (j, k - j), (2, 1))
    b.L(-2, (k - 1, 1), (1, 1)).L(-2, (1, k - 1), (1, 1)).L(2, (k - 1, 1), (1, 0)).L(2, (1, k - 1), (1, 0))
    lines.append(b.L(-4 * (1 - Fraction(1, 2**k)), (k,), (0,)))
    b = _Builder(N)
    for j in range(2, k):
        b.Z(1, (j, k - j), (1, 1))
    lines.append(b.L(-2, (1, k - 1), (1, 0)).L(2, (1, k - 1), (1, 1)))
    return [_instance("zeta2-sum", N, k, b, line=i + 1) for i, b in enumerate(lines)]


def level2_zeta2_weighted(k: int):
    N = 2
    b1 = _Builder(N)
    b2 = _Builder(N)
    for j in range(2, k):
        b1.Z(2**j, (j, k - j), (2, 2))
        b2.Z(2**j, (j, k - j), (2, 1))
    b1.L(-Fraction(k + 1, 2 ** (k - 2)), (k,), (0,))
    b2.L(-4 * (k - 1) * (1 - Fraction(1, 2**k)), (k,), (0,))
    return [_instance("zeta2-weighted", N, k, b1, line=1), _instance("zeta2-weighted", N, k, b2, line=2)]


# ---------------------------------------------------------------------------
# level 3

B, T = 1, 2  # bar and tilde twists


def level3_sum(k: int):
    """Sum formulas of double L-values at level 3, one per twist pair."""
    N = 3
    rows = [
        ((0, 0), [(-1, (k,), (0,))]),
        ((B, 0), [(-1, (1, k - 1), (B, B)), (1, (1, k - 1), (B, 0)), (-1, (k - 1, 1), (B, B)), (1, (k - 1, 1), (B, 0)), (-1, (k,), (T,))]),
        ((T, 0), [(-1, (1, k - 1), (T, T)), (1, (1, k - 1), (T, 0)), (-1, (k - 1, 1), (T, T)), (1, (k - 1, 1), (T, 0)), (-1, (k,), (B,))]),
        ((0, B), [(-1, (k - 1, 1), (B, 0)), (1, (k - 1, 1), (B, T)), (-1, (k,), (B,))]),
        ((B, B), [(-1, (1, k - 1), (B, T)), (1, (1, k - 1), (B, B)), (-1, (k - 1, 1), (T, B)), (1, (k - 1, 1), (T, T)), (-1, (k,), (0,))]),
        ((T, B), [(-1, (1, k - 1), (T, 0)), (1, (1, k - 1), (T, B)), (-1, (k,), (T,))]),
        ((0, T), [(-1, (k - 1, 1), (T, 0)), (1, (k - 1, 1), (T, B)), (-1, (k,), (T,))]),
        ((B, T), [(-1, (1, k - 1), (B, 0)), (1, (1, k - 1), (B, T)), (-1, (k,), (B,))]),
        ((T, T), [(-1, (1, k - 1), (T, B)), (1, (1, k - 1), (T, T)), (-1, (k - 1, 1), (B, T)), (1, (k - 1, 1), (B, B)), (-1, (k,), (0,))]),
    ]
    out = []
    for i, (tw, rhs) in enumerate(rows):
        b = _Builder(N)
        for j in range(2, k):
            b.L(1, (j, k - j), tw)
        for c, ks, t in rhs:
            b.L(c, ks, t)
        out.append(_instance("sum3", N, k, b, line=i + 1))
    return out


def level3_zeta3_sum(k: int):
    """Sum formulas of level-3 double values using the auxiliary series.

    The second line is stated with the plain pair on the left, identical to the
    first line's left side; the barred second argument is also instantiated.
    """
    N = 3
    P = 3  # residue class 0 for level values
    km = k - 1
    rows = [
        ("1", (P, P), [(-3, "Z", (k,), (P,))]),
        ("2", (P, P), [(-1, "aux", (2, 0)), (-1, "Z", (km, 1), (B, T)), (1, "Z", (km, 1), (P, T))]),
        ("2-bar", (P, B), [(-1, "aux", (2, 0)), (-1, "Z", (km, 1), (B, T)), (1, "Z", (km, 1), (P, T))]),
        ("3", (P, T), [(-1, "aux", (1, 0)), (-1, "Z", (km, 1), (T, B)), (1, "Z", (km, 1), (P, B))]),
        ("4", (B, P), [(-1, "Z", (km, 1), (P, B)), (1, "Z", (km, 1), (B, B))]),
        ("5", (B, B), [(-1, "aux", (0, 1))]),
        ("6", (B, T), [(-1, "aux", (2, 1)), (-1, "Z", (km, 1), (T, T)), (1, "Z", (km, 1), (B, T)), (-3, "Z", (k,), (T,))]),
        ("7", (T, P), [(-1, "Z", (km, 1), (P, T)), (1, "Z", (km, 1), (T, T))]),
        ("8", (T, B), [(-1, "aux", (1, 2)), (-1, "Z", (km, 1), (B, B)), (1, "Z", (km, 1), (T, B)), (-3, "Z", (k,), (B,))]),
        ("9", (T, T), [(-1, "aux", (0, 2))]),
    ]
    out = []
    for line, tw, rhs in rows:
        b = _Builder(N)
        for j in range(2, k):
            b.Z(1, (j, k - j), tw)
        for c, kind, *rest in rhs:
            if kind == "aux":
                b.aux(c, rest[0], k)
            else:
                b.Z(c, rest[0], rest[1])
        if line == "2":
            # as printed the left side repeats line 1 and the identity fails numerically
            out.append(_instance("zeta3-sum", N, k, b, note="left side as printed; expected not to vanish", expect_zero=False, line=line))
        else:
            out.append(_instance("zeta3-sum", N, k, b, note="barred second argument" if line == "2-bar" else "", line=line))
    return out


def level3_weighted(k: int):
    N = 3
    out = []
    lines = [
        ([(2, 0, (0, 0))], [(-(k + 1), (k,), (0,))]),
        (
            [(2, 0, (B, 0))],
            [(-2, (1, k - 1), (B, T)), (2, (1, k - 1), (B, 0)), (-2, (k - 1, 1), (T, B)), (2, (k - 1, 1), (T, T)), (-(k - 1), (k,), (T,)), (-2, (k,), (0,))],
        ),
        (
            [(2, 0, (T, 0))],
            [(-2, (1, k - 1), (T, B)), (2, (1, k - 1), (T, 0)), (-2, (k - 1, 1), (B, T)), (2, (k - 1, 1), (B, B)), (-(k - 1), (k,), (B,)), (-2, (k,), (0,))],
        ),
        (
            [(2, -1, (0, B)), (2, -1, (B, T))],
            [(-1, (1, k - 1), (B, B)), (1, (1, k - 1), (B, T)), (-1, (k - 1, 1), (B, B)), (1, (k - 1, 1), (B, T)), (-k, (k,), (B,)), (-1, (k,), (T,))],
        ),
        (
            [(2, -1, (0, T)), (2, -1, (T, B))],
            [(-1, (1, k - 1), (T, T)), (1, (1, k - 1), (T, B)), (-1, (k - 1, 1), (T, T)), (1, (k - 1, 1), (T, B)), (-k, (k,), (T,)), (-1, (k,), (B,))],
        ),
        (
            [(2, -1, (B, B)), (2, -1, (T, T))],
            [
                (-1, (1, k - 1), (B, 0)),
                (1, (1, k - 1), (B, B)),
                (-1, (1, k - 1), (T, 0)),
                (1, (1, k - 1), (T, T)),
                (-(k - 1), (k,), (0,)),
                (-1, (k,), (B,)),
                (-1, (k,), (T,)),
            ],
        ),
    ]
    for i, (sums, rhs) in enumerate(lines):
        b = _Builder(N)
        for base, shift, tw in sums:
            for j in range(2, k):
                b.L(Fraction(base) ** (j + shift), (j, k - j), tw)
        for c, ks, t in rhs:
            b.L(c, ks, t)
        out.append(_instance("weighted3", N, k, b, line=i + 1))
    return out


def level3_zeta3_weighted(k: int):
    N = 3
    w = Cyclo.power(3, 1)
    c1, c2, c3 = 2 * w + 4, 2 * w - 2, 4 * w + 2
    m = 3 * k - 3
    out = []
    for line, (x, y) in enumerate(((B, T), (T, B))):
        b = _Builder(N)
        for j in range(2, k):
            b.Z(2**j, (j, k - j), (x, y))
        b.L(-c1, (1, k - 1), (x, 0)).L(c1, (1, k - 1), (y, y))
        b.L(-c2, (1, k - 1), (x, x)).L(c2, (1, k - 1), (y, 0))
        b.L(-c3, (1, k - 1), (y, x)).L(c3, (1, k - 1), (x, y))
        b.L(-m, (k,), (0,)).L(-(w * m), (k,), (x,)).L((w + 1) * m, (k,), (y,))
        out.append(_instance("zeta3-weighted", N, k, b, line=line + 1))
    return out


# ---------------------------------------------------------------------------


def corollary_catalog(N: int, k: int) -> list:
    """Every named identity at level ``N`` (1, 2 or 3) and weight ``k >= 3``, in a fixed order."""
    if N not in (1, 2, 3):
        raise ValueError(f"named identities exist only for levels 1, 2, 3; got {N}")
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    out = []
    for a1, a2 in itertools.product(range(N), repeat=2):
        out.append(cor_sum_double(N, k, a1, a2))
        out.append(cor_weighted_double(N, k, a1, a2))
    if N == 1:
        out += classical(k)
    elif N == 2:
        out += level2_sum(k) + level2_double(k) + level2_weighted(k) + level2_conversion(k)
        out += level2_closed_form(k) + level2_zeta2_sum(k) + level2_zeta2_weighted(k)
    else:
        out += level3_sum(k) + level3_zeta3_sum(k) + level3_weighted(k) + level3_zeta3_weighted(k)
    return out
