"""
Truncated nested series with compensated accumulation and explicit tail bounds.

A nested sum

    sum_{m_1 > ... > m_n > 0} prod_i  c_i(m_i) / m_i^{k_i}

whose weights ``c_i`` are periodic in ``m`` with period ``N`` is accumulated in a
single pass over ``m = 1..M``: at step ``m`` each level adds its new term using
the running prefix of the level below, so the cost is O(n M) with O(n) memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy.special import gamma, gammaincc, zeta

EPS = float(np.finfo(float).eps)


@njit(cache=True)
def _nested_sum(ks, tables, M):
    n = ks.shape[0]
    N = tables.shape[1]
    re = np.zeros(n + 1)
    im = np.zeros(n + 1)
    cre = np.zeros(n + 1)
    cim = np.zeros(n + 1)
    ab = np.zeros(n + 1)
    re[n] = 1.0
    ab[n] = 1.0
    for m in range(1, M + 1):
        inv = 1.0 / m
        r = m % N
        for i in range(n):
            w = tables[i, r]
            if w.real == 0.0 and w.imag == 0.0:
                continue
            s = inv ** ks[i]
            tre = (w.real * re[i + 1] - w.imag * im[i + 1]) * s
            tim = (w.real * im[i + 1] + w.imag * re[i + 1]) * s
            # Kahan-compensated update of level i
            y = tre - cre[i]
            t = re[i] + y
            cre[i] = (t - re[i]) - y
            re[i] = t
            y = tim - cim[i]
            t = im[i] + y
            cim[i] = (t - im[i]) - y
            im[i] = t
            ab[i] += abs(w) * s * ab[i + 1]
    return re[0], im[0], ab[0]


def nested_sum(ks, tables, M: int):
    """``(value, sum of |terms|)`` of the truncated nested sum, outermost level first."""
    ks = np.asarray(ks, dtype=np.int64)
    tables = np.asarray(tables, dtype=np.complex128)
    re, im, ab = _nested_sum(ks, tables, int(M))
    return complex(re, im), float(ab)


def log_power_tail(s: float, r: int, M: float) -> float:
    """``int_M^inf (1 + log t)^r t^{-(s+1)} dt`` for ``s > 0``."""
    x = s * (1 + math.log(M))
    return math.exp(s) * gammaincc(r + 1, x) * gamma(r + 1) / s ** (r + 1)


def oscillation_bound(table) -> float:
    """Largest modulus of a partial sum of a zero-mean periodic weight sequence."""
    table = list(table)
    N = len(table)
    best = 0.0
    for start in range(N):
        acc = 0j
        for length in range(N):
            acc += table[(start + length) % N]
            best = max(best, abs(acc))
    return best


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    tail: float
    rounding: float

    @property
    def err(self) -> float:
        return self.tail + self.rounding


def _level_bound(ks, tables, start: int):
    """``(C, r)`` with ``|prefix of levels start..|`` at height ``X`` at most ``C (1 + log X)^r``."""
    C, r = 1.0, 0
    for k, table in zip(ks[start:], tables[start:]):
        T = max(abs(w) for w in table)
        if k >= 2:
            C *= T * float(zeta(k))
        else:
            C *= T
            r += 1
    return C, r


def tail_bound(ks, tables, M: int) -> float:
    """Bound on the omitted part ``m_1 > M`` of the nested sum."""
    ks = [int(k) for k in ks]
    tables = [list(t) for t in tables]
    C, r = _level_bound(ks, tables, 1)
    T0 = max(abs(w) for w in tables[0])
    if ks[0] >= 2:
        return T0 * C * log_power_tail(ks[0] - 1, r, M)
    if abs(sum(tables[0])) > 1e-12:
        raise ValueError("leading exponent 1 without oscillating weights: the series diverges")
    # summation by parts against the bounded partial sums of the outer weights
    B = oscillation_bound(tables[0])
    total = C * log_power_tail(1, r, M)
    if len(ks) > 1:
        C2, r2 = _level_bound(ks, tables, 2)
        T1 = max(abs(w) for w in tables[1])
        total += T1 * C2 * log_power_tail(ks[1], r2, M)
    return B * total


def evaluate(ks, tables, M: int) -> SeriesResult:
    value, absum = nested_sum(ks, tables, M)
    tail = tail_bound(ks, tables, M)
    rounding = 4 * EPS * (len(ks) + 1) * (absum + tail)
    return SeriesResult(value, tail, rounding)


def twisted_tables(twists, N: int, roots) -> list:
    """Weights ``w^{a m}`` for each level, indexed by ``m mod N``."""
    return [[roots[(a * r) % N] for r in range(N)] for a in twists]


def congruence_tables(twists, N: int) -> list:
    """Weights ``N [m = a mod N]`` for each level."""
    return [[complex(N) if (r - a) % N == 0 else 0j for r in range(N)] for a in twists]
