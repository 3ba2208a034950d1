"""Exact arithmetic in Q(w), w = exp(2 pi i / N), in the power basis 1, w, ..., w^(phi(N)-1)."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Mapping


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple:
    """Integer coefficients (constant term first) of the N-th cyclotomic polynomial."""
    num = [-1] + [0] * (N - 1) + [1]  # x^N - 1
    for d in range(1, N):
        if N % d == 0:
            num = _divide_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _divide_exact(num: list, den: list) -> list:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        coef = num[i + len(den) - 1] // den[-1]
        q[i] = coef
        for j, d in enumerate(den):
            num[i + j] -= coef * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return q


@lru_cache(maxsize=None)
def root_powers(N: int) -> tuple:
    """``w^j`` for ``j = 0..N-1`` from one cos/sin evaluation each."""
    return tuple(complex(math.cos(2 * math.pi * j / N), math.sin(2 * math.pi * j / N)) for j in range(N))


class Cyclo:
    __slots__ = ("N", "c")

    def __init__(self, N: int, coeffs=()):
        deg = len(cyclotomic_poly(N)) - 1
        c = [Fraction(v) for v in coeffs] + [Fraction(0)] * (deg - len(coeffs))
        if len(c) > deg:
            c = _reduce(c, N)
        self.N = N
        self.c = tuple(c)

    @classmethod
    def rational(cls, N: int, q) -> "Cyclo":
        return cls(N, (Fraction(q),))

    @classmethod
    def power(cls, N: int, j: int, q=1) -> "Cyclo":
        return cls.from_powers(N, {j: q})

    @classmethod
    def from_powers(cls, N: int, powers: Mapping) -> "Cyclo":
        c = [Fraction(0)] * N
        for j, q in powers.items():
            c[j % N] += Fraction(q)
        return cls(N, _reduce(c, N))

    def _coerce(self, other) -> "Cyclo":
        if isinstance(other, Cyclo):
            if other.N != self.N:
                raise ValueError(f"level mismatch {self.N} vs {other.N}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.rational(self.N, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo(self.N, [a + b for a, b in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.N, [-a for a in self.c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    prod[i + j] += a * b
        return Cyclo(self.N, _reduce(prod, self.N))

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.c == other.c

    def __hash__(self):
        return hash((self.N, self.c))

    def __bool__(self):
        return any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_complex(self) -> complex:
        w = root_powers(self.N)
        return sum((float(a) * w[i % self.N] for i, a in enumerate(self.c) if a), 0j)

    def abs_bound(self) -> float:
        """Upper bound on ``|value|`` (sum of coefficient magnitudes)."""
        return float(sum(abs(a) for a in self.c))

    def __repr__(self):
        return f"Cyclo({self.N}, {self})"

    def __str__(self):
        parts = []
        for i, a in enumerate(self.c):
            if not a:
                continue
            s = str(a)
            if i == 0:
                parts.append(s)
            else:
                mon = "w" if i == 1 else f"w^{i}"
                parts.append(mon if a == 1 else f"-{mon}" if a == -1 else f"{s}*{mon}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def _reduce(c: list, N: int) -> list:
    phi = cyclotomic_poly(N)
    deg = len(phi) - 1
    c = list(c)
    for i in range(len(c) - 1, deg - 1, -1):
        coef = c[i]
        if coef:
            # phi is monic: x^deg = -(lower terms)
            for j in range(deg):
                c[i - deg + j] -= coef * phi[j]
            c[i] = Fraction(0)
    return c[:deg] + [Fraction(0)] * max(0, deg - len(c))


def omega(N: int) -> complex:
    return cmath.exp(2j * math.pi / N)
