"""
Brute-force product expansions against their closed forms.

Every function here builds both sides as exact polynomials; equality is plain
polynomial equality.  Twist vectors are ``a`` (the inserted letter) and
``avec = (a_1, ..., a_{n-1})``; ``d_j = a_j - a_{j-1}`` are their consecutive
differences, the twists produced by ``I^-1``.
"""

from __future__ import annotations

import itertools
from math import comb

from ..core import IndexVector, NCPoly, mlv_alphabet
from ..mlv import map_I_inv, shuffle, stuffle


def compositions(total: int, parts: int, mins=None):
    """Tuples of ``parts`` positive integers summing to ``total``, with optional per-slot minima."""
    mins = list(mins or [1] * parts)
    if parts == 0:
        if total == 0:
            yield ()
        return
    rest_min = sum(mins[1:])
    for first in range(mins[0], total - rest_min + 1):
        for tail in compositions(total - first, parts - 1, mins[1:]):
            yield (first,) + tail


def z(N: int, ks, twists, coeff=1) -> NCPoly:
    return NCPoly.generators(IndexVector(tuple(ks), tuple(a % N for a in twists)), mlv_alphabet(N), coeff)


def differences(avec) -> tuple:
    out, prev = [], 0
    for a in avec:
        out.append(a - prev)
        prev = a
    return tuple(out)


def check_range(k: int, n: int, a, avec, N: int):
    if n < 2 or k < n + 1:
        raise ValueError(f"need n >= 2 and k >= n + 1, got k={k}, n={n}")
    if len(avec) != n - 1:
        raise ValueError(f"need {n - 1} twists a_1..a_{{n-1}}, got {len(avec)}")
    if N < 1:
        raise ValueError("level must be positive")


def _sum(N, items) -> NCPoly:
    out = NCPoly.zero(mlv_alphabet(N))
    for p in items:
        out = out + p
    return out


# ---------------------------------------------------------------------------
# stuffle side


def stuffle_first_lhs(k, n, a, avec, N) -> NCPoly:
    al = mlv_alphabet(N)
    out = NCPoly.zero(al)
    za = z(N, (1,), (a,))
    for ks in compositions(k - 1, n - 1, [2] + [1] * (n - 2)):
        out = out + stuffle(map_I_inv(za), map_I_inv(z(N, ks, avec)))
    return out


def stuffle_first_rhs(k, n, a, avec, N) -> NCPoly:
    d = differences(avec)
    terms = []
    for ks in compositions(k - 1, n - 1, [2] + [1] * (n - 2)):
        terms.append(z(N, (1,) + ks, (a,) + d))
    for i in range(2, n + 1):
        for ks in compositions(k, n, [2] + [1] * (n - 1)):
            if ks[i - 1] == 1:
                terms.append(z(N, ks, d[: i - 1] + (a,) + d[i - 1 :]))
    for ks in compositions(k, n - 1, [3] + [1] * (n - 2)):
        terms.append(z(N, ks, (a + d[0],) + d[1:]))
    for i in range(2, n):
        for ks in compositions(k, n - 1, [2] + [1] * (n - 2)):
            if ks[i - 1] >= 2:
                terms.append(z(N, ks, d[: i - 1] + (a + d[i - 1],) + d[i:]))
    return _sum(N, terms)


def stuffle_second_lhs(k, n, a, avec, N) -> NCPoly:
    out = NCPoly.zero(mlv_alphabet(N))
    for comp in compositions(k, n, [1, 2] + [1] * (n - 2)):
        l, ks = comp[0], comp[1:]
        out = out + stuffle(map_I_inv(z(N, (l,), (a,))), map_I_inv(z(N, ks, avec)))
    return out


def stuffle_second_rhs(k, n, a, avec, N) -> NCPoly:
    d = differences(avec)
    terms = []
    for ks in compositions(k, n, [1, 2] + [1] * (n - 2)):
        terms.append(z(N, ks, (a,) + d))
    for i in range(1, n):
        for ks in compositions(k, n, [2] + [1] * (n - 1)):
            terms.append(z(N, ks, d[:i] + (a,) + d[i:]))
    for ks in compositions(k, n - 1, [2] + [1] * (n - 2)):
        terms.append(z(N, ks, (a + d[0],) + d[1:], ks[0] - 2))
    for i in range(2, n):
        for ks in compositions(k, n - 1, [2] + [1] * (n - 2)):
            terms.append(z(N, ks, d[: i - 1] + (a + d[i - 1],) + d[i:], ks[i - 1] - 1))
    return _sum(N, terms)


# ---------------------------------------------------------------------------
# shuffle side


def shuffle_first_lhs(k, n, a, avec, N) -> NCPoly:
    out = NCPoly.zero(mlv_alphabet(N))
    za = z(N, (1,), (a,))
    for ks in compositions(k - 1, n - 1, [2] + [1] * (n - 2)):
        out = out + shuffle(za, z(N, ks, avec))
    return out


def shuffle_first_rhs(k, n, a, avec, N) -> NCPoly:
    avec = tuple(avec)
    terms = []
    for ks in compositions(k, n):
        if ks[0] + ks[1] >= 3:
            terms.append(z(N, ks, (a,) + avec))
    for ks in compositions(k - 1, n - 1, [2] + [1] * (n - 2)):
        terms.append(z(N, ks + (1,), avec + (a,)))
    for i in range(2, n):
        for ks in compositions(k, n, [2] + [1] * (n - 1)):
            terms.append(z(N, ks, avec[: i - 1] + (a,) + avec[i - 1 :]))
    return _sum(N, terms)


def shuffle_second_lhs(k, n, a, avec, N) -> NCPoly:
    out = NCPoly.zero(mlv_alphabet(N))
    for comp in compositions(k, n, [1, 2] + [1] * (n - 2)):
        out = out + shuffle(z(N, comp[:1], (a,)), z(N, comp[1:], avec))
    return out


def power_weight(ks, i: int) -> int:
    """``2^{k_1+...+k_i-i} - 2^{k_2+...+k_i-(i-1)}``."""
    return 2 ** (sum(ks[:i]) - i) - 2 ** (sum(ks[1:i]) - (i - 1))


def shuffle_second_rhs(k, n, a, avec, N) -> NCPoly:
    avec = tuple(avec)
    terms = []
    for ks in compositions(k, n):
        c = 2 ** (ks[0] - 1) if ks[1] >= 2 else 2 ** (ks[0] - 1) - 1
        terms.append(z(N, ks, (a,) + avec, c))
    for i in range(2, n):
        for ks in compositions(k, n):
            terms.append(z(N, ks, avec[: i - 1] + (a,) + avec[i - 1 :], power_weight(ks, i)))
    for ks in compositions(k, n):
        terms.append(z(N, ks, avec + (a,), power_weight(ks, n - 1)))
    return _sum(N, terms)


def binom(m: int, r: int) -> int:
    return comb(m, r) if 0 <= r <= m else 0


def general_shuffle(l: int, a, ks, avec, N: int) -> NCPoly:
    """Closed-form expansion of ``z_{l,a} sh z_{k_1,a_1}...z_{k_{n-1},a_{n-1}}`` with binomial weights."""
    ks, avec = tuple(ks), tuple(avec)
    m = len(ks)
    terms = []
    for i in range(1, m + 1):
        total = l + sum(ks[:i])
        for alphas in compositions(total, i + 1):
            c = 1
            for j in range(i - 1):
                c *= binom(alphas[j] - 1, ks[j] - 1)
            c *= binom(alphas[i - 1] - 1, ks[i - 1] - alphas[i])
            if c:
                word_ks = alphas + ks[i:]
                word_tw = avec[: i - 1] + (a, avec[i - 1]) + avec[i:]
                terms.append(z(N, word_ks, word_tw, c))
    for alphas in compositions(l + sum(ks), m + 1):
        c = 1
        for j in range(m):
            c *= binom(alphas[j] - 1, ks[j] - 1)
        if c:
            terms.append(z(N, alphas, avec + (a,), c))
    return _sum(N, terms)


def binomial_subidentities(max_alpha: int = 12):
    """Integer identities behind the power-of-two coefficients, as ``(name, params, lhs, rhs)``."""
    out = []
    for a1 in range(1, max_alpha + 1):
        out.append(("first-slot", (a1,), sum(binom(a1 - 1, k1 - 1) for k1 in range(2, a1 + 1)), 2 ** (a1 - 1) - 1))
        out.append(("free-slot", (a1,), sum(binom(a1 - 1, kj - 1) for kj in range(1, a1 + 1)), 2 ** (a1 - 1)))
        for a2 in range(1, max_alpha + 1):
            lhs = sum(binom(a1 - 1, k1 - a2) for k1 in range(max(2, a2), a1 + a2))
            rhs = 2 ** (a1 - 1) - 1 if a2 == 1 else 2 ** (a1 - 1)
            out.append(("split-slot", (a1, a2), lhs, rhs))
            lhs = sum(binom(a1 - 1, ki - a2) for ki in range(a2, a1 + a2))
            out.append(("shifted-slot", (a1, a2), lhs, 2 ** (a1 - 1)))
    return out


def twist_tuples(n: int, N: int, limit=None, rng=None):
    """All ``(a, a_1..a_{n-1})`` in lexicographic order, or ``limit`` random ones."""
    if limit is None:
        return list(itertools.product(range(N), repeat=n))
    return [tuple(rng.randrange(N) for _ in range(n)) for _ in range(limit)]
