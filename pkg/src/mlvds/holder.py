"""
Geometrically convergent evaluation of multiple L-values at roots of unity.

A value ``L_*(k; a)`` is the iterated integral ``(-1)^n G(0^{k1-1} b_1 ... 0^{kn-1} b_n; 1)``
with ``b_i = w^{-(a_1 + ... + a_i)}``.  Splitting the integration simplex at
``t = lam`` (Hoelder convolution) gives

    G(c_1..c_w; 1) = sum_j (-1)^j G(1-c_j, ..., 1-c_1; 1-lam) * G(c_{j+1}, ..., c_w; lam)

and every factor is a nested power series whose ratio is at most
``max(lam, (1-lam)/d)`` with ``d = min |1 - w^j|`` (``j != 0``) capped at 1.

Letters are kept exact as tags: ``("0",)``, ``("w", j)`` for ``w^j`` and
``("1-w", j)`` for ``1 - w^j`` (``j != 0``).
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .cyclotomic import root_powers

EPS = np.finfo(float).eps
ZERO = ("0",)
_TARGET = 1e-18


def flip(letter: tuple) -> tuple:
    """The tag of ``1 - letter``."""
    if letter == ZERO:
        return ("w", 0)
    kind, j = letter
    if kind == "w":
        return ZERO if j == 0 else ("1-w", j)
    return ("w", j)


def letter_value(letter: tuple, N: int) -> complex:
    if letter == ZERO:
        return 0j
    kind, j = letter
    w = root_powers(N)[j % N]
    return w if kind == "w" else 1 - w


@lru_cache(maxsize=None)
def split_point(N: int) -> float:
    d = 1.0 if N <= 6 else min(1.0, 2 * math.sin(math.pi / N))
    return d / (1 + d)


def _terms_needed(rho: float, depth: int) -> int:
    # tail of sum_{n>K} C(n-1, depth-1) rho^n, bounded geometrically
    K = max(depth, 8)
    while True:
        t = math.comb(K, depth - 1) * rho ** (K + 1)
        q = rho * (K + 1) / (K + 2 - depth) if K + 2 - depth > 0 else 1.0
        if q < 1 and t / (1 - q) < _TARGET:
            return K
        K += 4


def _nested_power_sum(xs: list, ms: list, K: int):
    """``Li_{m}(x)`` truncated at ``n_1 <= K`` and the matching sum of term moduli."""
    n = np.arange(1, K + 1, dtype=float)
    inner = np.ones(K, dtype=complex)
    inner_abs = np.ones(K)
    for depth_idx in range(len(xs) - 1, -1, -1):
        x, m = xs[depth_idx], ms[depth_idx]
        base = np.power(complex(x), n) / n**m
        terms = base * inner
        terms_abs = np.abs(base) * inner_abs
        if depth_idx == 0:
            return complex(terms.sum()), float(terms_abs.sum())
        # exclusive prefix sums for the next (outer) level
        inner = np.concatenate(([0j], np.cumsum(terms)[:-1]))
        inner_abs = np.concatenate(([0.0], np.cumsum(terms_abs)[:-1]))
    return 1 + 0j, 1.0


@lru_cache(maxsize=None)
def G(letters: tuple, y: float, N: int):
    """``(value, err)`` of ``G(letters; y)``; the last letter must be nonzero and ``|y|`` below every nonzero letter."""
    if not letters:
        return 1 + 0j, 0.0
    if letters[-1] == ZERO:
        raise ValueError("trailing zero letter: G diverges at 0")
    ms, alphas = [], []
    m = 1
    for lt in letters:
        if lt == ZERO:
            m += 1
        else:
            ms.append(m)
            alphas.append(letter_value(lt, N))
            m = 1
    amin = min(abs(a) for a in alphas)
    rho = y / amin
    if rho >= 1:
        raise ValueError(f"series for G at y={y} does not converge (ratio {rho:.3f})")
    xs = [y / alphas[0]] + [alphas[i - 1] / alphas[i] for i in range(1, len(alphas))]
    K = _terms_needed(rho, len(alphas))
    val, absum = _nested_power_sum(xs, ms, K)
    sign = -1 if len(alphas) % 2 else 1
    err = _TARGET + 8 * EPS * (K + len(letters)) * absum
    return sign * val, err


def L_word(ks: tuple, twists: tuple, N: int) -> tuple:
    """Letter tags of the iterated-integral word for ``L_*(ks; twists)``."""
    out = []
    acc = 0
    for k, a in zip(ks, twists):
        acc += a
        out.extend([ZERO] * (k - 1))
        out.append(("w", (-acc) % N))
    return tuple(out)


@lru_cache(maxsize=None)
def L_value(ks: tuple, twists: tuple, N: int):
    """``(value, err)`` of ``L_*(ks; twists)`` at level ``N`` (convergent indices only)."""
    if not ks:
        return 1 + 0j, 0.0
    word = L_word(ks, twists, N)
    if word[0] == ("w", 0):
        raise ValueError("divergent index: leading exponent 1 with trivial twist")
    lam = split_point(N)
    total = 0j
    err = 0.0
    absum = 0.0
    w = len(word)
    for j in range(w + 1):
        left = tuple(flip(c) for c in reversed(word[:j]))
        right = word[j:]
        gl, el = G(left, 1 - lam, N)
        gr, er = G(right, lam, N)
        total += -gl * gr if j % 2 else gl * gr
        err += abs(gl) * er + abs(gr) * el + el * er
        absum += abs(gl * gr)
    sign = -1 if len(ks) % 2 else 1
    err += 4 * EPS * (w + 1) * absum
    return sign * total, err
