"""
Sum-formula and weighted sum-formula kernel elements of multiple L-values, and
their depth-two specializations.

Each ``*_element`` returns the displayed "left side minus right side" as an
exact polynomial whose ``L_*`` value must vanish.  ``*_origin`` rebuilds the
same element from the double shuffle construction it comes from, so the closed
form can be checked symbolically.
"""

from __future__ import annotations

from ..core import NCPoly, mlv_alphabet
from ..mlv import map_I_inv, shuffle, stuffle
from .lemmas import _sum, check_range, compositions, differences, power_weight, z


def sum_formula_element(k: int, n: int, a: int, avec, N: int) -> NCPoly:
    """Sum formula of multiple L-values (leading inserted exponent 1) as ``lhs - rhs``."""
    check_range(k, n, a, avec, N)
    avec = tuple(avec)
    d = differences(avec)
    lhs, rhs = [], []
    for ks in compositions(k, n, [2] + [1] * (n - 1)):
        lhs.append(z(N, ks, (a, avec[0] - a) + d[1:]))
    for i in range(2, n):
        for ks in compositions(k, n, [2] + [1] * (n - 1)):
            lhs.append(z(N, ks, d[: i - 1] + (a - avec[i - 2], avec[i - 1] - a) + d[i:]))
    for ks in compositions(k, n, [2] + [1] * (n - 1)):
        if ks[-1] == 1:
            lhs.append(z(N, ks, d + (a - avec[-1],)))
    for ks in compositions(k, n, [1, 2] + [1] * (n - 2)):
        if ks[0] == 1:
            rhs.append(z(N, ks, (a, avec[0]) + d[1:]))
            rhs.append(z(N, ks, (a, avec[0] - a) + d[1:], -1))
    for i in range(2, n + 1):
        for ks in compositions(k, n, [2] + [1] * (n - 1)):
            if ks[i - 1] == 1:
                rhs.append(z(N, ks, d[: i - 1] + (a,) + d[i - 1 :]))
    for ks in compositions(k, n - 1, [3] + [1] * (n - 2)):
        rhs.append(z(N, ks, (a + avec[0],) + d[1:]))
    for i in range(2, n):
        for ks in compositions(k, n - 1, [2] + [1] * (n - 2)):
            if ks[i - 1] >= 2:
                rhs.append(z(N, ks, d[: i - 1] + (a + d[i - 1],) + d[i:]))
    return _sum(N, lhs) - _sum(N, rhs)


def sum_formula_origin(k: int, n: int, a: int, avec, N: int) -> NCPoly:
    """``sum_w I^-1(z_{1,a} sh w) - I^-1(z_{1,a}) * I^-1(w)`` over ``w = z_{k1,a1}..`` of weight k-1, k1 >= 2."""
    check_range(k, n, a, avec, N)
    za = z(N, (1,), (a,))
    out = NCPoly.zero(mlv_alphabet(N))
    for ks in compositions(k - 1, n - 1, [2] + [1] * (n - 2)):
        w = z(N, ks, avec)
        out = out + map_I_inv(shuffle(za, w)) - stuffle(map_I_inv(za), map_I_inv(w))
    return out


def weighted_formula_element(k: int, n: int, a: int, avec, N: int) -> NCPoly:
    """The displayed weighted combination with power-of-two and linear coefficients."""
    check_range(k, n, a, avec, N)
    avec = tuple(avec)
    d = differences(avec)
    pos, neg = [], []
    for ks in compositions(k, n, [1, 2] + [1] * (n - 2)):
        pos.append(z(N, ks, (a, avec[0] - a) + d[1:], 2 ** (ks[0] - 1)))
    for ks in compositions(k, n, [2] + [1] * (n - 1)):
        if ks[1] == 1:
            pos.append(z(N, ks, (a, avec[0] - a) + d[1:], 2 ** (ks[0] - 1) - 1))
    for i in range(2, n):
        for ks in compositions(k, n, [2] + [1] * (n - 1)):
            pos.append(z(N, ks, d[: i - 1] + (a - avec[i - 2], avec[i - 1] - a) + d[i:], power_weight(ks, i)))
    for ks in compositions(k, n, [2] + [1] * (n - 1)):
        pos.append(z(N, ks, d + (a - avec[-1],), power_weight(ks, n - 1)))
    for ks in compositions(k, n, [1, 2] + [1] * (n - 2)):
        neg.append(z(N, ks, (a, avec[0]) + d[1:]))
    for i in range(1, n):
        for ks in compositions(k, n, [2] + [1] * (n - 1)):
            neg.append(z(N, ks, d[:i] + (a,) + d[i:]))
    for ks in compositions(k, n - 1, [2] + [1] * (n - 2)):
        neg.append(z(N, ks, (a + avec[0],) + d[1:], ks[0] - 2))
    for i in range(2, n):
        for ks in compositions(k, n - 1, [2] + [1] * (n - 2)):
            neg.append(z(N, ks, d[: i - 1] + (a + d[i - 1],) + d[i:], ks[i - 1] - 1))
    return _sum(N, pos) - _sum(N, neg)


def weighted_formula_origin(k: int, n: int, a: int, avec, N: int) -> NCPoly:
    """``sum_{l,w} I^-1(z_{l,a} sh w) - I^-1(z_{l,a}) * I^-1(w)`` over weight-k splittings, k1 >= 2."""
    check_range(k, n, a, avec, N)
    out = NCPoly.zero(mlv_alphabet(N))
    for comp in compositions(k, n, [1, 2] + [1] * (n - 2)):
        zl, w = z(N, comp[:1], (a,)), z(N, comp[1:], avec)
        out = out + map_I_inv(shuffle(zl, w)) - stuffle(map_I_inv(zl), map_I_inv(w))
    return out


def double_sum_element(k: int, a1: int, a2: int, N: int) -> NCPoly:
    """Sum formula of double L-values as ``lhs - rhs``."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    lhs = _sum(N, (z(N, (j, k - j), (a1, a2)) for j in range(2, k)))
    rhs = _sum(
        N,
        [
            z(N, (k - 1, 1), (a1 + a2, a1)),
            z(N, (k - 1, 1), (a1 + a2, -a2), -1),
            z(N, (1, k - 1), (a1, a1 + a2)),
            z(N, (1, k - 1), (a1, a2), -1),
            z(N, (k,), (2 * a1 + a2,)),
        ],
    )
    return lhs - rhs


def double_weighted_element(k: int, a1: int, a2: int, N: int) -> NCPoly:
    """Weighted sum formula of double L-values as ``lhs - rhs``."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    lhs = []
    for j in range(2, k):
        lhs += [
            z(N, (j, k - j), (a1, a2 - a1), 2 ** (j - 1)),
            z(N, (j, k - j), (a2, a1 - a2), 2 ** (j - 1) - 1),
            z(N, (j, k - j), (a1, a2), -1),
            z(N, (j, k - j), (a2, a1), -1),
        ]
    rhs = [
        z(N, (k - 1, 1), (a1, a2 - a1)),
        z(N, (k - 1, 1), (a1, a2), -1),
        z(N, (1, k - 1), (a1, a2)),
        z(N, (1, k - 1), (a1, a2 - a1), -1),
        z(N, (k,), (a1 + a2,), k - 2),
    ]
    return _sum(N, lhs) - _sum(N, rhs)
