"""
The algebra of level-N multiple zeta values on the alphabet ``{x_0, ..., x_N}``.

Generators are ``y_{k,a} = x_0^{k-1} x_a`` with ``a`` in ``{1, ..., N}``; the
residue class ``0 mod N`` is represented by ``a = N``.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .core import (
    LEVEL,
    DomainError,
    IndexVector,
    NCPoly,
    Subspace,
    reduce_r,
    runs_to_word,
    word_to_runs,
)
from .cyclotomic import Cyclo
from .mlv import _require, _require_family, as_poly, bilinear, shuffle_words, stuffle_words

__all__ = [
    "reduce_r",
    "stuffle_N",
    "shuffle_N",
    "map_J",
    "map_J_inv",
    "fds_N_element",
    "expand_to_mlv",
    "ExpansionTerm",
]


def stuffle_N(p, q) -> NCPoly:
    """Stuffle on U^1; colliding generators ``y_{k,a}``, ``y_{l,a}`` merge to ``N y_{k+l,a}``."""
    p, q = as_poly(p), as_poly(q)
    _require_family(p, LEVEL)
    _require(p, Subspace.A1, "stuffle_N")
    _require(q, Subspace.A1, "stuffle_N")
    al = p.alphabet
    return bilinear(p, q, lambda u, v: stuffle_words(u, v, al))


def shuffle_N(p, q) -> NCPoly:
    p, q = as_poly(p), as_poly(q)
    _require_family(p, LEVEL)
    return bilinear(p, q, shuffle_words)


def _J_word(word: tuple, N: int) -> tuple:
    runs = word_to_runs(word)
    new = []
    for i, (k, a) in enumerate(runs):
        nxt = runs[i + 1][1] if i + 1 < len(runs) else 0
        new.append((k, reduce_r(a - nxt, N)))
    return runs_to_word(new)


def _J_inv_word(word: tuple, N: int) -> tuple:
    runs = word_to_runs(word)
    new = []
    acc = 0
    for k, a in reversed(runs):
        acc += a
        new.append((k, reduce_r(acc, N)))
    return runs_to_word(reversed(new))


def map_J(p) -> NCPoly:
    """Twists become consecutive differences ``r(a_i - a_{i+1})``, last one ``r(a_n)``."""
    p = as_poly(p)
    _require_family(p, LEVEL)
    _require(p, Subspace.A1, "J")
    N = p.alphabet.N
    return p.map_words(lambda w: _J_word(w, N))


def map_J_inv(p) -> NCPoly:
    """Twists become suffix sums ``r(a_i + ... + a_n)``."""
    p = as_poly(p)
    _require_family(p, LEVEL)
    _require(p, Subspace.A1, "J^-1")
    N = p.alphabet.N
    return p.map_words(lambda w: _J_inv_word(w, N))


def fds_N_element(w1, w2) -> NCPoly:
    """``J^-1(w1) * J^-1(w2) - J^-1(w1 sh w2)`` for ``w1, w2`` in U^0."""
    w1, w2 = as_poly(w1), as_poly(w2)
    _require_family(w1, LEVEL)
    _require(w1, Subspace.A0, "level-N double shuffle")
    _require(w2, Subspace.A0, "level-N double shuffle")
    return stuffle_N(map_J_inv(w1), map_J_inv(w2)) - map_J_inv(shuffle_N(w1, w2))


class ExpansionTerm(NamedTuple):
    """``w^power * L_*(index)`` with the index twists in ``0..N-1``."""

    power: int
    index: IndexVector


def expand_to_mlv(iv: IndexVector, N: int) -> tuple:
    """Root-of-unity filter expansion of a level-N value into ``N^depth`` L-values.

    Each residue condition ``m = a (mod N)`` is replaced by
    ``(1/N) sum_j w^{j(m - a)}``; the factor ``N^depth`` cancels, leaving
    ``sum_j w^{-sum j_i a_i} L_*(k; j)``.
    """
    if iv.depth == 0:
        return (ExpansionTerm(0, iv),)
    if iv.ks[0] < 2:
        raise DomainError(f"level-{N} value {iv} diverges (leading exponent 1)")
    for a in iv.twists:
        if not 1 <= a <= N:
            raise DomainError(f"level twist {a} outside 1..{N}")
    out = []
    for js in itertools.product(range(N), repeat=iv.depth):
        power = -sum(j * a for j, a in zip(js, iv.twists)) % N
        out.append(ExpansionTerm(power, IndexVector(iv.ks, js)))
    return tuple(out)


def expansion_coefficients(iv: IndexVector, N: int) -> dict:
    """:func:`expand_to_mlv` collected as ``{mlv twist tuple: Cyclo}``."""
    out = {}
    for power, index in expand_to_mlv(iv, N):
        out[index] = out.get(index, Cyclo(N)) + Cyclo.power(N, power)
    return out
