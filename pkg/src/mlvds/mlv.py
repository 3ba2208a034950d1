"""
Stuffle and shuffle products of multiple L-value words, the twist maps I and
I^{-1}, and the two regularizations with respect to ``y_0``.

All functions take and return :class:`~mlvds.core.NCPoly` over the ``mlv``
alphabet.  Products are memoised on pairs of raw words.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .core import (
    MLV,
    Alphabet,
    AlphabetMismatchError,
    DomainError,
    NCPoly,
    Subspace,
    Word,
    classify_raw,
    mlv_alphabet,
    runs_to_word,
    word_to_runs,
)

STAR = "stuffle"
SHUFFLE = "shuffle"

Y0 = 1  # letter code of y_0


def as_poly(p: Union[NCPoly, Word]) -> NCPoly:
    if isinstance(p, Word):
        return p.to_poly()
    if not isinstance(p, NCPoly):
        raise TypeError(f"expected NCPoly or Word, got {type(p).__name__}")
    return p


def _require_family(p: NCPoly, family: str):
    if p.alphabet.family != family:
        raise AlphabetMismatchError(f"operation needs the {family} alphabet, got {p.alphabet.family}")


def _require(p: NCPoly, needed: Subspace, what: str):
    for w in p.terms:
        s = classify_raw(w, p.alphabet)
        if needed is Subspace.A1 and not s.in_a1 or needed is Subspace.A0 and not s.in_a0:
            from .grammar import format_word

            raise DomainError(f"{what}: word {format_word(w, p.alphabet, False)} is not in {needed.value[3:]}")


# ---------------------------------------------------------------------------
# raw-word kernels (shared with the level-N algebra)


@lru_cache(maxsize=None)
def shuffle_words(u: tuple, v: tuple) -> dict:
    """Letterwise shuffle of two raw words as ``{word: multiplicity}``."""
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out = {}
    a, b = u[0], v[0]
    for w, c in shuffle_words(u[1:], v).items():
        key = (a,) + w
        out[key] = out.get(key, 0) + c
    for w, c in shuffle_words(u, v[1:]).items():
        key = (b,) + w
        out[key] = out.get(key, 0) + c
    return out


@lru_cache(maxsize=None)
def stuffle_runs(A: tuple, B: tuple, N: int, family: str) -> dict:
    """Quasi-shuffle of generator runs ``((k, code), ...)``.

    The diagonal term is ``z_{k+l, a+b}`` for the ``mlv`` family and
    ``N * y_{k+l, a}`` (only when ``a == b``) for the ``level`` family.
    """
    if not A:
        return {B: 1}
    if not B:
        return {A: 1}
    (k, a), (l, b) = A[0], B[0]
    out = {}
    for w, c in stuffle_runs(A[1:], B, N, family).items():
        key = (A[0],) + w
        out[key] = out.get(key, 0) + c
    for w, c in stuffle_runs(A, B[1:], N, family).items():
        key = (B[0],) + w
        out[key] = out.get(key, 0) + c
    if family == MLV:
        head, mult = (k + l, (a - 1 + b - 1) % N + 1), 1
    elif a == b:
        head, mult = (k + l, a), N
    else:
        head = None
    if head is not None:
        for w, c in stuffle_runs(A[1:], B[1:], N, family).items():
            key = (head,) + w
            out[key] = out.get(key, 0) + mult * c
    return out


@lru_cache(maxsize=None)
def stuffle_words(u: tuple, v: tuple, alphabet: Alphabet) -> dict:
    res = stuffle_runs(word_to_runs(u), word_to_runs(v), alphabet.N, alphabet.family)
    return {runs_to_word(r): c for r, c in res.items()}


def bilinear(p: NCPoly, q: NCPoly, kernel) -> NCPoly:
    if p.alphabet != q.alphabet:
        raise AlphabetMismatchError(f"{p.alphabet} vs {q.alphabet}")
    out = {}
    for u, a in p.items():
        for v, b in q.items():
            ab = a * b
            # integer coefficients stay on the fast int path
            if ab.denominator == 1:
                ab = ab.numerator
            for w, c in kernel(u, v).items():
                out[w] = out.get(w, 0) + ab * c
    return NCPoly._trusted(out, p.alphabet)


# ---------------------------------------------------------------------------
# products


def stuffle(p, q) -> NCPoly:
    """Harmonic shuffle product ``p * q`` on A^1."""
    p, q = as_poly(p), as_poly(q)
    _require_family(p, MLV)
    _require(p, Subspace.A1, "stuffle")
    _require(q, Subspace.A1, "stuffle")
    al = p.alphabet
    return bilinear(p, q, lambda u, v: stuffle_words(u, v, al))


def shuffle(p, q) -> NCPoly:
    """Shuffle product on the whole free algebra."""
    p, q = as_poly(p), as_poly(q)
    return bilinear(p, q, shuffle_words)


def product(kind: str, p, q) -> NCPoly:
    if kind == STAR:
        return stuffle(p, q)
    if kind == SHUFFLE:
        return shuffle(p, q)
    raise ValueError(f"unknown product {kind!r}")


def power(kind: str, p, n: int) -> NCPoly:
    p = as_poly(p)
    out = NCPoly.one(p.alphabet)
    for _ in range(n):
        out = product(kind, out, p)
    return out


# ---------------------------------------------------------------------------
# twist maps


def _twist_map(word: tuple, N: int, inverse: bool) -> tuple:
    runs = word_to_runs(word)
    new = []
    prev = 0
    for k, c in runs:
        a = c - 1
        if inverse:
            new.append((k, (a - prev) % N + 1))
            prev = a
        else:
            prev = (prev + a) % N
            new.append((k, prev + 1))
    return runs_to_word(new)


def map_I(p) -> NCPoly:
    """``z_{k1,a1} z_{k2,a2} ... -> z_{k1,a1} z_{k2,a1+a2} ...`` (prefix sums of twists)."""
    p = as_poly(p)
    _require_family(p, MLV)
    _require(p, Subspace.A1, "I")
    N = p.alphabet.N
    return p.map_words(lambda w: _twist_map(w, N, False))


def map_I_inv(p) -> NCPoly:
    """Inverse of :func:`map_I`: consecutive differences of twists."""
    p = as_poly(p)
    _require_family(p, MLV)
    _require(p, Subspace.A1, "I^-1")
    N = p.alphabet.N
    return p.map_words(lambda w: _twist_map(w, N, True))


# ---------------------------------------------------------------------------
# regularization


@dataclass(frozen=True)
class RegularizedPoly:
    """``sum_i coefficients[i] (product) y_0^{(product) i}`` with every coefficient in A^0."""

    coefficients: tuple
    product: str

    @property
    def constant(self) -> NCPoly:
        return self.coefficients[0]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def reconstruct(self) -> NCPoly:
        c0 = self.coefficients[0]
        y0 = NCPoly.word((Y0,), c0.alphabet)
        out = NCPoly.zero(c0.alphabet)
        pw = NCPoly.one(c0.alphabet)
        for i, c in enumerate(self.coefficients):
            if i:
                pw = product(self.product, pw, y0)
            if c:
                out = out + product(self.product, c, pw)
        return out

    def __str__(self):
        return ", ".join(f"deg{i}: {c}" for i, c in enumerate(self.coefficients))


def _leading_y0(word: tuple) -> int:
    j = 0
    while j < len(word) and word[j] == Y0:
        j += 1
    return j


@lru_cache(maxsize=None)
def _reg_word(word: tuple, kind: str, N: int) -> tuple:
    """Decomposition of one A^1 word as ``((degree, {word: coeff}), ...)``."""
    j = _leading_y0(word)
    if j == 0:
        return ((0, ((word, Fraction(1)),)),)
    al = mlv_alphabet(N)
    prev = word[1:]
    if kind == STAR:
        expanded = stuffle_words((Y0,), prev, al)
    else:
        expanded = shuffle_words((Y0,), prev)
    if expanded.get(word) != j:
        raise AssertionError("leading-y0 multiplicity mismatch in regularization")
    acc = {}

    def add(deg, w, c):
        bucket = acc.setdefault(deg, {})
        bucket[w] = bucket.get(w, 0) + c

    # y0 (x) prev = j*word + rest, hence word = (T*reg(prev) - reg(rest)) / j
    for deg, terms in _reg_word(prev, kind, N):
        for w, c in terms:
            add(deg + 1, w, Fraction(c, j))
    for w, c in expanded.items():
        if w == word:
            continue
        if _leading_y0(w) >= j:
            raise AssertionError("regularization recursion does not terminate")
        for deg, terms in _reg_word(w, kind, N):
            for v, d in terms:
                add(deg, v, -Fraction(c) * d / j)
    return tuple(
        (deg, tuple((w, c) for w, c in sorted(b.items()) if c)) for deg, b in sorted(acc.items())
    )


def _regularize(p, kind: str) -> RegularizedPoly:
    p = as_poly(p)
    _require_family(p, MLV)
    _require(p, Subspace.A1, f"reg ({kind})")
    al = p.alphabet
    acc = {}
    for word, c in p.items():
        for deg, terms in _reg_word(word, kind, al.N):
            bucket = acc.setdefault(deg, {})
            for w, d in terms:
                bucket[w] = bucket.get(w, 0) + c * d
    top = max((d for d, b in acc.items() if any(b.values())), default=0)
    coeffs = tuple(NCPoly._trusted(acc.get(d, {}), al) for d in range(top + 1))
    return RegularizedPoly(coeffs, kind)


def reg_star(p) -> RegularizedPoly:
    return _regularize(p, STAR)


def reg_shuffle(p) -> RegularizedPoly:
    return _regularize(p, SHUFFLE)


# ---------------------------------------------------------------------------
# double shuffle elements


def fds_element(w1, w2, side: str = SHUFFLE) -> NCPoly:
    """Finite double shuffle element of two A^0 elements.

    ``side="shuffle"`` returns ``I(w1) sh I(w2) - I(w1 * w2)``, killed by the
    shuffle-type evaluation; ``side="stuffle"`` returns
    ``I^-1(w1) * I^-1(w2) - I^-1(w1 sh w2)``, killed by the stuffle-type one.
    """
    w1, w2 = as_poly(w1), as_poly(w2)
    _require(w1, Subspace.A0, "double shuffle")
    _require(w2, Subspace.A0, "double shuffle")
    if side == SHUFFLE:
        return shuffle(map_I(w1), map_I(w2)) - map_I(stuffle(w1, w2))
    if side == STAR:
        return stuffle(map_I_inv(w1), map_I_inv(w2)) - map_I_inv(shuffle(w1, w2))
    raise ValueError(f"unknown side {side!r}")


def rds_element(w0, w1, side: str = SHUFFLE) -> NCPoly:
    """Regularized double shuffle element for ``w0`` in A^0 and ``w1`` in A^1.

    Returns the constant term of ``reg_sh(I(w0 * w1) - I(w0) sh I(w1))`` for
    ``side="shuffle"``, or of ``reg_*(I^-1(w0 sh w1) - I^-1(w0) * I^-1(w1))``
    for ``side="stuffle"``.
    """
    w0, w1 = as_poly(w0), as_poly(w1)
    _require(w0, Subspace.A0, "regularized double shuffle")
    _require(w1, Subspace.A1, "regularized double shuffle")
    if side == SHUFFLE:
        return reg_shuffle(map_I(stuffle(w0, w1)) - shuffle(map_I(w0), map_I(w1))).constant
    if side == STAR:
        return reg_star(map_I_inv(shuffle(w0, w1)) - stuffle(map_I_inv(w0), map_I_inv(w1))).constant
    raise ValueError(f"unknown side {side!r}")
