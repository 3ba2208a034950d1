"""
Exact noncommutative polynomials over Q on the two word alphabets.

Letters are stored as small integer codes so that both alphabet families share
one representation:

* ``mlv`` family, alphabet ``{x, y_a | a in Z/N}``: code ``0`` is ``x`` and
  code ``a + 1`` is ``y_a``.
* ``level`` family, alphabet ``{x_0, ..., x_N}``: code ``a`` is ``x_a``.

In both families code ``0`` is the "x-type" letter and the codes ``1..N`` are
the letters that close a generator ``z_{k,a} = x^{k-1} y_a`` (resp.
``y_{k,a} = x_0^{k-1} x_a``).  A word is a tuple of codes; the empty tuple is
the unit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

MLV = "mlv"
LEVEL = "level"

RawWord = tuple  # tuple[int, ...]


class AlgebraError(ValueError):
    pass


class AlphabetMismatchError(AlgebraError):
    pass


class DomainError(AlgebraError):
    """An argument lies outside the subspace an operation is defined on."""


@dataclass(frozen=True)
class Alphabet:
    family: str
    N: int

    def __post_init__(self):
        if self.family not in (MLV, LEVEL):
            raise ValueError(f"unknown alphabet family {self.family!r}")
        if not isinstance(self.N, int) or self.N < 1:
            raise ValueError(f"level must be a positive integer, got {self.N!r}")

    @property
    def size(self) -> int:
        return self.N + 1

    def twist_of(self, code: int) -> int:
        """Twist index carried by a non-x letter code."""
        return code - 1 if self.family == MLV else code

    def code_of(self, twist: int) -> int:
        """Letter code closing a generator with the given twist (reduced)."""
        if self.family == MLV:
            return twist % self.N + 1
        return reduce_r(twist, self.N)

    def check_word(self, word: RawWord) -> None:
        for c in word:
            if not 0 <= c <= self.N:
                raise AlphabetMismatchError(f"letter code {c} outside alphabet {self}")

    def letter_name(self, code: int) -> str:
        if self.family == MLV:
            return "x" if code == 0 else f"y{code - 1}"
        return f"x{code}"


def mlv_alphabet(N: int) -> Alphabet:
    return Alphabet(MLV, N)


def level_alphabet(N: int) -> Alphabet:
    return Alphabet(LEVEL, N)


def reduce_r(a: int, N: int) -> int:
    """Representative of ``a mod N`` in ``{1, ..., N}``."""
    if N < 1:
        raise ValueError("N must be positive")
    return (a - 1) % N + 1


@dataclass(frozen=True)
class Letter:
    alphabet: Alphabet
    code: int

    def __post_init__(self):
        if not 0 <= self.code <= self.alphabet.N:
            raise AlphabetMismatchError(f"letter code {self.code} outside {self.alphabet}")

    @classmethod
    def x(cls, alphabet: Alphabet) -> "Letter":
        return cls(alphabet, 0)

    @classmethod
    def y(cls, a: int, N: int) -> "Letter":
        return cls(mlv_alphabet(N), a % N + 1)

    @classmethod
    def X(cls, a: int, N: int) -> "Letter":
        if not 0 <= a <= N:
            raise AlphabetMismatchError(f"x_{a} is not a letter at level {N}")
        return cls(level_alphabet(N), a)

    @property
    def is_x(self) -> bool:
        return self.code == 0

    def __str__(self):
        return self.alphabet.letter_name(self.code)


@dataclass(frozen=True)
class Word:
    letters: RawWord
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        self.alphabet.check_word(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter(self.alphabet, c) for c in self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise AlphabetMismatchError(f"{self.alphabet} vs {other.alphabet}")
        return Word(self.letters + other.letters, self.alphabet)

    def to_poly(self) -> "NCPoly":
        return NCPoly({self.letters: 1}, self.alphabet)

    def __str__(self):
        from .grammar import format_word

        return format_word(self.letters, self.alphabet)


@dataclass(frozen=True)
class IndexVector:
    """``(k_1..k_n; a_1..a_n)`` view of a generator word."""

    ks: tuple
    twists: tuple

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(int(k) for k in self.ks))
        object.__setattr__(self, "twists", tuple(int(a) for a in self.twists))
        if len(self.ks) != len(self.twists):
            raise ValueError("exponent and twist vectors differ in length")
        if any(k < 1 for k in self.ks):
            raise ValueError(f"exponents must be positive: {self.ks}")

    @property
    def depth(self) -> int:
        return len(self.ks)

    @property
    def weight(self) -> int:
        return sum(self.ks)

    def pairs(self):
        return tuple(zip(self.ks, self.twists))

    def __str__(self):
        return f"({','.join(map(str, self.ks))};{','.join(map(str, self.twists))})"


def runs_to_word(runs: Iterable[tuple]) -> RawWord:
    """Concatenate generator runs ``(k, code)`` into a raw word."""
    out = []
    for k, code in runs:
        out.extend((0,) * (k - 1))
        out.append(code)
    return tuple(out)


def word_to_runs(word: RawWord) -> tuple:
    """Split a raw word ending in a non-x letter into runs ``(k, code)``."""
    if word and word[-1] == 0:
        raise DomainError("word ends with the x-type letter; not in the A^1/U^1 subspace")
    runs = []
    k = 1
    for c in word:
        if c == 0:
            k += 1
        else:
            runs.append((k, c))
            k = 1
    return tuple(runs)


def word_from_indices(iv: IndexVector, alphabet: Alphabet) -> Word:
    """``z_{k1,a1}...z_{kn,an}`` (or ``y_{k,a}`` words) from an index vector."""
    if alphabet.family == LEVEL:
        for a in iv.twists:
            if not 1 <= a <= alphabet.N:
                raise DomainError(f"level twist {a} outside 1..{alphabet.N}")
    runs = [(k, alphabet.code_of(a)) for k, a in iv.pairs()]
    return Word(runs_to_word(runs), alphabet)


def indices_from_word(w: Word) -> IndexVector:
    runs = word_to_runs(w.letters)
    return IndexVector(tuple(k for k, _ in runs), tuple(w.alphabet.twist_of(c) for _, c in runs))


class Subspace(enum.Enum):
    FULL = "full-algebra"
    A1 = "in-A1"
    A0 = "in-A0"

    @property
    def in_a1(self) -> bool:
        return self is not Subspace.FULL

    @property
    def in_a0(self) -> bool:
        return self is Subspace.A0


def classify_raw(word: RawWord, alphabet: Alphabet) -> Subspace:
    if not word:
        return Subspace.A0
    if word[-1] == 0:
        return Subspace.FULL
    first = word[0]
    if alphabet.family == MLV:
        # y_0 = code 1 is the only forbidden leading letter
        return Subspace.A1 if first == 1 else Subspace.A0
    return Subspace.A0 if first == 0 else Subspace.A1


def classify(w: Union[Word, "NCPoly"]) -> Subspace:
    """Smallest of full / A^1 / A^0 (resp. U^1 / U^0) containing ``w``."""
    if isinstance(w, Word):
        return classify_raw(w.letters, w.alphabet)
    worst = Subspace.A0
    rank = {Subspace.A0: 0, Subspace.A1: 1, Subspace.FULL: 2}
    for word in w.terms:
        s = classify_raw(word, w.alphabet)
        if rank[s] > rank[worst]:
            worst = s
    return worst


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating coefficients are not allowed in exact polynomials")
    return Fraction(c)


def term_order_key(word: RawWord, alphabet: Alphabet):
    """Graded order: by length, then generator words by (k, a) vectors, then raw codes."""
    if word and word[-1] != 0:
        runs = word_to_runs(word)
        return (len(word), 0, tuple(k for k, _ in runs), tuple(c for _, c in runs))
    return (len(word), 1, word, ())


class NCPoly:
    """A finite Q-linear combination of words over one alphabet."""

    __slots__ = ("_terms", "alphabet", "_hash")

    def __init__(self, terms: Mapping = None, alphabet: Alphabet = None):
        if alphabet is None:
            raise ValueError("an alphabet is required")
        clean = {}
        for word, c in (terms or {}).items():
            word = tuple(word)
            c = _as_fraction(c)
            if c:
                alphabet.check_word(word)
                clean[word] = clean.get(word, 0) + c
                if not clean[word]:
                    del clean[word]
        self._terms = MappingProxyType(clean)
        self.alphabet = alphabet
        self._hash = None

    def __reduce__(self):
        return (NCPoly, (dict(self._terms), self.alphabet))

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NCPoly":
        return cls({}, alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet) -> "NCPoly":
        return cls({(): 1}, alphabet)

    @classmethod
    def word(cls, word: RawWord, alphabet: Alphabet, coeff=1) -> "NCPoly":
        return cls({tuple(word): coeff}, alphabet)

    @classmethod
    def generators(cls, iv: IndexVector, alphabet: Alphabet, coeff=1) -> "NCPoly":
        return cls({word_from_indices(iv, alphabet).letters: coeff}, alphabet)

    @classmethod
    def _trusted(cls, terms: dict, alphabet: Alphabet) -> "NCPoly":
        # caller guarantees Fraction/int nonzero coefficients on valid words
        p = cls.__new__(cls)
        p._terms = MappingProxyType({w: c if type(c) is Fraction else Fraction(c) for w, c in terms.items() if c})
        p.alphabet = alphabet
        p._hash = None
        return p

    @property
    def terms(self) -> Mapping:
        return self._terms

    def items(self):
        return self._terms.items()

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda t: term_order_key(t[0], self.alphabet))

    def coefficient(self, word) -> Fraction:
        if isinstance(word, Word):
            word = word.letters
        return self._terms.get(tuple(word), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "NCPoly"):
        if not isinstance(other, NCPoly):
            raise TypeError(f"expected NCPoly, got {type(other).__name__}")
        if other.alphabet != self.alphabet:
            raise AlphabetMismatchError(f"{self.alphabet} vs {other.alphabet}")

    def __add__(self, other: "NCPoly") -> "NCPoly":
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NCPoly._trusted(out, self.alphabet)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly._trusted({w: -c for w, c in self._terms.items()}, self.alphabet)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def scale(self, c) -> "NCPoly":
        c = _as_fraction(c)
        if not c:
            return NCPoly.zero(self.alphabet)
        return NCPoly._trusted({w: c * v for w, v in self._terms.items()}, self.alphabet)

    def __mul__(self, c):
        if isinstance(c, NCPoly):
            raise TypeError("use stuffle/shuffle/concat for products of polynomials")
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.alphabet == other.alphabet and dict(self._terms) == dict(other._terms)
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alphabet, frozenset(self._terms.items())))
        return self._hash

    def map_words(self, fn) -> "NCPoly":
        """Linear extension of a word -> word map."""
        out = {}
        for w, c in self._terms.items():
            nw = fn(w)
            out[nw] = out.get(nw, 0) + c
        return NCPoly._trusted(out, self.alphabet)

    def weight(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def __repr__(self):
        return f"NCPoly({str(self)!r}, {self.alphabet.family}, N={self.alphabet.N})"

    def __str__(self):
        from .grammar import format_poly

        return format_poly(self)


def poly_add(p: NCPoly, q: NCPoly) -> NCPoly:
    return p + q


def concat(p: NCPoly, q: NCPoly) -> NCPoly:
    """Concatenation product (the free-algebra multiplication)."""
    p._check(q)
    out = {}
    for u, a in p.items():
        for v, b in q.items():
            w = u + v
            out[w] = out.get(w, 0) + a * b
    return NCPoly._trusted(out, p.alphabet)


def linear_combination(pairs: Iterable[tuple], alphabet: Alphabet) -> NCPoly:
    """Sum of ``coeff * word`` for ``(coeff, raw_word)`` pairs."""
    out = {}
    for c, w in pairs:
        w = tuple(w)
        out[w] = out.get(w, 0) + _as_fraction(c)
    return NCPoly(out, alphabet)


def from_dict(counts: Mapping, alphabet: Alphabet) -> NCPoly:
    return NCPoly._trusted({w: c for w, c in counts.items() if c}, alphabet)
