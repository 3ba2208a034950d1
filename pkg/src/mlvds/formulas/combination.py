"""
Exact linear combinations of evaluable quantities with coefficients in Q(w).

Keys are hashable tuples:

* ``("L", ks, twists)``: ``L_*(ks; twists)`` at the combination's level, twists mod N;
* ``("Z", ks, twists)``: the level-N value ``zeta_N(ks; twists)``, twists in ``1..N``;
* ``("aux", tag, k)``: a level-3 auxiliary double series.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..core import LEVEL, MLV, IndexVector, NCPoly, mlv_alphabet, reduce_r, word_to_runs
from ..cyclotomic import Cyclo
from ..evaluator import (
    ZERO,
    ComplexApprox,
    EvalConfig,
    aux_expansion,
    eval_L_star,
    eval_zeta3_aux,
    eval_zeta_N,
)
from ..leveln import expansion_coefficients
from ..series import EPS


def L(N: int, ks, twists) -> tuple:
    return ("L", tuple(ks), tuple(a % N for a in twists))


def Z(N: int, ks, twists) -> tuple:
    return ("Z", tuple(ks), tuple(reduce_r(a, N) for a in twists))


def AUX(tag, k: int) -> tuple:
    return ("aux", tuple(tag), k)


class Combination:
    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms=None):
        self.N = N
        clean = {}
        for key, c in (terms or {}).items():
            c = c if isinstance(c, Cyclo) else Cyclo.rational(N, Fraction(c))
            if key in clean:
                c = clean[key] + c
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self.terms = clean

    @classmethod
    def of(cls, N: int, *pairs) -> "Combination":
        """From ``(coeff, key)`` pairs; repeated keys accumulate."""
        out = cls(N)
        for c, key in pairs:
            out = out + cls(N, {key: c})
        return out

    @classmethod
    def from_ncpoly(cls, p: NCPoly) -> "Combination":
        N = p.alphabet.N
        tag = "L" if p.alphabet.family == MLV else "Z"
        out = {}
        for word, c in p.items():
            runs = word_to_runs(word)
            key = (tag, tuple(k for k, _ in runs), tuple(p.alphabet.twist_of(code) for _, code in runs))
            out[key] = out.get(key, Cyclo(N)) + c
        return cls(N, out)

    def __add__(self, other: "Combination") -> "Combination":
        if other.N != self.N:
            raise ValueError("level mismatch")
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out[key] + c if key in out else c
        return Combination(self.N, out)

    def __neg__(self):
        return Combination(self.N, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Combination":
        c = c if isinstance(c, Cyclo) else Cyclo.rational(self.N, Fraction(c))
        return Combination(self.N, {k: v * c for k, v in self.terms.items()})

    __mul__ = scale
    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, Combination) and self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: repr(kv[0]))

    # -- rewriting ---------------------------------------------------------

    def expand(self) -> "Combination":
        """Replace level-N values and auxiliary series by L-values."""
        out = Combination(self.N)
        for key, c in self.terms.items():
            if key[0] == "Z":
                iv = IndexVector(key[1], key[2])
                part = {L(self.N, i.ks, i.twists): v for i, v in expansion_coefficients(iv, self.N).items()}
                out = out + Combination(self.N, part).scale(c)
            elif key[0] == "aux":
                part = {L(3, i.ks, i.twists): v for i, v in aux_expansion(key[1], key[2]).items()}
                out = out + Combination(3, part).scale(c)
            else:
                out = out + Combination(self.N, {key: c})
        return out

    def apply_depth_one_level2(self) -> "Combination":
        """Rewrite ``L(k; 1)`` at level 2 as ``(2^{1-k} - 1) L(k; 0)``."""
        if self.N != 2:
            return self
        out = Combination(2)
        for key, c in self.terms.items():
            if key[0] == "L" and len(key[1]) == 1 and key[2] == (1,):
                k = key[1][0]
                out = out + Combination(2, {L(2, (k,), (0,)): c * (Fraction(2) ** (1 - k) - 1)})
            else:
                out = out + Combination(2, {key: c})
        return out

    def to_ncpoly(self) -> NCPoly:
        """The combination as an MLV polynomial (L-keys and rational coefficients only)."""
        al = mlv_alphabet(self.N)
        out = NCPoly.zero(al)
        for key, c in self.terms.items():
            if key[0] != "L" or not c.is_rational():
                raise ValueError(f"term {key} with coefficient {c} has no rational polynomial form")
            out = out + NCPoly.generators(IndexVector(key[1], key[2]), al, c.c[0])
        return out

    # -- evaluation ----------------------------------------------------------

    def value_of(self, key, cfg: EvalConfig) -> ComplexApprox:
        kind = key[0]
        if kind == "L":
            return eval_L_star(IndexVector(key[1], key[2]), cfg)
        if kind == "Z":
            return eval_zeta_N(IndexVector(key[1], key[2]), cfg)
        if kind == "aux":
            return eval_zeta3_aux(key[1], key[2], cfg)
        raise KeyError(key)

    def evaluate(self, cfg: Optional[EvalConfig] = None) -> ComplexApprox:
        """Value with an error bound that includes the rounding of the final sum."""
        cfg = (cfg or EvalConfig(self.N)).with_level(self.N)
        total = ZERO
        scale = 0.0
        for key, c in self.sorted_items():
            term = self.value_of(key, cfg) * c
            scale += abs(term)
            total = total + term
        return ComplexApprox(total.re, total.im, total.err + 4 * EPS * (len(self) + 1) * scale)

    def __str__(self):
        parts = []
        for key, c in self.sorted_items():
            name = {"L": "L", "Z": f"zeta{self.N}", "aux": "aux"}[key[0]]
            if key[0] == "aux":
                arg = f"{key[1]},k={key[2]}"
            else:
                arg = f"{','.join(map(str, key[1]))};{','.join(map(str, key[2]))}"
            parts.append(f"({c})*{name}({arg})")
        return " + ".join(parts) or "0"

    def __repr__(self):
        return f"Combination(N={self.N}, {self})"
