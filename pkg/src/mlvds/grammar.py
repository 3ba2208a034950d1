"""
Text syntax for words and polynomials.

    poly  := ["-"] term (("+" | "-") term)*  |  "0"
    term  := rational ["*" word] | word
    word  := "1" | letter+
    letter:= "x" | "x" int | "y" int | "z(" int "," int ")" | "Y(" int "," int ")"

``x``, ``y<a>`` and ``z(k,a)`` belong to the multiple L-value alphabet; ``x<a>`` and
``Y(k,a)`` to the level-N alphabet.  Generator notation is used on output
whenever every word of the polynomial ends in a non-x letter.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .core import LEVEL, MLV, Alphabet, NCPoly, word_to_runs


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(message)
        self.text = text
        self.position = position

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.position}^ {self.args[0]}"


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<gen>(?P<gname>[zY])\(\s*(?P<gk>[+-]?\d+)\s*,\s*(?P<ga>[+-]?\d+)\s*\))
  | (?P<lvl>x(?P<li>\d+))
  | (?P<x>x)
  | (?P<y>y(?P<yi>[+-]?\d+))
  | (?P<num>\d+(?:/\d+)?)
  | (?P<op>[+\-*])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos] in "zY":
                _generator_error(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        if m.lastgroup != "ws":
            out.append((m, pos))
        pos = m.end()
    return out


_GEN_STEPS = (
    (re.compile(r"[zY]\("), "'('"),
    (re.compile(r"\s*[+-]?\d+"), "an exponent"),
    (re.compile(r"\s*,"), "','"),
    (re.compile(r"\s*[+-]?\d+"), "a twist"),
    (re.compile(r"\s*\)"), "')'"),
)


def _generator_error(text: str, pos: int):
    # point the caret at the first place the generator stops matching
    start = pos
    for pat, what in _GEN_STEPS:
        m = pat.match(text, pos)
        if m is None:
            at = pos + 1 if pos == start else pos
            while at < len(text) and text[at].isspace():
                at += 1
            found = "end of input" if at >= len(text) else repr(text[at])
            raise ParseError(f"incomplete generator: expected {what}, found {found}", text, at)
        pos = m.end()


class _Letter:
    # family-tagged letter before N is known: (family, kind, k, twist)
    __slots__ = ("family", "k", "twist", "raw")

    def __init__(self, family, k, twist, raw):
        self.family, self.k, self.twist, self.raw = family, k, twist, raw


def _letter(m, text, pos) -> _Letter:
    if m.group("gen"):
        k = int(m.group("gk"))
        if k < 1:
            raise ParseError("generator exponent must be >= 1", text, pos)
        fam = MLV if m.group("gname") == "z" else LEVEL
        return _Letter(fam, k, int(m.group("ga")), False)
    if m.group("lvl"):
        return _Letter(LEVEL, 1, int(m.group("li")), True)
    if m.group("x"):
        return _Letter(MLV, 1, None, True)
    if m.group("y"):
        return _Letter(MLV, 1, int(m.group("yi")), True)
    raise AssertionError


def parse_poly(text: str, N: Optional[int] = None, family: Optional[str] = None) -> NCPoly:
    """Parse a polynomial; the level ``N`` is inferred as the smallest consistent one if omitted."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", text, 0)
    terms = []  # (coeff, [letters], position)
    i = 0
    sign = 1
    expect_term = True
    while i < len(tokens):
        m, pos = tokens[i]
        if expect_term:
            if m.lastgroup == "op" and m.group() == "-" and not terms and sign == 1:
                sign = -1
                i += 1
                if i == len(tokens):
                    raise ParseError("dangling sign", text, len(text))
                continue
            coeff = Fraction(sign)
            letters = []
            start = pos
            if m.lastgroup == "num":
                coeff *= Fraction(m.group())
                i += 1
                if i < len(tokens) and tokens[i][0].group() == "*":
                    i += 1
                    if i == len(tokens):
                        raise ParseError("expected a word after '*'", text, len(text))
                    m, pos = tokens[i]
                    if m.lastgroup == "num" and m.group() == "1":
                        i += 1
                    elif m.lastgroup not in ("gen", "lvl", "x", "y"):
                        raise ParseError("expected a word after '*'", text, pos)
            elif m.lastgroup not in ("gen", "lvl", "x", "y"):
                raise ParseError(f"expected a term, found {m.group()!r}", text, pos)
            while i < len(tokens) and tokens[i][0].lastgroup in ("gen", "lvl", "x", "y"):
                letters.append(_letter(tokens[i][0], text, tokens[i][1]))
                i += 1
            terms.append((coeff, letters, start))
            expect_term = False
        else:
            if m.lastgroup != "op" or m.group() not in "+-":
                raise ParseError(f"expected '+' or '-', found {m.group()!r}", text, pos)
            sign = 1 if m.group() == "+" else -1
            expect_term = True
            i += 1
    if expect_term:
        raise ParseError("expression ends with an operator", text, len(text))

    families = {lt.family for _, letters, _ in terms for lt in letters}
    if len(families) > 1:
        raise ParseError("expression mixes the two alphabets", text, 0)
    fam = family or (families.pop() if families else MLV)
    if families and family and family not in families:
        raise ParseError(f"expression is not over the {family} alphabet", text, 0)

    if N is None:
        N = 1
        for _, letters, _ in terms:
            for lt in letters:
                if lt.twist is None:
                    continue
                if fam == MLV:
                    if lt.twist < 0:
                        raise ParseError("negative twist needs an explicit level", text, 0)
                    N = max(N, lt.twist + 1)
                else:
                    N = max(N, lt.twist)
    alphabet = Alphabet(fam, N)

    out = {}
    for coeff, letters, pos in terms:
        word = []
        for lt in letters:
            if lt.raw:
                if fam == MLV:
                    word.append(0 if lt.twist is None else lt.twist % N + 1)
                else:
                    if not 0 <= lt.twist <= N:
                        raise ParseError(f"x{lt.twist} is not a letter at level {N}", text, pos)
                    word.append(lt.twist)
            else:
                if fam == MLV:
                    code = lt.twist % N + 1
                else:
                    if not 1 <= lt.twist <= N:
                        raise ParseError(f"Y twist {lt.twist} outside 1..{N}", text, pos)
                    code = lt.twist
                word.extend([0] * (lt.k - 1))
                word.append(code)
        w = tuple(word)
        out[w] = out.get(w, 0) + coeff
    return NCPoly(out, alphabet)


def format_word(word: tuple, alphabet: Alphabet, generators: Optional[bool] = None) -> str:
    if not word:
        return "1"
    if generators is None:
        generators = word[-1] != 0
    if generators:
        name = "z" if alphabet.family == MLV else "Y"
        return "".join(f"{name}({k},{alphabet.twist_of(c)})" for k, c in word_to_runs(word))
    return " ".join(alphabet.letter_name(c) for c in word)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: NCPoly) -> str:
    if p.is_zero():
        return "0"
    generators = all(not w or w[-1] != 0 for w in p.terms)
    parts = []
    for idx, (w, c) in enumerate(p.sorted_items()):
        neg = c < 0
        a = -c if neg else c
        body = format_word(w, p.alphabet, generators)
        if not w:
            text = _format_coeff(a)
        elif a == 1:
            text = body
        else:
            text = f"{_format_coeff(a)}*{body}"
        if idx == 0:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append((" - " if neg else " + ") + text)
    return "".join(parts)
