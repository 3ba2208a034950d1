import itertools
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gen_word, generator_words, levels, polys
from mlvds.core import DomainError, NCPoly, Subspace, classify, mlv_alphabet
from mlvds.evaluator import EvalConfig, eval_poly
from mlvds.grammar import format_poly, parse_poly
from mlvds.mlv import fds_element, map_I, map_I_inv, rds_element, reg_shuffle, reg_star, shuffle, stuffle


# independent oracles -------------------------------------------------------


def quasi_shuffle_runs(A, B, N):
    """Stuffle of two generator sequences via order-preserving merges into slots.

    Each slot takes one element of A, one of B, or one of each (merged).
    """
    out = Counter()
    n, m = len(A), len(B)
    for slots in range(max(n, m), n + m + 1):
        for sa in itertools.combinations(range(slots), n):
            for sb in itertools.combinations(range(slots), m):
                if set(sa) | set(sb) != set(range(slots)):
                    continue
                word = []
                ia = dict(zip(sa, A))
                ib = dict(zip(sb, B))
                for s in range(slots):
                    if s in ia and s in ib:
                        word.append((ia[s][0] + ib[s][0], (ia[s][1] + ib[s][1]) % N))
                    else:
                        word.append(ia.get(s) or ib.get(s))
                out[tuple(word)] += 1
    return out


def shuffle_by_positions(u, v):
    out = Counter()
    n = len(u) + len(v)
    for pos in itertools.combinations(range(n), len(u)):
        w, iu, iv = [], iter(u), iter(v)
        ps = set(pos)
        for i in range(n):
            w.append(next(iu) if i in ps else next(iv))
        out[tuple(w)] += 1
    return out


def runs_poly(N, counts):
    out = NCPoly.zero(mlv_alphabet(N))
    for runs, c in counts.items():
        out = out + gen_word(N, [k for k, _ in runs], [a for _, a in runs], c)
    return out


def as_runs(p):
    (w,) = p.terms
    runs, k = [], 1
    for c in w:
        if c == 0:
            k += 1
        else:
            runs.append((k, c - 1))
            k = 1
    return tuple(runs)


# products ------------------------------------------------------------------


def test_stuffle_examples():
    N = 3
    p = stuffle(gen_word(N, [2], [1]), gen_word(N, [3], [2]))
    assert format_poly(p) == "z(2,1)z(3,2) + z(3,2)z(2,1) + z(5,0)"
    w = gen_word(N, [2, 1], [1, 2])
    assert stuffle(NCPoly.one(mlv_alphabet(N)), w) == w == stuffle(w, NCPoly.one(mlv_alphabet(N)))
    q = stuffle(gen_word(1, [1], [0]), gen_word(1, [2, 1], [0, 0]))
    assert len(q) == 4 and sum(q.terms.values()) == 5


def test_shuffle_examples():
    p = shuffle(parse_poly("x", 2), parse_poly("y1", 2))
    assert format_poly(p) == "x y1 + y1 x"
    for a, b in [(0, 1), (1, 1), (2, 0)]:
        q = shuffle(gen_word(3, [2], [a]), gen_word(3, [1], [b]))
        expect = gen_word(3, [2, 1], [a, b]) + gen_word(3, [2, 1], [b, a]) + gen_word(3, [1, 2], [b, a])
        assert q == expect
        assert sum(q.terms.values()) == 3


@pytest.mark.parametrize("N", [1, 2, 3])
def test_stuffle_matches_quasi_shuffle_oracle(N):
    words = generator_words(N, 4, 3)
    for u, v in itertools.product(words[:: max(1, len(words) // 25)], repeat=2):
        assert stuffle(u, v) == runs_poly(N, quasi_shuffle_runs(as_runs(u), as_runs(v), N))


@pytest.mark.parametrize("N", [1, 2])
def test_shuffle_matches_position_oracle(N):
    words = generator_words(N, 4, 3)
    al = mlv_alphabet(N)
    for u, v in itertools.product(words[::3], repeat=2):
        (wu,), (wv,) = u.terms, v.terms
        expect = NCPoly(dict(shuffle_by_positions(wu, wv)), al)
        assert shuffle(u, v) == expect


@given(levels.flatmap(lambda N: st.tuples(polys(N, max_terms=2), polys(N, max_terms=2), polys(N, max_terms=2))))
@settings(max_examples=40)
def test_products_commutative_associative_random(data):
    p, q, r = data
    for prod in (stuffle, shuffle):
        assert prod(p, q) == prod(q, p)
        assert prod(prod(p, q), r) == prod(p, prod(q, r))


@given(levels.flatmap(lambda N: st.tuples(polys(N, admissible=True), polys(N, admissible=True))))
@settings(max_examples=40)
def test_a0_closed_under_products(data):
    p, q = data
    assert classify(stuffle(p, q)).in_a0
    assert classify(shuffle(p, q)).in_a0


def test_stuffle_requires_a1():
    with pytest.raises(DomainError):
        stuffle(parse_poly("y1 x", 2), parse_poly("y1", 2))


# maps ----------------------------------------------------------------------


def test_map_I_examples():
    assert map_I(gen_word(3, [2, 3], [1, 1])) == gen_word(3, [2, 3], [1, 2])
    w = gen_word(3, [4], [2])
    assert map_I(w) == w
    with pytest.raises(DomainError):
        map_I(parse_poly("y1 x", 2))


@given(levels.flatmap(lambda N: polys(N, max_terms=4, max_depth=4, max_k=2)))
def test_map_I_inverse_random(p):
    assert map_I_inv(map_I(p)) == p
    assert map_I(map_I_inv(p)) == p


@pytest.mark.parametrize("N", [1, 2, 3])
def test_map_I_bijective_exhaustive(N):
    words = generator_words(N, 8 if N < 3 else 6, 4)
    images = set()
    for w in words:
        img = map_I(w)
        assert map_I_inv(img) == w
        images.add(img)
    assert len(images) == len(words)


# regularization ------------------------------------------------------------


def test_reg_examples():
    y0 = parse_poly("y0", 1)
    r = reg_star(y0)
    assert r.constant.is_zero() and r.coefficients[1] == NCPoly.one(mlv_alphabet(1))
    assert str(r) == "deg0: 0, deg1: 1"
    w = gen_word(2, [2, 1], [0, 1])
    assert reg_star(w).coefficients == (w,)
    assert reg_shuffle(w).coefficients == (w,)
    # y0 sh z(2,0) = y0 x y0 + 2 x y0 y0, so y0 z(2,0) = y0 sh z(2,0) - 2 z(2,0)z(1,0)
    r = reg_shuffle(parse_poly("y0 x y0", 1))
    assert r.constant == gen_word(1, [2, 1], [0, 0], -2)
    assert r.coefficients[1] == gen_word(1, [2], [0])


@pytest.mark.parametrize("N", [1, 2, 3])
def test_reg_reconstruction(N):
    for w in generator_words(N, 5 if N < 3 else 4, 5):
        for reg in (reg_star, reg_shuffle):
            r = reg(w)
            assert r.reconstruct() == w
            assert all(classify(c).in_a0 for c in r.coefficients)


@given(levels.flatmap(lambda N: polys(N, max_terms=3, max_k=2)))
def test_reg_reconstruction_random(p):
    for reg in (reg_star, reg_shuffle):
        assert reg(p).reconstruct() == p


def test_reg_is_a_morphism_for_powers_of_y0():
    y0 = parse_poly("y0", 2)
    w = gen_word(2, [2], [1])
    for reg, prod in ((reg_star, stuffle), (reg_shuffle, shuffle)):
        r = reg(prod(w, prod(y0, y0)))
        assert r.coefficients[2] == w and not r.coefficients[0] and not r.coefficients[1]
        assert r.reconstruct() == prod(w, prod(y0, y0))


# double shuffle elements ---------------------------------------------------


def test_fds_trivial_and_kernel():
    one = NCPoly.one(mlv_alphabet(2))
    w = gen_word(2, [2], [1])
    assert fds_element(w, one).is_zero()
    assert fds_element(w, one, "stuffle").is_zero()
    el = fds_element(gen_word(1, [2], [0]), gen_word(1, [2], [0]))
    assert classify(el) is Subspace.A0
    v = eval_poly(el, EvalConfig(1), kind="shuffle")
    assert abs(v) <= v.err < 1e-8


@pytest.mark.parametrize("N", [1, 2])
def test_fds_depth_one_pairs(N):
    for k, l in itertools.product(range(2, 5), repeat=2):
        for a, b in itertools.product(range(N), repeat=2):
            el = fds_element(gen_word(N, [k], [a]), gen_word(N, [l], [b]), "stuffle")
            v = eval_poly(el, EvalConfig(N))
            assert abs(v) < 1e-6 and abs(v) <= v.err


def test_rds_examples():
    y0 = parse_poly("y0", 1)
    el = rds_element(gen_word(1, [2], [0]), y0)
    assert el == gen_word(1, [3], [0]) - gen_word(1, [2, 1], [0, 0])
    assert abs(eval_poly(el, EvalConfig(1), kind="shuffle")) < 1e-8
    el2 = rds_element(gen_word(2, [2], [1]), parse_poly("y0", 2), "stuffle")
    assert abs(eval_poly(el2, EvalConfig(2))) < 1e-6
    w0, w1 = gen_word(2, [2], [1]), gen_word(2, [3], [0])
    assert rds_element(w0, w1) == fds_element(w0, w1).scale(-1)


@given(levels.flatmap(lambda N: st.tuples(polys(N, max_terms=2, max_depth=2, admissible=True), polys(N, max_terms=2, max_depth=2, admissible=True))))
@settings(max_examples=25)
def test_stuffle_homomorphism_numeric(data):
    p, q = data
    cfg = EvalConfig(p.alphabet.N)
    lhs = eval_poly(stuffle(p, q), cfg)
    rhs = eval_poly(p, cfg) * eval_poly(q, cfg)
    assert abs(lhs - rhs) <= lhs.err + rhs.err + 1e-12
