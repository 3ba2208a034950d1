import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import generator_words, levels, lvl_word, polys
from mlvds.core import DomainError, IndexVector, NCPoly, classify, level_alphabet
from mlvds.cyclotomic import Cyclo
from mlvds.evaluator import EvalConfig, eval_level_poly
from mlvds.grammar import format_poly, parse_poly
from mlvds.leveln import expand_to_mlv, expansion_coefficients, fds_N_element, map_J, map_J_inv, shuffle_N, stuffle_N


def test_stuffle_N_examples():
    p = stuffle_N(lvl_word(2, [2], [1]), lvl_word(2, [3], [1]))
    assert p == lvl_word(2, [2, 3], [1, 1]) + lvl_word(2, [3, 2], [1, 1]) + lvl_word(2, [5], [1], 2)
    q = stuffle_N(lvl_word(3, [2], [1]), lvl_word(3, [3], [2]))
    assert q == lvl_word(3, [2, 3], [1, 2]) + lvl_word(3, [3, 2], [2, 1])
    w = lvl_word(3, [2, 1], [3, 2])
    assert stuffle_N(NCPoly.one(level_alphabet(3)), w) == w


def test_shuffle_N_examples():
    assert format_poly(shuffle_N(parse_poly("x0", 1, "level"), parse_poly("x1", 1, "level"))) == "x0 x1 + x1 x0"
    p = shuffle_N(lvl_word(2, [2], [1]), lvl_word(2, [1], [2]))
    assert p == lvl_word(2, [2, 1], [1, 2]) + lvl_word(2, [2, 1], [2, 1]) + lvl_word(2, [1, 2], [2, 1])
    w = lvl_word(2, [2], [2])
    assert shuffle_N(w, NCPoly.one(level_alphabet(2))) == w


@pytest.mark.parametrize("N", [1, 2, 3])
def test_products_commutative_associative_grid(N):
    words = generator_words(N, 4 if N < 3 else 3, 3, family="level")
    rng = random.Random(N)
    for u, v in itertools.product(words, repeat=2):
        assert stuffle_N(u, v) == stuffle_N(v, u)
        assert shuffle_N(u, v) == shuffle_N(v, u)
    for _ in range(60):
        u, v, w = (rng.choice(words) for _ in range(3))
        assert stuffle_N(stuffle_N(u, v), w) == stuffle_N(u, stuffle_N(v, w))
        assert shuffle_N(shuffle_N(u, v), w) == shuffle_N(u, shuffle_N(v, w))


@given(levels.flatmap(lambda N: st.tuples(polys(N, "level", admissible=True), polys(N, "level", admissible=True))))
@settings(max_examples=30)
def test_U0_closed(data):
    p, q = data
    assert classify(stuffle_N(p, q)).in_a0
    assert classify(shuffle_N(p, q)).in_a0


def test_map_J_examples():
    assert map_J(lvl_word(3, [2, 1], [1, 2])) == lvl_word(3, [2, 1], [2, 2])
    for a in (1, 2, 3):
        assert map_J(lvl_word(3, [4], [a])) == lvl_word(3, [4], [a])
    # suffix sums: (1+2, 2) at level 2 -> (1, 2)
    assert map_J_inv(lvl_word(2, [2, 1], [1, 2])) == lvl_word(2, [2, 1], [1, 2])
    assert map_J_inv(lvl_word(3, [2, 1], [1, 1])) == lvl_word(3, [2, 1], [2, 1])
    with pytest.raises(DomainError):
        map_J(parse_poly("x1 x0", 2, "level"))


@pytest.mark.parametrize("N", [1, 2, 3])
def test_J_bijective_exhaustive(N):
    words = generator_words(N, 6, 6, family="level")
    for w in words:
        assert map_J_inv(map_J(w)) == w
        assert map_J(map_J_inv(w)) == w


def test_fds_N_examples():
    one = NCPoly.one(level_alphabet(2))
    w = lvl_word(2, [2], [2])
    assert fds_N_element(w, one).is_zero()
    el = fds_N_element(w, w)
    assert classify(el).in_a0
    v = eval_level_poly(el, EvalConfig(2))
    assert abs(v) < 1e-6


@pytest.mark.parametrize("N", [1, 2, 3])
def test_fds_N_depth_one_pairs(N):
    for k, l in itertools.product(range(2, 5), repeat=2):
        if k + l > 6:
            continue
        for a, b in itertools.product(range(1, N + 1), repeat=2):
            el = fds_N_element(lvl_word(N, [k], [a]), lvl_word(N, [l], [b]))
            v = eval_level_poly(el, EvalConfig(N))
            assert abs(v) < 1e-6 and abs(v) <= v.err + 1e-15


def test_expansion_shapes():
    (t,) = expand_to_mlv(IndexVector((3,), (1,)), 1)
    assert t.power == 0 and t.index == IndexVector((3,), (0,))
    terms = expand_to_mlv(IndexVector((3, 2), (1, 2)), 3)
    assert len(terms) == 9
    powers = {t.index.twists: t.power for t in terms}
    assert powers[(1, 0)] == (-1) % 3
    assert powers[(2, 1)] == (-2 * 1 - 2) % 3
    # level 2: +-1 coefficients
    coeffs = expansion_coefficients(IndexVector((3, 2), (1, 2)), 2)
    assert len(coeffs) == 4
    assert all(c in (Cyclo.rational(2, 1), Cyclo.rational(2, -1)) for c in coeffs.values())
    with pytest.raises(DomainError):
        expand_to_mlv(IndexVector((1, 2), (1, 1)), 2)


@given(levels.flatmap(lambda N: st.tuples(polys(N, "level", max_terms=2, max_depth=2, admissible=True), polys(N, "level", max_terms=2, max_depth=2, admissible=True))))
@settings(max_examples=20)
def test_homomorphisms_numeric(data):
    p, q = data
    N = p.alphabet.N
    cfg = EvalConfig(N)
    lhs = eval_level_poly(stuffle_N(p, q), cfg)
    rhs = eval_level_poly(p, cfg) * eval_level_poly(q, cfg)
    assert abs(lhs - rhs) <= lhs.err + rhs.err + 1e-12
    sh = eval_level_poly(map_J_inv(shuffle_N(p, q)), cfg)
    prod = eval_level_poly(map_J_inv(p), cfg) * eval_level_poly(map_J_inv(q), cfg)
    assert abs(sh - prod) <= sh.err + prod.err + 1e-12
