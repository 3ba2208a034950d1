import itertools
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mlvds.core import IndexVector, NCPoly, level_alphabet, mlv_alphabet

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def gen_word(N, ks, twists, coeff=1):
    return NCPoly.generators(IndexVector(tuple(ks), tuple(a % N for a in twists)), mlv_alphabet(N), coeff)


def lvl_word(N, ks, twists, coeff=1):
    return NCPoly.generators(IndexVector(tuple(ks), tuple(twists)), level_alphabet(N), coeff)


def compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def generator_words(N, max_weight, max_depth, family="mlv", admissible=False):
    """Every generator word with weight <= max_weight and depth in 1..max_depth."""
    out = []
    twist_range = range(N) if family == "mlv" else range(1, N + 1)
    make = gen_word if family == "mlv" else lvl_word
    for w in range(1, max_weight + 1):
        for d in range(1, min(max_depth, w) + 1):
            for ks in compositions(w, d):
                for tw in itertools.product(twist_range, repeat=d):
                    if admissible and family == "mlv" and ks[0] == 1 and tw[0] == 0:
                        continue
                    if admissible and family != "mlv" and ks[0] == 1:
                        continue
                    out.append(make(N, ks, tw))
    return out


levels = st.integers(min_value=1, max_value=3)


@st.composite
def index_vectors(draw, N, max_depth=3, max_k=3, family="mlv", admissible=False):
    d = draw(st.integers(min_value=1, max_value=max_depth))
    ks = draw(st.lists(st.integers(1, max_k), min_size=d, max_size=d))
    lo, hi = (0, N - 1) if family == "mlv" else (1, N)
    tw = draw(st.lists(st.integers(lo, hi), min_size=d, max_size=d))
    if admissible:
        if family == "mlv" and ks[0] == 1 and tw[0] == 0:
            ks[0] = 2
        if family != "mlv" and ks[0] == 1:
            ks[0] = 2
    return IndexVector(tuple(ks), tuple(tw))


@st.composite
def polys(draw, N, family="mlv", max_terms=3, max_depth=3, max_k=3, admissible=False):
    al = mlv_alphabet(N) if family == "mlv" else level_alphabet(N)
    out = NCPoly.zero(al)
    for _ in range(draw(st.integers(0, max_terms))):
        iv = draw(index_vectors(N, max_depth, max_k, family, admissible))
        c = Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 4)))
        out = out + NCPoly.generators(iv, al, c)
    return out


@pytest.fixture
def mlv3():
    return mlv_alphabet(3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
