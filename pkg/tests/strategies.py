"""Hypothesis strategies shared by the polygon-level suites."""

from fractions import Fraction

from hypothesis import strategies as st

from jacnp.polygon import Polygon
from jacnp.semigroup import CharSeq, char_to_semigroup, enumerate_characteristics

CHARACTERISTICS = list(enumerate_characteristics(12, 40))


@st.composite
def polygons(draw, max_r=4, max_L=40, max_M=6, rational=False):
    r = draw(st.integers(0, max_r))
    terms = []
    for _ in range(r):
        L = draw(st.integers(1, max_L))
        M = draw(st.integers(1, max_M))
        if rational:
            L = Fraction(L, draw(st.integers(1, 3)))
        terms.append((L, M))
    return Polygon.from_terms(terms)


@st.composite
def special_integral_polygons(draw, max_r=4, max_L=200, max_M=12):
    """Special convenient integral polygons: strictly increasing inclinations > 1."""
    r = draw(st.integers(1, max_r))
    terms = []
    last = Fraction(1)
    for _ in range(r):
        M = draw(st.integers(1, max_M))
        lo = int(last * M) + 1
        if lo > max_L:
            break
        L = draw(st.integers(lo, max_L))
        terms.append((L, M))
        last = Fraction(L, M)
    if not terms:
        terms = [(2, 1)]
    return Polygon.from_terms(terms)


characteristics = st.sampled_from(CHARACTERISTICS)
semigroups = characteristics.map(char_to_semigroup)
