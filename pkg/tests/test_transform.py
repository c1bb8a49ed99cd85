from fractions import Fraction

import pytest
from hypothesis import assume, given

from jacnp.errors import DomainError
from jacnp.polygon import Polygon, parse_polygon
from jacnp.semigroup import (CharSeq, char_to_semigroup, merle_polygon, reduced_characteristic,
                             truncated_semigroup)
from jacnp.transform import abrade, iterate, reduce, unreduce

from strategies import characteristics, polygons, special_integral_polygons


def test_kuo_reduction():
    assert str(reduce(parse_polygon("{6|1}+{14|2}"))) == "{8|1}"


def test_positive_control_operators():
    P = parse_polygon("{6|1}+{13|2}")
    assert str(reduce(P)) == "{7|1}"
    assert str(abrade(P)) == "{3|1}"


def test_operators_need_two_convenient_edges():
    with pytest.raises(DomainError):
        reduce(parse_polygon("{3|1}"))
    with pytest.raises(DomainError):
        abrade(Polygon(parse_polygon("{6|1}+{13|2}").terms, True, False))


def test_iterate_bounds():
    P = parse_polygon("{6|1}+{13|2}")
    assert iterate("reduce", P, 0) == P
    assert iterate("abrade", P, 1) == abrade(P)
    with pytest.raises(DomainError):
        iterate("reduce", P, 2)


@given(polygons(rational=True))
def test_unreduce_inverts_reduce(P):
    assume(P.r >= 2)
    assert unreduce(reduce(P), P.terms[0]) == P


@given(polygons(rational=True))
def test_operator_heights(P):
    assume(P.r >= 2)
    H, M1, Mr = P.height, P.terms[0].M, P.terms[-1].M
    assert reduce(P).height == (H - M1) / (1 + M1)
    assert abrade(P).height == H - Mr
    assert reduce(P).r == abrade(P).r == P.r - 1


@given(special_integral_polygons())
def test_reduce_shifts_inclinations_uniformly(P):
    assume(P.r >= 2)
    L1, M1 = P.terms[0]
    shift = L1 / (1 + M1)
    for old, new in zip(P.terms[1:], reduce(P).terms):
        assert new.L / new.M == (old.L - shift * old.M) / (old.M / (1 + M1))


@given(characteristics)
def test_reduce_merle_coherence(c):
    assume(c.g >= 2)
    lhs = reduce(merle_polygon(char_to_semigroup(c)))
    rhs = merle_polygon(char_to_semigroup(reduced_characteristic(c)))
    assert lhs == rhs


@given(characteristics)
def test_abrade_merle_coherence(c):
    assume(c.g >= 2)
    s = char_to_semigroup(c)
    assert abrade(merle_polygon(s)) == merle_polygon(truncated_semigroup(s, c.g - 1))
