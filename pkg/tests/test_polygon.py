from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jacnp.errors import DomainError, ParseError
from jacnp.polygon import (Polygon, classify, format_polygon, minkowski_sum, parse_polygon,
                           polygon_from_json, polygon_from_support, polygon_to_json, read_polygon)

from strategies import polygons

KUO = Polygon.from_terms([(6, 1), (14, 2)])


def test_newton_polygon_from_support():
    # support of y^4 - 2x^3y^2 + x^6 - x^7
    P = polygon_from_support([(0, 4), (3, 2), (6, 0), (7, 0)])
    assert P == Polygon.from_terms([(6, 4)])
    assert P.vertices() == [(0, 4), (6, 0)]


def test_support_hull_skips_points_above():
    P = polygon_from_support([(0, 3), (1, 1), (4, 0), (2, 2), (5, 5)])
    assert format_polygon(P) == "{1|2}+{3|1}"


def test_non_convenient_support():
    P = polygon_from_support([(1, 1), (3, 0)])
    assert not P.touches_vertical and P.touches_horizontal
    assert not P.convenient
    Q = polygon_from_support([(2, 3)])
    assert Q.r == 0 and not Q.convenient


def test_canonical_form_merges_equal_inclinations():
    P = Polygon.from_terms([(14, 2), (6, 1), (7, 1)])
    assert format_polygon(P) == "{6|1}+{21|3}"
    assert P.height == 4 and P.width == 27


def test_rejects_degenerate_terms():
    with pytest.raises(DomainError):
        Polygon.from_terms([(0, 1)])


def test_classification_of_kuo_polygon():
    c = classify(KUO)
    assert (c.height, c.integral, c.convenient, c.special) == (3, True, True, True)
    assert not classify(Polygon.from_terms([(1, 2)])).special
    assert classify(Polygon.from_terms([(3, 2)])).integral


def test_integrality_depends_on_vertices():
    assert not Polygon.from_terms([(Fraction(3, 2), 1)]).is_integral()
    assert Polygon.from_terms([(3, 2), (8, 2)]).is_integral()


@given(polygons(rational=True), polygons(rational=True))
def test_minkowski_sum_is_concatenation(P, Q):
    S = minkowski_sum(P, Q)
    assert S.height == P.height + Q.height
    assert S.width == P.width + Q.width
    assert S == Q + P


@given(polygons(rational=True))
def test_text_round_trip(P):
    assert parse_polygon(format_polygon(P)) == P


@given(polygons(rational=True), st.booleans(), st.booleans())
def test_json_round_trip(P, h, v):
    P = Polygon(P.terms, h, v)
    assert polygon_from_json(polygon_to_json(P)) == P


def test_read_polygon_accepts_both_forms():
    assert read_polygon("{6|1} + {14|2}") == KUO
    assert read_polygon('{"terms": [["6", "1"], ["14", "2"]], "horizontal": true, "vertical": true}') == KUO
    assert read_polygon("0") == Polygon()


@pytest.mark.parametrize("text", ["{6|1}+", "{6,1}", "{6|1}{7|1}", "{1/0|1}", "{-1|2}"])
def test_polygon_parse_errors(text):
    with pytest.raises(ParseError):
        parse_polygon(text)


def test_polygon_json_errors():
    with pytest.raises(ParseError):
        read_polygon('{"terms": [["a"')
