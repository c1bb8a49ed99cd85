from fractions import Fraction

import pytest
from hypothesis import given

from jacnp.criteria import (SHAPE, abrasion_criterion, gamma_criterion, gamma_sequence,
                            recover_characteristic, reduction_criterion)
from jacnp.errors import DomainError
from jacnp.polygon import Polygon, parse_polygon
from jacnp.semigroup import char_to_semigroup, merle_polygon, semigroup_to_char

from strategies import characteristics, special_integral_polygons

KUO = parse_polygon("{6|1}+{14|2}")
POS = parse_polygon("{6|1}+{13|2}")


def test_kuo_verdicts():
    red, abr, gam = reduction_criterion(KUO), abrasion_criterion(KUO), gamma_criterion(KUO)
    assert (red.passed, red.condition, red.stage) == (False, 3, 1)
    assert (abr.passed, abr.condition, abr.stage) == (False, 3, 0)
    assert (gam.passed, gam.condition) == (False, 1)
    assert gam.gamma == (4, 6, 14)
    assert "gcd(4, 6, 14) = 2" in gam.reason


def test_positive_control():
    for fn in (reduction_criterion, abrasion_criterion, gamma_criterion):
        v = fn(POS)
        assert v.passed
        assert v.characteristic.entries == (4, 6, 7)
        assert v.semigroup.gens == (4, 6, 13)
    assert recover_characteristic(POS).entries == (4, 6, 7)


def test_gamma_sequence():
    assert gamma_sequence(POS) == (4, 6, 13)
    assert gamma_sequence(parse_polygon("{20|2}+{33|3}")) == (6, 10, 33)
    with pytest.raises(DomainError):
        gamma_sequence(Polygon())


def test_empty_polygon_is_smooth_branch():
    for fn in (reduction_criterion, abrasion_criterion, gamma_criterion):
        v = fn(Polygon())
        assert v.passed and v.characteristic.entries == (1,)


@pytest.mark.parametrize("P", [
    parse_polygon("{1|2}"),                       # not special
    Polygon(POS.terms, True, False),              # not convenient
    parse_polygon("{5/2|1}"),                     # not integral
])
def test_shape_failures(P):
    assert reduction_criterion(P).condition == SHAPE
    assert abrasion_criterion(P).condition == SHAPE


def test_condition_one_height_vs_first_inclination():
    # 1 + ht = 3 is not below the inclination 3
    v = reduction_criterion(parse_polygon("{6|2}"))
    assert (v.passed, v.condition) == (False, 1)
    assert abrasion_criterion(parse_polygon("{6|2}")).condition == 1


def test_twin_polygon_rejected():
    P = parse_polygon("{8|1}+{22|2}")
    assert not reduction_criterion(P).passed
    assert not abrasion_criterion(P).passed
    assert not gamma_criterion(P).passed


def test_recover_rejects_non_branch():
    with pytest.raises(DomainError):
        recover_characteristic(KUO)


@given(characteristics)
def test_merle_polygons_pass_every_criterion(c):
    P = merle_polygon(char_to_semigroup(c))
    for fn in (reduction_criterion, abrasion_criterion, gamma_criterion):
        v = fn(P)
        assert v.passed and v.characteristic == c


@given(special_integral_polygons())
def test_reduction_and_abrasion_agree(P):
    red, abr = reduction_criterion(P), abrasion_criterion(P)
    assert red.passed == abr.passed
    if red.passed:
        assert semigroup_to_char(abr.semigroup) == red.characteristic
        assert char_to_semigroup(red.characteristic) == abr.semigroup
        assert merle_polygon(red.semigroup) == P


def test_verdict_json():
    assert reduction_criterion(POS).to_json() == {
        "pass": True, "characteristic": [4, 6, 7], "semigroup": [4, 6, 13]}
    j = gamma_criterion(KUO).to_json()
    assert j["pass"] is False and j["condition"] == 1 and j["gamma"] == ["4", "6", "14"]
