from math import gcd

import pytest
from hypothesis import given

from jacnp.errors import DomainError
from jacnp.polygon import Polygon
from jacnp.semigroup import (CharSeq, SgpGens, bresinsky_check, char_to_semigroup,
                             enumerate_characteristics, merle_polygon, parse_int_list,
                             property1_gcd, reduced_characteristic, semigroup_to_char,
                             truncated_semigroup, validate_characteristic)

from strategies import characteristics, semigroups


def brute_conductor(gens):
    """Smallest c with every integer >= c in the semigroup (brute force)."""
    limit = gens[0] * gens[-1] + 1
    member = [False] * (limit + 1)
    member[0] = True
    for v in range(1, limit + 1):
        member[v] = any(g <= v and member[v - g] for g in gens)
    c = limit
    while c > 0 and member[c - 1]:
        c -= 1
    return c


def milnor_from_characteristic(beta):
    """mu = sum_k (e_{k-1} - e_k)(beta_k - 1), computed from the characteristic alone."""
    e, out = beta[0], 0
    for b in beta[1:]:
        e2 = gcd(e, b)
        out += (e - e2) * (b - 1)
        e = e2
    return out


def test_zariski_examples():
    assert char_to_semigroup(CharSeq((4, 6, 7))).gens == (4, 6, 13)
    assert semigroup_to_char(SgpGens((4, 6, 13))).entries == (4, 6, 7)
    assert char_to_semigroup(CharSeq((6, 10, 13))).gens == (6, 10, 33)
    assert char_to_semigroup(CharSeq((2, 3))).gens == (2, 3)


@pytest.mark.parametrize("seq,ok", [((4, 6, 7), True), ((4, 6, 14), False), ((4, 6, 8), False),
                                    ((1,), True), ((6, 9, 12, 13), False)])
def test_validate_characteristic(seq, ok):
    assert validate_characteristic(seq) == ok


def test_bresinsky_reports_first_failure():
    assert bresinsky_check([4, 6, 13]).valid
    r = bresinsky_check([4, 6, 14])
    assert (r.valid, r.failing_condition) == (False, 1)
    assert bresinsky_check([4, 8, 9]).failing_condition == 2  # gcd chain stalls at 4
    r = bresinsky_check([4, 6, 11])
    assert (r.failing_condition, r.k) == (3, 1)  # 2*6 = 12 > 11


def test_gcd_data():
    s = SgpGens((4, 6, 13))
    assert s.e == [4, 2, 1] and s.l == s.e
    assert s.n == [1, 2, 2]


@given(characteristics)
def test_zariski_round_trip(c):
    assert semigroup_to_char(char_to_semigroup(c)) == c


@given(characteristics)
def test_conductor_equals_milnor_number(c):
    assert brute_conductor(char_to_semigroup(c).gens) == milnor_from_characteristic(c.entries)


def test_merle_examples():
    assert str(merle_polygon(SgpGens((2, 3)))) == "{3|1}"
    assert str(merle_polygon(SgpGens((4, 6, 13)))) == "{6|1}+{13|2}"
    assert str(merle_polygon(SgpGens((6, 10, 33)))) == "{20|2}+{33|3}"
    assert merle_polygon(SgpGens((1,))) == Polygon()


@given(semigroups)
def test_merle_height_is_b0_minus_one(s):
    assert merle_polygon(s).height == s.gens[0] - 1


@given(semigroups)
def test_property1(s):
    assert property1_gcd(s) == 1


def test_reduced_characteristic_and_truncation():
    assert reduced_characteristic(CharSeq((4, 6, 7))).entries == (2, 7)
    assert truncated_semigroup(SgpGens((4, 6, 13)), 1).gens == (2, 3)
    with pytest.raises(DomainError):
        reduced_characteristic(CharSeq((2, 3)))


def test_enumeration_small_count():
    # b0 <= 4, entries <= 7, listed by hand
    got = {c.entries for c in enumerate_characteristics(4, 7)}
    expected = {(1,), (2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (3, 7),
                (4, 5), (4, 7), (4, 6, 7)}
    assert got == expected


def test_invalid_inputs():
    with pytest.raises(DomainError):
        CharSeq((4, 6, 14))
    with pytest.raises(DomainError):
        SgpGens((4, 6, 11))
    with pytest.raises(DomainError):
        parse_int_list("4,x")
    assert parse_int_list("4, 6,13") == [4, 6, 13]
