import json
from fractions import Fraction
from itertools import combinations
from math import inf

import pytest
from hypothesis import given, strategies as st

from jacnp.contact import (CycloNum, FracSeries, build_tree, contact_order, cyclotomic_poly,
                           dump_roots, euler_phi, load_roots, tree_polygon, ultrametric_violations)
from jacnp.errors import DomainError, ParseError
from jacnp.jacobian import PolarInvariants

from conftest import ROOTS_DIR


def series(*terms, trunc=inf):
    return FracSeries(tuple((Fraction(e), c if isinstance(c, CycloNum) else CycloNum.rational(c))
                            for e, c in terms), trunc)


# -- cyclotomic numbers -------------------------------------------------------------

def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert [euler_phi(n) for n in (1, 2, 5, 8, 9, 10)] == [1, 1, 4, 4, 6, 4]


@given(st.integers(1, 12), st.integers(-20, 20), st.integers(-20, 20))
def test_roots_of_unity_multiply(n, a, b):
    z = CycloNum.root_of_unity
    assert (z(n, a) * z(n, b)).same_as(z(n, a + b))
    assert (z(n, 1) ** n).same_as(CycloNum.rational(1, n))


@given(st.integers(2, 12))
def test_sum_of_primitive_powers(n):
    """1 + z + ... + z^(n-1) = 0 for n > 1."""
    total = CycloNum.rational(0, n)
    for k in range(n):
        total = total + CycloNum.root_of_unity(n, k)
    assert not total


def test_embedding_between_fields():
    w = CycloNum.root_of_unity(3)
    assert w.embed(6).same_as(CycloNum.root_of_unity(6, 2))
    assert (w * CycloNum.root_of_unity(2)).same_as(CycloNum.root_of_unity(6, 5))
    with pytest.raises(DomainError):
        w.embed(4)


# -- contacts and trees ---------------------------------------------------------------

def test_contact_order():
    a = series((2, 1), (3, 1))
    b = series((2, 1), (5, 2))
    assert contact_order(a, b) == 3
    assert contact_order(a, series((Fraction(3, 2), 1))) == Fraction(3, 2)
    assert contact_order(series((2, 1), trunc=3), series((2, 1), trunc=4)) == inf


def test_two_roots_with_contact_two():
    t = build_tree([series((2, 1)), series((2, 2))])
    (node,) = t.internal_nodes()
    assert (node.h, node.t, node.q) == (2, 2, 4)
    assert str(tree_polygon(t)) == "{4|1}"


def test_single_root_has_no_internal_node():
    t = build_tree([series((2, 1))])
    assert t.internal_nodes() == [] and tree_polygon(t).r == 0


def test_duplicate_and_ambiguous_roots_rejected():
    with pytest.raises(DomainError):
        build_tree([series((2, 1)), series((2, 1))])
    with pytest.raises(DomainError):
        build_tree([series((2, 1), trunc=3), series((2, 1), (4, 1))])


def test_tree_pair_f():
    t = build_tree(load_roots(ROOTS_DIR / "tree_pair_f.json"))
    nodes = [(n.h, n.t, n.q) for n in t.internal_nodes()]
    assert nodes == [(Fraction(5, 3), 4, 10), (2, 3, 11)]
    assert str(PolarInvariants.from_polygon(tree_polygon(t))) == "<10:3, 11:2>"


def test_tree_pair_g():
    t = build_tree(load_roots(ROOTS_DIR / "tree_pair_g.json"))
    assert [(n.h, n.t, n.q) for n in t.internal_nodes()] == \
        [(Fraction(5, 3), 3, 10)] + [(Fraction(13, 6), 2, 11)] * 3
    assert str(tree_polygon(t)) == "{20|2}+{33|3}"


@st.composite
def root_sets(draw):
    n = draw(st.integers(2, 7))
    order = draw(st.sampled_from([1, 2, 3, 4, 6]))
    exps = sorted(draw(st.sets(st.fractions(Fraction(1), Fraction(4), max_denominator=6)
                               .filter(lambda q: q > 0), min_size=1, max_size=3)))
    roots = set()
    for _ in range(n):
        terms = tuple((e, CycloNum.root_of_unity(order, draw(st.integers(0, order - 1))))
                      for e in exps if draw(st.booleans()))
        roots.add(FracSeries(terms))
    return list(roots)


@given(root_sets())
def test_tree_laws(roots):
    if len(roots) < 2:
        return
    t = build_tree(roots)
    assert ultrametric_violations(t) == []
    nodes = t.internal_nodes()
    assert sum(B.t - 1 for B in nodes) == len(roots) - 1
    for B in nodes:
        for child in B.children:
            if not isinstance(child, int):
                assert child.h > B.h
        for a, b in combinations(B.members, 2):
            assert t.contacts[(a, b)] >= B.h
    P = tree_polygon(t)
    assert P.height == len(roots) - 1


def test_roots_file_round_trip(tmp_path):
    roots = load_roots(ROOTS_DIR / "tree_pair_g.json")
    text = json.dumps(dump_roots(roots))
    assert load_roots(text) == roots


@pytest.mark.parametrize("text", [
    '{"cyclotomic_order": 3, "roots": [{"terms": [{"exp": "2", "coeff": ["1"]}]}]}',
    '{"roots": [{"terms": [{"exp": "x", "coeff": ["1"]}]}]}',
    '{"roots": [',
])
def test_malformed_roots_files(text):
    with pytest.raises(DomainError):
        load_roots(text)
