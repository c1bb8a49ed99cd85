"""Reduction and abrasion of convenient rational Newton polygons."""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .polygon import Polygon, Term


def _require(P: Polygon, op: str):
    if not P.convenient:
        raise DomainError(f"{op} is only defined for convenient polygons")
    if P.r < 2:
        raise DomainError(f"{op} needs at least two compact edges, got {P.r}")


def reduce(P: Polygon) -> Polygon:
    """Drop the first edge {L1|M1} and rescale the others by 1/(1 + M1).

    L'_i = L_{i+1} - L1/(1+M1) * M_{i+1},  M'_i = M_{i+1}/(1+M1).
    """
    _require(P, "reduction")
    L1, M1 = P.terms[0]
    s = 1 + M1
    terms = tuple(Term(t.L - L1 / s * t.M, t.M / s) for t in P.terms[1:])
    # inclinations shift by the same constant, so the order is preserved
    return Polygon(terms, True, True)


def abrade(P: Polygon) -> Polygon:
    """Drop the last edge and scale every remaining L by (1+M1+..+M_{r-1})/(1+M1+..+M_r)."""
    _require(P, "abrasion")
    H = P.height
    factor = (1 + H - P.terms[-1].M) / (1 + H)
    return Polygon(tuple(Term(t.L * factor, t.M) for t in P.terms[:-1]), True, True)


def unreduce(R: Polygon, first) -> Polygon:
    """Inverse of `reduce` given the first term (L1, M1) of the original polygon."""
    L1, M1 = (Fraction(v) for v in first)
    s = 1 + M1
    terms = [(L1, M1)] + [(t.L + L1 * t.M, t.M * s) for t in R.terms]
    return Polygon.from_terms(terms)


OPERATORS = {"reduce": reduce, "abrade": abrade}


def iterate(op, P: Polygon, i: int) -> Polygon:
    """i-fold application of ``op`` ('reduce', 'abrade' or the function itself)."""
    fn = OPERATORS[op] if isinstance(op, str) else op
    if i < 0 or (i > 0 and i > P.r - 1):
        raise DomainError(f"cannot apply the operator {i} times to a polygon with {P.r} edges")
    for _ in range(i):
        P = fn(P)
    return P
