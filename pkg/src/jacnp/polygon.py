"""Rational Newton polygons in canonical (elementary-sum) form.

A polygon is kept intrinsically: the list of compact edges as elementary
terms ``{L|M}`` sorted by strictly increasing inclination ``L/M``, plus two
flags telling whether it meets the horizontal and the vertical axis.  When
the polygon meets the vertical axis its vertices are anchored at
``(0, height)``; otherwise only their relative position is meaningful.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import DomainError, ParseError


class Term(NamedTuple):
    """Elementary polygon {L|M}: one edge from (0, M) to (L, 0)."""

    L: Fraction
    M: Fraction

    @property
    def inclination(self) -> Fraction:
        return self.L / self.M


def _q(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _canonical(terms: Iterable) -> tuple[Term, ...]:
    merged: dict[Fraction, list[Fraction]] = {}
    for L, M in terms:
        L, M = _q(L), _q(M)
        if L <= 0 or M <= 0:
            raise DomainError(f"elementary term needs L > 0 and M > 0, got {{{L}|{M}}}")
        acc = merged.setdefault(L / M, [Fraction(0), Fraction(0)])
        acc[0] += L
        acc[1] += M
    return tuple(Term(L, M) for _, (L, M) in sorted(merged.items()))


@dataclass(frozen=True)
class Polygon:
    terms: tuple[Term, ...] = ()
    touches_horizontal: bool = True
    touches_vertical: bool = True

    @classmethod
    def from_terms(cls, terms, horizontal=True, vertical=True) -> Polygon:
        return cls(_canonical(terms), bool(horizontal), bool(vertical))

    @property
    def r(self) -> int:
        return len(self.terms)

    @property
    def height(self) -> Fraction:
        return sum((t.M for t in self.terms), Fraction(0))

    @property
    def width(self) -> Fraction:
        return sum((t.L for t in self.terms), Fraction(0))

    @property
    def convenient(self) -> bool:
        return self.touches_horizontal and self.touches_vertical

    def inclinations(self) -> list[Fraction]:
        return [t.inclination for t in self.terms]

    def vertices(self) -> list[tuple[Fraction, Fraction]]:
        x, y = Fraction(0), self.height
        out = [(x, y)]
        for t in self.terms:
            x, y = x + t.L, y - t.M
            out.append((x, y))
        return out

    def is_integral(self) -> bool:
        return all(a.denominator == 1 and b.denominator == 1 for a, b in self.vertices())

    def __add__(self, other: Polygon) -> Polygon:
        return minkowski_sum(self, other)

    def __str__(self) -> str:
        return format_polygon(self)


@dataclass(frozen=True)
class PolygonClass:
    height: Fraction
    integral: bool
    convenient: bool
    special: bool


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polygon_from_support(points) -> Polygon:
    """Lower-left boundary of conv(points + R_+^2)."""
    pts = {(_q(a), _q(b)) for a, b in points}
    if not pts:
        raise DomainError("empty support")
    if any(a < 0 or b < 0 for a, b in pts):
        raise DomainError("support points must have non-negative coordinates")
    x0 = min(a for a, _ in pts)
    y_top = min(b for a, b in pts if a == x0)
    y_min = min(b for _, b in pts)
    x_end = min(a for a, b in pts if b == y_min)
    lowest = {}
    for a, b in pts:
        if x0 <= a <= x_end and b <= y_top and b < lowest.get(a, b + 1):
            lowest[a] = b
    hull: list[tuple[Fraction, Fraction]] = []
    for p in sorted(lowest.items()):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    terms = [(b[0] - a[0], a[1] - b[1]) for a, b in zip(hull, hull[1:])]
    return Polygon.from_terms(terms, horizontal=y_min == 0, vertical=x0 == 0)


def canonical_terms(P: Polygon) -> list[tuple[Fraction, Fraction]]:
    return [(t.L, t.M) for t in P.terms]


def minkowski_sum(P: Polygon, Q: Polygon) -> Polygon:
    return Polygon.from_terms(
        list(P.terms) + list(Q.terms),
        horizontal=P.touches_horizontal and Q.touches_horizontal,
        vertical=P.touches_vertical and Q.touches_vertical,
    )


def classify(P: Polygon) -> PolygonClass:
    return PolygonClass(
        height=P.height,
        integral=P.is_integral(),
        convenient=P.convenient,
        special=P.touches_vertical and all(q > 1 for q in P.inclinations()),
    )


# -- text and JSON forms ------------------------------------------------------

def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_polygon(P: Polygon) -> str:
    """Text form ``{6|1}+{14|2}``; the polygon without compact edges prints as ``0``."""
    if not P.terms:
        return "0"
    return "+".join(f"{{{_fmt(t.L)}|{_fmt(t.M)}}}" for t in P.terms)


_TERM = re.compile(r"\{\s*(\d+(?:/\d+)?)\s*\|\s*(\d+(?:/\d+)?)\s*\}")


def parse_polygon(text: str) -> Polygon:
    """Parse the text form; the result is taken to be convenient."""
    s = text.strip()
    if s in ("0", "{}"):
        return Polygon()
    terms = []
    pos = 0
    while True:
        m = _TERM.match(s, pos)
        if not m:
            raise ParseError("expected an elementary term '{L|M}'", pos, text)
        try:
            terms.append((Fraction(m.group(1)), Fraction(m.group(2))))
        except ZeroDivisionError:
            raise ParseError("zero denominator", pos, text) from None
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            break
        if s[pos] != "+":
            raise ParseError("expected '+'", pos, text)
        pos += 1
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return Polygon.from_terms(terms)


def polygon_to_json(P: Polygon) -> dict:
    return {
        "terms": [[_fmt(t.L), _fmt(t.M)] for t in P.terms],
        "horizontal": P.touches_horizontal,
        "vertical": P.touches_vertical,
    }


def polygon_from_json(data) -> Polygon:
    try:
        if isinstance(data, str):
            data = json.loads(data)
        terms = [(Fraction(str(a)), Fraction(str(b))) for a, b in data["terms"]]
        return Polygon.from_terms(terms, data.get("horizontal", True), data.get("vertical", True))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed polygon JSON ({exc})") from None


def read_polygon(text: str) -> Polygon:
    """Accept either the text form or the JSON form."""
    s = text.strip()
    if '"' in s:
        return polygon_from_json(s)
    return parse_polygon(s)
