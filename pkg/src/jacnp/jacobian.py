"""From a defining polynomial to its jacobian Newton polygon and an irreducibility verdict.

The polygon is the Newton polygon of D(u, v) = Disc_y(f(u, y) - v) computed in
coordinates where the vertical axis is transverse to the curve and the top
y-coefficient is constant.  Such coordinates are searched among the shears
x -> x + c*y, c = 0, 1, 2, ...; the result is accepted once two accepted
shears produce the same polygon.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .criteria import (CriterionVerdict, abrasion_criterion, gamma_criterion,
                       reduction_criterion)
from .errors import DomainError, InternalInconsistency
from .polyalg import (BiPoly, YPoly, discriminant_surface, is_squarefree,
                      order_at_origin, shear)
from .polygon import Polygon, polygon_from_support
from .semigroup import CharSeq, SgpGens

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShearSearch:
    max_shear: int = 16
    confirmations: int = 2
    y_perturbations: tuple[int, ...] = (1, 2)


@dataclass(frozen=True)
class JacobianResult:
    polygon: Polygon
    shears_tried: tuple[int, ...]
    shears_used: tuple[int, ...]
    discriminant: BiPoly = field(compare=False, repr=False)

    @property
    def flagged(self) -> bool:
        """True when the accepted pair of shears was not simply the first two admissible ones."""
        return self.shears_used != self.shears_tried[: len(self.shears_used)]


def is_transverse(f: BiPoly) -> bool:
    """The lowest homogeneous form of f is not divisible by x."""
    d = order_at_origin(f)
    return f.coeff(0, d) != 0


def has_constant_lead(f: BiPoly) -> bool:
    return YPoly.from_bipoly(f).leading().is_constant()


def admissible(f: BiPoly) -> bool:
    return is_transverse(f) and has_constant_lead(f)


def _check_input(f: BiPoly):
    if not f:
        raise DomainError("zero polynomial")
    if f.constant_term() != 0:
        raise DomainError("f is a unit at the origin (f(0,0) != 0)")
    if not is_squarefree(f):
        raise DomainError("f is not squarefree")


def polygon_in_coordinates(f: BiPoly) -> tuple[Polygon, BiPoly]:
    """Newton polygon of the discriminant for f taken in its current coordinates."""
    D = discriminant_surface(f)
    return polygon_from_support(D.support()), D


def jacobian_analysis(f: BiPoly, search: ShearSearch = ShearSearch()) -> JacobianResult:
    _check_input(f)
    tried: list[int] = []
    seen: dict[Polygon, list[int]] = {}
    discs: dict[int, BiPoly] = {}
    for c in range(search.max_shear + 1):
        g = shear(f, "x", c)
        if not admissible(g):
            continue
        tried.append(c)
        P, D = polygon_in_coordinates(g)
        discs[c] = D
        if len(tried) == 1:
            for c2 in search.y_perturbations:
                P2, _ = polygon_in_coordinates(shear(g, "y", c2))
                if P2 != P:
                    raise InternalInconsistency(
                        f"y-perturbation {c2} changed the polygon: {P} vs {P2}")
        hits = seen.setdefault(P, [])
        hits.append(c)
        log.debug("shear %d gives %s", c, P)
        if len(hits) >= search.confirmations:
            return JacobianResult(P, tuple(tried), tuple(hits), discs[hits[0]])
    raise DomainError(
        f"normalization failed: no {search.confirmations} agreeing admissible shears "
        f"with c <= {search.max_shear} (tried {tried})")


def jacobian_polygon(f: BiPoly, search: ShearSearch = ShearSearch()) -> Polygon:
    return jacobian_analysis(f, search).polygon


@dataclass(frozen=True)
class PolarInvariants:
    pairs: tuple[tuple[Fraction, int], ...]

    @classmethod
    def from_polygon(cls, P: Polygon) -> PolarInvariants:
        return cls(tuple((t.inclination, int(t.M)) for t in P.terms))

    def __str__(self):
        body = ", ".join(f"{_fmt(q)}:{m}" for q, m in self.pairs)
        return f"<{body}>"

    def to_json(self):
        return [[_fmt(q), m] for q, m in self.pairs]


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def polar_invariants(f: BiPoly, search: ShearSearch = ShearSearch()) -> PolarInvariants:
    return PolarInvariants.from_polygon(jacobian_polygon(f, search))


@dataclass(frozen=True)
class IrreducibilityVerdict:
    irreducible: bool
    polygon: Polygon
    evidence: dict[str, CriterionVerdict]
    characteristic: Optional[CharSeq] = None
    semigroup: Optional[SgpGens] = None
    shears_used: tuple[int, ...] = ()
    flagged: bool = False


def decide(P: Polygon) -> tuple[bool, dict[str, CriterionVerdict]]:
    """Run all three criteria on a jacobian polygon; they must agree."""
    evidence = {
        "reduction": reduction_criterion(P),
        "abrasion": abrasion_criterion(P),
        "gamma": gamma_criterion(P),
    }
    outcomes = {name: v.passed for name, v in evidence.items()}
    if len(set(outcomes.values())) != 1:
        raise InternalInconsistency(f"criteria disagree on {P}: {outcomes}")
    verdict = outcomes["reduction"]
    if verdict:
        witnesses = {(v.characteristic, v.semigroup) for v in evidence.values()}
        if len(witnesses) != 1:
            raise InternalInconsistency(f"criteria disagree on the witness for {P}")
    return verdict, evidence


def test_irreducible(f: BiPoly, search: ShearSearch = ShearSearch()) -> IrreducibilityVerdict:
    result = jacobian_analysis(f, search)
    ok, evidence = decide(result.polygon)
    witness = evidence["reduction"]
    return IrreducibilityVerdict(
        irreducible=ok,
        polygon=result.polygon,
        evidence=evidence,
        characteristic=witness.characteristic if ok else None,
        semigroup=witness.semigroup if ok else None,
        shears_used=result.shears_used,
        flagged=result.flagged,
    )


# pytest would otherwise try to collect the function above when imported into tests
test_irreducible.__test__ = False
