"""Combinatorial tests deciding whether a polygon is the jacobian polygon of a branch.

Three independent routes are implemented: iterated reduction, iterated
abrasion, and Bresinsky's conditions applied to the gamma sequence read off
the polygon.  Each returns a `CriterionVerdict`; on success the verdict
carries the Puiseux characteristic and semigroup of the branch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import DomainError, InternalInconsistency
from .polygon import Polygon, classify
from .semigroup import (CharSeq, SgpGens, bresinsky_check, char_to_semigroup,
                        semigroup_to_char)
from .transform import abrade, reduce

SHAPE = 0


@dataclass(frozen=True)
class CriterionVerdict:
    passed: bool
    condition: Optional[int] = None
    stage: Optional[int] = None
    characteristic: Optional[CharSeq] = None
    semigroup: Optional[SgpGens] = None
    reason: str = ""
    gamma: Optional[tuple[Fraction, ...]] = field(default=None, compare=False)

    def to_json(self) -> dict:
        out: dict = {"pass": self.passed}
        if self.passed:
            out["characteristic"] = list(self.characteristic)
            out["semigroup"] = list(self.semigroup)
        else:
            out["condition"] = self.condition
            if self.stage is not None:
                out["stage"] = self.stage
            out["reason"] = self.reason
        if self.gamma is not None:
            out["gamma"] = [_fmt(g) for g in self.gamma]
        return out


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _is_nat(q: Fraction) -> bool:
    return q.denominator == 1 and q >= 0


def _fail(condition, stage, reason, gamma=None):
    return CriterionVerdict(False, condition, stage, reason=reason, gamma=gamma)


def _shape_failure(P: Polygon):
    c = classify(P)
    missing = [name for name, ok in (("special", c.special), ("convenient", c.convenient),
                                     ("integral", c.integral)) if not ok]
    if missing:
        return _fail(SHAPE, None, "polygon is not " + ", ".join(missing))
    return None


_SMOOTH = (CharSeq((1,)), SgpGens((1,)))


def _witness_from_char(entries) -> tuple[CharSeq, SgpGens]:
    try:
        char = CharSeq(tuple(entries))
        return char, char_to_semigroup(char)
    except DomainError as exc:
        raise InternalInconsistency(f"criterion passed with invalid witness {entries}: {exc}")


def _witness_from_sgp(entries) -> tuple[CharSeq, SgpGens]:
    try:
        sgp = SgpGens(tuple(entries))
        return semigroup_to_char(sgp), sgp
    except DomainError as exc:
        raise InternalInconsistency(f"criterion passed with invalid witness {entries}: {exc}")


def reduction_criterion(P: Polygon) -> CriterionVerdict:
    """Characterisation through the iterates R^i(P), i = 0..r-1."""
    bad = _shape_failure(P)
    if bad:
        return bad
    if P.r == 0:
        return CriterionVerdict(True, characteristic=_SMOOTH[0], semigroup=_SMOOTH[1])
    beta0 = 1 + P.height
    if not beta0 < P.terms[0].inclination:
        return _fail(1, 0, f"1 + ht = {beta0} is not below the first inclination")
    exponents = [beta0]
    Q = P
    for i in range(P.r):
        if i:
            Q = reduce(Q)
        q1 = Q.terms[0].inclination
        if not (Q.is_integral() and _is_nat(q1)):
            return _fail(2, i, f"R^{i} is not integral or its first inclination {q1} is not a natural number")
        h1 = 1 + Q.height
        if (1 + Q.terms[0].M) * gcd(int(q1), int(h1)) != h1:
            return _fail(3, i, f"(1 + {Q.terms[0].M}) * gcd({q1}, {h1}) != {h1}")
        exponents.append(q1)
    char, sgp = _witness_from_char(int(b) for b in exponents)
    return CriterionVerdict(True, characteristic=char, semigroup=sgp)


def abrasion_criterion(P: Polygon) -> CriterionVerdict:
    """Characterisation through the iterates A^i(P), i = 0..r-1."""
    bad = _shape_failure(P)
    if bad:
        return bad
    if P.r == 0:
        return CriterionVerdict(True, characteristic=_SMOOTH[0], semigroup=_SMOOTH[1])
    r = P.r
    if not 1 + P.height < P.terms[0].inclination:
        return _fail(1, 0, f"1 + ht = {1 + P.height} is not below the first inclination")
    Q = P
    for i in range(r):
        if i:
            Q = abrade(Q)
        k = r - i
        cls = classify(Q)
        if not (cls.special and cls.convenient and cls.integral):
            return _fail(2, i, f"A^{i} is not special convenient integral")
        if not _is_nat(Q.terms[0].inclination):
            return _fail(2, i, f"first inclination of A^{i} is not a natural number")
        if i <= r - 2:
            last = (1 + Q.height - Q.terms[-1].M) * Q.terms[-1].inclination
            if not _is_nat(last):
                return _fail(2, i, f"last gamma {last} of A^{i} is not a natural number")
        g = int(1 + Q.height)
        for t in Q.terms[:k]:
            g = gcd(g, int(t.L))
        if g != 1:
            return _fail(3, i, f"gcd(1 + ht, L_1, ..., L_{k}) = {g} for A^{i}")
    char, sgp = _witness_from_sgp(int(x) for x in gamma_sequence(P))
    return CriterionVerdict(True, characteristic=char, semigroup=sgp)


def gamma_sequence(P: Polygon) -> tuple[Fraction, ...]:
    """(1 + ht, L1/M1, (1+M1) L2/M2, ..., (1+M1+..+M_{r-1}) Lr/Mr)."""
    if not P.convenient:
        raise DomainError("gamma sequence needs a convenient polygon")
    if P.r == 0:
        raise DomainError("gamma sequence of a polygon without compact edges")
    out = [1 + P.height]
    acc = Fraction(1)
    for t in P.terms:
        out.append(acc * t.inclination)
        acc += t.M
    return tuple(out)


def gamma_criterion(P: Polygon) -> CriterionVerdict:
    """Bresinsky's conditions on the gamma sequence.

    Only meaningful when P is known to be the jacobian polygon of some curve.
    """
    if not P.convenient:
        return _fail(SHAPE, None, "polygon is not convenient")
    if P.r == 0:
        return CriterionVerdict(True, characteristic=_SMOOTH[0], semigroup=_SMOOTH[1],
                                gamma=(Fraction(1),))
    gam = gamma_sequence(P)
    if not all(_is_nat(g) and g > 0 for g in gam):
        return _fail(SHAPE, None, "gamma values are not all positive integers", gam)
    if any(a >= b for a, b in zip(gam, gam[1:])):
        return _fail(SHAPE, None, "gamma values are not strictly increasing", gam)
    ints = [int(g) for g in gam]
    report = bresinsky_check(ints)
    if not report.valid:
        reason = {1: "gcd of the gammas is not 1",
                  2: "gcd chain of the gammas does not strictly decrease",
                  3: "gamma growth condition fails"}[report.failing_condition]
        if report.failing_condition == 1:
            g = 0
            for x in ints:
                g = gcd(g, x)
            reason = f"gcd({', '.join(map(str, ints))}) = {g}"
        return _fail(report.failing_condition, report.k, reason, gam)
    char, sgp = _witness_from_sgp(ints)
    return CriterionVerdict(True, characteristic=char, semigroup=sgp, gamma=gam)


def recover_characteristic(P: Polygon) -> CharSeq:
    """Characteristic (1 + ht, L1/M1 of R^0, ..., of R^{r-1}) of a branch polygon."""
    verdict = reduction_criterion(P)
    if not verdict.passed:
        raise DomainError(f"not the jacobian polygon of a branch: {verdict.reason}")
    return verdict.characteristic


CRITERIA = {
    "reduction": reduction_criterion,
    "abrasion": abrasion_criterion,
    "gamma": gamma_criterion,
}
