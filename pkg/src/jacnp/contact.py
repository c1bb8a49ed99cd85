"""Fractional power series with cyclotomic coefficients and Kuo-Lu contact trees.

Roots are given explicitly (no Newton-Puiseux expansion here).  Each series
carries a truncation order: its terms are exact strictly below it.  Contact
orders are only trusted when the two series differ below both truncations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import inf, lcm
from typing import Optional, Sequence

from .errors import DomainError, ParseError
from .polygon import Polygon


# -- cyclotomic fields ---------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise DomainError("cyclotomic order must be positive")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div_int(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div_int(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        out[k] = c
        for j, b in enumerate(den):
            num[k + j] -= c * b
    assert not any(num), "cyclotomic division left a remainder"
    return out


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce_mod(coeffs, n):
    phi = cyclotomic_poly(n)
    d = len(phi) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, d - 1, -1):
        top = c[k]
        if top:
            for j in range(d + 1):
                c[k - d + j] -= top * phi[j]
    c = c[:d] + [Fraction(0)] * max(0, d - len(c))
    return tuple(Fraction(x) for x in c)


@dataclass(frozen=True)
class CycloNum:
    """Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1)."""

    order: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if len(coords) != euler_phi(self.order):
            coords = _reduce_mod(coords, self.order)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def rational(cls, q, order=1):
        return cls(order, (Fraction(q),) + (Fraction(0),) * (euler_phi(order) - 1))

    @classmethod
    def root_of_unity(cls, order: int, k: int = 1):
        """zeta_order ** k."""
        k %= order
        return cls(order, _reduce_mod([0] * k + [1], order))

    def embed(self, N: int) -> CycloNum:
        """Image in Q(zeta_N) under zeta_n -> zeta_N^(N/n)."""
        if N % self.order:
            raise DomainError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{N})")
        if N == self.order:
            return self
        step = N // self.order
        out = [Fraction(0)] * ((len(self.coords) - 1) * step + 1)
        for k, c in enumerate(self.coords):
            out[k * step] += c
        return CycloNum(N, _reduce_mod(out, N))

    def _common(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.rational(other, self.order)
        N = lcm(self.order, other.order)
        return self.embed(N), other.embed(N), N

    def __add__(self, other):
        a, b, N = self._common(other)
        return CycloNum(N, tuple(x + y for x, y in zip(a.coords, b.coords)))

    def __neg__(self):
        return CycloNum(self.order, tuple(-c for c in self.coords))

    def __sub__(self, other):
        return self + (-other if isinstance(other, CycloNum) else -Fraction(other))

    def __mul__(self, other):
        a, b, N = self._common(other)
        prod = [Fraction(0)] * (len(a.coords) + len(b.coords) - 1)
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    prod[i + j] += x * y
        return CycloNum(N, _reduce_mod(prod, N))

    def __pow__(self, k: int):
        out = CycloNum.rational(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return any(self.coords)

    def same_as(self, other: CycloNum) -> bool:
        a, b, _ = self._common(other)
        return a.coords == b.coords

    def __str__(self):
        parts = [f"{c}*z^{k}" if k else str(c) for k, c in enumerate(self.coords) if c]
        return " + ".join(parts) or "0"


# -- fractional power series ---------------------------------------------------

@dataclass(frozen=True)
class FracSeries:
    """Truncated series sum c_e x^e with exact terms below ``trunc``."""

    terms: tuple[tuple[Fraction, CycloNum], ...]
    trunc: Fraction | float = inf
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        clean = sorted(((Fraction(e), c) for e, c in self.terms if c), key=lambda t: t[0])
        exps = [e for e, _ in clean]
        if len(set(exps)) != len(exps):
            raise DomainError("repeated exponent in series")
        if any(e <= 0 for e in exps):
            raise DomainError("exponents must be positive")
        if any(e >= self.trunc for e in exps):
            raise DomainError("term at or beyond the truncation order")
        object.__setattr__(self, "terms", tuple(clean))

    @property
    def denominator(self) -> int:
        return lcm(1, *(e.denominator for e, _ in self.terms))

    def coeff(self, e: Fraction) -> Optional[CycloNum]:
        for x, c in self.terms:
            if x == e:
                return c
        return None


@dataclass(frozen=True)
class Contact:
    """Contact order; ``value`` is ``inf`` when no difference shows below truncation."""

    value: Fraction | float
    truncation_limited: bool = False


def contact(phi: FracSeries, psi: FracSeries) -> Contact:
    limit = min(phi.trunc, psi.trunc)
    exps = sorted({e for e, _ in phi.terms} | {e for e, _ in psi.terms})
    for e in exps:
        if e >= limit:
            break
        a, b = phi.coeff(e), psi.coeff(e)
        if a is None or b is None or not a.same_as(b):
            return Contact(e)
    return Contact(inf, truncation_limited=limit != inf)


def contact_order(phi: FracSeries, psi: FracSeries) -> Fraction | float:
    """Order of phi - psi; ``inf`` if they agree up to the smaller truncation."""
    return contact(phi, psi).value


# -- Kuo-Lu tree -----------------------------------------------------------------

@dataclass
class TreeNode:
    """Pseudo-ball of finite height: the roots in ``members`` pairwise meet at >= h."""

    h: Fraction
    members: tuple[int, ...]
    children: list = field(default_factory=list)  # TreeNode or int (leaf root index)
    q: Fraction = Fraction(0)

    @property
    def t(self) -> int:
        return len(self.children)

    def internal_nodes(self):
        yield self
        for c in self.children:
            if isinstance(c, TreeNode):
                yield from c.internal_nodes()


@dataclass
class ContactTree:
    roots: list[FracSeries]
    contacts: dict[tuple[int, int], Fraction]
    top: Optional[TreeNode]  # None for a single root

    def internal_nodes(self) -> list[TreeNode]:
        return list(self.top.internal_nodes()) if self.top else []


def _contact_table(roots: Sequence[FracSeries]) -> dict[tuple[int, int], Fraction]:
    table = {}
    for i, j in combinations(range(len(roots)), 2):
        c = contact(roots[i], roots[j])
        if c.value == inf:
            if c.truncation_limited:
                raise DomainError(
                    f"roots {i} and {j} agree up to their truncation; contact is undetermined")
            raise DomainError(f"roots {i} and {j} are identical")
        table[(i, j)] = table[(j, i)] = c.value
    return table


def build_tree(roots: Sequence[FracSeries]) -> ContactTree:
    """Kuo-Lu tree of the given roots, with q(B) = sum over all roots of O(B, alpha)."""
    roots = list(roots)
    if not roots:
        raise DomainError("at least one root is required")
    table = _contact_table(roots)
    everyone = tuple(range(len(roots)))

    def split(members):
        h = min(table[(a, b)] for a, b in combinations(members, 2))
        groups: list[list[int]] = []
        for a in members:
            for grp in groups:
                if table[(a, grp[0])] > h:
                    grp.append(a)
                    break
            else:
                groups.append([a])
        node = TreeNode(h, tuple(members))
        inside = set(members)
        rep = members[0]
        node.q = sum((h if a in inside else table[(rep, a)] for a in everyone), Fraction(0))
        for grp in groups:
            node.children.append(split(grp) if len(grp) > 1 else grp[0])
        return node

    top = split(everyone) if len(roots) > 1 else None
    return ContactTree(roots, table, top)


def tree_polygon(tree: ContactTree) -> Polygon:
    """Sum over pseudo-balls of finite height of {(t-1) q | t-1}."""
    terms = [((B.t - 1) * B.q, B.t - 1) for B in tree.internal_nodes()]
    return Polygon.from_terms(terms)


def ultrametric_violations(tree: ContactTree) -> list[tuple[int, int, int]]:
    """Triples whose two smallest pairwise contacts differ (always empty for true series)."""
    bad = []
    for a, b, c in combinations(range(len(tree.roots)), 3):
        vals = sorted((tree.contacts[(a, b)], tree.contacts[(b, c)], tree.contacts[(a, c)]))
        if vals[0] != vals[1]:
            bad.append((a, b, c))
    return bad


# -- roots file --------------------------------------------------------------------

def _rat(text) -> Fraction | float:
    s = str(text).strip()
    if s.lower() in ("inf", "infinity", "oo"):
        return inf
    return Fraction(s)


def load_roots(source) -> list[FracSeries]:
    """Read the JSON roots format (a path, a JSON string or an already-parsed dict)."""
    if isinstance(source, dict):
        data = source
    else:
        text = str(source)
        if not text.lstrip().startswith("{"):
            with open(text) as fh:
                text = fh.read()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    try:
        order = int(data.get("cyclotomic_order", 1))
        phi = euler_phi(order)
        out = []
        for k, r in enumerate(data["roots"]):
            terms = []
            for t in r["terms"]:
                coords = [Fraction(str(c)) for c in t["coeff"]]
                if len(coords) != phi:
                    raise DomainError(
                        f"root {k}: coefficient needs {phi} coordinates for order {order}")
                terms.append((Fraction(str(t["exp"])), CycloNum(order, tuple(coords))))
            out.append(FracSeries(tuple(terms), _rat(r.get("trunc", "inf")), r.get("label")))
        return out
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed roots file ({exc})") from None


def dump_roots(roots: Sequence[FracSeries], order: Optional[int] = None) -> dict:
    N = order or lcm(1, *(c.order for r in roots for _, c in r.terms))

    def fmt(q):
        return "inf" if q == inf else str(q)

    return {
        "cyclotomic_order": N,
        "roots": [
            {
                "terms": [{"exp": str(e), "coeff": [str(x) for x in c.embed(N).coords]}
                          for e, c in r.terms],
                "trunc": fmt(r.trunc),
                **({"label": r.label} if r.label else {}),
            }
            for r in roots
        ],
    }
