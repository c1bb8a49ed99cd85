"""Puiseux characteristics, semigroups of plane branches and Merle's formula."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional, Sequence

from .errors import DomainError, ParseError
from .polygon import Polygon


def _check_increasing(seq: Sequence[int], what: str) -> tuple[int, ...]:
    seq = tuple(int(s) for s in seq)
    if not seq:
        raise DomainError(f"empty {what}")
    if seq[0] <= 0:
        raise DomainError(f"{what} entries must be positive")
    if any(a >= b for a, b in zip(seq, seq[1:])):
        raise DomainError(f"{what} must be strictly increasing")
    return seq


def gcd_chain(seq: Sequence[int]) -> list[int]:
    """[gcd(s0), gcd(s0, s1), ..., gcd(s0, ..., sk)]."""
    out = []
    g = 0
    for s in seq:
        g = gcd(g, s)
        out.append(g)
    return out


def validate_characteristic(seq: Sequence[int]) -> bool:
    seq = _check_increasing(seq, "characteristic")
    e = gcd_chain(seq)
    return e[-1] == 1 and all(b < a for a, b in zip(e, e[1:]))


@dataclass(frozen=True)
class CharSeq:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(b) for b in self.entries)
        object.__setattr__(self, "entries", entries)
        if not validate_characteristic(entries):
            raise DomainError(f"{list(entries)} is not a Puiseux characteristic")

    @property
    def g(self) -> int:
        return len(self.entries) - 1

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]


@dataclass(frozen=True)
class BresinskyReport:
    valid: bool
    failing_condition: Optional[int] = None
    k: Optional[int] = None


def bresinsky_check(gens: Sequence[int]) -> BresinskyReport:
    """First failing condition among Bresinsky's three, in order."""
    gens = _check_increasing(gens, "generator list")
    e = gcd_chain(gens)
    if e[-1] != 1:
        return BresinskyReport(False, 1)
    for i in range(1, len(gens)):
        if not e[i] < e[i - 1]:
            return BresinskyReport(False, 2, i)
    for i in range(1, len(gens) - 1):
        if not (e[i - 1] // e[i]) * gens[i] < gens[i + 1]:
            return BresinskyReport(False, 3, i)
    return BresinskyReport(True)


@dataclass(frozen=True)
class SgpGens:
    """Minimal generators of a plane-branch semigroup with derived gcd data.

    ``e[k]`` (also ``l[k]``) is gcd of the first k+1 generators and
    ``n[k] = e[k-1] / e[k]`` for k >= 1; ``n[0]`` is unused and set to 1.
    """

    gens: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(int(b) for b in self.gens)
        object.__setattr__(self, "gens", gens)
        report = bresinsky_check(gens)
        if not report.valid:
            raise DomainError(
                f"{list(gens)} is not the semigroup of a plane branch "
                f"(Bresinsky condition {report.failing_condition} fails)")

    @property
    def g(self) -> int:
        return len(self.gens) - 1

    @property
    def e(self) -> list[int]:
        return gcd_chain(self.gens)

    l = e

    @property
    def n(self) -> list[int]:
        e = self.e
        return [1] + [e[k - 1] // e[k] for k in range(1, len(e))]

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __getitem__(self, k):
        return self.gens[k]


def _as_char(c) -> CharSeq:
    return c if isinstance(c, CharSeq) else CharSeq(tuple(c))


def _as_sgp(g) -> SgpGens:
    return g if isinstance(g, SgpGens) else SgpGens(tuple(g))


def char_to_semigroup(c) -> SgpGens:
    c = _as_char(c)
    beta = c.entries
    e = gcd_chain(beta)
    bar = list(beta[:2])
    for i in range(1, len(beta) - 1):
        n_i = e[i - 1] // e[i]
        bar.append(n_i * bar[i] + beta[i + 1] - beta[i])
    return SgpGens(tuple(bar))


def semigroup_to_char(g) -> CharSeq:
    g = _as_sgp(g)
    bar = g.gens
    n = g.n
    beta = list(bar[:2])
    for i in range(1, len(bar) - 1):
        beta.append(bar[i + 1] - n[i] * bar[i] + beta[i])
    return CharSeq(tuple(beta))


def merle_polygon(g) -> Polygon:
    """Canonical form sum_k {(n_k - 1) b_k | (n_k - 1) n_1 ... n_{k-1}}."""
    g = _as_sgp(g)
    n = g.n
    terms = []
    prefix = 1
    for k in range(1, len(g.gens)):
        terms.append(((n[k] - 1) * g.gens[k], (n[k] - 1) * prefix))
        prefix *= n[k]
    return Polygon.from_terms(terms)


def property1_gcd(g) -> int:
    g = _as_sgp(g)
    n = g.n
    out = g.gens[0]
    for k in range(1, len(g.gens)):
        out = gcd(out, (n[k] - 1) * g.gens[k])
    return out


# -- derived characteristics ---------------------------------------------------

def reduced_characteristic(c) -> CharSeq:
    """(b0 / n1, b2, ..., bg): the characteristic after one reduction step."""
    c = _as_char(c)
    if c.g < 2:
        raise DomainError("reduction needs at least two characteristic exponents")
    b = c.entries
    n1 = b[0] // gcd(b[0], b[1])
    return CharSeq((b[0] // n1,) + b[2:])


def truncated_semigroup(g, k: int) -> SgpGens:
    """Semigroup of the k-th characteristic approximate root: (b0/l_k, ..., bk/l_k)."""
    g = _as_sgp(g)
    if not 0 <= k <= g.g:
        raise DomainError(f"k={k} out of range")
    l = g.e[k]
    return SgpGens(tuple(b // l for b in g.gens[: k + 1]))


def enumerate_characteristics(max_b0: int, max_entry: int) -> Iterator[CharSeq]:
    """Every Puiseux characteristic with b0 <= max_b0 and all entries <= max_entry."""

    def extend(prefix, e):
        if e == 1:
            yield CharSeq(tuple(prefix))
            return
        for b in range(prefix[-1] + 1, max_entry + 1):
            e2 = gcd(e, b)
            if e2 < e:
                yield from extend(prefix + [b], e2)

    for b0 in range(1, max_b0 + 1):
        yield from extend([b0], b0)


def parse_int_list(text: str) -> list[int]:
    parts = [p.strip() for p in text.replace(" ", ",").split(",") if p.strip()]
    if not parts:
        raise ParseError("empty integer list", 0, text)
    out = []
    for p in parts:
        if not p.isdigit():
            raise ParseError(f"not a non-negative integer: {p!r}", text.find(p), text)
        out.append(int(p))
    return out
