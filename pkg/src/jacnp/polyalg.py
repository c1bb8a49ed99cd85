"""Exact bivariate polynomial arithmetic over the rationals.

`BiPoly` is a sparse polynomial in two variables, `YPoly` the same object
viewed as a polynomial in a distinguished variable ``y`` whose coefficients
are `BiPoly` in two other variables (the discriminant needs three variables
``u, v, y`` at once).  Resultants are Sylvester determinants computed by
fraction-free Bareiss elimination on integer evaluations of the matrix,
followed by exact dense interpolation.  When python-flint is installed its
integer determinant replaces the pure-Python Bareiss loop on those integer
evaluations (same matrices, same exact values).
"""

from __future__ import annotations

import re
import warnings
from fractions import Fraction
from functools import reduce
from math import lcm

from .errors import DomainError, InternalInconsistency, ParseError

try:
    import flint
except ImportError:  # pragma: no cover - exercised only without the extra
    flint = None

VARIABLE_PAIRS = (("x", "y"), ("u", "v"))


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class BiPoly:
    """Polynomial ``sum c_ij * a^i * b^j`` with rational coefficients.

    ``terms`` maps exponent pairs ``(i, j)`` to nonzero `Fraction` values and
    ``vars`` names the two variables, e.g. ``("x", "y")``.
    """

    __slots__ = ("terms", "vars", "_hash")

    def __init__(self, terms=None, vars=("x", "y")):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise DomainError(f"negative exponent ({i}, {j})")
            c = _frac(c)
            if c:
                clean[(int(i), int(j))] = c
        self.terms = clean
        self.vars = tuple(vars)
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c, vars=("x", "y")):
        return cls({(0, 0): c}, vars)

    @classmethod
    def monomial(cls, i, j, c=1, vars=("x", "y")):
        return cls({(i, j): c}, vars)

    @classmethod
    def gens(cls, vars=("x", "y")):
        return cls.monomial(1, 0, vars=vars), cls.monomial(0, 1, vars=vars)

    # -- basic queries ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def support(self):
        return frozenset(self.terms)

    def coeff(self, i, j):
        return self.terms.get((i, j), Fraction(0))

    def constant_term(self):
        return self.coeff(0, 0)

    def is_constant(self):
        return all(k == (0, 0) for k in self.terms)

    def degree(self, axis=None):
        """Total degree, or the degree in variable 0/1 when ``axis`` is given."""
        if not self.terms:
            return -1
        if axis is None:
            return max(i + j for i, j in self.terms)
        return max(k[axis] for k in self.terms)

    def relabel(self, vars):
        return BiPoly(self.terms, vars)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _frac(other)
            return BiPoly({k: c * other for k, c in self.terms.items()}, self.vars)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative exponent")
        result = BiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other, self.vars)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def exact_div(self, other: BiPoly) -> BiPoly:
        """Quotient of an exact division; raises if ``other`` does not divide."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = max(other.terms)
        lc = other.terms[lead]
        rem = dict(self.terms)
        quot = {}
        while rem:
            top = max(rem)
            m = (top[0] - lead[0], top[1] - lead[1])
            if m[0] < 0 or m[1] < 0:
                raise DomainError("inexact polynomial division")
            c = rem[top] / lc
            quot[m] = c
            for (i, j), d in other.terms.items():
                k = (i + m[0], j + m[1])
                v = rem.get(k, 0) - c * d
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return BiPoly(quot, self.vars)

    # -- calculus and substitution ---------------------------------------

    def diff(self, axis):
        out = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[axis]
            if e:
                k = (i - 1, j) if axis == 0 else (i, j - 1)
                out[k] = c * e
        return BiPoly(out, self.vars)

    def __call__(self, a, b):
        a, b = _frac(a), _frac(b)
        return sum((c * a**i * b**j for (i, j), c in self.terms.items()), Fraction(0))

    def compose(self, first: BiPoly, second: BiPoly) -> BiPoly:
        """Substitute polynomials for both variables."""
        vars = first.vars
        out = BiPoly({}, vars)
        pw0 = {0: BiPoly.const(1, vars)}
        pw1 = {0: BiPoly.const(1, vars)}

        def power(cache, base, n):
            if n not in cache:
                cache[n] = power(cache, base, n - 1) * base
            return cache[n]

        for (i, j), c in self.terms.items():
            out = out + power(pw0, first, i) * power(pw1, second, j) * c
        return out

    def homogeneous_part(self, deg):
        return BiPoly({k: c for k, c in self.terms.items() if sum(k) == deg}, self.vars)

    def denominator_lcm(self):
        return reduce(lcm, (c.denominator for c in self.terms.values()), 1)

    # -- printing ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        a, b = self.vars
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (k[0], -k[1])):
            c = self.terms[(i, j)]
            mono = []
            if i:
                mono.append(a if i == 1 else f"{a}^{i}")
            if j:
                mono.append(b if j == 1 else f"{b}^{j}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = "*".join(mono)
            else:
                body = f"{mag}*" + "*".join(mono)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"BiPoly({str(self)!r}, vars={self.vars})"


# ---------------------------------------------------------------------------
# parsing

_NUMBER = re.compile(r"\d+(?:\s*/\s*\d+)?")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        ch = text[pos]
        if ch.isdigit():
            m = _NUMBER.match(text, pos)
            tokens.append(("num", m.group(0).replace(" ", ""), pos))
            pos = m.end()
        elif ch.isalpha():
            tokens.append(("var", ch, pos))
            pos += 1
        elif ch in "+-*^()":
            tokens.append((ch, ch, pos))
            pos += 1
        elif ch == "−":
            tokens.append(("-", "-", pos))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos, text)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text, vars=None):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        names = {t[1] for t in self.tokens if t[0] == "var"}
        if vars is None:
            vars = ("x", "y")
            for pair in VARIABLE_PAIRS:
                if names & set(pair):
                    vars = pair
                    break
        self.vars = tuple(vars)
        for kind, val, pos in self.tokens:
            if kind == "var" and val not in self.vars:
                raise ParseError(f"unsupported variable name {val!r}", pos, text)

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise self.error(f"expected {kind!r}")
        self.i += 1
        return tok

    def error(self, msg="syntax error"):
        kind, val, pos = self.peek()
        what = "end of input" if kind == "end" else repr(val)
        return ParseError(f"{msg}: unexpected {what}", pos, self.text)

    def parse(self):
        out = self.expr()
        if self.peek()[0] != "end":
            raise self.error()
        return out

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                acc = acc * self.factor()
            elif kind == "var":
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            kind, val, pos = self.peek()
            if kind == "-":
                raise ParseError("negative exponent", pos, self.text)
            if kind != "num" or "/" in val:
                raise self.error("exponent must be a non-negative integer")
            self.take()
            base = base ** int(val)
        return base

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            try:
                c = Fraction(val)
            except ZeroDivisionError:
                raise ParseError("zero denominator", pos, self.text) from None
            return BiPoly.const(c, self.vars)
        if kind == "var":
            self.take()
            idx = self.vars.index(val)
            return BiPoly.monomial(1 - idx, idx, vars=self.vars)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")") if self.peek()[0] == ")" else self._missing_paren()
            return inner
        raise self.error()

    def _missing_paren(self):
        raise self.error("expected ')'")


def parse_poly(text: str, vars=None) -> BiPoly:
    """Parse a polynomial such as ``"(y^2-x^3)^2-4x^5y-x^7"``.

    Implicit multiplication is only allowed before a variable, which covers
    coefficient-times-monomial forms like ``4x^5y``.  Unary signs are only
    accepted at the start of an expression or right after ``(``.
    """
    return _Parser(text, vars).parse()


# ---------------------------------------------------------------------------
# simple predicates


def order_at_origin(f: BiPoly) -> int:
    if not f:
        raise DomainError("the zero polynomial has no order")
    return min(i + j for i, j in f.terms)


def shear(f: BiPoly, axis: str, c) -> BiPoly:
    """``axis='x'``: f(x + c*y, y).  ``axis='y'``: f(x, y + c*x)."""
    c = _frac(c)
    if c == 0:
        return f
    x, y = BiPoly.gens(f.vars)
    if axis == "x":
        return f.compose(x + y * c, y)
    if axis == "y":
        return f.compose(x, y + x * c)
    raise DomainError(f"unknown shear axis {axis!r}")


# ---------------------------------------------------------------------------
# univariate helpers over Q (lists of Fractions, index = degree)


def _utrim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _usub(p, q):
    n = max(len(p), len(q))
    return _utrim([(p[k] if k < len(p) else 0) - (q[k] if k < len(q) else 0) for k in range(n)])


def _umul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _utrim(out)


def _udivmod(p, q):
    if not q:
        raise ZeroDivisionError
    p = list(p)
    dq = len(q) - 1
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    while len(p) - 1 >= dq and p:
        c = p[-1] / q[-1]
        shift = len(p) - 1 - dq
        quot[shift] = c
        for k, b in enumerate(q):
            p[shift + k] -= c * b
        p.pop()
        _utrim(p)
    return _utrim(quot), p


def _ugcd(p, q):
    p, q = _utrim(list(p)), _utrim(list(q))
    while q:
        p, q = q, _udivmod(p, q)[1]
    if not p:
        return []
    lc = p[-1]
    return [c / lc for c in p]


# ---------------------------------------------------------------------------
# Q[x][y] gcd (content / primitive part + subresultant PRS)


def _to_xy(f: BiPoly):
    """Coefficient list in y of univariate x-polynomials."""
    dy = f.degree(1)
    out = [[] for _ in range(dy + 1)]
    for (i, j), c in f.terms.items():
        row = out[j]
        if len(row) <= i:
            row.extend([Fraction(0)] * (i + 1 - len(row)))
        row[i] = c
    return [_utrim(r) for r in out]


def _from_xy(rows, vars):
    return BiPoly({(i, j): c for j, row in enumerate(rows) for i, c in enumerate(row) if c}, vars)


def _content(rows):
    return reduce(_ugcd, (r for r in rows if r), [])


def _primitive(rows):
    cont = _content(rows)
    if not cont:
        return rows
    return [_udivmod(r, cont)[0] if r else [] for r in rows]


def _prem(a, b):
    """Pseudo-remainder of a by b in Q[x][y]."""
    a = [list(r) for r in a]
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [_umul(r, lb) for r in a]
        for k, r in enumerate(b):
            a[shift + k] = _usub(a[shift + k], _umul(la, r))
        while a and not a[-1]:
            a.pop()
    return a


def _xy_gcd(a, b):
    if not any(a):
        return b
    if not any(b):
        return a
    if len(a) < len(b):
        a, b = b, a
    cont = _ugcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    g = [Fraction(1)]
    h = [Fraction(1)]
    while len(b) > 1:
        delta = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            break
        divisor = g
        for _ in range(delta):
            divisor = _umul(divisor, h)
        r = [_udivmod(c, divisor)[0] if c else [] for c in r]
        a, b = b, r
        g = a[-1]
        if delta:
            num = [Fraction(1)]
            for _ in range(delta):
                num = _umul(num, g)
            den = [Fraction(1)]
            for _ in range(delta - 1):
                den = _umul(den, h)
            h = _udivmod(num, den)[0]
    if len(b) == 1:
        result = [list(cont)]
    else:
        result = [_umul(r, cont) for r in _primitive(b)]
    return result


def poly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """Greatest common divisor in Q[a, b], normalised to a monic leading term."""
    rows = _xy_gcd(_to_xy(f), _to_xy(g))
    out = _from_xy(rows, f.vars)
    if out:
        out = out * (1 / out.terms[max(out.terms, key=lambda k: (k[1], k[0]))])
    return out


def is_squarefree(f: BiPoly) -> bool:
    if not f:
        raise DomainError("the zero polynomial is not squarefree-testable")
    g = poly_gcd(poly_gcd(f, f.diff(0)), f.diff(1))
    return g.is_constant()


# ---------------------------------------------------------------------------
# polynomials in y over a two-variable coefficient ring


class YPoly:
    """``sum_k coeffs[k] * y^k`` with `BiPoly` coefficients."""

    __slots__ = ("coeffs", "coeff_vars")

    def __init__(self, coeffs, coeff_vars=None):
        coeffs = list(coeffs)
        if coeff_vars is None:
            coeff_vars = coeffs[0].vars if coeffs else ("x", "y")
        while len(coeffs) > 1 and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            coeffs = [BiPoly({}, coeff_vars)]
        self.coeffs = [c.relabel(coeff_vars) if c.vars != coeff_vars else c for c in coeffs]
        self.coeff_vars = tuple(coeff_vars)

    @classmethod
    def from_bipoly(cls, f: BiPoly) -> YPoly:
        """View f(x, y) as a polynomial in its second variable."""
        dy = max(f.degree(1), 0)
        rows = [dict() for _ in range(dy + 1)]
        for (i, j), c in f.terms.items():
            rows[j][(i, 0)] = c
        return cls([BiPoly(r, f.vars) for r in rows], f.vars)

    def to_bipoly(self) -> BiPoly:
        """Inverse of `from_bipoly` (coefficients must not use their second variable)."""
        out = {}
        for k, c in enumerate(self.coeffs):
            for (i, j), a in c.terms.items():
                if j:
                    raise DomainError("coefficient depends on the second variable")
                out[(i, k)] = a
        return BiPoly(out, self.coeff_vars)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self else -1

    def __bool__(self):
        return len(self.coeffs) > 1 or bool(self.coeffs[0])

    def leading(self):
        return self.coeffs[-1]

    def is_monic(self):
        return self.leading() == 1

    def _zero(self):
        return BiPoly({}, self.coeff_vars)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self._zero()
        return YPoly([(self.coeffs[k] if k < len(self.coeffs) else z)
                      + (other.coeffs[k] if k < len(other.coeffs) else z) for k in range(n)],
                     self.coeff_vars)

    def __neg__(self):
        return YPoly([-c for c in self.coeffs], self.coeff_vars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, BiPoly)):
            return YPoly([c * other for c in self.coeffs], self.coeff_vars)
        out = [self._zero() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return YPoly(out, self.coeff_vars)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = YPoly([BiPoly.const(1, self.coeff_vars)], self.coeff_vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        return isinstance(other, YPoly) and self.coeffs == other.coeffs

    def divmod_const_lead(self, d: YPoly):
        """Division by a polynomial whose leading coefficient is a nonzero constant."""
        lc = d.leading()
        if not lc.is_constant() or not lc:
            raise DomainError("divisor must have a constant leading coefficient")
        inv = 1 / lc.constant_term()
        rem = list(self.coeffs)
        dd = d.degree
        quot = [self._zero() for _ in range(max(len(rem) - dd, 1))]
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top] * inv
            if not c:
                continue
            shift = top - dd
            quot[shift] = c
            for k, b in enumerate(d.coeffs):
                rem[shift + k] = rem[shift + k] - c * b
        return YPoly(quot, self.coeff_vars), YPoly(rem[:max(dd, 1)], self.coeff_vars)

    def __repr__(self):
        return f"YPoly({[str(c) for c in self.coeffs]})"


# ---------------------------------------------------------------------------
# determinants and resultants


def bareiss_det(matrix, exact_div=None):
    """Determinant by fraction-free Bareiss elimination.

    Entries must form an integral domain in which ``exact_div(a, b)`` returns
    the exact quotient; the default is integer floor division, which is exact
    for integer matrices.  Row swaps are used for zero pivots.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            for s in range(k + 1, n):
                if m[s][k]:
                    m[k], m[s] = m[s], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k] * 0
        row_k = m[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            if prev is None:
                for j in range(k + 1, n):
                    row_i[j] = pivot * row_i[j] - lead * row_k[j]
            elif exact_div is None:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = exact_div(pivot * row_i[j] - lead * row_k[j], prev)
            row_i[k] = lead * 0
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def _flint_det(matrix):
    return int(flint.fmpz_mat(matrix).det())


INTEGER_DET_BACKENDS = {"bareiss": bareiss_det}
if flint is not None:
    INTEGER_DET_BACKENDS["flint"] = _flint_det
DEFAULT_DET_BACKEND = "flint" if flint is not None else "bareiss"


def sylvester_matrix(p, q):
    """Sylvester matrix of coefficient lists (index = degree), p's rows first."""
    n, m = len(p) - 1, len(q) - 1
    size = n + m
    zero = p[0] * 0
    rows = []
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + k] = p[n - k]
        rows.append(row)
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + k] = q[m - k]
        rows.append(row)
    return rows


def _sample_points(count):
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts


def _interpolate(points, values):
    """Integer monomial coefficients of the integer polynomial through the data.

    For an integer polynomial sampled at integer nodes every divided
    difference is an integer, so all divisions are exact; a remainder means
    the degree bound was wrong.
    """
    n = len(points)
    dd = list(values)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            q, rem = divmod(dd[i] - dd[i - 1], points[i] - points[i - level])
            if rem:
                raise InternalInconsistency("interpolation is not exact; degree bound too small")
            dd[i] = q
    coeffs = [0] * n
    for i in range(n - 1, -1, -1):
        # coeffs <- coeffs * (t - points[i]) + dd[i]
        t = points[i]
        for k in range(n - 1, 0, -1):
            coeffs[k] = coeffs[k - 1] - t * coeffs[k]
        coeffs[0] = dd[i] - t * coeffs[0]
    return coeffs


def _weighted_bound(p, q, axis):
    n, m = len(p) - 1, len(q) - 1
    dp = [c.degree(axis) for c in p]
    dq = [c.degree(axis) for c in q]
    rows = m * max(dp) + n * max(dq)
    a_p = max(d + k for k, d in enumerate(dp) if d >= 0)
    a_q = max(d + k for k, d in enumerate(dq) if d >= 0)
    return max(min(rows, m * a_p + n * a_q - m * n), 0)


def resultant_y(p: YPoly, q: YPoly, backend: str | None = None) -> BiPoly:
    """Sylvester resultant of p and q with respect to y, p's rows first.

    The determinant is a polynomial in the two coefficient variables; it is
    evaluated on a grid of integer points (Bareiss on integer matrices) and
    recovered exactly by interpolation inside a-priori degree bounds.
    """
    if not p or not q:
        raise DomainError("resultant of the zero polynomial")
    det = INTEGER_DET_BACKENDS[backend or DEFAULT_DET_BACKEND]
    vars = p.coeff_vars
    if q.coeff_vars != vars:
        q = YPoly(q.coeffs, vars)
    n, m = p.degree, q.degree
    if n == 0 and m == 0:
        warnings.warn("resultant of two constants is taken to be 1", stacklevel=2)
        return BiPoly.const(1, vars)
    if n == 0:
        return p.coeffs[0] ** m
    if m == 0:
        return q.coeffs[0] ** n

    p_lcm, q_lcm = _ylcm(p), _ylcm(q)
    pc = [c * p_lcm for c in p.coeffs]
    qc = [c * q_lcm for c in q.coeffs]
    scale = Fraction(p_lcm) ** m * Fraction(q_lcm) ** n

    bound_a = _weighted_bound(pc, qc, 0)
    bound_b = _weighted_bound(pc, qc, 1)
    pts_a = _sample_points(bound_a + 1)
    pts_b = _sample_points(bound_b + 1)

    polys = pc + qc
    int_terms = [[(i, j, int(c)) for (i, j), c in f.terms.items()] for f in polys]
    max_i = max((i for f in int_terms for i, _, _ in f), default=0)
    max_j = max((j for f in int_terms for _, j, _ in f), default=0)

    by_b_coeffs = []  # for every a-point: coefficient list in b
    for a0 in pts_a:
        pa = [a0**i for i in range(max_i + 1)]
        row_vals = []
        for b0 in pts_b:
            pb = [b0**j for j in range(max_j + 1)]
            vals = [sum(c * pa[i] * pb[j] for i, j, c in f) for f in int_terms]
            mat = sylvester_matrix(vals[: n + 1], vals[n + 1:])
            row_vals.append(det(mat))
        by_b_coeffs.append(_interpolate(pts_b, row_vals))

    terms = {}
    for j in range(bound_b + 1):
        col = _interpolate(pts_a, [row[j] for row in by_b_coeffs])
        for i, c in enumerate(col):
            if c:
                terms[(i, j)] = c / scale
    return BiPoly(terms, vars)


def _ylcm(p: YPoly):
    return reduce(lcm, (c.denominator_lcm() for c in p.coeffs), 1)


def discriminant_surface(f: BiPoly) -> BiPoly:
    """D(u, v) = Res_y(f(u, y) - v, f_y(u, y)) as a polynomial in (u, v)."""
    if not f:
        raise DomainError("zero polynomial")
    fy = YPoly.from_bipoly(f)
    if fy.degree <= 0:
        raise DomainError("f does not depend on y")
    if not fy.leading().is_constant():
        raise DomainError("leading y-coefficient is not constant; apply a shear first")
    uv = ("u", "v")
    shifted = [c.relabel(uv) for c in fy.coeffs]
    shifted[0] = shifted[0] - BiPoly.monomial(0, 1, vars=uv)
    p = YPoly(shifted, uv)
    q = YPoly([c.relabel(uv) * k for k, c in enumerate(fy.coeffs)][1:], uv)
    return resultant_y(p, q)


def approximate_root(f: YPoly, p: int, max_iter: int = 64) -> YPoly:
    """The p-th approximate root: monic g with deg_y(f - g^p) < d - d/p."""
    d = f.degree
    if not f.is_monic():
        raise DomainError("f must be monic in y")
    if p < 1 or d % p:
        raise DomainError(f"{p} does not divide the y-degree {d}")
    e = d // p
    bound = d - e
    vars = f.coeff_vars
    one = BiPoly.const(1, vars)
    zero = BiPoly({}, vars)
    g = YPoly([zero] * e + [one], vars)
    if p == 1:
        return f
    for _ in range(max_iter):
        err = f - g**p
        if err.degree < bound or not err:
            return g
        step, _ = err.divmod_const_lead(g ** (p - 1) * p)
        g = g + step
    raise DomainError("approximate root iteration did not converge")


def intersection_number(f: YPoly, g: YPoly) -> int:
    """ord_x Res_y(f, g) for germs all of whose y-roots over x = 0 sit at y = 0."""
    for name, h in (("f", f), ("g", g)):
        if not h.is_monic():
            raise DomainError(f"{name} must be monic in y")
        at_zero = [c.coeff(0, 0) for c in h.coeffs]
        if any(at_zero[:-1]):
            raise DomainError(f"{name}(0, y) is not a pure power of y")
    res = resultant_y(f, g)
    if not res:
        raise DomainError("common factor: intersection number is infinite")
    return min(i for i, _ in res.terms)


__all__ = [
    "BiPoly",
    "YPoly",
    "parse_poly",
    "order_at_origin",
    "is_squarefree",
    "poly_gcd",
    "resultant_y",
    "discriminant_surface",
    "shear",
    "approximate_root",
    "intersection_number",
    "bareiss_det",
    "sylvester_matrix",
]
