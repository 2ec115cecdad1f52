"""Exact arithmetic on dense integer-coefficient polynomials.

Polynomials are immutable ``IntPoly`` values holding ascending coefficient
tuples (index i is the coefficient of z^i).  The zero polynomial is the empty
tuple.  All arithmetic is exact over the integers; interval machinery uses
``fractions.Fraction`` endpoints so that no certified claim ever depends on
hardware floating point.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Union

Rat = Union[int, Fraction]


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact over Z leaves a remainder."""


class DomainError(ValueError):
    """Raised when an operation's precondition on its input is violated."""


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class IntPoly:
    """Dense univariate polynomial over Z, coefficients in ascending order."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({to_human(self)!r})"

    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise DomainError("negative polynomial power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by z^k (k >= 0)."""
        if not self.coeffs:
            return ZERO
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, x: Rat) -> Rat:
        result: Rat = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result


ZERO = IntPoly(())
ONE = IntPoly((1,))
Z = IntPoly((0, 1))


def from_terms(terms: dict[int, int]) -> IntPoly:
    """Build a polynomial from an exponent -> coefficient mapping."""
    if not terms:
        return ZERO
    out = [0] * (max(terms) + 1)
    for e, c in terms.items():
        out[e] += c
    return IntPoly(out)


# -- spec'd elementwise operations ------------------------------------------


def reciprocal(p: IntPoly) -> IntPoly:
    """Coefficient reversal z^deg(p) * p(1/z); the zero polynomial is rejected."""
    if p.is_zero():
        raise DomainError("reciprocal of the zero polynomial is undefined")
    return IntPoly(tuple(reversed(p.coeffs)))


def poly_length(p: IntPoly) -> int:
    """Sum of the absolute values of the coefficients."""
    return sum(abs(c) for c in p.coeffs)


def derivative(p: IntPoly) -> IntPoly:
    return IntPoly([i * c for i, c in enumerate(p.coeffs)][1:])


def compose_znegz(p: IntPoly) -> IntPoly:
    """p(-z)."""
    return IntPoly([-c if i & 1 else c for i, c in enumerate(p.coeffs)])


def compose_zsq(p: IntPoly) -> IntPoly:
    """p(z^2)."""
    out = [0] * (2 * len(p.coeffs) - 1) if p.coeffs else []
    for i, c in enumerate(p.coeffs):
        out[2 * i] = c
    return IntPoly(out)


def is_reciprocal(p: IntPoly) -> bool:
    return not p.is_zero() and p.coeffs == tuple(reversed(p.coeffs))


def is_antireciprocal(p: IntPoly) -> bool:
    return not p.is_zero() and tuple(-c for c in p.coeffs) == tuple(reversed(p.coeffs))


# -- division, gcd, content --------------------------------------------------


def divmod_poly(p: IntPoly, q: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Quotient and remainder; every quotient coefficient must be an integer."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p.coeffs)
    qc = q.coeffs
    dq = len(qc) - 1
    lead = qc[-1]
    if len(r) - 1 < dq:
        return ZERO, p
    out = [0] * (len(r) - dq)
    for i in range(len(r) - 1, dq - 1, -1):
        c = r[i]
        if c == 0:
            continue
        if c % lead:
            raise ExactDivisionError("quotient coefficient is not an integer")
        f = c // lead
        out[i - dq] = f
        for j, d in enumerate(qc):
            r[i - dq + j] -= f * d
    return IntPoly(out), IntPoly(r)


def exact_div(p: IntPoly, q: IntPoly) -> IntPoly:
    """p / q when q divides p exactly over Z; ExactDivisionError otherwise."""
    quot, rem = divmod_poly(p, q)
    if not rem.is_zero():
        raise ExactDivisionError("division left a nonzero remainder")
    return quot


def trial_div(p: IntPoly, q: IntPoly) -> Optional[IntPoly]:
    """p / q, or None when q does not divide p exactly."""
    try:
        return exact_div(p, q)
    except ExactDivisionError:
        return None


def rem_monic(p: IntPoly, m: IntPoly) -> IntPoly:
    """Remainder of p modulo a monic m (stays in Z[z])."""
    if not m.is_monic():
        raise DomainError("modulus must be monic")
    r = list(p.coeffs)
    mc = m.coeffs
    dm = len(mc) - 1
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i]
        if c == 0:
            continue
        r[i] = 0
        for j in range(dm):
            r[i - dm + j] -= c * mc[j]
    return IntPoly(r[:dm])


def powmod_monic(base: IntPoly, n: int, m: IntPoly) -> IntPoly:
    """base^n modulo monic m by repeated squaring."""
    result = rem_monic(ONE, m)
    b = rem_monic(base, m)
    while n:
        if n & 1:
            result = rem_monic(result * b, m)
        b = rem_monic(b * b, m)
        n >>= 1
    return result


def content(p: IntPoly) -> int:
    """Positive gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for c in p.coeffs:
        g = _gcd_int(g, c)
        if g == 1:
            return 1
    return g


def _gcd_int(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def primitive_positive(p: IntPoly) -> IntPoly:
    """Primitive part with positive leading coefficient."""
    if p.is_zero():
        return ZERO
    c = content(p)
    if p.leading() < 0:
        c = -c
    return IntPoly([x // c for x in p.coeffs])


def _pseudo_rem_signed(f: list[int], g: list[int]) -> list[int]:
    """A positive integer multiple of rem(f, g), computed fraction-free.

    Each round applies r <- lc(g)*r - top*z^k*g, so the result equals
    lc(g)^steps * rem(f, g); the sign is corrected when that multiplier is
    negative, which keeps Sturm-chain sign semantics intact.
    """
    dg = len(g) - 1
    lead = g[-1]
    r = list(f)
    steps = 0
    while len(r) - 1 >= dg and r:
        top = r[-1]
        r = [lead * x for x in r]
        k = len(r) - 1 - dg
        for j in range(dg + 1):
            r[k + j] -= top * g[j]
        steps += 1
        while r and r[-1] == 0:
            r.pop()
    if lead < 0 and steps % 2 == 1:
        r = [-x for x in r]
    return r


def _primitive_list(c: list[int]) -> list[int]:
    g = 0
    for x in c:
        g = _gcd_int(g, x)
        if g == 1:
            return list(c)
    if g <= 1:
        return list(c)
    return [x // g for x in c]


def gcd_primitive(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd over Z, normalized to a positive leading coefficient."""
    if p.is_zero() and q.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    if p.is_zero():
        return primitive_positive(q)
    if q.is_zero():
        return primitive_positive(p)
    a = list(primitive_positive(p).coeffs)
    b = list(primitive_positive(q).coeffs)
    if len(a) < len(b):
        a, b = b, a
    while True:
        if len(b) == 1:
            return ONE
        r = _pseudo_rem_signed(a, b)
        if not r:
            return primitive_positive(IntPoly(b))
        a, b = b, _primitive_list(r)


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Musser decomposition: p = unit * prod q_i^i with the q_i squarefree, coprime.

    Factors are primitive with positive leading coefficient; constant content
    and overall sign are dropped (root structure is what matters downstream).
    """
    if p.is_zero():
        raise DomainError("zero polynomial has no squarefree decomposition")
    p = primitive_positive(p)
    if p.degree < 1:
        return []
    out: list[tuple[IntPoly, int]] = []
    g = gcd_primitive(p, derivative(p))
    w = primitive_positive(exact_div(p, g))
    i = 1
    while g.degree >= 1:
        y = gcd_primitive(w, g)
        if y.degree < w.degree:
            out.append((primitive_positive(exact_div(w, y)), i))
        w = y
        g = primitive_positive(exact_div(g, y))
        i += 1
    if w.degree >= 1:
        out.append((w, i))
    return out


def squarefree_part(p: IntPoly) -> IntPoly:
    """Product of distinct irreducible factors, positive leading coefficient."""
    p = primitive_positive(p)
    if p.degree < 1:
        return ONE
    g = gcd_primitive(p, derivative(p))
    return primitive_positive(exact_div(p, g))


# -- cyclotomic polynomials ---------------------------------------------------


@lru_cache(maxsize=None)
def euler_phi(d: int) -> int:
    if d < 1:
        raise DomainError("euler_phi needs d >= 1")
    result, n, f = 1, d, 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            result *= (f - 1) * f ** (e - 1)
        f += 1
    if n > 1:
        result *= n - 1
    return result


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by exact division of z^d - 1."""
    if d < 1:
        raise DomainError("cyclotomic index must be >= 1")
    num = IntPoly((-1,) + (0,) * (d - 1) + (1,))  # z^d - 1
    for e in range(1, d):
        if d % e == 0:
            num = exact_div(num, cyclotomic(e))
    return num


def cyclotomic_candidates(max_degree: int) -> list[int]:
    """All d with phi(d) <= max_degree (phi(d) >= sqrt(d/2) bounds d <= 2*deg^2)."""
    if max_degree < 1:
        return []
    bound = 2 * max_degree * max_degree + 1
    return [d for d in range(1, bound + 1) if euler_phi(d) <= max_degree]


# -- resultants ----------------------------------------------------------------


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Res(p, q) over Z; zero iff p and q share a nonconstant factor.

    Euclidean reduction over Q with the multiplicativity bookkeeping
    res(a, b) = (-1)^(da*db) lc(b)^(da-dr) res(b, a mod b); the inputs here
    are small enough that clarity beats a fraction-free PRS.
    """
    if p.is_zero() or q.is_zero():
        raise DomainError("resultant of the zero polynomial is undefined")
    if p.degree == 0:
        return p.coeffs[0] ** q.degree
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    res = Fraction(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            res *= b[0] ** da
            break
        r = list(a)
        lead = b[-1]
        for i in range(da, db - 1, -1):
            c = r[i]
            if c:
                f = c / lead
                r[i] = Fraction(0)
                for j in range(db):
                    r[i - db + j] -= f * b[j]
        while r and r[-1] == 0:
            r.pop()
        if not r:
            return 0
        dr = len(r) - 1
        res *= Fraction(-1) ** (da * db) * lead ** (da - dr)
        a, b = b, r
    assert res.denominator == 1
    return int(res)


def resultant_in_y(f_terms: dict[int, IntPoly], g_terms: dict[int, IntPoly]) -> IntPoly:
    """Res_y of two bivariate polynomials given as {y-power: coefficient in Z[z]}.

    Supports the low y-degree shapes needed here (each input has y-degree <= 2)
    via the Sylvester determinant with polynomial entries.
    """
    dy_f = max(f_terms)
    dy_g = max(g_terms)
    n = dy_f + dy_g
    frow = [f_terms.get(dy_f - j, ZERO) for j in range(dy_f + 1)]
    grow = [g_terms.get(dy_g - j, ZERO) for j in range(dy_g + 1)]
    matrix: list[list[IntPoly]] = []
    for i in range(dy_g):
        matrix.append([ZERO] * i + frow + [ZERO] * (n - dy_f - 1 - i))
    for i in range(dy_f):
        matrix.append([ZERO] * i + grow + [ZERO] * (n - dy_g - 1 - i))
    return _det_poly(matrix)


def _det_poly(m: list[list[IntPoly]]) -> IntPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = ZERO
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _det_poly(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


# -- rational evaluation, enclosures ------------------------------------------


@dataclass(frozen=True)
class Enclosure:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError("enclosure endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Rat) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: "Enclosure") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def __repr__(self) -> str:
        return f"Enclosure({self.lo}, {self.hi})"


def point_enclosure(x: Rat) -> Enclosure:
    x = Fraction(x)
    return Enclosure(x, x)


def _round_out(lo: Fraction, hi: Fraction, precision: int) -> tuple[Fraction, Fraction]:
    # Outward rounding onto the grid with denominator 2^precision.
    scale = 1 << precision
    lo_r = Fraction((lo.numerator * scale) // lo.denominator, scale)
    hi_n = hi.numerator * scale
    hi_r = Fraction(-((-hi_n) // hi.denominator), scale)
    return lo_r, hi_r


def eval_interval(p: IntPoly, x: Enclosure, working_precision: int = 64) -> Enclosure:
    """Enclosure of {p(t) : t in x}, Horner with interval arithmetic, outward-rounded."""
    if working_precision < 1:
        raise DomainError("working precision must be positive")
    lo, hi = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        # [lo,hi] * x + c with exact rational endpoints
        cands = (lo * x.lo, lo * x.hi, hi * x.lo, hi * x.hi)
        lo, hi = min(cands) + c, max(cands) + c
    lo, hi = _round_out(lo, hi, working_precision)
    return Enclosure(lo, hi)


def sign_at(p: IntPoly, x: Rat) -> int:
    """Exact sign of p(x) for rational x, via homogeneous integer evaluation."""
    if not p.coeffs:
        return 0
    if isinstance(x, int):
        val = p(x)
        return (val > 0) - (val < 0)
    n, d = x.numerator, x.denominator
    # Horner on sum c_i n^i d^(deg-i): val <- val*n + c_i*d^(steps so far)
    val = 0
    dpow = 1
    for c in reversed(p.coeffs):
        val = val * n + c * dpow
        dpow *= d
    return (val > 0) - (val < 0)


# -- text formats ---------------------------------------------------------------

_TERM_RE = re.compile(r"([+-]?)\s*(\d+)?\s*(?:(z)(?:\^(\d+))?)?")


def to_human(p: IntPoly) -> str:
    """Descending human form, e.g. 'z^12-z^7-z^6-z^5+1'."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = "z" if i == 1 else f"z^{i}"
            body = var if mag == 1 else f"{mag}{var}"
        parts.append(sign + body)
    return "".join(parts)


def to_machine(p: IntPoly) -> str:
    """JSON array of decimal strings, ascending degree (the coeffs field)."""
    return json.dumps([str(c) for c in p.coeffs], separators=(",", ":"))


def parse_poly(text: str) -> IntPoly:
    """Parse either the human form or the machine (JSON array) form."""
    text = text.strip()
    if text.startswith("["):
        data = json.loads(text)
        if not isinstance(data, list):
            raise DomainError("machine form must be a JSON array")
        return IntPoly([int(s) for s in data])
    return _parse_human(text)


def _parse_human(text: str) -> IntPoly:
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise DomainError("empty polynomial text")
    if s == "0":
        return ZERO
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise DomainError(f"cannot parse polynomial near {s[pos:pos+8]!r}")
        sign_s, num_s, var, exp_s = m.groups()
        if num_s is None and var is None:
            raise DomainError(f"cannot parse polynomial near {s[pos:pos+8]!r}")
        coeff = int(num_s) if num_s is not None else 1
        if sign_s == "-":
            coeff = -coeff
        exp = 0
        if var is not None:
            exp = int(exp_s) if exp_s is not None else 1
        terms[exp] = terms.get(exp, 0) + coeff
        pos = m.end()
    return from_terms(terms)


def parse_rational(text: str) -> Fraction:
    """Parse a decimal or p/q rational from CLI text."""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse rational {text!r}") from exc
