"""Certified root location relative to the unit circle and the ray (1, oo).

Everything here is exact: real roots are counted by Sturm sequences over Z,
roots inside/outside the unit circle by a Cauchy-index (Routh) computation
after a Moebius transform to a half plane, and circle roots of reciprocal
polynomials by Sturm counting after the z + 1/z substitution.  No tolerance
enters any classification decision.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from .intpoly import (
    DomainError,
    Enclosure,
    IntPoly,
    ONE,
    Rat,
    ZERO,
    _primitive_list,
    _pseudo_rem_signed,
    derivative,
    exact_div,
    gcd_primitive,
    is_reciprocal,
    primitive_positive,
    reciprocal,
    sign_at,
    squarefree_decomposition,
    squarefree_part,
)

LABEL_CYCLOTOMIC = "Cyclotomic"
LABEL_SALEM = "Salem"
LABEL_PISOT = "Pisot"
LABEL_OTHER = "Other"

DEFAULT_DIGITS = 9


def default_digits() -> int:
    """Printed-root precision; overridable via SALEMPOLY_DIGITS."""
    try:
        return max(1, int(os.environ.get("SALEMPOLY_DIGITS", DEFAULT_DIGITS)))
    except ValueError:
        return DEFAULT_DIGITS


# -- Sturm machinery ----------------------------------------------------------


def _signed_remainder_chain(f: IntPoly, g: IntPoly) -> list[IntPoly]:
    """Generalized Sturm chain f, g, -rem(f,g), ... with positive rescaling only."""
    chain = [f, g]
    a, b = list(f.coeffs), list(g.coeffs)
    while b and len(b) > 1:
        r = _pseudo_rem_signed(a, b)
        if not r:
            break
        r = [-x for x in _primitive_list(r)]
        chain.append(IntPoly(r))
        a, b = b, r
    return chain


def _variations(signs: list[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _chain_signs_at(chain: list[IntPoly], x: Optional[Rat], at_neg_inf: bool = False) -> int:
    signs = []
    for q in chain:
        if x is not None:
            signs.append(sign_at(q, x))
        else:
            lead = q.leading()
            s = (lead > 0) - (lead < 0)
            if at_neg_inf and q.degree % 2 == 1:
                s = -s
            signs.append(s)
    return _variations(signs)


def _strip_rational_root(p: IntPoly, r: Fraction) -> tuple[IntPoly, int]:
    """Divide out all (den*z - num) factors at the rational point r."""
    factor = IntPoly([-r.numerator, r.denominator])
    mult = 0
    while sign_at(p, r) == 0 and p.degree >= 1:
        p = primitive_positive(exact_div(p, factor))
        mult += 1
    return p, mult


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of the squarefree part of p."""
    f = squarefree_part(p)
    if f.degree < 1:
        return [f]
    return _signed_remainder_chain(f, primitive_positive(derivative(f)))


def _count_roots_squarefree(
    f: IntPoly,
    lo: Optional[Rat],
    hi: Optional[Rat],
    include_lo: bool,
    include_hi: bool,
) -> int:
    extra = 0
    if lo is not None:
        lo = Fraction(lo)
        if sign_at(f, lo) == 0:
            if include_lo:
                extra += 1
            f, _ = _strip_rational_root(f, lo)
    if hi is not None:
        hi = Fraction(hi)
        if sign_at(f, hi) == 0:
            if include_hi:
                extra += 1
            f, _ = _strip_rational_root(f, hi)
    if f.degree < 1:
        return extra
    chain = _signed_remainder_chain(f, primitive_positive(derivative(f)))
    v_lo = _chain_signs_at(chain, lo, at_neg_inf=True)
    v_hi = _chain_signs_at(chain, hi)
    return v_lo - v_hi + extra


def count_real_roots(
    p: IntPoly,
    lo: Optional[Rat] = None,
    hi: Optional[Rat] = None,
    include_lo: bool = False,
    include_hi: bool = False,
) -> int:
    """Distinct real roots of p in the given interval (None endpoint = infinite)."""
    if p.is_zero():
        raise DomainError("cannot count roots of the zero polynomial")
    f = squarefree_part(p)
    if f.degree < 1:
        return 0
    return _count_roots_squarefree(f, lo, hi, include_lo, include_hi)


def count_real_roots_with_multiplicity(
    p: IntPoly,
    lo: Optional[Rat] = None,
    hi: Optional[Rat] = None,
    include_lo: bool = False,
    include_hi: bool = False,
) -> int:
    total = 0
    for factor, mult in squarefree_decomposition(p):
        total += mult * count_real_roots(factor, lo, hi, include_lo, include_hi)
    return total


# -- the z + 1/z substitution --------------------------------------------------


def halved_transform(p: IntPoly) -> IntPoly:
    """G with p(z) = z^(d/2) G(z + 1/z), for reciprocal p of even degree d.

    Circle-root pairs of p map to real roots of G in (-2, 2); the real pairs
    (t, 1/t) with t > 1 map to real roots > 2; z = +-1 map to x = +-2.
    """
    if not is_reciprocal(p):
        raise DomainError("transform requires a reciprocal polynomial")
    if p.degree % 2 != 0:
        raise DomainError("transform requires even degree")
    e = p.degree // 2
    c = p.coeffs
    # v_k(x) = z^k + z^-k: v_0 = 2, v_1 = x, v_{k+1} = x v_k - v_{k-1}
    out = IntPoly([c[e]])
    v_prev, v_cur = IntPoly([2]), IntPoly([0, 1])
    for k in range(1, e + 1):
        if c[e + k]:
            out = out + v_cur * c[e + k]
        v_prev, v_cur = v_cur, IntPoly([0, 1]) * v_cur - v_prev
    return out


# -- inside/outside counting for asymmetric parts -------------------------------


def _mobius_to_halfplane(h: IntPoly) -> IntPoly:
    """f(s) = (1-s)^d h((1+s)/(1-s)); roots in |z|<1 map to Re s < 0."""
    d = h.degree
    plus = [ONE]  # (1+s)^k
    minus = [ONE]  # (1-s)^k
    one_plus = IntPoly([1, 1])
    one_minus = IntPoly([1, -1])
    for _ in range(d):
        plus.append(plus[-1] * one_plus)
        minus.append(minus[-1] * one_minus)
    f = ZERO
    for k, c in enumerate(h.coeffs):
        if c:
            f = f + plus[k] * minus[d - k] * c
    return f


def _cauchy_index(f: IntPoly, g: IntPoly) -> int:
    """Ind over all of R of g/f: signed count of the jumps of g/f at poles."""
    if f.is_zero():
        return 0
    chain = _signed_remainder_chain(f, g)
    return _chain_signs_at(chain, None, at_neg_inf=True) - _chain_signs_at(chain, None)


def count_inside_asymmetric(h: IntPoly) -> int:
    """Zeros of h in |z| < 1, for squarefree h with h(0) != 0, gcd(h, h*) = 1.

    Those hypotheses rule out zeros on the circle and mirror pairs (b, 1/b),
    which is exactly what makes the Cauchy-index computation nonsingular.
    """
    d = h.degree
    if d <= 0:
        return 0
    f = _mobius_to_halfplane(h)
    if f.degree != d:
        raise DomainError("unexpected degree drop: h(-1) must be nonzero")
    re_coeffs = [0] * (d + 1)
    im_coeffs = [0] * (d + 1)
    for j, c in enumerate(f.coeffs):
        k = j % 4
        if k == 0:
            re_coeffs[j] = c
        elif k == 1:
            im_coeffs[j] = c
        elif k == 2:
            re_coeffs[j] = -c
        else:
            im_coeffs[j] = -c
    r_poly, t_poly = IntPoly(re_coeffs), IntPoly(im_coeffs)
    if d % 2 == 0:
        q_minus_p = -_cauchy_index(r_poly, t_poly)
    else:
        q_minus_p = _cauchy_index(t_poly, r_poly)
    if (d + q_minus_p) % 2 != 0:
        raise DomainError("parity failure in half-plane count (is h as required?)")
    return (d + q_minus_p) // 2


def _counts_squarefree(q: IntPoly) -> tuple[int, int, int]:
    """(inside, on, outside) for squarefree primitive q with q(0) != 0."""
    inside = on = outside = 0
    q, m1 = _strip_rational_root(q, Fraction(1))
    q, m2 = _strip_rational_root(q, Fraction(-1))
    on += m1 + m2
    if q.degree < 1:
        return inside, on, outside
    g = gcd_primitive(q, reciprocal(q))
    h = primitive_positive(exact_div(q, g))
    if g.degree >= 1:
        if not is_reciprocal(g) or g.degree % 2 != 0:
            raise DomainError("symmetric part must be reciprocal of even degree here")
        tg = halved_transform(g)
        on_pairs = count_real_roots(tg, -2, 2)
        on += 2 * on_pairs
        paired = (g.degree - 2 * on_pairs) // 2
        inside += paired
        outside += paired
    if h.degree >= 1:
        in_h = count_inside_asymmetric(h)
        inside += in_h
        outside += h.degree - in_h
    return inside, on, outside


def count_unit_circle(p: IntPoly) -> tuple[int, int, int]:
    """Exact (inside, on_circle, outside) counts with multiplicity.

    The circle roots live in the reciprocal part gcd(p, +-p*), counted by
    Sturm sequences after the z + 1/z substitution; the asymmetric remainder
    has no circle roots and is counted by the exact half-plane iteration.
    """
    if p.is_zero():
        raise DomainError("cannot locate roots of the zero polynomial")
    if p.constant() == 0:
        raise DomainError("p(0) = 0: factor out z before counting")
    inside = on = outside = 0
    for factor, mult in squarefree_decomposition(p):
        i, o, u = _counts_squarefree(factor)
        inside += mult * i
        on += mult * o
        outside += mult * u
    return inside, on, outside


# -- root refinement -------------------------------------------------------------


def cauchy_root_bound(p: IntPoly) -> Fraction:
    """All complex roots have modulus < 1 + max|c_i|/|lc|."""
    if p.degree < 1:
        raise DomainError("constant polynomial has no roots")
    lead = abs(p.leading())
    return 1 + Fraction(max(abs(c) for c in p.coeffs), lead)


def _bisect_bracket(
    p: IntPoly, lo: Fraction, hi: Fraction, s_lo: int, target: Fraction
) -> tuple[Fraction, Fraction]:
    while hi - lo >= target:
        mid = (lo + hi) / 2
        s_mid = sign_at(p, mid)
        if s_mid == 0:
            return mid, mid  # rational root: collapse to the exact point
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def refine_real_root(p: IntPoly, bracket: Enclosure, digits: int) -> Enclosure:
    """Shrink a one-root bracket below 10^-digits by exact bisection."""
    if digits < 1:
        raise DomainError("digits must be positive")
    lo, hi = bracket.lo, bracket.hi
    s_lo, s_hi = sign_at(p, lo), sign_at(p, hi)
    if s_lo == 0 or s_hi == 0:
        raise DomainError("bracket endpoints must not be roots")
    if s_lo * s_hi > 0:
        raise DomainError("no sign change over the bracket")
    if count_real_roots(p, lo, hi) != 1:
        raise DomainError("bracket must isolate exactly one root")
    lo, hi = _bisect_bracket(p, lo, hi, s_lo, Fraction(1, 10**digits))
    return Enclosure(lo, hi)


def isolate_root_gt_one(p: IntPoly) -> Enclosure:
    """Bracket the unique real root of p in (1, oo); DomainError if not unique."""
    if count_real_roots(p, 1, None, include_lo=True) != 1:
        raise DomainError("expected exactly one real root in (1, oo)")
    hi = cauchy_root_bound(p)
    lo = Fraction(1)
    if sign_at(p, lo) == 0:
        raise DomainError("root at 1 is not in (1, oo)")
    # p is eventually positive (or negative) at hi by construction
    while sign_at(p, lo) * sign_at(p, hi) > 0:
        hi *= 2  # defensive; cauchy bound already suffices
        if hi > 1 << 64:
            raise DomainError("failed to bracket the root > 1")
    return Enclosure(lo, hi)


def round_decimal(enc: Enclosure, digits: int) -> Optional[str]:
    """Decimal string when both endpoints round identically at `digits` places."""
    scale = 10**digits
    lo_r = (enc.lo * scale + Fraction(1, 2)).__floor__()
    hi_r = (enc.hi * scale + Fraction(1, 2)).__floor__()
    if lo_r != hi_r:
        return None
    sign = "-" if lo_r < 0 else ""
    mag = abs(lo_r)
    whole, frac = divmod(mag, scale)
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


def decimal_root(p: IntPoly, bracket: Enclosure, digits: int) -> tuple[str, Enclosure]:
    """Certified correctly-rounded decimal expansion of an isolated root."""
    enc = refine_real_root(p, bracket, digits + 2)
    lo, hi = enc.lo, enc.hi
    if lo != hi:
        s_lo = sign_at(p, lo)
        for extra in range(digits + 6, digits + 61, 6):
            text = round_decimal(Enclosure(lo, hi), digits)
            if text is not None:
                return text, Enclosure(lo, hi)
            lo, hi = _bisect_bracket(p, lo, hi, s_lo, Fraction(1, 10**extra))
            if lo == hi:
                break
    text = round_decimal(Enclosure(lo, hi), digits)
    if text is None:
        raise DomainError("root sits on a rounding boundary beyond 60 guard digits")
    return text, Enclosure(lo, hi)


# -- classification ----------------------------------------------------------------


@dataclass(frozen=True)
class RootLocationCertificate:
    inside: int
    on_circle: int
    outside: int
    real_gt_one: int
    label: str
    distinguished_root: Optional[Enclosure] = None

    def to_json_dict(self) -> dict:
        out = {
            "inside": self.inside,
            "on_circle": self.on_circle,
            "outside": self.outside,
            "label": self.label,
        }
        if self.distinguished_root is not None:
            out["root_lo"] = _frac_str(self.distinguished_root.lo)
            out["root_hi"] = _frac_str(self.distinguished_root.hi)
        return out


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def classify(p: IntPoly, digits: Optional[int] = None) -> RootLocationCertificate:
    """Full certificate: exact counts plus a Cyclotomic/Salem/Pisot/Other label."""
    from . import cyclofactor  # deferred: cyclofactor depends on this module

    if p.is_zero():
        raise DomainError("cannot classify the zero polynomial")
    if not p.is_monic():
        raise DomainError("classification requires a monic polynomial")
    if p.constant() == 0:
        raise DomainError("p(0) = 0: factor out z before classifying")
    digits = default_digits() if digits is None else digits

    fact = cyclofactor.strip_cyclotomic(p)
    rem = fact.remainder
    cyc_degree = p.degree - rem.degree
    if rem.is_one():
        return RootLocationCertificate(0, p.degree, 0, 0, LABEL_CYCLOTOMIC)

    inside, on, outside = count_unit_circle(rem)
    real_gt_one = count_real_roots_with_multiplicity(rem, 1, None)
    label = LABEL_OTHER
    root: Optional[Enclosure] = None
    if outside == 1 and real_gt_one == 1:
        if on == rem.degree - 2 and rem.degree >= 4 and is_reciprocal(rem):
            label = LABEL_SALEM
        elif on == 0:
            label = LABEL_PISOT
    if label in (LABEL_SALEM, LABEL_PISOT):
        root = refine_real_root(rem, isolate_root_gt_one(rem), digits)
    return RootLocationCertificate(
        inside, on + cyc_degree, outside, real_gt_one, label, root
    )


# -- the fast reciprocal Salem test (search hot path) --------------------------------


def _strip_unit_roots(p: IntPoly) -> tuple[IntPoly, int]:
    """Divide out all z = +-1 roots; returns (core, count removed)."""
    core, m1 = _strip_rational_root(p, Fraction(1))
    core, m2 = _strip_rational_root(core, Fraction(-1))
    return core, m1 + m2


def salem_root_bracket(
    p: IntPoly,
    lo: Optional[Fraction] = None,
    hi: Optional[Fraction] = None,
) -> Optional[Enclosure]:
    """Bracket of the Salem number when p is a Salem polynomial, else None.

    Exact decision procedure for any monic p with p(0) != 0: after removing
    z = +-1 roots the core must be reciprocal of even degree 2e, and its
    z + 1/z image must have one simple non-integer root in (2, oo), none
    below -2, and e real roots in total (with multiplicity).  Kronecker's
    theorem then forces the on-circle cofactor to be cyclotomic, which is
    exactly the Salem polynomial condition.  With lo/hi given, additionally
    requires the Salem number to lie in [lo, hi].
    """
    if p.is_zero() or not p.is_monic() or p.constant() == 0:
        return None
    core, _ = _strip_unit_roots(p)
    if core.degree < 4 or core.degree % 2 != 0 or not is_reciprocal(core):
        return None
    e = core.degree // 2
    transform = halved_transform(core)

    # Fast path: one signed-remainder chain both certifies squarefreeness
    # (constant final element) and serves as the Sturm chain.
    chain = _signed_remainder_chain(transform, primitive_positive(derivative(transform)))
    if chain[-1].degree == 0:
        v_ninf = _chain_signs_at(chain, None, at_neg_inf=True)
        v_m2 = _chain_signs_at(chain, Fraction(-2))
        v_p2 = _chain_signs_at(chain, Fraction(2))
        v_inf = _chain_signs_at(chain, None)
        if (
            v_p2 - v_inf != 1  # one root in (2, oo); x = +-2 excluded (no z = +-1)
            or v_ninf - v_m2 != 0
            or v_ninf - v_inf != e
        ):
            return None
    else:
        parts = squarefree_decomposition(transform)
        total_real = 0
        gt2 = 0
        gt2_repeated = 0
        below = 0
        for factor, mult in parts:
            fchain = _signed_remainder_chain(factor, primitive_positive(derivative(factor)))
            v_ninf = _chain_signs_at(fchain, None, at_neg_inf=True)
            v_m2 = _chain_signs_at(fchain, Fraction(-2))
            v_p2 = _chain_signs_at(fchain, Fraction(2))
            v_inf = _chain_signs_at(fchain, None)
            total_real += mult * (v_ninf - v_inf)
            gt2 += v_p2 - v_inf
            if mult > 1:
                gt2_repeated += v_p2 - v_inf
            below += v_ninf - v_m2
        if gt2 != 1 or gt2_repeated or below or total_real != e:
            return None
    # exclude the reciprocal quadratic Pisot case: tau + 1/tau integral.
    # tau is bounded by the core's Cauchy bound, so x = tau + 1/tau < B + 1.
    bound = int(cauchy_root_bound(core)) + 2
    for k in range(3, bound + 1):
        if transform(k) == 0:
            return None
    bracket = _bracket_root_gt_one_unverified(core)
    if lo is not None or hi is not None:
        bracket = _bracket_within(core, bracket, lo, hi)
    return bracket


def _bracket_root_gt_one_unverified(core: IntPoly) -> Enclosure:
    # Caller has established a unique simple real root in (1, oo).
    lo = Fraction(1)
    hi = cauchy_root_bound(core)
    s_lo = sign_at(core, lo)
    if s_lo == 0 or s_lo == sign_at(core, hi):
        raise DomainError("expected a sign change on (1, cauchy bound)")
    a, b = _bisect_bracket(core, lo, hi, s_lo, Fraction(1, 1 << 8))
    return Enclosure(a, b)


def _bracket_within(
    core: IntPoly, bracket: Enclosure, lo: Optional[Fraction], hi: Optional[Fraction]
) -> Optional[Enclosure]:
    """Refine until the bracket is inside [lo, hi] or provably outside."""
    a, b = bracket.lo, bracket.hi
    if a == b:
        ok = (lo is None or a >= lo) and (hi is None or a <= hi)
        return Enclosure(a, a) if ok else None
    s_lo = sign_at(core, a)
    for _ in range(600):
        if (lo is None or a >= lo) and (hi is None or b <= hi):
            return Enclosure(a, b)
        if (lo is not None and b < lo) or (hi is not None and a > hi):
            return None
        mid = (a + b) / 2
        s_mid = sign_at(core, mid)
        if s_mid == 0:
            a = b = mid
            s_lo = 0
            continue
        if s_mid == s_lo:
            a = mid
        else:
            b = mid
        if a == b:
            break
    # The root coincides with an interval endpoint to absurd precision;
    # decide exactly by a Sturm count over the closed interval.
    cnt = count_real_roots(
        core,
        lo if lo is not None else 1,
        hi,
        include_lo=True,
        include_hi=hi is not None,
    )
    return Enclosure(a, b) if cnt == 1 else None


# -- trinomial zero-freeness -----------------------------------------------------


def is_trinomial_zero_free(m: IntPoly, degree_bound: int) -> bool:
    """True iff m divides no genuine trinomial z^n +- z^k +- 1, n <= degree_bound.

    Genuine means three distinct-exponent unit coefficients, so n > k >= 1
    (k = 0 would merge with the constant and leave a binomial shape).
    """
    if not m.is_monic():
        raise DomainError("trinomial check requires a monic modulus")
    from .intpoly import rem_monic

    zpow = [rem_monic(ONE, m)]
    z = IntPoly([0, 1])
    for _ in range(degree_bound):
        zpow.append(rem_monic(zpow[-1] * z, m))
    for n in range(2, degree_bound + 1):
        for k in range(1, n):
            base = zpow[n]
            for s1 in (1, -1):
                mid = base + zpow[k] * s1
                for s2 in (1, -1):
                    if (mid + IntPoly([s2])).is_zero():
                        return False
    return True


# -- certified bounds on circles and segments --------------------------------------


def rational_sqrt_below(x: Fraction) -> Fraction:
    """A rational s with s^2 <= x, tight to ~1 part in 10^6."""
    if x < 0:
        raise DomainError("negative radicand")
    scale = 10**12
    n = (x.numerator * scale * scale) // x.denominator
    return Fraction(isqrt(n), scale)


def rational_sqrt_above(x: Fraction) -> Fraction:
    """A rational s with s^2 >= x."""
    if x < 0:
        raise DomainError("negative radicand")
    scale = 10**12
    n = -((-x.numerator * scale * scale) // x.denominator)  # ceil
    r = isqrt(n)
    if r * r < n:
        r += 1
    return Fraction(r, scale)


def circle_norm_poly(w: IntPoly) -> IntPoly:
    """N with |w(e^{i t})|^2 = N(2 cos t) for integer-coefficient w."""
    c = w.coeffs
    d = len(c) - 1
    if d < 0:
        raise DomainError("zero polynomial")
    auto = [sum(c[j] * c[j + m] for j in range(d - m + 1)) for m in range(d + 1)]
    out = IntPoly([auto[0]])
    v_prev, v_cur = IntPoly([2]), IntPoly([0, 1])
    for m in range(1, d + 1):
        if auto[m]:
            out = out + v_cur * auto[m]
        v_prev, v_cur = v_cur, IntPoly([0, 1]) * v_cur - v_prev
    return out


def _interval_eval_exact(p: IntPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    # Horner with exact rational interval arithmetic (no outward rounding).
    vlo = vhi = Fraction(0)
    for c in reversed(p.coeffs):
        cands = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
        vlo, vhi = min(cands) + c, max(cands) + c
    return vlo, vhi


def interval_min_abs(p: IntPoly, lo: Fraction, hi: Fraction, max_depth: int = 48) -> Fraction:
    """Certified positive lower bound of |p| on [lo, hi], p root-free there.

    Adaptive bisection with exact interval evaluation: a subsegment whose value
    enclosure excludes 0 contributes a bound, otherwise it is split.  Terminates
    because p has no zero on the segment.
    """
    if count_real_roots(p, lo, hi, include_lo=True, include_hi=True):
        raise DomainError("polynomial vanishes on the segment")
    best: Optional[Fraction] = None
    stack = [(lo, hi, 0)]
    while stack:
        a, b, depth = stack.pop()
        vlo, vhi = _interval_eval_exact(p, a, b)
        if vlo > 0:
            piece = vlo
        elif vhi < 0:
            piece = -vhi
        else:
            if depth >= max_depth:
                raise DomainError("interval refinement exhausted (root suspiciously close)")
            mid = (a + b) / 2
            stack.append((a, mid, depth + 1))
            stack.append((mid, b, depth + 1))
            continue
        if best is None or piece < best:
            best = piece
    assert best is not None and best > 0
    return best


def interval_max_upper(p: IntPoly, lo: Fraction, hi: Fraction, pieces: int = 64) -> Fraction:
    """Sound (and reasonably tight) upper bound for p over [lo, hi]."""
    width = (hi - lo) / pieces
    best = None
    a = lo
    for _ in range(pieces):
        b = a + width
        _, vhi = _interval_eval_exact(p, a, b)
        if best is None or vhi > best:
            best = vhi
        a = b
    assert best is not None
    return best


def min_abs_on_circle(w: IntPoly) -> Fraction:
    """Certified positive rational lower bound for |w| on the unit circle.

    Requires w to have no zero on the circle; raises DomainError otherwise.
    """
    n_poly = circle_norm_poly(w)
    lower = interval_min_abs(n_poly, Fraction(-2), Fraction(2))
    return rational_sqrt_below(lower)


def max_abs_on_circle(w: IntPoly) -> Fraction:
    """Certified rational upper bound for |w| on the unit circle."""
    n_poly = circle_norm_poly(w)
    upper = interval_max_upper(n_poly, Fraction(-2), Fraction(2))
    return rational_sqrt_above(max(upper, Fraction(0)))


def min_abs_on_segment(q: IntPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """Certified positive lower bound of |q| on [lo, hi] (q root-free there)."""
    return interval_min_abs(q, lo, hi)
