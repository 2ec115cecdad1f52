"""Gap-bounded enumeration of all Salem polynomials of a given length.

A length-l candidate is a monic unit pattern z^n + e_1 z^(n-g_1) + ... that is
reciprocal or antireciprocal, so the first half of the gaps and signs
determines the rest.  Gaps are bounded through certified lower bounds on the
prefix polynomial over the search interval; prefixes with a zero in the
interval either identify one of Salem's infinite families (skipped, recorded)
or are bounded by a Rouche argument on a circle enclosing at least two of
their zeros outside the unit circle.  Every surviving candidate is certified
exactly, so the output is complete whenever no obstruction was recorded.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .cyclofactor import quotient_is_cyclotomic, salem_minpoly, strip_cyclotomic
from .families import family_poly, trinomial_pisot_inventory
from .intpoly import (
    DomainError,
    Enclosure,
    IntPoly,
    derivative,
    from_terms,
    is_reciprocal,
    parse_poly,
    poly_length,
    reciprocal,
    sign_at,
    to_human,
)
from .unitcircle import (
    count_real_roots,
    count_unit_circle,
    decimal_root,
    min_abs_on_circle,
    min_abs_on_segment,
    refine_real_root,
    salem_root_bracket,
)

SQRT10_UPPER = Fraction(3162277661, 10**9)  # rational upper bound for sqrt(10)


# -- configuration and report types --------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    length: int
    lo: Fraction
    hi: Fraction
    max_gap_override: Optional[int] = None
    digits: int = 9
    jobs: int = 1

    def __post_init__(self):
        if self.length < 5:
            raise DomainError("reciprocal monic polynomials of length < 5 are cyclotomic")
        if not 1 < self.lo < self.hi:
            raise DomainError("interval must satisfy 1 < lo < hi")


@dataclass(frozen=True)
class SporadicEntry:
    poly: IntPoly
    min_poly: IntPoly
    salem_number: Enclosure
    decimal: str


@dataclass(frozen=True)
class FamilyHit:
    prefix: IntPoly
    eps: int
    kind: str  # "pisot" (Salem's construction) or "salem" (Q * (z^n +- 1))


@dataclass(frozen=True)
class ObstructionRecord:
    prefix: IntPoly
    units: int
    reason: str


@dataclass(frozen=True)
class SearchReport:
    config: SearchConfig
    sporadic: tuple[SporadicEntry, ...]
    family_hits: tuple[FamilyHit, ...]
    obstructions: tuple[ObstructionRecord, ...]
    truncated_bounds: tuple[tuple[str, int], ...]

    @property
    def exhaustive(self) -> bool:
        return not self.obstructions and not self.truncated_bounds

    def grouped_by_number(self) -> list[tuple[IntPoly, list[SporadicEntry]]]:
        """Entries grouped by minimal polynomial, groups ordered by Salem number."""
        groups: dict[IntPoly, list[SporadicEntry]] = {}
        for entry in self.sporadic:
            groups.setdefault(entry.min_poly, []).append(entry)
        return sorted(groups.items(), key=lambda kv: kv[1][0].salem_number.mid)


# -- bounds ----------------------------------------------------------------------


def goncalves_upper_bound(length: int) -> Fraction:
    """Rational b with tau <= b for every length-l Salem number.

    The coefficient square sum of a monic (anti)reciprocal polynomial of
    length l is at most l^2 - 4l + 6, so tau^2 + 1/tau^2 cannot exceed it.
    """
    if length < 5:
        raise DomainError("length must be at least 5")
    c = length * length - 4 * length + 6
    from .unitcircle import rational_sqrt_above

    tau_sq = (c + rational_sqrt_above(Fraction(c * c - 4))) / 2
    return rational_sqrt_above(tau_sq)


def _max_power(base: Fraction, budget: Fraction) -> int:
    """Largest g >= 0 with base^g <= budget (base > 1), or -1 if none."""
    if budget < 1:
        return -1
    g = 0
    value = base
    while value <= budget:
        g += 1
        value *= base
        if g > 100000:
            raise DomainError("gap bound exploded; check the interval")
    return g


GAP_FINITE = "finite"
GAP_ROUCHE = "rouche"
GAP_FAMILY = "family"
GAP_OBSTRUCTION = "obstruction"


@dataclass(frozen=True)
class GapOutcome:
    kind: str
    bound: int = -1


def _dyadic_floor(x: Fraction, bits: int = 10) -> Fraction:
    scale = 1 << bits
    return Fraction((x.numerator * scale) // x.denominator, scale)


def _dyadic_ceil(x: Fraction, bits: int = 10) -> Fraction:
    scale = 1 << bits
    return Fraction(-((-x.numerator * scale) // x.denominator), scale)


def _scaled_by_radius(q: IntPoly, r: Fraction) -> IntPoly:
    # q(r z) * den(r)^deg, an integer polynomial with the same root directions
    num, den = r.numerator, r.denominator
    d = q.degree
    return IntPoly([c * num**i * den ** (d - i) for i, c in enumerate(q.coeffs)])


def _rouche_bound(q: IntPoly, remaining: int) -> Optional[int]:
    """Certified G: every gap > G leaves at least two zeros outside |z| = 1.

    A certificate is a radius r > 1 with at least two zeros of q outside
    |z| = r and a positive lower bound m for |q| there; the tail of any
    completion with gap g then stays below |z^(n-K) q| on that circle as soon
    as remaining < r^g m, so Rouche keeps both zeros outside.  Floating point
    roots only steer the choice of radii; certificates are exact, and the
    best (smallest) certified G among a few radii is returned.
    """
    mods = sorted((float(abs(z)) for z in np.roots(list(reversed(q.coeffs)))), reverse=True)
    if len(mods) < 2 or mods[1] <= 1.0:
        return None
    cuts = [m for m in mods if m > 1.0] + [1.0]
    guesses = []
    for j in range(1, len(cuts)):
        lo_c, hi_c = cuts[j], cuts[j - 1]
        if hi_c - lo_c > 1e-3:
            guesses.append((hi_c + lo_c) / 2)
    guesses += [1.0 + (mods[1] - 1.0) * t for t in (0.6, 0.3, 0.15)]
    best: Optional[int] = None
    seen = set()
    for guess in guesses:
        r = Fraction(max(round(guess * 64), 65), 64)
        if r in seen:
            continue
        seen.add(r)
        scaled = _scaled_by_radius(q, r)
        if scaled.constant() == 0:
            continue
        try:
            _, on_r, outside_r = count_unit_circle(scaled)
            if on_r != 0 or outside_r < 2:
                continue
            min_scaled = min_abs_on_circle(scaled)
        except DomainError:
            continue
        m = min_scaled / Fraction(r.denominator) ** q.degree
        if m <= 0:
            continue
        g = _max_power(r, Fraction(remaining) / m)
        if best is None or g < best:
            best = g
        if best <= 2 * q.degree:
            break  # already tight enough to stop shopping
    return best


def _segment_lower_bound(prefix: IntPoly, lo: Fraction, hi: Fraction) -> Fraction:
    # Lower bound |prefix| over [lo, hi] computed on a dyadic superset, which
    # keeps every denominator a small power of two; falls back to the exact
    # endpoints when the superset happens to capture a root just outside.
    for bits in (10, 16, 24):
        wide_lo, wide_hi = _dyadic_floor(lo, bits), _dyadic_ceil(hi, bits)
        if wide_lo <= 1:
            continue
        try:
            return min_abs_on_segment(prefix, wide_lo, wide_hi)
        except DomainError:
            continue
    return min_abs_on_segment(prefix, lo, hi)


def gap_bound(
    prefix: IntPoly, units: int, length: int, lo: Fraction, hi: Fraction
) -> GapOutcome:
    """Bound the next gap after `prefix` (which carries `units` units).

    With no prefix zero in [lo, hi] the root condition a^g |Q(tau)| <= l - i
    bounds g directly.  Otherwise the prefix zero in the interval is outside
    the unit circle; if it is the unique such zero the branch is one of
    Salem's families (or an obstruction when the prefix is too short), and if
    not, a Rouche circle around the outside zeros bounds the gap instead.
    """
    remaining = length - units
    if prefix.degree < 1:
        return GapOutcome(GAP_FINITE, _max_power(lo, Fraction(remaining)))
    if count_real_roots(prefix, lo, hi, include_lo=True, include_hi=True) == 0:
        min_val = _segment_lower_bound(prefix, lo, hi)
        return GapOutcome(GAP_FINITE, _max_power(lo, Fraction(remaining) / min_val))
    _, _, outside = count_unit_circle(prefix)
    if outside == 1:
        return GapOutcome(GAP_FAMILY)
    bound = _rouche_bound(prefix, remaining)
    if bound is None:
        return GapOutcome(GAP_OBSTRUCTION)
    return GapOutcome(GAP_ROUCHE, bound)


# -- candidate construction and certification -------------------------------------


# -- certified rejection via a small disk around a stray zero ---------------------
#
# In a Rouche branch most closure candidates keep a conjugate pair of zeros
# just outside the unit circle (inherited from the prefix), which the full
# reciprocal-transform test rediscovers expensively.  Instead: float Newton
# locates the stray zero, and an exact linear Rouche certificate on a small
# disk D(z0, delta) confirms it.  If D misses the real axis and lies outside
# the closed unit disk, the zero and its conjugate give two zeros outside the
# circle, so the candidate is certifiably not Salem.  Floating point only
# picks z0; every inequality below is exact.

_CxQ = tuple[Fraction, Fraction]


def _cx_mul(a: _CxQ, b: _CxQ) -> _CxQ:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cx_pow(a: _CxQ, n: int) -> _CxQ:
    result: _CxQ = (Fraction(1), Fraction(0))
    while n:
        if n & 1:
            result = _cx_mul(result, a)
        a = _cx_mul(a, a)
        n >>= 1
    return result


def _cx_eval(p: IntPoly, z: _CxQ) -> _CxQ:
    re, im = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        re, im = re * z[0] - im * z[1] + c, re * z[1] + im * z[0]
    return re, im


def _cx_abs2(a: _CxQ) -> Fraction:
    return a[0] * a[0] + a[1] * a[1]


def _term_list(prefix: IntPoly, qrec: IntPoly, sigma: int, shift: int) -> list[tuple[int, int]]:
    terms: dict[int, int] = {}
    for i, c in enumerate(prefix.coeffs):
        if c:
            terms[i + shift] = terms.get(i + shift, 0) + c
    for j, c in enumerate(qrec.coeffs):
        if c:
            terms[j] = terms.get(j, 0) + sigma * c
    return [(e, c) for e, c in terms.items() if c]


def _disk_reject(
    prefix: IntPoly,
    qrec: IntPoly,
    dprefix: IntPoly,
    dqrec: IntPoly,
    sigma: int,
    shift: int,
    z0f: complex,
    terms: list[tuple[int, int]],
) -> bool:
    """True iff a conjugate pair of zeros of P outside |z| = 1 is certified.

    P(z) = z^shift dot prefix(z) + sigma qrec(z).  The certificate is linear
    Rouche dominance on the disk D(z0, delta): |P'(z0)| delta exceeds
    |P(z0)| + B delta^2 / 2 with B a bound for |P''| there, plus the exact
    geometric checks Im z0 > delta and |z0| - delta > 1.  The disk radius
    shrinks with the degree (B grows like deg^2 R^deg while |P'| grows like
    deg R^deg); float estimates pick delta, the inequalities are exact.
    """
    import math

    r_f = abs(z0f)
    b_f = sum(abs(c) * e * (e - 1) * (r_f + 1e-3) ** (e - 2) for e, c in terms if e >= 2)
    _, dp_f = _float_eval(terms, z0f)
    if b_f <= 0 or abs(dp_f) <= 0:
        return False
    delta_f = min(2.0**-12, abs(dp_f) / (6.0 * b_f))
    if delta_f < 1e-15 or abs(z0f.imag) < 2 * delta_f or r_f < 1 + 2 * delta_f:
        return False
    delta_bits = max(12, math.ceil(-math.log2(delta_f)))
    delta = Fraction(1, 1 << delta_bits)
    grid = 1 << (delta_bits + 10)
    z0: _CxQ = (
        Fraction(round(z0f.real * grid), grid),
        Fraction(round(abs(z0f.imag) * grid), grid),
    )
    if z0[1] <= delta:
        return False
    abs2 = _cx_abs2(z0)
    if abs2 <= (1 + delta) ** 2:
        return False
    # exact P(z0), P'(z0) through the two-block structure
    zpow = _cx_pow(z0, shift)
    q_val = _cx_eval(prefix, z0)
    qr_val = _cx_eval(qrec, z0)
    dq_val = _cx_eval(dprefix, z0)
    dqr_val = _cx_eval(dqrec, z0)
    p_val = _cx_mul(zpow, q_val)
    p_val = (p_val[0] + sigma * qr_val[0], p_val[1] + sigma * qr_val[1])
    # P' = shift z^(shift-1) Q + z^shift Q' + sigma Qr'
    zpow_m1 = _cx_pow(z0, shift - 1) if shift else (Fraction(1), Fraction(0))
    dp = _cx_mul(zpow_m1, (shift * q_val[0], shift * q_val[1]))
    tail = _cx_mul(zpow, dq_val)
    dp = (dp[0] + tail[0] + sigma * dqr_val[0], dp[1] + tail[1] + sigma * dqr_val[1])

    from .unitcircle import rational_sqrt_above, rational_sqrt_below

    upper_p = rational_sqrt_above(_cx_abs2(p_val))
    lower_dp = rational_sqrt_below(_cx_abs2(dp))
    if lower_dp <= 0:
        return False
    radius = rational_sqrt_above(abs2) + delta
    second = Fraction(0)
    for e, c in terms:
        if e >= 2:
            second += abs(c) * e * (e - 1) * radius ** (e - 2)
    return lower_dp * delta > upper_p + second * delta * delta / 2


def _float_eval(terms: list[tuple[int, int]], z: complex) -> tuple[complex, complex]:
    val = 0j
    dval = 0j
    for e, c in terms:
        val += c * z**e
        if e:
            dval += c * e * z ** (e - 1)
    return val, dval


def _newton_stray_zero(
    terms: list[tuple[int, int]], seed: complex
) -> Optional[complex]:
    z = seed
    for _ in range(24):
        val, dval = _float_eval(terms, z)
        if dval == 0:
            return None
        step = val / dval
        z -= step
        if abs(step) < 1e-11:
            break
    else:
        return None
    if not (1.0001 < abs(z) < 2.5) or abs(z.imag) < 2e-4:
        return None
    return z


def _close_even(prefix: IntPoly, mid_gap: int, sign: int) -> IntPoly:
    k = prefix.degree
    return prefix.shift(k + mid_gap) + reciprocal(prefix) * sign


def _close_odd(prefix: IntPoly, center_gap: int, center_coeff: int) -> IntPoly:
    k = prefix.degree
    center = from_terms({k + center_gap: center_coeff})
    return prefix.shift(k + 2 * center_gap) + center + reciprocal(prefix)


def _scan_even_closures(
    prefix: IntPoly,
    bound: int,
    length: int,
    screen: _Screen,
    collector: "_Collector",
    disk_seed: Optional[complex] = None,
) -> None:
    """Try P = z^(K+g) Q + sign Q* for g = 0..bound with incremental screens.

    P(x) = x^(K+g) Q(x) + sign Q*(x), so the necessary sign conditions at the
    screen points cost one power update per gap instead of a full evaluation
    of a potentially huge polynomial.  With a disk seed (a stray complex zero
    of the prefix outside the unit circle), candidates surviving the sign
    screens first face the cheap certified disk rejection.
    """
    qrec = reciprocal(prefix)
    k = prefix.degree
    dprefix, dqrec = derivative(prefix), derivative(qrec)
    q_one, qr_one = prefix(1), qrec(1)
    q_m1, qr_m1 = prefix(-1), qrec(-1)
    q_lo, qr_lo = prefix(screen.s_lo), qrec(screen.s_lo)
    q_hi, qr_hi = prefix(screen.s_hi), qrec(screen.s_hi)
    pow_lo = screen.s_lo**k
    pow_hi = screen.s_hi**k
    seeds = {1: disk_seed, -1: disk_seed}
    for mid_gap in range(0, bound + 1):
        for sign in (1, -1):
            at_one = q_one + sign * qr_one
            at_m1 = (q_m1 if (k + mid_gap) % 2 == 0 else -q_m1) + sign * qr_m1
            if sign > 0:
                if at_one > 0 or at_m1 < 0:
                    continue
            else:
                if at_one != 0 or at_m1 > 0:
                    continue
            if not pow_lo * q_lo + sign * qr_lo < 0:
                continue
            if not pow_hi * q_hi + sign * qr_hi > 0:
                continue
            shift = k + mid_gap
            if seeds[sign] is not None:
                terms = _term_list(prefix, qrec, sign, shift)
                z0f = _newton_stray_zero(terms, seeds[sign])
                if z0f is not None:
                    seeds[sign] = z0f
                    if _disk_reject(prefix, qrec, dprefix, dqrec, sign, shift, z0f, terms):
                        continue
            p = _close_even(prefix, mid_gap, sign)
            bracket = _certify(p, length, screen)
            if bracket is not None:
                collector.add_candidate(p, bracket)
        pow_lo *= screen.s_lo
        pow_hi *= screen.s_hi


def _scan_odd_closures(
    prefix: IntPoly,
    stack_size: int,
    bound: int,
    length: int,
    screen: _Screen,
    collector: "_Collector",
) -> None:
    """Try P = z^(K+2c) Q + s e z^(K+c) + Q* for c = 0..bound (central stack)."""
    qrec = reciprocal(prefix)
    k = prefix.degree
    q_one, qr_one = prefix(1), qrec(1)
    q_m1, qr_m1 = prefix(-1), qrec(-1)
    q_lo, qr_lo = prefix(screen.s_lo), qrec(screen.s_lo)
    q_hi, qr_hi = prefix(screen.s_hi), qrec(screen.s_hi)
    base_lo = screen.s_lo**k
    base_hi = screen.s_hi**k
    pow2_lo, pow1_lo = base_lo, base_lo  # s^(K+2c) and s^(K+c)
    pow2_hi, pow1_hi = base_hi, base_hi
    start = 1 if k == 0 else 0  # c = 0 on the bare unit is a constant, skip
    for c in range(0, bound + 1):
        if c >= start:
            for center_sign in (1, -1):
                coeff = center_sign * stack_size
                sign_pm1 = 1 if (k + c) % 2 == 0 else -1
                at_one = q_one + coeff + qr_one
                at_m1 = (q_m1 if k % 2 == 0 else -q_m1) + coeff * sign_pm1 + qr_m1
                if at_one > 0 or at_m1 < 0:
                    continue
                if not pow2_lo * q_lo + coeff * pow1_lo + qr_lo < 0:
                    continue
                if not pow2_hi * q_hi + coeff * pow1_hi + qr_hi > 0:
                    continue
                p = _close_odd(prefix, c, coeff)
                bracket = _certify(p, length, screen)
                if bracket is not None:
                    collector.add_candidate(p, bracket)
        pow2_lo *= screen.s_lo * screen.s_lo
        pow2_hi *= screen.s_hi * screen.s_hi
        pow1_lo *= screen.s_lo
        pow1_hi *= screen.s_hi


@dataclass(frozen=True)
class _Screen:
    """Interval endpoints plus small-denominator screen points around them.

    A Salem candidate with number tau in [lo, hi] is strictly negative on
    (1, tau) and strictly positive above tau, so p(s_lo) < 0 and p(s_hi) > 0
    are exact necessary conditions whenever 1 < s_lo <= lo and s_hi >= hi.
    Dyadic screen points keep these evaluations cheap even when the interval
    endpoints carry huge denominators.
    """

    lo: Fraction
    hi: Fraction
    s_lo: Fraction
    s_hi: Fraction


def _make_screen(lo: Fraction, hi: Fraction) -> _Screen:
    bits = 8
    s_lo = _dyadic_floor(lo, bits)
    while s_lo <= 1:
        bits += 4
        s_lo = _dyadic_floor(lo, bits)
    return _Screen(lo, hi, s_lo, _dyadic_ceil(hi, 4))


def _certify(p: IntPoly, length: int, screen: _Screen) -> Optional[Enclosure]:
    if poly_length(p) != length:
        return None
    return salem_root_bracket(p, screen.lo, screen.hi)


# -- the enumeration -----------------------------------------------------------------


@dataclass
class _Collector:
    accepted: dict[tuple[int, ...], Enclosure] = field(default_factory=dict)
    family_hits: set[tuple[tuple[int, ...], int]] = field(default_factory=set)
    obstructions: list[ObstructionRecord] = field(default_factory=list)
    truncated: list[tuple[str, int]] = field(default_factory=list)

    def add_candidate(self, p: IntPoly, bracket: Enclosure) -> None:
        self.accepted.setdefault(p.coeffs, bracket)

    def add_family(self, prefix: IntPoly) -> None:
        for eps in (1, -1):
            self.family_hits.add((prefix.coeffs, eps))


def _effective_bound(
    outcome: GapOutcome, cfg: SearchConfig, collector: _Collector, label: str
) -> int:
    bound = outcome.bound
    if cfg.max_gap_override is not None and bound > cfg.max_gap_override:
        collector.truncated.append((label, bound))
        return cfg.max_gap_override
    return bound


def _explore(
    prefix: IntPoly, units: int, cfg: SearchConfig, collector: _Collector, screen: _Screen
) -> None:
    length, lo, hi = cfg.length, cfg.lo, cfg.hi
    outcome = gap_bound(prefix, units, length, lo, hi)

    closing_even = length % 2 == 0 and 2 * units == length
    closing_odd = length % 2 == 1 and 1 <= length - 2 * units
    extending = 2 * (units + 1) <= length

    if outcome.kind == GAP_FAMILY:
        if closing_even:
            collector.add_family(prefix)
        else:
            collector.obstructions.append(
                ObstructionRecord(
                    prefix,
                    units,
                    "prefix has a unique zero outside the unit circle inside the "
                    "interval but is too short to close into a family",
                )
            )
        return
    if outcome.kind == GAP_OBSTRUCTION:
        collector.obstructions.append(
            ObstructionRecord(prefix, units, "no certified bound for the next gap")
        )
        return

    bound = _effective_bound(outcome, cfg, collector, to_human(prefix))
    disk_seed = None
    if outcome.kind == GAP_ROUCHE:
        for z in np.roots(list(reversed(prefix.coeffs))):
            if abs(z) > 1.0005 and z.imag > 1e-3:
                if disk_seed is None or abs(z.imag) > abs(disk_seed.imag):
                    disk_seed = complex(z)
    if closing_even:
        _scan_even_closures(prefix, bound, length, screen, collector, disk_seed)
    if closing_odd:
        _scan_odd_closures(prefix, length - 2 * units, bound, length, screen, collector)
    if extending:
        min_gap = 1 if units == 1 else 0
        for gap in range(min_gap, bound + 1):
            if gap == 0:
                # merged unit: equal sign with the unit already there
                tail_sign = 1 if prefix.constant() > 0 else -1
                _explore(prefix + IntPoly([tail_sign]), units + 1, cfg, collector, screen)
            else:
                for sign in (1, -1):
                    _explore(
                        prefix.shift(gap) + IntPoly([sign]), units + 1, cfg, collector, screen
                    )


def _family_kind(prefix: IntPoly) -> str:
    return "salem" if is_reciprocal(prefix) else "pisot"


def _is_family_member(p: IntPoly, family_prefix: IntPoly) -> bool:
    """Is p = z^n P + eps P* for some n >= deg P (the family's infinite tail)?

    Indices n < deg P overlap the two unit blocks; those few accidental
    low-index members are conventionally listed as sporadic, which is exactly
    how the length-6 table treats z^3(z^2-2) - 2z^2 + 1 = z^2 P + P* over
    P = z^3 - z - 1.
    """
    n = p.degree - family_prefix.degree
    if n < max(1, family_prefix.degree):
        return False
    for eps in (1, -1):
        if family_poly(family_prefix, eps, n) == p:
            return True
    return False


def _search_task(cfg: SearchConfig, first_gap: int, first_sign: int) -> _Collector:
    collector = _Collector()
    screen = _make_screen(cfg.lo, cfg.hi)
    prefix = IntPoly([first_sign] + [0] * (first_gap - 1) + [1])
    _explore(prefix, 2, cfg, collector, screen)
    return collector


def _root_closures(cfg: SearchConfig) -> _Collector:
    # Odd lengths admit closures of the bare leading unit: a central stack of
    # l - 2 units, the z^(2c) + (l-2) e z^c + 1 shapes.
    collector = _Collector()
    if cfg.length % 2 == 1:
        screen = _make_screen(cfg.lo, cfg.hi)
        bound = _effective_bound(
            GapOutcome(GAP_FINITE, _max_power(cfg.lo, Fraction(cfg.length - 1))),
            cfg,
            collector,
            "1",
        )
        _scan_odd_closures(IntPoly([1]), cfg.length - 2, bound, cfg.length, screen, collector)
    return collector


def run_search(cfg: SearchConfig) -> SearchReport:
    """Enumerate every length-l Salem polynomial with Salem number in [lo, hi].

    Family members (z^n P + eps P* over the length-3 Pisot inventory, and any
    family branch met during the search) are reported as hits, not expanded;
    obstruction and truncation records make any incompleteness explicit.
    """
    g1_bound = _max_power(cfg.lo, Fraction(cfg.length - 1))
    tasks = [(g, s) for g in range(1, g1_bound + 1) for s in (1, -1)]
    collectors: list[_Collector] = [_root_closures(cfg)]
    if cfg.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            collectors += list(pool.map(_run_task_star, [(cfg, g, s) for g, s in tasks]))
    else:
        collectors += [_search_task(cfg, g, s) for g, s in tasks]

    merged = _Collector()
    for c in collectors:
        merged.accepted.update(c.accepted)
        merged.family_hits |= c.family_hits
        merged.obstructions.extend(c.obstructions)
        merged.truncated.extend(c.truncated)

    inventory = trinomial_pisot_inventory()
    hit_prefixes = [IntPoly(c) for c, _ in merged.family_hits]
    filters = {f.coeffs: f for f in inventory + hit_prefixes}

    entries: list[SporadicEntry] = []
    for coeffs, bracket in merged.accepted.items():
        p = IntPoly(coeffs)
        if any(_is_family_member(p, f) for f in filters.values()):
            continue
        min_poly = salem_minpoly(p)
        text, enc = decimal_root(min_poly, bracket, cfg.digits)
        entries.append(SporadicEntry(p, min_poly, enc, text))
    entries.sort(key=lambda e: (e.salem_number.mid, e.poly.degree, e.poly.coeffs))

    hits = sorted(merged.family_hits)
    family_hits = tuple(
        FamilyHit(IntPoly(c), eps, _family_kind(IntPoly(c))) for c, eps in hits
    )
    return SearchReport(
        config=cfg,
        sporadic=tuple(entries),
        family_hits=family_hits,
        obstructions=tuple(sorted(merged.obstructions, key=lambda o: o.prefix.coeffs)),
        truncated_bounds=tuple(sorted(set(merged.truncated))),
    )


def _run_task_star(args: tuple[SearchConfig, int, int]) -> _Collector:
    return _search_task(*args)


# -- sporadic codes -------------------------------------------------------------------


@dataclass(frozen=True)
class SporadicCode:
    """[n, k, d, eps] encodes z^n (z^k - z^(k-d) - 1) + eps (z^k + z^d - 1)."""

    n: int
    k: int
    d: int
    eps: int

    def __post_init__(self):
        if not (self.n >= 1 and self.k >= 1 and 1 <= self.d <= self.k):
            raise DomainError(f"invalid sporadic code {self}")
        if self.eps not in (1, -1):
            raise DomainError("eps must be +1 or -1")

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d},{self.eps}]"

    @classmethod
    def parse(cls, text: str) -> "SporadicCode":
        parts = text.strip().strip("[]").split(",")
        if len(parts) != 4:
            raise DomainError(f"expected n,k,d,eps: {text!r}")
        n, k, d, eps = (int(x) for x in parts)
        return cls(n, k, d, eps)


def decode_sporadic(code: SporadicCode) -> IntPoly:
    head: dict[int, int] = {code.k: 1}
    head[code.k - code.d] = head.get(code.k - code.d, 0) - 1
    head[0] = head.get(0, 0) - 1
    tail: dict[int, int] = {code.k: 1}
    tail[code.d] = tail.get(code.d, 0) + 1
    tail[0] = tail.get(0, 0) - 1
    return from_terms(head).shift(code.n) + from_terms(tail) * code.eps


def encode_sporadic(p: IntPoly) -> Optional[SporadicCode]:
    """Recover the [n,k,d,eps] code of a length-6 polynomial, if it has one."""
    if p.is_zero() or not p.is_monic() or poly_length(p) != 6:
        return None
    units: list[int] = []
    for e in range(p.degree, -1, -1):
        units.extend([e] * abs(p.coeffs[e]))
    e1, e2, e3 = units[0], units[1], units[2]
    n, k, d = e3, e1 - e3, e1 - e2
    eps = -p.constant()
    if not (n >= 1 and k >= 1 and 1 <= d <= k and eps in (1, -1)):
        return None
    code = SporadicCode(n, k, d, eps)
    return code if decode_sporadic(code) == p else None


# -- shortness --------------------------------------------------------------------------


@dataclass(frozen=True)
class ShortnessResult:
    value: Optional[int]  # None when no multiple found up to max_length
    witnesses: tuple[IntPoly, ...]
    searched_to: int
    exhaustive: bool


def _family_multiples(m: IntPoly, length: int) -> list[IntPoly]:
    """Members of the inventory families of the given length that m divides."""
    out = []
    for p in trinomial_pisot_inventory():
        if 2 * poly_length(p) != length:
            continue
        base_n = m.degree - p.degree
        for n in range(max(1, base_n - 4), base_n + 40):
            for eps in (1, -1):
                cand = family_poly(p, eps, n)
                if cand.degree > m.degree + 40:
                    break
                if quotient_is_cyclotomic(cand, m):
                    out.append(cand)
    return out


def shortness(
    m: IntPoly,
    max_length: int = 6,
    degree_cap: Optional[int] = None,
    jobs: int = 1,
) -> ShortnessResult:
    """Least length of a Salem polynomial whose Salem number has minimal
    polynomial m, searched over lengths 5..max_length.

    Every candidate is an exact cyclotomic multiple of m; the search interval
    is a tight enclosure of the Salem number, so each per-length run is small.
    A degree_cap turns the run into a bounded (non-exhaustive) search.
    """
    if salem_root_bracket(m) is None or strip_cyclotomic(m).remainder != m:
        raise DomainError("m must be the minimal polynomial of a Salem number")
    bracket = refine_real_root(m, salem_root_bracket(m), 14)
    exhaustive = True
    for length in range(5, max_length + 1):
        cfg = SearchConfig(
            length=length,
            lo=bracket.lo,
            hi=bracket.hi,
            max_gap_override=degree_cap,
            jobs=jobs,
        )
        report = run_search(cfg)
        exhaustive = exhaustive and report.exhaustive
        witnesses = [e.poly for e in report.sporadic if quotient_is_cyclotomic(e.poly, m)]
        witnesses.extend(_family_multiples(m, length))
        if witnesses:
            witnesses = sorted(set(witnesses), key=lambda p: (p.degree, p.coeffs))
            return ShortnessResult(length, tuple(witnesses), length, exhaustive)
    return ShortnessResult(None, (), max_length, exhaustive)
