"""Salem's construction P_n = z^n P + eps P* over a Pisot polynomial P.

A ``FamilySpec`` packages the derived data of one family: the threshold n0
past which every P_n is a Salem polynomial, the full cyclotomic schedule
(pairs (a, d) with Phi_d | P_n iff n = a mod d), the finitely many n with a
repeated factor, and the finitely many n where the root > 1 is a (quadratic)
Pisot number rather than a Salem number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional

from .cyclofactor import strip_cyclotomic
from .intpoly import (
    DomainError,
    Enclosure,
    IntPoly,
    ONE,
    compose_znegz,
    compose_zsq,
    cyclotomic,
    cyclotomic_candidates,
    derivative,
    euler_phi,
    exact_div,
    gcd_primitive,
    powmod_monic,
    reciprocal,
    rem_monic,
    trial_div,
)
from .unitcircle import (
    LABEL_PISOT,
    circle_norm_poly,
    classify,
    interval_max_upper,
    interval_min_abs,
    isolate_root_gt_one,
    rational_sqrt_above,
    refine_real_root,
    salem_root_bracket,
)

DEFAULT_EXCEPTION_BOUND = 500


def family_poly(p: IntPoly, eps: int, n: int) -> IntPoly:
    """P_n = z^n P + eps P*."""
    if eps not in (1, -1):
        raise DomainError("eps must be +1 or -1")
    if n < 0:
        raise DomainError("n must be nonnegative")
    return p.shift(n) + reciprocal(p) * eps


def r_value(p: IntPoly) -> Fraction:
    """r = (Q'(1) - P'(1)) / P(1) with Q = P*; P_n'(1) changes sign at n = r."""
    q = reciprocal(p)
    p1 = p(1)
    if p1 == 0:
        raise DomainError("P(1) = 0: not a Pisot polynomial")
    return Fraction(derivative(q)(1) - derivative(p)(1), p1)


def _quadratic_pisot_divisor(p_n: IntPoly) -> Optional[int]:
    """k >= 3 with (z^2 - k z + 1) | P_n, when the root > 1 is quadratic Pisot."""
    top = max(abs(c) for c in p_n.coeffs)
    k_max = top + 2
    for k in range(3, k_max + 1):
        if trial_div(p_n, IntPoly([1, -k, 1])) is not None:
            return k
    return None


@dataclass(frozen=True)
class DegreeSchedule:
    """deg minpoly(rho_n) = n + base_offset - F(n), F periodic from `terms`."""

    base_offset: int
    terms: tuple[tuple[int, int, int], ...]  # (residue a, modulus d, weight phi(d))

    @property
    def period(self) -> int:
        return lcm(*(d for _, d, _ in self.terms)) if self.terms else 1

    def excess(self, n: int) -> int:
        """F(n): degree lost to the n-dependent cyclotomic factors."""
        return sum(w for a, d, w in self.terms if n % d == a)


@dataclass(frozen=True)
class FamilySpec:
    p: IntPoly  # irreducible Pisot minimal polynomial (the base of the family)
    eps: int
    q: IntPoly  # P*
    r: Fraction
    n0: int
    schedule: tuple[tuple[int, int], ...]  # (a, d) pairs, ascending d
    repeated_indices: tuple[int, ...]
    shared_factor: IntPoly = ONE  # gcd(P_raw, P_raw*) of a reducible input

    def poly(self, n: int) -> IntPoly:
        """The n-th polynomial of the family, including any shared factor."""
        return family_poly(self.p, self.eps, n) * self.shared_factor

    def degree_schedule(self) -> DegreeSchedule:
        base = self.p.degree - (1 if (0, 1) in self.schedule else 0)
        terms = tuple((a, d, euler_phi(d)) for a, d in self.schedule if d > 1)
        return DegreeSchedule(base, terms)


def _certify_below_threshold(p: IntPoly, eps: int, n0: int) -> None:
    # Every P_n below the Salem threshold must be cyclotomic or a quadratic
    # Pisot polynomial (the finitely many exceptions of the construction).
    for n in range(1, n0):
        p_n = family_poly(p, eps, n)
        if strip_cyclotomic(p_n).remainder.is_one():
            continue
        if _quadratic_pisot_divisor(p_n) is not None:
            continue
        raise DomainError(f"P_{n} is neither cyclotomic nor a Pisot exception")


def find_n0(p: IntPoly, eps: int, search_limit: int = 1000) -> int:
    """Least n with P_n a Salem polynomial; smaller n are certified benign."""
    for n in range(1, search_limit + 1):
        if salem_root_bracket(family_poly(p, eps, n)) is not None:
            _certify_below_threshold(p, eps, n)
            return n
    raise DomainError(f"no Salem polynomial found for n <= {search_limit}")


def _cyclotomic_divisor_indices(p: IntPoly) -> set[int]:
    if p.is_zero():
        raise DomainError("elimination polynomial vanished identically")
    out = set()
    for d in cyclotomic_candidates(p.degree):
        phi_d = cyclotomic(d)
        if phi_d.degree <= p.degree and trial_div(p, phi_d) is not None:
            out.add(d)
    return out


def cyclotomic_schedule(p: IntPoly, eps: int) -> tuple[tuple[int, int], ...]:
    """All pairs (a, d) with Phi_d | P_n iff n = a (mod d).

    Candidate d come from eliminating z^n between P_n(z) = 0 and each of
    P_n(-z) = 0, P_n(z^2) = 0, P_n(-z^2) = 0 (any cyclotomic factor of P_n
    divides one of those three), for both parities of n; each candidate is
    then confirmed by exact modular evaluation of P_a modulo Phi_d.
    """
    q = reciprocal(p)
    p_neg, q_neg = compose_znegz(p), compose_znegz(q)
    p_sq, q_sq = compose_zsq(p), compose_zsq(q)
    p_negsq, q_negsq = compose_zsq(p_neg), compose_zsq(q_neg)
    p2, q2 = p * p, q * q
    eliminants = [
        q * p_neg + q_neg * p,
        q * p_neg - q_neg * p,
        q2 * p_sq + q_sq * p2 * eps,
        q2 * p_negsq + q_negsq * p2 * eps,
        q2 * p_negsq - q_negsq * p2 * eps,
    ]
    candidates: set[int] = set()
    for e in eliminants:
        candidates |= _cyclotomic_divisor_indices(e)
    schedule = []
    for d in sorted(candidates):
        phi_d = cyclotomic(d)
        hits = [
            a
            for a in range(d)
            if rem_monic(p.shift(a) + q * eps, phi_d).is_zero()
        ]
        if not hits:
            continue
        if len(hits) > 1:
            raise AssertionError(f"residue not unique for d={d}: {hits}")
        schedule.append((hits[0], d))
    return tuple(schedule)


def repeated_factor_index_bound(p: IntPoly) -> int:
    """Certified n beyond which P_n cannot have a repeated factor.

    A repeated zero must lie on the unit circle, which forces
    n <= sup_{|z|=1} |(P Q' - Q P')/(P Q)|; with |Q| = |P| there, the sup is
    at most sqrt(max |W|^2) / min |P|^2, bounded by certified range bounds of
    the norm polynomials on [-2, 2].
    """
    q = reciprocal(p)
    w = p * derivative(q) - q * derivative(p)
    if w.is_zero():
        return 0
    upper_w = interval_max_upper(circle_norm_poly(w), Fraction(-2), Fraction(2))
    lower_p = interval_min_abs(circle_norm_poly(p), Fraction(-2), Fraction(2))
    return int(rational_sqrt_above(max(upper_w, Fraction(0))) / lower_p) + 1


def repeated_factor_indices(
    p: IntPoly, eps: int, schedule: Optional[tuple[tuple[int, int], ...]] = None
) -> tuple[int, ...]:
    """All n >= 1 where P_n has a repeated factor.

    A repeated factor sits on the unit circle and is therefore cyclotomic
    (an irreducible non-cyclotomic square would force two zeros outside the
    circle via the reciprocal symmetry of P_n, which the construction never
    allows), so its index d appears in the cyclotomic schedule.  The scan
    tests Phi_d^2 | P_n by modular evaluation along each residue class, then
    confirms every hit by an exact gcd.
    """
    if schedule is None:
        schedule = cyclotomic_schedule(p, eps)
    bound = repeated_factor_index_bound(p)
    q = reciprocal(p)
    hits: set[int] = set()
    for a, d in schedule:
        mod = cyclotomic(d) ** 2
        z_step = powmod_monic(IntPoly([0, 1]), d, mod)
        n = a if a >= 1 else d
        cur = powmod_monic(IntPoly([0, 1]), n, mod)
        while n <= bound:
            if rem_monic(cur * p + q * eps, mod).is_zero():
                hits.add(n)
            cur = rem_monic(cur * z_step, mod)
            n += d
    for n in sorted(hits):
        p_n = family_poly(p, eps, n)
        if gcd_primitive(p_n, derivative(p_n)).degree < 1:
            raise AssertionError(f"modular repeated-factor hit at n={n} not confirmed")
    return tuple(sorted(hits))


def pisot_exception_indices(
    p: IntPoly, eps: int, bound: int = DEFAULT_EXCEPTION_BOUND
) -> tuple[int, ...]:
    """All n in [1, bound] where P_n's root > 1 is a Pisot number, not Salem.

    Such a root is necessarily a reciprocal quadratic Pisot number (a higher
    degree Pisot factor would drag a mirror factor with extra roots outside
    the unit circle into the reciprocal polynomial P_n), so the scan reduces
    to exact divisibility by z^2 - k z + 1.
    """
    out = []
    for n in range(1, bound + 1):
        p_n = family_poly(p, eps, n)
        if _quadratic_pisot_divisor(p_n) is not None:
            out.append(n)
    return tuple(out)


def family_spec(
    p_raw: IntPoly,
    eps: int,
    search_limit: int = 1000,
) -> FamilySpec:
    """Build the full family data for a Pisot polynomial and sign.

    Non-irreducible Pisot polynomials are normalized by their reciprocal part
    R = gcd(P, P*) (necessarily cyclotomic): the sequence of P is the sequence
    of P/R with every member multiplied by R, so schedules and thresholds are
    computed for P/R and R is kept as ``shared_factor``.
    """
    if eps not in (1, -1):
        raise DomainError("eps must be +1 or -1")
    if p_raw.is_zero() or not p_raw.is_monic():
        raise DomainError("P must be monic and nonzero")
    if classify(p_raw).label != LABEL_PISOT:
        raise DomainError(f"not a Pisot polynomial: {p_raw!r}")
    shared = gcd_primitive(p_raw, reciprocal(p_raw))
    if shared.degree >= 1:
        if not strip_cyclotomic(shared).remainder.is_one():
            raise DomainError("gcd(P, P*) is not cyclotomic")
        p = exact_div(p_raw, shared)
    else:
        shared = ONE
        p = p_raw
    if p == reciprocal(p):
        raise DomainError("P must differ from its reciprocal")
    schedule = cyclotomic_schedule(p, eps)
    return FamilySpec(
        p=p,
        eps=eps,
        q=reciprocal(p),
        r=r_value(p),
        n0=find_n0(p, eps, search_limit),
        schedule=schedule,
        repeated_indices=repeated_factor_indices(p, eps, schedule),
        shared_factor=shared,
    )


def min_degree(spec: FamilySpec, n: int) -> int:
    """Degree of the minimal polynomial of rho_n (n >= n0, no repeated factor)."""
    if n < spec.n0:
        raise DomainError(f"n={n} is below the Salem threshold n0={spec.n0}")
    if n in spec.repeated_indices:
        raise DomainError(f"P_{n} has a repeated factor; the formula does not apply")
    sched = spec.degree_schedule()
    return n + sched.base_offset - sched.excess(n)


def family_minpoly(spec: FamilySpec, n: int) -> IntPoly:
    """Minimal polynomial of rho_n, by dividing out the scheduled factors."""
    if n < spec.n0:
        raise DomainError(f"n={n} is below the Salem threshold n0={spec.n0}")
    if n in spec.repeated_indices:
        raise DomainError(f"P_{n} has a repeated factor")
    result = family_poly(spec.p, spec.eps, n)
    for a, d in spec.schedule:
        if n % d == a:
            result = exact_div(result, cyclotomic(d))
    return result


def rho_enclosure(spec: FamilySpec, n: int, digits: int) -> Enclosure:
    """Certified enclosure of rho_n to width < 10^-digits."""
    m = family_minpoly(spec, n)
    return refine_real_root(m, isolate_root_gt_one(m), digits)


def rho_sequence(
    spec: FamilySpec, n_from: int, n_to: int, digits: int
) -> list[Enclosure]:
    """Enclosures of rho_n for n in [n_from, n_to], refined pairwise disjoint."""
    if n_from < spec.n0:
        raise DomainError("sequence must start at or above n0")
    ns = [n for n in range(n_from, n_to + 1) if n not in spec.repeated_indices]
    mins = {n: family_minpoly(spec, n) for n in ns}
    encs = {n: refine_real_root(mins[n], isolate_root_gt_one(mins[n]), digits) for n in ns}
    for prev, cur in zip(ns, ns[1:]):
        extra = digits
        while encs[prev].overlaps(encs[cur]):
            extra += 6
            if extra > digits + 120:
                raise DomainError(
                    f"cannot separate rho_{prev} and rho_{cur}; "
                    f"width reached {float(encs[cur].width):.3e}"
                )
            encs[prev] = refine_real_root(mins[prev], encs[prev], extra)
            encs[cur] = refine_real_root(mins[cur], encs[cur], extra)
    return [encs[n] for n in ns]


def trinomial_pisot_inventory() -> list[IntPoly]:
    """The length-3 Pisot polynomials: five trinomials z^n - z^k - 1 plus z - 2.

    Trinomial Pisot polynomials have degree at most 5 (a zero in (1, 1.3)
    appears from degree 6 on, below the smallest Pisot number), so exhaustive
    classification over n <= 5 is complete.
    """
    out = [IntPoly([-2, 1])]
    for n in range(2, 6):
        for k in range(1, n):
            cand = IntPoly([-1] + [0] * (k - 1) + [-1] + [0] * (n - k - 1) + [1])
            if classify(cand).label == LABEL_PISOT:
                out.append(cand)
    return sorted(out, key=lambda f: (f.degree, f.coeffs))
