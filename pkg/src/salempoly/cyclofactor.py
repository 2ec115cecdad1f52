"""Cyclotomic-part extraction and minimal polynomials of Salem/Pisot numbers."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .intpoly import (
    DomainError,
    IntPoly,
    ONE,
    cyclotomic,
    cyclotomic_candidates,
    euler_phi,
    exact_div,
    gcd_primitive,
    primitive_positive,
    rem_monic,
    trial_div,
)


@dataclass(frozen=True)
class CycFactorization:
    """Complete cyclotomic factorization: input = prod Phi_d^mult * remainder."""

    factors: tuple[tuple[int, int], ...]  # (d, multiplicity), ascending d
    remainder: IntPoly

    def cyclotomic_part(self) -> IntPoly:
        part = ONE
        for d, mult in self.factors:
            part = part * cyclotomic(d) ** mult
        return part

    def to_json(self) -> str:
        return json.dumps(
            {
                "factors": [[d, m] for d, m in self.factors],
                "remainder": [str(c) for c in self.remainder.coeffs],
            }
        )


def _divisibility_screen(p: IntPoly, phi_d: IntPoly) -> bool:
    # Cheap integer screens: Phi_d(t) must divide p(t) at sample points.
    for t in (2, -2, 3):
        pv, dv = p(t), phi_d(t)
        if pv != 0 and dv != 0 and pv % dv != 0:
            return False
    return True


def strip_cyclotomic(p: IntPoly) -> CycFactorization:
    """Factor out every cyclotomic divisor Phi_d (candidates have phi(d) <= deg p)."""
    if p.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    if not p.is_monic():
        raise DomainError("cyclotomic stripping expects a monic polynomial")
    rem = p
    factors: list[tuple[int, int]] = []
    for d in cyclotomic_candidates(p.degree):
        if euler_phi(d) > rem.degree:
            continue
        phi_d = cyclotomic(d)
        if not _divisibility_screen(rem, phi_d):
            continue
        mult = 0
        while True:
            quotient = trial_div(rem, phi_d)
            if quotient is None:
                break
            rem = quotient
            mult += 1
        if mult:
            factors.append((d, mult))
        if rem.degree == 0:
            break
    return CycFactorization(tuple(factors), rem)


def is_cyclotomic_product(p: IntPoly) -> bool:
    """True iff p is a (possibly empty) product of cyclotomic polynomials."""
    if p.is_zero() or not p.is_monic():
        return False
    return strip_cyclotomic(p).remainder.is_one()


def _gcd_with_conjugate_products(s: IntPoly) -> IntPoly:
    """gcd(S(z), S(-z) S(z^2) S(-z^2)), reduced modulo S before multiplying."""
    from .intpoly import compose_znegz, compose_zsq

    if not s.is_monic():
        raise DomainError("expected a monic polynomial")
    s_neg = rem_monic(compose_znegz(s), s)
    s_sq = rem_monic(compose_zsq(s), s)
    s_negsq = rem_monic(compose_zsq(compose_znegz(s)), s)
    product = rem_monic(rem_monic(s_neg * s_sq, s) * s_negsq, s)
    if product.is_zero():
        return primitive_positive(s)
    return gcd_primitive(s, product)


def salem_minpoly(s: IntPoly) -> IntPoly:
    """Minimal polynomial of the Salem number of a Salem polynomial.

    Computes S / gcd(S(z), S(-z) S(z^2) S(-z^2)) -- no Salem number is conjugate
    to -tau, tau^2 or -tau^2, so the gcd is exactly the cyclotomic part -- and
    cross-checks against plain cyclotomic stripping.
    """
    from .unitcircle import LABEL_SALEM, salem_root_bracket

    if salem_root_bracket(s) is None:
        raise DomainError(f"not a Salem polynomial: {s!r}")
    g = _gcd_with_conjugate_products(s)
    result = exact_div(s, g)
    stripped = strip_cyclotomic(s).remainder
    if result != stripped:
        raise AssertionError(
            "cyclotomic-part mismatch between the gcd identity and trial division"
        )
    return result


def pisot_minpoly(p: IntPoly) -> IntPoly:
    """Minimal polynomial of the Pisot number of a Pisot polynomial: P / gcd(P, P*)."""
    from .intpoly import reciprocal
    from .unitcircle import LABEL_PISOT, classify

    if classify(p).label != LABEL_PISOT:
        raise DomainError(f"not a Pisot polynomial: {p!r}")
    g = gcd_primitive(p, reciprocal(p))
    result = exact_div(p, g * (1 if g.leading() > 0 else -1))
    if result.leading() < 0:
        result = -result
    stripped = strip_cyclotomic(p).remainder
    if result != stripped:
        raise AssertionError("gcd(P, P*) did not remove exactly the cyclotomic part")
    return result


def quotient_is_cyclotomic(p: IntPoly, m: IntPoly) -> bool:
    """True iff m | p exactly and p/m is a (possibly empty) cyclotomic product."""
    if m.is_zero():
        raise DomainError("zero divisor")
    quotient = trial_div(p, m)
    if quotient is None:
        return False
    if quotient.leading() < 0:
        quotient = -quotient
    return is_cyclotomic_product(quotient)
