"""Independent numeric and brute-force oracles used only by the test suite.

The production code never calls anything here: root locations come from
mpmath's arbitrary-precision root finder, cyclotomic factorizations from
trial division against a from-scratch construction, and search completeness
from unpruned exhaustive enumeration.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from salempoly.intpoly import IntPoly, exact_div, trial_div


def numeric_root_counts(p: IntPoly, dps: int = 50, tol: str = "1e-30"):
    """(inside, on, outside, real_gt_one) counted from high-precision roots.

    Only safe for modest degrees and coefficient sizes; circle roots of the
    polynomials under test are roots of unity or Salem conjugates, which sit
    exactly on the circle, so a tiny tolerance cannot misclassify them.
    """
    try:
        with mpmath.workdps(dps):
            roots = mpmath.polyroots(
                [mpmath.mpf(c) for c in reversed(p.coeffs)], maxsteps=400
            )
            eps = mpmath.mpf(tol)
    except mpmath.libmp.libhyper.NoConvergence:
        # repeated roots stall the solver; cluster numpy roots instead
        import numpy as np

        roots = [mpmath.mpc(z) for z in np.roots(list(reversed(p.coeffs)))]
        eps = mpmath.mpf("1e-6")
    inside = on = outside = gt_one = 0
    for r in roots:
        m = abs(r)
        if abs(m - 1) < eps:
            on += 1
        elif m < 1:
            inside += 1
        else:
            outside += 1
        if abs(mpmath.im(r)) < eps and mpmath.re(r) > 1 + eps:
            gt_one += 1
    return inside, on, outside, gt_one


def numeric_max_real_root(p: IntPoly, dps: int = 50) -> float:
    with mpmath.workdps(dps):
        roots = mpmath.polyroots([mpmath.mpf(c) for c in reversed(p.coeffs)], maxsteps=200)
        best = None
        for r in roots:
            if abs(mpmath.im(r)) < mpmath.mpf("1e-30"):
                value = float(mpmath.re(r))
                if best is None or value > best:
                    best = value
    assert best is not None
    return best


def brute_force_cyclotomic(d: int) -> IntPoly:
    """Phi_d via direct division of z^d - 1 by lower-order factors, no cache."""
    num = IntPoly((-1,) + (0,) * (d - 1) + (1,))
    for e in range(1, d):
        if d % e == 0:
            num = exact_div(num, brute_force_cyclotomic(e))
    return num


def is_irreducible_degree_le_30(p: IntPoly) -> bool:
    """Crude irreducibility check for tiny polynomials: no factor splits off.

    Tries every monic integer divisor candidate encountered among cyclotomics
    and rational roots; adequate for the d <= 30 cyclotomic sanity test where
    any proper factor would itself be cyclotomic of smaller order.
    """
    if p.degree <= 1:
        return True
    for d in range(1, 121):
        cand = brute_force_cyclotomic(d)
        if 0 < cand.degree < p.degree and trial_div(p, cand) is not None:
            return False
    return True


def exhaustive_length5_patterns(max_degree: int):
    """Every monic reciprocal unit pattern of length 5, degree <= max_degree.

    Length-5 patterns are z^n + e1 (z^a + z^(n-a)) + ec s z^(n/2) + 1 with a
    central stack s in {1, 3}; enumeration is direct, with no gap bounds and
    no pruning of any kind.
    """
    out = []
    for n in range(2, max_degree + 1, 2):
        c = n // 2
        for stack in (1, 3):
            for e1 in (1, -1):
                for ec in (1, -1):
                    for a in range(c + 1, n):
                        terms = {n: 1, 0: 1}
                        terms[a] = terms.get(a, 0) + e1
                        terms[n - a] = terms.get(n - a, 0) + e1
                        terms[c] = terms.get(c, 0) + ec * stack
                        coeffs = [0] * (n + 1)
                        for e, v in terms.items():
                            coeffs[e] += v
                        out.append(IntPoly(coeffs))
                    if stack == 3:
                        # bare center stack: z^n + 3 ec z^(n/2) + ... needs no wings
                        coeffs = [0] * (n + 1)
                        coeffs[n] += 1
                        coeffs[0] += 1
                        coeffs[c] += ec * stack
                        out.append(IntPoly(coeffs))
    return [p for p in out if p.is_monic() and sum(abs(c) for c in p.coeffs) == 5]
