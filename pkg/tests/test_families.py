import random
from fractions import Fraction

import pytest

from salempoly.cyclofactor import strip_cyclotomic
from salempoly.families import (
    DEFAULT_EXCEPTION_BOUND,
    family_minpoly,
    family_poly,
    family_spec,
    find_n0,
    min_degree,
    pisot_exception_indices,
    r_value,
    repeated_factor_indices,
    rho_sequence,
    trinomial_pisot_inventory,
)
from salempoly.intpoly import (
    DomainError,
    IntPoly,
    compose_znegz,
    compose_zsq,
    cyclotomic,
    derivative,
    gcd_primitive,
    parse_poly,
    primitive_positive,
    resultant_in_y,
    to_human,
    trial_div,
)
from salempoly.unitcircle import count_real_roots, salem_root_bracket

P3 = parse_poly("z^3-z-1")

FAMILY_TABLE = {
    ("z-2", 1): (3, {(0, 2), (5, 6)}),
    ("z-2", -1): (4, {(0, 1), (1, 2), (2, 6)}),
    ("z^2-z-1", 1): (2, {(1, 2), (5, 6), (9, 12)}),
    ("z^2-z-1", -1): (5, {(0, 1), (0, 2), (2, 6), (1, 3), (3, 12)}),
    ("z^3-z-1", 1): (1, {(0, 2), (7, 8), (10, 12), (14, 18), (21, 30)}),
    ("z^3-z-1", -1): (8, {(0, 1), (1, 2), (1, 3), (2, 5), (3, 8), (4, 12), (5, 18), (6, 30)}),
    ("z^3-z^2-1", 1): (1, {(0, 2), (3, 4), (5, 6), (8, 10), (13, 18)}),
    ("z^3-z^2-1", -1): (6, {(0, 1), (1, 2), (2, 3), (1, 4), (2, 6), (3, 10), (4, 18)}),
    ("z^4-z^3-1", 1): (1, {(1, 2), (0, 4), (5, 6), (11, 14), (17, 24)}),
    ("z^4-z^3-1", -1): (7, {(0, 1), (0, 2), (2, 4), (1, 5), (2, 6), (3, 9), (4, 14), (5, 24)}),
}


class TestBasics:
    def test_family_poly(self):
        assert family_poly(P3, -1, 8) == parse_poly("z^11-z^9-z^8+z^3+z^2-1")
        assert family_poly(parse_poly("z-2"), 1, 1) == parse_poly("z^2-4z+1")

    def test_r_values(self):
        assert r_value(P3) == 7
        assert r_value(parse_poly("z-2")) == 3
        assert r_value(parse_poly("z^2-z-1")) == 4


class TestTenFamilies:
    @pytest.mark.parametrize("ptxt,eps", list(FAMILY_TABLE))
    def test_n0_and_schedule(self, ptxt, eps):
        spec = family_spec(parse_poly(ptxt), eps)
        n0, schedule = FAMILY_TABLE[(ptxt, eps)]
        assert spec.n0 == n0
        assert set(spec.schedule) == schedule

    def test_schedule_soundness(self):
        # Phi_d | P_n iff n = a (mod d), over three full periods
        from math import lcm

        for ptxt, eps in [("z^3-z-1", -1), ("z^2-z-1", 1), ("z^4-z^3-1", -1)]:
            spec = family_spec(parse_poly(ptxt), eps)
            period = lcm(*(d for _, d in spec.schedule))
            for n in range(1, min(3 * period, 240) + 1):
                p_n = family_poly(spec.p, eps, n)
                for a, d in spec.schedule:
                    divides = trial_div(p_n, cyclotomic(d)) is not None
                    assert divides == (n % d == a), (ptxt, eps, n, d)

    def test_reducible_input_normalized(self):
        spec = family_spec(parse_poly("z^5-z^4-1"), -1)
        assert spec.p == P3
        assert spec.shared_factor == cyclotomic(6)
        assert spec.n0 == 8
        assert spec.poly(8) == family_poly(parse_poly("z^5-z^4-1"), -1, 8)


class TestFlagshipFamily:
    def setup_method(self):
        self.spec = family_spec(P3, -1)

    def test_degree_schedule(self):
        ds = self.spec.degree_schedule()
        assert ds.period == 360
        assert ds.excess(347) == 15
        assert max(ds.excess(n) for n in range(360)) == 15
        assert min_degree(self.spec, 59) == 50

    def test_degree_above_fifty(self):
        assert all(
            min_degree(self.spec, n) > 50
            for n in range(60, 421)
            if n not in self.spec.repeated_indices
        )

    def test_degree_formula_matches_minpoly(self):
        from salempoly.cyclofactor import salem_minpoly

        for n in range(8, 61):
            if n in self.spec.repeated_indices:
                continue
            p_n = family_poly(P3, -1, n)
            assert salem_minpoly(p_n) == family_minpoly(self.spec, n)
            assert family_minpoly(self.spec, n).degree == min_degree(self.spec, n)

    def test_repeated_indices(self):
        assert self.spec.repeated_indices == (7,)
        # Chinburg's index deg(P) - 2 P'(1)/P(1) = 7, with (z-1)^3 | P_7
        p7 = family_poly(P3, -1, 7)
        assert trial_div(p7, cyclotomic(1) ** 3) is not None
        assert family_spec(P3, 1).repeated_indices == ()

    def test_repeated_indices_brute_force(self):
        for eps in (1, -1):
            expected = tuple(
                n
                for n in range(1, 201)
                if gcd_primitive(
                    family_poly(P3, eps, n), derivative(family_poly(P3, eps, n))
                ).degree
                >= 1
            )
            got = repeated_factor_indices(P3, eps)
            assert tuple(n for n in got if n <= 200) == expected

    def test_rho_sequence_monotone(self):
        from salempoly.unitcircle import decimal_root

        encs = rho_sequence(self.spec, 8, 17, 9)
        assert all(encs[i].hi < encs[i + 1].lo for i in range(len(encs) - 1))
        printed = [
            decimal_root(family_minpoly(self.spec, n), enc, 9)[0]
            for n, enc in zip(range(8, 18), encs)
        ]
        assert printed[0] == "1.176280818"
        assert printed[1] == "1.230391434"
        assert printed[-1] == "1.318197504"
        assert encs[-1].hi < Fraction("1.3247180")  # still below theta_0

    def test_rho_decreasing_for_plus(self):
        spec = family_spec(P3, 1)
        encs = rho_sequence(spec, 1, 8, 9)
        assert all(encs[i].lo > encs[i + 1].hi for i in range(len(encs) - 1))

    def test_below_n0_cyclotomic(self):
        for n in range(1, 8):
            assert strip_cyclotomic(family_poly(P3, -1, n)).remainder.is_one()

    def test_unique_root_above_n0(self):
        for eps in (1, -1):
            spec = family_spec(P3, eps)
            for n in range(spec.n0, 101):
                p_n = family_poly(P3, eps, n)
                open_lo = count_real_roots(p_n, 1, None)
                assert open_lo == 1, (eps, n)
                if n not in spec.repeated_indices:
                    assert salem_root_bracket(p_n) is not None

    def test_min_degree_errors(self):
        with pytest.raises(DomainError):
            min_degree(self.spec, 7)
        with pytest.raises(DomainError):
            min_degree(self.spec, 3)


class TestExceptions:
    def test_quadratic_pisot_exceptions(self):
        assert pisot_exception_indices(parse_poly("z-2"), 1, 100) == (1, 2)
        assert pisot_exception_indices(parse_poly("z^2-z-1"), 1, 100) == (1,)
        assert pisot_exception_indices(P3, -1, 100) == ()
        assert pisot_exception_indices(P3, 1, 100) == ()

    def test_exception_polys_are_quadratic_pisot_times_cyclotomic(self):
        p1 = family_poly(parse_poly("z-2"), 1, 1)
        assert p1 == parse_poly("z^2-4z+1")
        p2 = family_poly(parse_poly("z-2"), 1, 2)
        assert trial_div(p2, parse_poly("z^2-3z+1")) is not None
        p1b = family_poly(parse_poly("z^2-z-1"), 1, 1)
        assert trial_div(p1b, parse_poly("z^2-3z+1")) is not None


class TestInventory:
    def test_six_polynomials(self):
        inv = trinomial_pisot_inventory()
        assert [to_human(p) for p in inv] == [
            "z-2",
            "z^2-z-1",
            "z^3-z-1",
            "z^3-z^2-1",
            "z^4-z^3-1",
            "z^5-z^4-1",
        ]

    def test_reducible_member_flagged_by_stripping(self):
        fact = strip_cyclotomic(parse_poly("z^5-z^4-1"))
        assert fact.factors == ((6, 1),)

    def test_z4_z_1_not_pisot(self):
        from salempoly.unitcircle import classify

        assert classify(parse_poly("z^4-z-1")).label == "Other"


class TestResultantIdentities:
    """The five elimination identities behind the flagship family's schedule.

    With T(x, y) = y(x^3 - x - 1) + x^3 + x^2 - 1, eliminating y against the
    five conjugate substitutions must produce exactly the displayed cyclotomic
    products (as primitive polynomials; the raw resultants carry an integer
    content).
    """

    def setup_method(self):
        self.a = P3
        self.b = parse_poly("z^3+z^2-1")
        self.an, self.bn = compose_znegz(self.a), compose_znegz(self.b)
        self.a2, self.b2 = compose_zsq(self.a), compose_zsq(self.b)
        self.an2, self.bn2 = compose_zsq(self.an), compose_zsq(self.bn)
        self.x = IntPoly([0, 1])

    def check(self, res, expected):
        assert primitive_positive(res) == expected

    def test_odd_negation(self):
        res = resultant_in_y({1: self.a, 0: self.b}, {1: -self.an, 0: self.bn})
        self.check(res, cyclotomic(1) * cyclotomic(2) * cyclotomic(8))

    def test_even_negation(self):
        res = resultant_in_y({1: self.a, 0: self.b}, {1: self.an, 0: self.bn})
        self.check(res, self.x * cyclotomic(12))

    def test_odd_negated_square(self):
        res = resultant_in_y({1: self.a, 0: self.b}, {2: -self.an2, 0: self.bn2})
        self.check(res, self.x * cyclotomic(1) * cyclotomic(2) ** 3 * cyclotomic(18))

    def test_even_negated_square(self):
        res = resultant_in_y({1: self.a, 0: self.b}, {2: self.an2, 0: self.bn2})
        self.check(res, cyclotomic(12) * cyclotomic(30))

    def test_plain_square(self):
        res = resultant_in_y({1: self.a, 0: self.b}, {2: self.a2, 0: self.b2})
        self.check(
            res, cyclotomic(1) ** 3 * cyclotomic(2) * cyclotomic(3) ** 2 * cyclotomic(5)
        )


class TestFindN0:
    def test_examples(self):
        assert find_n0(P3, -1) == 8
        assert find_n0(parse_poly("z-2"), 1) == 3
        assert find_n0(parse_poly("z^4-z^3-1"), -1) == 7
