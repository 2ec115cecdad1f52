import itertools
import random
from fractions import Fraction

import pytest

from salempoly.cyclofactor import salem_minpoly
from salempoly.intpoly import (
    DomainError,
    Enclosure,
    IntPoly,
    cyclotomic,
    parse_poly,
    poly_length,
)
from salempoly.unitcircle import (
    classify,
    count_real_roots,
    count_unit_circle,
    decimal_root,
    is_trinomial_zero_free,
    isolate_root_gt_one,
    max_abs_on_circle,
    min_abs_on_circle,
    min_abs_on_segment,
    refine_real_root,
    round_decimal,
    salem_root_bracket,
)

from oracles import numeric_root_counts

LEHMER5 = parse_poly("z^12-z^7-z^6-z^5+1")
LEHMER_MIN = parse_poly("z^10+z^9-z^7-z^6-z^5-z^4-z^3+z+1")

TABLE1_POLYS = [
    ("z^12-z^7-z^6-z^5+1", "1.176280818"),
    ("z^14-z^11-z^7-z^3+1", "1.176280818"),
    ("z^20-z^19-z^10-z+1", "1.200026524"),
    ("z^14-z^12-z^7-z^2+1", "1.202616744"),
    ("z^10-z^6-z^5-z^4+1", "1.216391661"),
    ("z^18-z^17-z^9-z+1", "1.216391661"),
    ("z^10-z^7-z^5-z^3+1", "1.230391434"),
    ("z^16-z^15-z^8-z+1", "1.236317932"),
    ("z^10-z^8-z^5-z^2+1", "1.261230961"),
    ("z^14-z^13-z^7-z+1", "1.261230961"),
    ("z^8-z^5-z^4-z^3+1", "1.280638156"),
    ("z^12-z^11-z^6-z+1", "1.293485953"),
    ("z^10-z^9-z^5-z+1", "1.337313210"),
    ("z^6-z^4-z^3-z^2+1", "1.401268368"),
    ("z^8-z^7-z^4-z+1", "1.401268368"),
    ("z^6-z^5-z^3-z+1", "1.506135680"),
    ("z^4-z^3-z^2-z+1", "1.722083806"),
]


class TestCountUnitCircle:
    def test_examples(self):
        assert count_unit_circle(parse_poly("z^4-3z^2+1")) == (2, 0, 2)
        assert count_unit_circle(cyclotomic(12)) == (0, 4, 0)
        assert count_unit_circle(parse_poly("z^10-z^6-z^5-z^4+1")) == (1, 8, 1)

    def test_errors(self):
        with pytest.raises(DomainError):
            count_unit_circle(IntPoly([]))
        with pytest.raises(DomainError):
            count_unit_circle(IntPoly([0, 1]))

    def test_multiplicative(self):
        r = random.Random(5)
        for _ in range(120):
            polys = []
            for _ in range(2):
                deg = r.randint(1, 4)
                c = [r.randint(-3, 3) for _ in range(deg + 1)]
                c[-1] = c[-1] or 1
                c[0] = c[0] or 1
                polys.append(IntPoly(c))
            a, b = polys
            ca, cb, cab = count_unit_circle(a), count_unit_circle(b), count_unit_circle(a * b)
            assert tuple(x + y for x, y in zip(ca, cb)) == cab

    def test_oracle_equivalence_reciprocal_small(self):
        # all monic reciprocal polynomials of degree <= 6 and length <= 6
        seen = 0
        for deg in range(2, 7):
            half = deg // 2
            mid = [range(-4, 5)] * (half if deg % 2 else half - 1)
            center = [range(-4, 5)] if deg % 2 == 0 else []
            for body in itertools.product(*(mid + center)):
                left = list(body[: half if deg % 2 else half - 1])
                if deg % 2 == 0:
                    coeffs = [1] + left + [body[-1]] + left[::-1] + [1]
                else:
                    coeffs = [1] + left + left[::-1] + [1]
                p = IntPoly(coeffs)
                if p.degree != deg or poly_length(p) > 6:
                    continue
                seen += 1
                assert count_unit_circle(p) == numeric_root_counts(p)[:3], p
        assert seen == 85  # the complete census at length <= 6, degree <= 6


class TestClassify:
    def test_examples(self):
        cert = classify(parse_poly("z^4-z^3-z^2-z+1"))
        assert cert.label == "Salem"
        text, _ = decimal_root(parse_poly("z^4-z^3-z^2-z+1"), cert.distinguished_root, 9)
        assert text == "1.722083806"
        cert = classify(parse_poly("z^3-z-1"))
        assert cert.label == "Pisot"
        assert Fraction("1.3247179") <= cert.distinguished_root.lo
        assert cert.distinguished_root.hi <= Fraction("1.3247180")
        assert classify(parse_poly("z^2-z+1") * parse_poly("z-1")).label == "Cyclotomic"
        assert classify(parse_poly("z^4-3z^2+1")).label == "Other"

    def test_non_monic_rejected(self):
        with pytest.raises(DomainError):
            classify(IntPoly([1, 0, 2]))

    def test_table1_rows(self):
        for text, number in TABLE1_POLYS:
            p = parse_poly(text)
            cert = classify(p)
            assert cert.label == "Salem", text
            assert cert.outside == 1 and cert.real_gt_one == 1
            assert cert.on_circle >= p.degree - 2
            m = salem_minpoly(p)
            printed, _ = decimal_root(m, cert.distinguished_root, 9)
            assert printed == number

    def test_salem_with_random_cyclotomic_factors(self):
        r = random.Random(11)
        base = classify(LEHMER5)
        for _ in range(12):
            extra = cyclotomic(r.randint(1, 12))
            p = LEHMER5 * extra
            cert = classify(p)
            assert cert.label == "Salem"
            assert cert.distinguished_root.overlaps(base.distinguished_root)

    def test_random_cyclotomic_products(self):
        r = random.Random(13)
        for _ in range(12):
            p = IntPoly([1])
            for _ in range(r.randint(1, 4)):
                p = p * cyclotomic(r.randint(1, 16))
            assert classify(p).label == "Cyclotomic"

    def test_json_certificate(self):
        cert = classify(LEHMER5)
        data = cert.to_json_dict()
        assert data["label"] == "Salem"
        assert set(data) == {"inside", "on_circle", "outside", "label", "root_lo", "root_hi"}


class TestRefineRoot:
    def test_theta0(self):
        enc = refine_real_root(parse_poly("z^3-z-1"), Enclosure(Fraction(1), Fraction(2)), 7)
        assert enc.width < Fraction(1, 10**7)
        assert enc.contains(Fraction("1.32471795"))

    def test_golden_ratio(self):
        enc = refine_real_root(parse_poly("z^2-z-1"), Enclosure(Fraction(1), Fraction(2)), 6)
        assert enc.width < Fraction(1, 10**6)
        assert enc.contains(Fraction("1.6180339"))

    def test_lambda0(self):
        enc = refine_real_root(LEHMER5, Enclosure(Fraction(1), Fraction(2)), 7)
        assert enc.width < Fraction(1, 10**7)
        assert enc.contains(Fraction("1.17628081"))

    def test_rounding_matches_tables(self):
        # 1.7220838057... must round up to 1.722083806 at nine decimals
        p = parse_poly("z^4-z^3-z^2-z+1")
        text, _ = decimal_root(p, isolate_root_gt_one(p), 9)
        assert text == "1.722083806"

    def test_errors(self):
        with pytest.raises(DomainError):
            refine_real_root(parse_poly("z^2-z-1"), Enclosure(Fraction(2), Fraction(3)), 5)
        with pytest.raises(DomainError):
            refine_real_root(parse_poly("z^2-3z+2"), Enclosure(Fraction(0), Fraction(3)), 5)


class TestSalemBracket:
    def test_accepts_salem_rejects_others(self):
        assert salem_root_bracket(LEHMER5) is not None
        assert salem_root_bracket(parse_poly("z^3-z-1")) is None  # Pisot
        assert salem_root_bracket(parse_poly("z^2-4z+1")) is None  # quadratic Pisot
        assert salem_root_bracket(parse_poly("z^4-3z^2+1")) is None
        assert salem_root_bracket(cyclotomic(12)) is None
        assert salem_root_bracket(LEHMER5 * cyclotomic(6) ** 2 * cyclotomic(1)) is not None

    def test_interval_filtering(self):
        lo, hi = Fraction(117, 100), Fraction(32, 10)
        assert salem_root_bracket(LEHMER5, lo, hi) is not None
        assert salem_root_bracket(LEHMER5, Fraction(173, 100), hi) is None
        assert salem_root_bracket(parse_poly("z^4-z^3-z^2-z+1"), Fraction(117, 100), Fraction(172, 100)) is None

    def test_agrees_with_classify(self):
        r = random.Random(23)
        for _ in range(150):
            deg = r.randint(2, 8)
            c = [r.randint(-2, 2) for _ in range(deg)] + [1]
            c[0] = c[0] or 1
            p = IntPoly(c)
            label = classify(p).label if p.is_monic() else None
            assert (salem_root_bracket(p) is not None) == (label == "Salem")


class TestTrinomialFreeness:
    def test_lehmer(self):
        assert is_trinomial_zero_free(LEHMER_MIN, 60)

    def test_inventory_of_divisible_cases(self):
        # z^5 - z^4 - 1 is a trinomial, so its Pisot minimal factor is not free
        assert not is_trinomial_zero_free(parse_poly("z^3-z-1"), 5)
        # no trinomial of degree <= 4 is divisible by z^2 - 3z + 1
        assert is_trinomial_zero_free(parse_poly("z^2-3z+1"), 4)

    def test_table1_numbers_to_60(self):
        minpolys = {salem_minpoly(parse_poly(t)) for t, _ in TABLE1_POLYS}
        assert len(minpolys) == 13
        for m in minpolys:
            assert is_trinomial_zero_free(m, 60)


class TestCertifiedBounds:
    def test_circle_bounds(self):
        w = parse_poly("z^2-2")
        assert min_abs_on_circle(w) <= 1 <= max_abs_on_circle(w)
        assert min_abs_on_circle(w) > Fraction(9, 10)
        assert max_abs_on_circle(w) < Fraction(31, 10)

    def test_segment_bound(self):
        m = min_abs_on_segment(parse_poly("z-1"), Fraction(117, 100), Fraction(32, 10))
        assert 0 < m <= Fraction(17, 100)
        with pytest.raises(DomainError):
            min_abs_on_segment(parse_poly("z-2"), Fraction(1), Fraction(3))

    def test_count_real_roots(self):
        p = parse_poly("z^3-z")  # roots -1, 0, 1
        assert count_real_roots(p) == 3
        assert count_real_roots(p, 0, None) == 1
        assert count_real_roots(p, 0, None, include_lo=True) == 2
        assert count_real_roots(p, -1, 1, include_lo=True, include_hi=True) == 3
