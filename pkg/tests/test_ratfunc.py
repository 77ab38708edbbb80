"""Tests for exact polynomials, rational functions, and Sturm machinery."""

import pytest

from artgallery.numbers import Quad, Rational, quad
from artgallery.ratfunc import (
    MonotonicityError,
    Poly1,
    RationalFunction1,
    rational_sqrt_in_quad,
    rf_monotone,
    sturm_root_count,
)


def RF(num, den=(1,)):
    return RationalFunction1.from_coefficients(num, den)


class TestPoly1:
    def test_construction_strips_trailing_zeros(self):
        assert Poly1([1, 2, 0, 0]).coefficients == Poly1([1, 2]).coefficients
        assert Poly1([0, 0]).is_zero()
        assert Poly1().degree == -1
        assert Poly1([5]).degree == 0
        assert Poly1([0, 0, "1/3"]).degree == 2

    def test_arithmetic_matches_hand_expansion(self):
        p = Poly1([1, 2])        # 1 + 2x
        q = Poly1([-1, 0, 3])    # -1 + 3x^2
        assert (p + q) == Poly1([0, 2, 3])
        assert (p - q) == Poly1([2, 2, -3])
        # (1 + 2x)(-1 + 3x^2) = -1 - 2x + 3x^2 + 6x^3
        assert (p * q) == Poly1([-1, -2, 3, 6])
        assert (3 * p) == Poly1([3, 6])
        assert (p - 1) == Poly1([0, 2])

    def test_division_with_remainder(self):
        # x^3 - 2x + 5 = (x^2 + x - 1) * (x - 1) + (6)  -- checked by expansion
        dividend = Poly1([5, -2, 0, 1])
        divisor = Poly1([-1, 1, 1])
        q, r = dividend.divmod(divisor)
        assert q * divisor + r == dividend
        assert r.degree < divisor.degree
        with pytest.raises(ZeroDivisionError):
            dividend.divmod(Poly1())

    def test_derivative_and_evaluation(self):
        p = Poly1(["1/2", 0, 3, 1])  # 1/2 + 3x^2 + x^3
        assert p.derivative() == Poly1([0, 6, 3])
        assert p.evaluate(Rational(2)) == Rational(1, 2) + 12 + 8
        value = p.evaluate(quad("1") + Quad(0, 1))  # x = 1 + sqrt2
        # (1+s)^3 + 3(1+s)^2 + 1/2 with s=sqrt2: (7+5s) + 3(3+2s) + 1/2
        assert value == Quad("33/2", 11)

    def test_content_normalization(self):
        p = Poly1(["2/3", "-4/9"])
        assert p.content_normalized() == Poly1([-3, 2])
        assert Poly1([-2, -4]).content_normalized() == Poly1([1, 2])

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            Poly1([0.5])


class TestSturm:
    def test_cubic_with_known_roots(self):
        # (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        p = Poly1([-6, 11, -6, 1])
        assert sturm_root_count(p, 0, 4) == 3
        assert sturm_root_count(p, 0, "5/2") == 2
        assert sturm_root_count(p, 1, 3) == 2  # half-open (1, 3] excludes 1
        assert sturm_root_count(p, 3, 10) == 0
        assert sturm_root_count(p, "3/2", "3/2") == 0

    def test_repeated_roots_counted_once(self):
        # (x-1)^2 (x+2)
        p = Poly1([2, -3, 0, 1])
        assert sturm_root_count(p, 0, 5) == 1
        assert sturm_root_count(p, -3, 5) == 2

    def test_irrational_roots(self):
        p = Poly1([-2, 0, 1])  # x^2 - 2
        assert sturm_root_count(p, 1, 2) == 1
        assert sturm_root_count(p, -2, 2) == 2
        assert sturm_root_count(p, "141/100", "142/100") == 1

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            sturm_root_count(Poly1(), 0, 1)


class TestRationalFunction:
    def test_reduction_and_equality(self):
        f = RF([2, 4], [2])          # (2 + 4x)/2 = 1 + 2x
        assert f == RF([1, 2])
        g = RF([0, 2, 4], [0, 2])    # (2x + 4x^2)/(2x) = 1 + 2x
        assert g == f
        assert hash(g) == hash(f)
        assert RF([1], [0, 1]) != RF([1], [0, 2])

    def test_sign_preserved_by_normalization(self):
        f = RF([1, -1], [2])  # (1 - x)/2
        assert f.evaluate(Rational(3)) == Rational(-1)
        g = RF([-1, 1], [-2])  # (x - 1)/(-2) is the same function
        assert g == f
        assert g.evaluate(Rational(3)) == Rational(-1)

    def test_arithmetic(self):
        f = RF([0, 1])            # x
        g = RF([1], [0, 1])       # 1/x
        assert f * g == RF([1])
        assert f + g == RF([1, 0, 1], [0, 1])    # (x^2 + 1)/x
        assert f - g == RF([-1, 0, 1], [0, 1])
        assert (f / g) == RF([0, 0, 1])          # x^2
        with pytest.raises(ZeroDivisionError):
            f / RF([0])

    def test_evaluation_and_poles(self):
        f = RF([1, 1], [-2, 1])  # (1 + x)/(x - 2)
        assert f.evaluate(Rational(3)) == Rational(4)
        assert f.evaluate(Quad(0, 1)) == (1 + Quad(0, 1)) / (Quad(0, 1) - 2)
        with pytest.raises(ZeroDivisionError):
            f.evaluate(Rational(2))

    def test_derivative_quotient_rule(self):
        f = RF([0, 0, 1], [1, 1])  # x^2/(1+x)
        # f' = (2x(1+x) - x^2)/(1+x)^2 = (x^2 + 2x)/(1+x)^2
        assert f.derivative() == RF([0, 2, 1], [1, 2, 1])

    def test_mobius_inverse(self):
        f = RF([-3, 2], [5, 1])  # (2x - 3)/(x + 5)
        inv = f.mobius_inverse()
        for x in [Rational(0), Rational(7), Rational(-1, 3)]:
            assert inv.evaluate(f.evaluate(x)) == x
        with pytest.raises(ValueError):
            RF([2, 4], [1, 2]).mobius_inverse()  # constant function 2
        with pytest.raises(ValueError):
            RF([0, 0, 1]).mobius_inverse()  # degree too high

    def test_compose(self):
        f = RF([1, 2], [3, -1])   # (2x + 1)/(3 - x)
        g = RF([0, 1], [1, 1])    # x/(1 + x)
        h = f.compose(g)
        for x in [Rational(0), Rational(1), Rational(-3), Rational(5, 7)]:
            assert h.evaluate(x) == f.evaluate(g.evaluate(x))
        # Composing a Möbius map with its inverse gives the identity.
        assert f.compose(f.mobius_inverse()) == RationalFunction1.identity()


class TestMonotonicity:
    def test_affine(self):
        assert rf_monotone(RF([0, 3]), 0, 1) == "increasing"
        assert rf_monotone(RF([5, -2]), -10, 10) == "decreasing"

    def test_constant_reports_increasing(self):
        assert rf_monotone(RF([7], [2]), 0, 100) == "increasing"

    def test_reciprocal(self):
        inv = RF([1], [0, 1])
        assert rf_monotone(inv, 1, 2) == "decreasing"
        assert rf_monotone(inv, -2, -1) == "decreasing"
        with pytest.raises(MonotonicityError):
            rf_monotone(inv, -1, 1)  # pole at 0

    def test_quadratic_turning_point(self):
        sq = RF([0, 0, 1])  # x^2
        assert rf_monotone(sq, 0, 4) == "increasing"
        assert rf_monotone(sq, -4, 0) == "decreasing"
        with pytest.raises(MonotonicityError):
            rf_monotone(sq, -1, 1)

    def test_endpoint_critical_point_allowed(self):
        # x^3 has zero derivative at 0 but is strictly increasing across it...
        # and on [0, 1] the vanishing endpoint derivative must not be fatal.
        cube = RF([0, 0, 0, 1])
        assert rf_monotone(cube, 0, 1) == "increasing"
        assert rf_monotone(cube, -1, 0) == "increasing"

    def test_mobius_on_interval(self):
        f = RF([-3, 2], [5, 1])  # (2x - 3)/(x + 5): derivative sign = 13 > 0
        assert rf_monotone(f, 0, 10) == "increasing"
        with pytest.raises(MonotonicityError):
            rf_monotone(f, -6, 0)  # pole at -5


class TestRationalSqrt:
    def test_perfect_square(self):
        assert rational_sqrt_in_quad(Rational(9, 4)) == Quad("3/2", 0)
        assert rational_sqrt_in_quad(0) == Quad(0, 0)
        assert rational_sqrt_in_quad(1) == Quad(1, 0)

    def test_twice_a_square(self):
        assert rational_sqrt_in_quad(2) == Quad(0, 1)
        assert rational_sqrt_in_quad(8) == Quad(0, 2)
        assert rational_sqrt_in_quad(Rational(9, 2)) == Quad(0, "3/2")

    def test_unrepresentable(self):
        assert rational_sqrt_in_quad(3) is None
        assert rational_sqrt_in_quad(Rational(5, 7)) is None

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            rational_sqrt_in_quad(-1)
