"""Exact field arithmetic: oracles first, then property suites.

Oracle values in this file were computed independently (by hand and with
an 80-digit decimal evaluation) before the implementation existed.
"""

from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from artgallery.numbers import Quad, Rational, SQRT2, format_rational, parse_rational

getcontext().prec = 80
DEC_SQRT2 = Decimal(2).sqrt()


def dec(q: Quad) -> Decimal:
    """Independent high-precision evaluation (oracle only, never production)."""
    a = Fraction(int(q.a.numerator), int(q.a.denominator))
    b = Fraction(int(q.b.numerator), int(q.b.denominator))
    return (
        Decimal(a.numerator) / Decimal(a.denominator)
        + Decimal(b.numerator) / Decimal(b.denominator) * DEC_SQRT2
    )


# -- hand-computed oracles ---------------------------------------------------


def test_conjugate_division_hand_oracle():
    # (351 - 81*sqrt2) / (-54 + 54*sqrt2) simplifies by hand to 7/2 + 5*sqrt2.
    num = Quad(351, -81)
    den = Quad(-54, 54)
    assert num / den == Quad("7/2", 5)
    # and back:
    assert Quad("7/2", 5) * den == num


def test_rounded_display_hand_oracles():
    assert Quad("7/2", 5).approx(4) == "10.5711"
    assert Quad(2, -1).approx(2) == "0.59"
    assert Quad(1, "1/2").approx(2) == "1.71"
    assert Quad(0).approx(2) == "0.00"
    assert Quad(-2, 1).approx(2) == "-0.59"
    assert Quad("7/2", 5).approx(0) == "11"


def test_floor_pell_oracle():
    # Pell pairs give an oracle independent of the isqrt implementation:
    # p^2 - 2 q^2 = +1  =>  q*sqrt2 in (p-1, p)   => floor =  p - 1
    # p^2 - 2 q^2 = -1  =>  q*sqrt2 in (p, p+1)   => floor =  p
    p, q = 3, 2
    for _ in range(12):
        assert p * p - 2 * q * q == 1
        assert Quad(0, q).floor() == p - 1
        assert Quad(0, -q).floor() == -p
        p, q = 3 * p + 4 * q, 2 * p + 3 * q
    p, q = 1, 1
    for _ in range(12):
        assert p * p - 2 * q * q == -1
        assert Quad(0, q).floor() == p
        assert Quad(0, -q).floor() == -p - 1
        p, q = 3 * p + 4 * q, 2 * p + 3 * q


def test_floor_decimal_oracle():
    samples = [
        Quad("7/2", 5),
        Quad(2, -1),
        Quad(1, "1/2"),
        Quad("-3413/2000", "1/7"),
        Quad("1000000007/3", "-999/13"),
        Quad(0, "141421356/100000000"),
    ]
    for x in samples:
        d = dec(x)
        expected = int(d.to_integral_value(rounding="ROUND_FLOOR"))
        assert x.floor() == expected


def test_sign_decimal_oracle():
    samples = [
        (Quad(1, -1), -1),
        (Quad(2, -1), 1),
        (Quad(-3, 2), -1),
        (Quad("99/70", -1), 1),     # 99/70 is a hair above sqrt2
        (Quad("-99/70", 1), -1),
        (Quad("239/169", -1), -1),  # 239/169 is a hair below sqrt2
        (Quad(0, 0), 0),
        (Quad("-5/3", 0), -1),
    ]
    for x, want in samples:
        assert x.sign() == want
        d = dec(x)
        if d != 0:
            assert (1 if d > 0 else -1) == want


def test_parse_and_format_rational():
    assert parse_rational("3/2") == Rational(3, 2)
    assert parse_rational("-11/200") == Rational(-11, 200)
    assert parse_rational("0.55") == Rational(11, 20)
    assert parse_rational("-1.25") == Rational(-5, 4)
    assert parse_rational(".5") == Rational(1, 2)
    assert parse_rational("17") == 17
    assert format_rational(Rational(6, 4)) == "3/2"
    assert format_rational(Rational(-8, 2)) == "-4"
    for bad in ["1e3", "nan", "inf", "1/0", "1.2.3", "", "sqrt2", "1/ 0x2"]:
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_float_rejection():
    with pytest.raises(TypeError):
        Quad(0.5)
    with pytest.raises(TypeError):
        Quad(1) + 0.5


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Quad(1) / Quad(0)


def test_hash_consistency_with_rationals():
    assert hash(Quad(3)) == hash(3)
    assert hash(Quad("7/2")) == hash(Rational(7, 2))
    d = {Quad(3): "x"}
    assert d[Quad(3, 0)] == "x"


def test_str_round_trips_structure():
    assert str(Quad("7/2", 5)) == "7/2+5*sqrt2"
    assert str(Quad(2, -1)) == "2-sqrt2"
    assert str(Quad(0, 1)) == "sqrt2"
    assert str(Quad(0, "-1/3")) == "-1/3*sqrt2"
    assert str(Quad(5)) == "5"


# -- property suites ---------------------------------------------------------

rationals = st.builds(
    lambda p, q: Rational(p, q),
    st.integers(-(10**6), 10**6),
    st.integers(1, 10**4),
)
quads = st.builds(Quad, rationals, rationals)


@settings(max_examples=2500, deadline=None)
@given(quads, quads, quads)
def test_field_axioms_additive(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x + Quad(0) == x
    assert x + (-x) == Quad(0)


@settings(max_examples=2500, deadline=None)
@given(quads, quads, quads)
def test_field_axioms_multiplicative(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * Quad(1) == x


@settings(max_examples=2500, deadline=None)
@given(quads, quads, quads)
def test_field_axioms_distributive(x, y, z):
    assert x * (y + z) == x * y + x * z


@settings(max_examples=2500, deadline=None)
@given(quads)
def test_field_axioms_reciprocal(x):
    if x != Quad(0):
        assert x * (Quad(1) / x) == Quad(1)


@settings(max_examples=1000, deadline=None)
@given(quads, quads)
def test_order_is_total_and_consistent(x, y):
    states = [x < y, x == y, x > y]
    assert states.count(True) == 1
    assert (x < y) == ((y - x).sign() > 0)
    assert (x < y) == (not x >= y)
    if x < y:
        assert x + Quad(1, 1) < y + Quad(1, 1)


@settings(max_examples=1000, deadline=None)
@given(quads)
def test_floor_bracket(x):
    n = x.floor()
    assert Quad(n) <= x < Quad(n + 1)


@settings(max_examples=500, deadline=None)
@given(quads, st.integers(0, 8))
def test_approx_is_correctly_rounded(x, digits):
    shown = x.approx(digits)
    r = Quad(parse_rational(shown))
    half = Quad(Rational(1, 2 * 10**digits))
    assert r - half <= x < r + half


@settings(max_examples=500, deadline=None)
@given(quads)
def test_sqrt2_squares_to_two(x):
    assert SQRT2 * SQRT2 == Quad(2)
    assert (x * SQRT2) * SQRT2 == x * 2
