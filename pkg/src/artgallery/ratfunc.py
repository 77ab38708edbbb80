"""Exact univariate polynomials and rational functions over the rationals.

This module supplies the symbolic layer used by :mod:`artgallery.analysis`:
polynomials with rational coefficients, rational functions (quotients of such
polynomials), Sturm-sequence root counting, and a monotonicity classifier for
rational functions on closed intervals.  Everything is exact — no floating
point is ever introduced, and evaluation accepts any value that the
:class:`~artgallery.numbers.Quad` arithmetic can absorb (integers, rationals,
quadratic irrationals).
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .numbers import Quad, Rational, parse_rational

RationalLike = Union[int, str, Rational]

__all__ = [
    "Poly1",
    "RationalFunction1",
    "MonotonicityError",
    "rf_monotone",
    "sturm_root_count",
    "rational_sqrt_in_quad",
]


def _rat(value: RationalLike) -> Rational:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("float coefficients are not allowed; use strings or rationals")
    return Rational(value)


class Poly1:
    """A univariate polynomial with exact rational coefficients.

    Coefficients are stored lowest-degree first with trailing zeros stripped;
    the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):  # lowest first
        coeffs = [_rat(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @property
    def coefficients(self) -> Tuple[Rational, ...]:
        return self._coeffs

    @staticmethod
    def constant(value: RationalLike) -> "Poly1":
        return Poly1([_rat(value)])

    @staticmethod
    def identity() -> "Poly1":
        """The polynomial ``x``."""
        return Poly1([0, 1])

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading_coefficient(self) -> Rational:
        if not self._coeffs:
            return Rational(0)
        return self._coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly1):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, str)) or type(other) is type(Rational(0)):
            return self._coeffs == Poly1([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly1", self._coeffs))

    def __add__(self, other) -> "Poly1":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly1(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly1":
        return Poly1([-c for c in self._coeffs])

    def __sub__(self, other) -> "Poly1":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly1":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly1":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly1()
        out = [Rational(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly1(out)

    __rmul__ = __mul__

    @staticmethod
    def _coerce(value) -> "Poly1":
        if isinstance(value, Poly1):
            return value
        if isinstance(value, float):
            return NotImplemented
        if isinstance(value, (int, str)) or type(value) is type(Rational(0)):
            return Poly1([value])
        return NotImplemented

    def divmod(self, divisor: "Poly1") -> Tuple["Poly1", "Poly1"]:
        """Exact polynomial division with remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self._coeffs)
        quotient = [Rational(0)] * max(0, len(remainder) - len(divisor._coeffs) + 1)
        dlead = divisor.leading_coefficient()
        dlen = len(divisor._coeffs)
        while len(remainder) >= dlen and any(c != 0 for c in remainder):
            while remainder and remainder[-1] == 0:
                remainder.pop()
            if len(remainder) < dlen:
                break
            shift = len(remainder) - dlen
            factor = remainder[-1] / dlead
            quotient[shift] = factor
            for i, c in enumerate(divisor._coeffs):
                remainder[shift + i] = remainder[shift + i] - factor * c
        return Poly1(quotient), Poly1(remainder)

    def __mod__(self, divisor: "Poly1") -> "Poly1":
        return self.divmod(divisor)[1]

    def derivative(self) -> "Poly1":
        return Poly1([i * c for i, c in enumerate(self._coeffs)][1:])

    def evaluate(self, x):
        """Horner evaluation; works for Rational, int, and Quad arguments."""
        result = 0
        for c in reversed(self._coeffs):
            result = x * result + c
        return result

    def content_normalized(self) -> "Poly1":
        """Scale so coefficients are coprime integers with positive leading one."""
        if self.is_zero():
            return self
        from math import gcd, lcm

        denoms = [int(c.denominator) for c in self._coeffs]
        scale = Rational(lcm(*denoms)) if len(denoms) > 1 else Rational(denoms[0])
        ints = [int(c * scale) for c in self._coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        if g:
            ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return Poly1(ints)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly1(0)"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return "Poly1(" + " + ".join(parts) + ")"


def _sign(value: Rational) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def _sturm_chain(poly: Poly1) -> List[Poly1]:
    chain = [poly, poly.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        rem = chain[-2] % chain[-1]
        if rem.is_zero():
            break
        chain.append(-rem)
    return [p for p in chain if not p.is_zero()]


def _sign_variations(chain: Sequence[Poly1], x: Rational) -> int:
    signs = [s for s in (_sign(p.evaluate(x)) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _squarefree_part(poly: Poly1) -> Poly1:
    """poly divided by gcd(poly, poly'), removing repeated roots."""
    a, b = poly, poly.derivative()
    while not b.is_zero():
        a, b = b, a % b
    # a is now a gcd of poly and its derivative (up to a constant).
    if a.degree <= 0:
        return poly
    quotient, remainder = poly.divmod(a)
    if not remainder.is_zero():  # pragma: no cover - exact arithmetic guarantee
        raise ArithmeticError("gcd failed to divide polynomial exactly")
    return quotient


def sturm_root_count(poly: Poly1, lo: RationalLike, hi: RationalLike) -> int:
    """Number of distinct real roots of ``poly`` in the half-open interval (lo, hi].

    Repeated roots are counted once.  Raises for the zero polynomial.
    """
    if poly.is_zero():
        raise ValueError("root count of the zero polynomial is undefined")
    lo_r, hi_r = _rat(lo), _rat(hi)
    if lo_r > hi_r:
        raise ValueError("empty interval: lo > hi")
    if poly.degree == 0:
        return 0
    reduced = _squarefree_part(poly)
    chain = _sturm_chain(reduced)
    return _sign_variations(chain, lo_r) - _sign_variations(chain, hi_r)


class RationalFunction1(object):
    """A quotient of two :class:`Poly1` values, reduced and sign-normalized.

    Equality is mathematical (cross-multiplied), evaluation checks for poles,
    and the Möbius subset (numerator and denominator of degree at most one)
    supports exact inversion.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator, denominator=None):
        num = numerator if isinstance(numerator, Poly1) else Poly1._coerce(numerator)
        if num is NotImplemented:
            raise TypeError(f"cannot build a polynomial from {numerator!r}")
        if denominator is None:
            den = Poly1.constant(1)
        else:
            den = denominator if isinstance(denominator, Poly1) else Poly1._coerce(denominator)
            if den is NotImplemented:
                raise TypeError(f"cannot build a polynomial from {denominator!r}")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = self._reduce(num, den)
        self._num = num
        self._den = den

    @staticmethod
    def _reduce(num: Poly1, den: Poly1) -> Tuple[Poly1, Poly1]:
        if num.is_zero():
            return Poly1(), Poly1.constant(1)
        a, b = num, den
        while not b.is_zero():
            a, b = b, a % b
        if a.degree > 0:
            num = num.divmod(a)[0]
            den = den.divmod(a)[0]
        # Canonical form: scale both parts by one rational factor chosen so the
        # denominator has coprime integer coefficients and a positive leading
        # coefficient.  A single shared factor keeps the function unchanged.
        den_canonical = den.content_normalized()
        factor = den_canonical.leading_coefficient() / den.leading_coefficient()
        num = Poly1([c * factor for c in num.coefficients])
        return num, den_canonical

    @property
    def numerator(self) -> Poly1:
        return self._num

    @property
    def denominator(self) -> Poly1:
        return self._den

    @staticmethod
    def constant(value: RationalLike) -> "RationalFunction1":
        return RationalFunction1(Poly1.constant(value))

    @staticmethod
    def identity() -> "RationalFunction1":
        return RationalFunction1(Poly1.identity())

    @staticmethod
    def from_coefficients(
        num_coeffs: Iterable[RationalLike], den_coeffs: Iterable[RationalLike]
    ) -> "RationalFunction1":
        return RationalFunction1(Poly1(num_coeffs), Poly1(den_coeffs))

    def is_constant(self) -> bool:
        return self._num.degree <= 0 and self._den.degree <= 0

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num * other._den == other._num * self._den

    def __hash__(self) -> int:
        # _reduce leaves (num, den) in a canonical form, so hashing the pair
        # agrees with the cross-multiplied equality.
        return hash(("RationalFunction1", self._num, self._den))

    @staticmethod
    def _coerce(value) -> "RationalFunction1":
        if isinstance(value, RationalFunction1):
            return value
        if isinstance(value, Poly1):
            return RationalFunction1(value)
        poly = Poly1._coerce(value)
        if poly is NotImplemented:
            return NotImplemented
        return RationalFunction1(poly)

    def __add__(self, other) -> "RationalFunction1":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction1(
            self._num * other._den + other._num * self._den, self._den * other._den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction1":
        return RationalFunction1(-self._num, self._den)

    def __sub__(self, other) -> "RationalFunction1":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction1":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction1":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction1(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction1":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other._num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction1(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other) -> "RationalFunction1":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def evaluate(self, x):
        """Exact evaluation; raises ZeroDivisionError at a pole."""
        den_value = self._den.evaluate(x)
        if den_value == 0:
            raise ZeroDivisionError(f"pole of rational function at {x!r}")
        return self._num.evaluate(x) / den_value

    def derivative(self) -> "RationalFunction1":
        return RationalFunction1(
            self._num.derivative() * self._den - self._num * self._den.derivative(),
            self._den * self._den,
        )

    # -- Möbius-specific operations ------------------------------------

    def is_mobius(self) -> bool:
        return self._num.degree <= 1 and self._den.degree <= 1

    def _mobius_entries(self) -> Tuple[Rational, Rational, Rational, Rational]:
        """Return (a, b, c, d) with self = (a x + b) / (c x + d)."""
        if not self.is_mobius():
            raise ValueError("not a Möbius function (degree above one)")
        nc, dc = self._num.coefficients, self._den.coefficients
        b = nc[0] if len(nc) > 0 else Rational(0)
        a = nc[1] if len(nc) > 1 else Rational(0)
        d = dc[0] if len(dc) > 0 else Rational(0)
        c = dc[1] if len(dc) > 1 else Rational(0)
        return a, b, c, d

    def mobius_inverse(self) -> "RationalFunction1":
        """The inverse map of an invertible Möbius function."""
        a, b, c, d = self._mobius_entries()
        if a * d - b * c == 0:
            raise ValueError("Möbius function is constant, no inverse exists")
        return RationalFunction1(Poly1([-b, d]), Poly1([a, -c]))

    def compose(self, inner: "RationalFunction1") -> "RationalFunction1":
        """Return self ∘ inner, exactly."""
        inner = self._coerce(inner)
        # p(n/d) * d^deg(p) is a polynomial; lifting both parts of self by the
        # same power of inner's denominator preserves the quotient.
        n_poly, d_poly = inner._num, inner._den
        deg = max(self._num.degree, self._den.degree, 0)

        def lifted(poly: Poly1) -> Poly1:
            total = Poly1()
            power_n = Poly1.constant(1)
            # poly(n/d) * d^deg = sum c_i * n^i * d^(deg-i)
            d_powers = [Poly1.constant(1)]
            for _ in range(deg):
                d_powers.append(d_powers[-1] * d_poly)
            for i, c in enumerate(poly.coefficients):
                total = total + Poly1.constant(c) * power_n * d_powers[deg - i]
                power_n = power_n * n_poly
            return total

        num = lifted(self._num)
        den = lifted(self._den)
        if den.is_zero():
            raise ZeroDivisionError("composition produced a zero denominator")
        return RationalFunction1(num, den)

    def __repr__(self) -> str:
        return f"RationalFunction1({self._num!r} / {self._den!r})"


class MonotonicityError(ValueError):
    """Raised when a rational function is not monotone on the given interval."""


def rf_monotone(rf: RationalFunction1, lo: RationalLike, hi: RationalLike) -> str:
    """Classify ``rf`` on [lo, hi] as "increasing" or "decreasing".

    The classification is strict except that constant functions are reported
    as "increasing".  A pole inside the closed interval, or any interior
    critical point of the numerator of the derivative, raises
    :class:`MonotonicityError` — the caller must then handle the interval
    differently rather than trust a partial answer.
    """
    lo_r, hi_r = _rat(lo), _rat(hi)
    if lo_r > hi_r:
        raise ValueError("empty interval: lo > hi")
    den = rf.denominator
    if den.degree >= 1:
        if den.evaluate(lo_r) == 0 or sturm_root_count(den, lo_r, hi_r) > 0:
            raise MonotonicityError(
                f"denominator vanishes inside [{lo_r}, {hi_r}]"
            )
    # d/dx (n/d) = (n'd - nd') / d^2 and d^2 > 0 away from poles, so the sign
    # of the derivative is the sign of  n'd - nd'.
    slope_num = rf.numerator.derivative() * den - rf.numerator * den.derivative()
    if slope_num.is_zero():
        return "increasing"  # constant function, by convention
    if lo_r == hi_r:
        return "increasing"
    interior_roots = sturm_root_count(slope_num, lo_r, hi_r)
    if slope_num.evaluate(hi_r) == 0:
        interior_roots -= 1
    if slope_num.evaluate(lo_r) == 0:
        # (lo, hi] never counts lo, but a vanishing endpoint derivative is
        # still compatible with strict monotonicity inside.
        pass
    if interior_roots > 0:
        raise MonotonicityError(
            f"derivative changes sign inside [{lo_r}, {hi_r}]"
        )
    midpoint = (lo_r + hi_r) / 2
    slope_sign = _sign(slope_num.evaluate(midpoint))
    if slope_sign == 0:  # pragma: no cover - excluded by the root count above
        raise MonotonicityError("derivative vanishes at the interval midpoint")
    return "increasing" if slope_sign > 0 else "decreasing"


def rational_sqrt_in_quad(value: RationalLike) -> Optional[Quad]:
    """Exact square root of a nonnegative rational inside Q(sqrt 2), if any.

    Returns ``a`` when value = a^2, ``b*sqrt2`` when value = 2 b^2, else None.
    """
    from math import isqrt

    r = _rat(value)
    if r < 0:
        raise ValueError("square root of a negative rational requested")
    if r == 0:
        return Quad(0, 0)

    def exact_rational_sqrt(x: Rational) -> Optional[Rational]:
        p, q = int(x.numerator), int(x.denominator)
        sp, sq = isqrt(p), isqrt(q)
        if sp * sp == p and sq * sq == q:
            return Rational(sp, sq)
        return None

    root = exact_rational_sqrt(r)
    if root is not None:
        return Quad(root, 0)
    half_root = exact_rational_sqrt(r / 2)
    if half_root is not None:
        return Quad(0, half_root)
    return None
