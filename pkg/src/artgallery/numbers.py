"""Exact arithmetic in the quadratic field Q(sqrt(2)).

Every coordinate in this package is a :class:`Quad`: a number of the form
``a + b*sqrt(2)`` with rational ``a`` and ``b``.  All arithmetic, all
comparisons, and all decimal rendering are exact; no floating point is
consulted for any decision.

The rational scalar type is ``gmpy2.mpq`` when available (it is much faster
on large numerators) and :class:`fractions.Fraction` otherwise.  Both share
Python's value-based numeric hashing, so either works as a dict key.
"""

from __future__ import annotations

import math
import re
from typing import Union

try:  # pragma: no cover - exercised implicitly by the import that succeeds
    from gmpy2 import mpq as Rational
    from gmpy2 import isqrt as _isqrt

    def _int_isqrt(n: int) -> int:
        return int(_isqrt(n))

except ImportError:  # pragma: no cover
    from fractions import Fraction as Rational

    _int_isqrt = math.isqrt

RationalLike = Union[int, "Rational"]
QuadLike = Union["Quad", int, "Rational"]

_RATIONAL_RE = re.compile(
    r"""^[+-]?(
            \d+\s*/\s*\d+     # p/q
          | \d+\.\d*          # 12.  12.5
          | \.\d+             # .5
          | \d+               # 12
        )$""",
    re.VERBOSE,
)


def parse_rational(text: str) -> Rational:
    """Parse an exact rational from ``"p"``, ``"p/q"`` or a decimal string.

    Decimal strings denote exact rationals (``"0.55"`` is 11/20).
    Scientific notation and float special values are rejected.
    """
    if not isinstance(text, str):
        raise ValueError(f"rational must be a string, got {type(text).__name__}")
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"malformed rational literal: {text!r}")
    s = s.replace(" ", "")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in rational literal: {text!r}")
        return Rational(int(num), int(den))
    if "." in s:
        sign = -1 if s.startswith("-") else 1
        s2 = s.lstrip("+-")
        whole, frac = s2.split(".")
        whole = whole or "0"
        scale = 10 ** len(frac)
        value = int(whole) * scale + (int(frac) if frac else 0)
        return Rational(sign * value, scale)
    return Rational(int(s))


def format_rational(value: Rational) -> str:
    """Render a rational as ``"p"`` or ``"p/q"`` in lowest terms."""
    return str(Rational(value))


def _to_rational(value) -> Rational:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError(
            "refusing to build an exact number from a float; "
            "pass an int, a rational, or a literal string"
        )
    return Rational(value)


def _floor_sqrt2_multiple(b: int) -> int:
    """Exact floor(b * sqrt(2)) for an integer b."""
    if b >= 0:
        return _int_isqrt(2 * b * b)
    # b*sqrt(2) is negative and irrational for b != 0.
    return -_int_isqrt(2 * b * b) - 1


class Quad:
    """An element ``a + b*sqrt(2)`` of Q(sqrt(2)), with exact semantics."""

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0):
        object.__setattr__(self, "a", _to_rational(a))
        object.__setattr__(self, "b", _to_rational(b))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("Quad is immutable")

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational_value(self) -> Rational:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Quad":
        if isinstance(value, Quad):
            return value
        if isinstance(value, float):
            raise TypeError("cannot mix floats into exact arithmetic")
        return Quad(value)

    def __add__(self, other) -> "Quad":
        o = self._coerce(other)
        return Quad(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other) -> "Quad":
        o = self._coerce(other)
        return Quad(self.a - o.a, self.b - o.b)

    def __rsub__(self, other) -> "Quad":
        o = self._coerce(other)
        return Quad(o.a - self.a, o.b - self.b)

    def __mul__(self, other) -> "Quad":
        o = self._coerce(other)
        return Quad(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Quad":
        o = self._coerce(other)
        # (a + b r) / (c + d r) with r = sqrt(2): multiply by the conjugate.
        norm = o.a * o.a - 2 * o.b * o.b
        if norm == 0:
            # For rational c, d: c^2 = 2 d^2 has only the trivial solution.
            raise ZeroDivisionError("division by zero in Q(sqrt(2))")
        inv_a = o.a / norm
        inv_b = -o.b / norm
        return Quad(
            self.a * inv_a + 2 * self.b * inv_b,
            self.a * inv_b + self.b * inv_a,
        )

    def __rtruediv__(self, other) -> "Quad":
        return self._coerce(other).__truediv__(self)

    def __neg__(self) -> "Quad":
        return Quad(-self.a, -self.b)

    def __pos__(self) -> "Quad":
        return self

    def __abs__(self) -> "Quad":
        return -self if self.sign() < 0 else self

    # -- exact order -------------------------------------------------------

    def sign(self) -> int:
        """Exact sign (-1, 0, +1) of the real number a + b*sqrt(2)."""
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (1 if a > 0 else 0)
        if a == 0:
            return -1 if b < 0 else 1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Signs differ; compare |a| with |b|*sqrt(2) via squares.
        lhs = a * a
        rhs = 2 * b * b
        if a > 0:  # b < 0
            if lhs > rhs:
                return 1
            return -1 if lhs < rhs else 0
        # a < 0, b > 0
        if lhs > rhs:
            return -1
        return 1 if lhs < rhs else 0

    def _cmp(self, other) -> int:
        return (self - self._coerce(other)).sign()

    def __eq__(self, other) -> bool:
        if isinstance(other, Quad):
            return self.a == other.a and self.b == other.b
        if isinstance(other, float):
            return NotImplemented
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __hash__(self):
        # Rational values must hash like the underlying rational so that
        # Quad(3) == 3 implies equal hashes.
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # -- exact rounding ----------------------------------------------------

    def floor(self) -> int:
        """Exact floor, computed without floating point."""
        a, b = self.a, self.b
        # Write a + b*sqrt(2) = (A + B*sqrt(2)) / C with integers A, B, C > 0.
        qa, qb = a.denominator, b.denominator
        c = int(qa) * int(qb) // math.gcd(int(qa), int(qb))
        big_a = int(a.numerator) * (c // int(qa))
        big_b = int(b.numerator) * (c // int(qb))
        n = (big_a + _floor_sqrt2_multiple(big_b)) // c
        # The candidate is exact already, but verify and adjust defensively:
        # floor is the unique n with n <= self < n + 1.
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def approx(self, digits: int = 4) -> str:
        """Correctly rounded decimal string with ``digits`` fractional digits.

        The result is the decimal closest to the exact value (ties round
        toward +infinity), derived from an exact floor computation.
        """
        if digits < 0:
            raise ValueError("digits must be >= 0")
        scale = 10**digits
        n = (self * scale + Quad(Rational(1, 2))).floor()
        sign = "-" if n < 0 else ""
        m = abs(n)
        if digits == 0:
            return f"{sign}{m}"
        return f"{sign}{m // scale}.{m % scale:0{digits}d}"

    def __float__(self) -> float:
        """Approximate float value. For display/plotting only, never decisions."""
        return float(self.a) + float(self.b) * math.sqrt(2.0)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return format_rational(self.a)
        if self.b == 1:
            tail = "sqrt2"
        elif self.b == -1:
            tail = "-sqrt2"
        else:
            tail = f"{format_rational(self.b)}*sqrt2"
        if self.a == 0:
            return tail
        joiner = "" if tail.startswith("-") else "+"
        return f"{format_rational(self.a)}{joiner}{tail}"

    def __repr__(self) -> str:
        return f"Quad({format_rational(self.a)!r}, {format_rational(self.b)!r})"


def quad(value: QuadLike) -> Quad:
    """Coerce an int / rational / Quad (or exact literal string) to Quad."""
    if isinstance(value, Quad):
        return value
    if isinstance(value, str):
        return Quad(parse_rational(value))
    return Quad._coerce(value)


SQRT2 = Quad(0, 1)
ZERO = Quad(0)
ONE = Quad(1)
