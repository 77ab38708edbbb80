"""Exact planar kernel over Q(sqrt(2)).

Points, lines, segments, orientation tests, and intersection routines.
Every predicate returns an exact answer; there are no tolerances anywhere.
"""

from __future__ import annotations

import functools
from typing import NamedTuple, Optional, Tuple, Union

from .numbers import Quad, QuadLike, quad


class Point2(NamedTuple):
    x: Quad
    y: Quad

    def __add__(self, other: "Point2") -> "Point2":  # type: ignore[override]
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def scaled(self, factor: QuadLike) -> "Point2":
        f = quad(factor)
        return Point2(self.x * f, self.y * f)

    def cross(self, other: "Point2") -> Quad:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "Point2") -> Quad:
        return self.x * other.x + self.y * other.y

    def is_zero(self) -> bool:
        return self.x == Quad(0) and self.y == Quad(0)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def pt(x: QuadLike, y: QuadLike) -> Point2:
    """Build a point, coercing ints / rationals / literal strings exactly."""
    return Point2(quad(x), quad(y))


def orientation(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of the signed area of triangle (a, b, c): +1 ccw, -1 cw, 0 collinear."""
    return (b - a).cross(c - a).sign()


def lerp(a: Point2, b: Point2, t: QuadLike) -> Point2:
    return a + (b - a).scaled(t)


def midpoint(a: Point2, b: Point2) -> Point2:
    return lerp(a, b, quad("1/2"))


class Segment(NamedTuple):
    p: Point2
    q: Point2

    def is_degenerate(self) -> bool:
        return self.p == self.q

    def direction(self) -> Point2:
        return self.q - self.p

    def reversed(self) -> "Segment":
        return Segment(self.q, self.p)

    def __str__(self) -> str:
        return f"[{self.p} -> {self.q}]"


def point_on_segment(point: Point2, seg: Segment) -> bool:
    """Exact membership of a point in a closed segment."""
    if orientation(seg.p, seg.q, point) != 0:
        return False
    lo_x, hi_x = sorted((seg.p.x, seg.q.x))
    lo_y, hi_y = sorted((seg.p.y, seg.q.y))
    return lo_x <= point.x <= hi_x and lo_y <= point.y <= hi_y


class Line(NamedTuple):
    """Oriented-free line alpha*x + beta*y + gamma = 0.

    Normalized so the first nonzero of (alpha, beta) equals 1; equal lines
    therefore compare and hash equal, which the arrangement code relies on.
    """

    alpha: Quad
    beta: Quad
    gamma: Quad

    @staticmethod
    def through(a: Point2, b: Point2) -> "Line":
        if a == b:
            raise ValueError("cannot build a line through two equal points")
        alpha = b.y - a.y
        beta = a.x - b.x
        gamma = -(alpha * a.x + beta * a.y)
        return Line._normalized(alpha, beta, gamma)

    @staticmethod
    def _normalized(alpha: Quad, beta: Quad, gamma: Quad) -> "Line":
        if alpha != Quad(0):
            return Line(Quad(1), beta / alpha, gamma / alpha)
        if beta == Quad(0):
            raise ValueError("degenerate line coefficients")
        return Line(Quad(0), Quad(1), gamma / beta)

    def evaluate(self, point: Point2) -> Quad:
        return self.alpha * point.x + self.beta * point.y + self.gamma

    def side(self, point: Point2) -> int:
        return self.evaluate(point).sign()

    def contains(self, point: Point2) -> bool:
        return self.side(point) == 0


LineMeet = Tuple[str, Optional[Point2]]  # ("point", p) | ("parallel", None) | ("same", None)


def line_intersection(l1: Line, l2: Line) -> LineMeet:
    det = l1.alpha * l2.beta - l2.alpha * l1.beta
    if det == Quad(0):
        # Normalization makes parallel lines share (alpha, beta) exactly.
        return ("same", None) if l1.gamma == l2.gamma else ("parallel", None)
    x = (l1.beta * l2.gamma - l2.beta * l1.gamma) / det
    y = (l2.alpha * l1.gamma - l1.alpha * l2.gamma) / det
    return ("point", Point2(x, y))


SegmentMeet = Tuple[str, Union[None, Point2, Segment]]


def _collinear_overlap(s1: Segment, s2: Segment) -> SegmentMeet:
    """Overlap of two collinear segments (callers guarantee collinearity)."""
    d = s1.direction()
    if d.is_zero():
        d = s2.direction()
    # Project every endpoint on the dominant axis of d: exact 1-D problem.
    use_x = abs(d.x) >= abs(d.y)

    def key(p: Point2) -> Quad:
        return p.x if use_x else p.y

    # sorted() with Quad keys works because Quad is totally ordered.
    e1 = sorted((s1.p, s1.q), key=key)
    e2 = sorted((s2.p, s2.q), key=key)
    lo = e1[0] if key(e1[0]) >= key(e2[0]) else e2[0]
    hi = e1[1] if key(e1[1]) <= key(e2[1]) else e2[1]
    if key(lo) > key(hi):
        return ("empty", None)
    if lo == hi:
        return ("point", lo)
    return ("overlap", Segment(lo, hi))


def segment_intersection(s1: Segment, s2: Segment) -> SegmentMeet:
    """Exact intersection of two closed segments.

    Returns ("empty", None), ("point", Point2), or ("overlap", Segment).
    Degenerate (zero-length) segments are handled as points.
    """
    if s1.is_degenerate() and s2.is_degenerate():
        return ("point", s1.p) if s1.p == s2.p else ("empty", None)
    if s1.is_degenerate():
        return ("point", s1.p) if point_on_segment(s1.p, s2) else ("empty", None)
    if s2.is_degenerate():
        return ("point", s2.p) if point_on_segment(s2.p, s1) else ("empty", None)

    d1 = orientation(s1.p, s1.q, s2.p)
    d2 = orientation(s1.p, s1.q, s2.q)
    d3 = orientation(s2.p, s2.q, s1.p)
    d4 = orientation(s2.p, s2.q, s1.q)

    if d1 == 0 and d2 == 0:
        return _collinear_overlap(s1, s2)

    if ((d1 > 0) != (d2 > 0) or 0 in (d1, d2)) and ((d3 > 0) != (d4 > 0) or 0 in (d3, d4)):
        # Touching at an endpoint / endpoint on interior:
        if d1 == 0:
            return ("point", s2.p) if point_on_segment(s2.p, s1) else ("empty", None)
        if d2 == 0:
            return ("point", s2.q) if point_on_segment(s2.q, s1) else ("empty", None)
        if d3 == 0:
            return ("point", s1.p) if point_on_segment(s1.p, s2) else ("empty", None)
        if d4 == 0:
            return ("point", s1.q) if point_on_segment(s1.q, s2) else ("empty", None)
        # Proper crossing:
        kind, meet = line_intersection(
            Line.through(s1.p, s1.q), Line.through(s2.p, s2.q)
        )
        assert kind == "point" and meet is not None
        return ("point", meet)
    return ("empty", None)


def segments_properly_cross(s1: Segment, s2: Segment) -> bool:
    """True iff the segments cross at a single point interior to both."""
    d1 = orientation(s1.p, s1.q, s2.p)
    d2 = orientation(s1.p, s1.q, s2.q)
    d3 = orientation(s2.p, s2.q, s1.p)
    d4 = orientation(s2.p, s2.q, s1.q)
    return d1 * d2 < 0 and d3 * d4 < 0


# -- exact angular order -----------------------------------------------------


def _half_axis_class(d: Point2) -> int:
    """Index 0..7 of the half-axis/quadrant of a nonzero direction, ccw from +x."""
    sx, sy = d.x.sign(), d.y.sign()
    table = {
        (1, 0): 0,
        (1, 1): 1,
        (0, 1): 2,
        (-1, 1): 3,
        (-1, 0): 4,
        (-1, -1): 5,
        (0, -1): 6,
        (1, -1): 7,
    }
    if sx == 0 and sy == 0:
        raise ValueError("zero direction has no angle")
    return table[(sx, sy)]


def angular_compare(d1: Point2, d2: Point2) -> int:
    """Exact comparison of direction angles in [0, 2*pi), ccw from +x axis."""
    c1, c2 = _half_axis_class(d1), _half_axis_class(d2)
    if c1 != c2:
        return -1 if c1 < c2 else 1
    return -d1.cross(d2).sign()


angular_key = functools.cmp_to_key(angular_compare)


def same_direction(d1: Point2, d2: Point2) -> bool:
    """True iff nonzero d1, d2 point the same way (positive multiples)."""
    return d1.cross(d2) == Quad(0) and d1.dot(d2) > Quad(0)
