"""Kernel predicates vs an independent Fraction-based oracle."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from artgallery.geometry import (
    Line,
    Point2,
    Segment,
    angular_compare,
    angular_key,
    lerp,
    line_intersection,
    midpoint,
    orientation,
    point_on_segment,
    pt,
    same_direction,
    segment_intersection,
    segments_properly_cross,
)
from artgallery.numbers import Quad


# -- independent oracle (Fractions, parametric solve; integer inputs only) ----


def oracle_intersection(a, b, c, d):
    """Intersection of closed segments ab and cd with Fraction arithmetic.

    Returns ("empty", None) | ("point", (x, y)) | ("overlap", {(x,y),(x,y)}).
    Completely separate algorithm: parametric solve + interval logic.
    """
    ax, ay = map(Fraction, a)
    bx, by = map(Fraction, b)
    cx, cy = map(Fraction, c)
    dx, dy = map(Fraction, d)
    rx, ry = bx - ax, by - ay
    sx, sy = dx - cx, dy - cy

    def on_seg(px, py, ux, uy, vx, vy):
        if (vx - ux) * (py - uy) - (vy - uy) * (px - ux) != 0:
            return False
        return min(ux, vx) <= px <= max(ux, vx) and min(uy, vy) <= py <= max(uy, vy)

    if (rx, ry) == (0, 0) and (sx, sy) == (0, 0):
        return ("point", (ax, ay)) if (ax, ay) == (cx, cy) else ("empty", None)
    if (rx, ry) == (0, 0):
        return ("point", (ax, ay)) if on_seg(ax, ay, cx, cy, dx, dy) else ("empty", None)
    if (sx, sy) == (0, 0):
        return ("point", (cx, cy)) if on_seg(cx, cy, ax, ay, bx, by) else ("empty", None)
    denom = rx * sy - ry * sx
    acx, acy = cx - ax, cy - ay
    if denom != 0:
        t = (acx * sy - acy * sx) / denom
        u = (acx * ry - acy * rx) / denom
        if 0 <= t <= 1 and 0 <= u <= 1:
            return ("point", (ax + t * rx, ay + t * ry))
        return ("empty", None)
    # Parallel. Collinear iff ac is parallel to r (or both degenerate).
    if acx * ry - acy * rx != 0 and acx * sy - acy * sx != 0:
        return ("empty", None)
    # Collinear: project on dominant axis.
    pts1 = sorted([(ax, ay), (bx, by)])
    pts2 = sorted([(cx, cy), (dx, dy)])
    if abs(rx) + abs(sx) < abs(ry) + abs(sy):
        pts1 = sorted([(ay, ax), (by, bx)])
        pts2 = sorted([(cy, cx), (dy, dx)])
        lo = max(pts1[0], pts2[0])
        hi = min(pts1[1], pts2[1])
        if lo > hi:
            return ("empty", None)
        if lo == hi:
            return ("point", (lo[1], lo[0]))
        return ("overlap", {(lo[1], lo[0]), (hi[1], hi[0])})
    lo = max(pts1[0], pts2[0])
    hi = min(pts1[1], pts2[1])
    if lo > hi:
        return ("empty", None)
    if lo == hi:
        return ("point", lo)
    return ("overlap", {lo, hi})


def as_fractions(p: Point2):
    return (
        Fraction(int(p.x.a.numerator), int(p.x.a.denominator)),
        Fraction(int(p.y.a.numerator), int(p.y.a.denominator)),
    )


# -- hand cases ----------------------------------------------------------------


def test_orientation_hand():
    assert orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1
    assert orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1
    assert orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0
    # irrational coordinates: (sqrt2, 2) sits exactly on y = sqrt2 * x
    assert orientation(pt(0, 0), pt(1, Quad(0, 1)), pt(Quad(0, 1), 2)) == 0


def test_segment_intersection_hand():
    cross = segment_intersection(
        Segment(pt(0, 0), pt(2, 2)), Segment(pt(0, 2), pt(2, 0))
    )
    assert cross == ("point", pt(1, 1))

    touch = segment_intersection(
        Segment(pt(0, 0), pt(1, 0)), Segment(pt(1, 0), pt(2, 5))
    )
    assert touch == ("point", pt(1, 0))

    kind, seg = segment_intersection(
        Segment(pt(0, 0), pt(4, 0)), Segment(pt(1, 0), pt(9, 0))
    )
    assert kind == "overlap"
    assert {seg.p, seg.q} == {pt(1, 0), pt(4, 0)}

    assert segment_intersection(
        Segment(pt(0, 0), pt(1, 0)), Segment(pt(0, 1), pt(1, 1))
    ) == ("empty", None)

    assert segment_intersection(
        Segment(pt(0, 0), pt(1, 0)), Segment(pt(2, 0), pt(3, 0))
    ) == ("empty", None)

    # Closed-segment touch in the middle:
    assert segment_intersection(
        Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, 0), pt(1, 3))
    ) == ("point", pt(1, 0))


def test_segment_intersection_irrational_crossing():
    # Diagonal through origin with slope sqrt2 meets the horizontal y = 2
    # at x = 2/sqrt2 = sqrt2.
    kind, p = segment_intersection(
        Segment(pt(0, 0), pt(2, Quad(0, 2))), Segment(pt(-5, 2), pt(5, 2))
    )
    assert kind == "point"
    assert p == pt(Quad(0, 1), 2)


def test_line_basics():
    l1 = Line.through(pt(0, 0), pt(2, 2))
    l2 = Line.through(pt(5, 5), pt(7, 7))
    assert l1 == l2  # normalization makes equal lines literally equal
    kind, _ = line_intersection(l1, l2)
    assert kind == "same"
    l3 = Line.through(pt(0, 1), pt(1, 2))
    assert line_intersection(l1, l3) == ("parallel", None)
    l4 = Line.through(pt(0, 4), pt(4, 0))
    assert line_intersection(l1, l4) == ("point", pt(2, 2))
    assert l4.contains(pt(1, 3))
    assert l4.side(pt(0, 0)) != 0


def test_vertical_lines_normalize():
    v1 = Line.through(pt(3, 0), pt(3, 9))
    v2 = Line.through(pt(3, -4), pt(3, 17))
    assert v1 == v2
    h = Line.through(pt(0, 1), pt(8, 1))
    assert h.alpha == Quad(0) and h.beta == Quad(1)


def test_properly_cross():
    assert segments_properly_cross(
        Segment(pt(0, 0), pt(2, 2)), Segment(pt(0, 2), pt(2, 0))
    )
    assert not segments_properly_cross(
        Segment(pt(0, 0), pt(1, 1)), Segment(pt(1, 1), pt(2, 0))
    )


def test_angular_order_hand():
    dirs = [pt(1, 0), pt(1, 1), pt(0, 1), pt(-1, 1), pt(-1, 0), pt(-1, -1), pt(0, -1), pt(1, -1)]
    shuffled = dirs[3:] + dirs[:3]
    assert sorted(shuffled, key=angular_key) == dirs
    assert angular_compare(pt(2, 1), pt(1, 1)) < 0
    assert angular_compare(pt(3, 3), pt(1, 1)) == 0
    assert same_direction(pt(3, 3), pt(1, 1))
    assert not same_direction(pt(-3, -3), pt(1, 1))


def test_zero_direction_rejected():
    with pytest.raises(ValueError):
        angular_compare(pt(0, 0), pt(1, 0))


# -- property suites -----------------------------------------------------------

coords = st.integers(-12, 12)
points = st.builds(lambda x, y: (x, y), coords, coords)


@settings(max_examples=2000, deadline=None)
@given(points, points, points, points)
def test_segment_intersection_matches_oracle(a, b, c, d):
    got_kind, got = segment_intersection(
        Segment(pt(*a), pt(*b)), Segment(pt(*c), pt(*d))
    )
    want_kind, want = oracle_intersection(a, b, c, d)
    assert got_kind == want_kind
    if want_kind == "point":
        assert as_fractions(got) == want
    elif want_kind == "overlap":
        assert {as_fractions(got.p), as_fractions(got.q)} == want


@settings(max_examples=2000, deadline=None)
@given(points, points, points)
def test_orientation_matches_fraction_cross(a, b, c):
    cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    want = (cross > 0) - (cross < 0)
    assert orientation(pt(*a), pt(*b), pt(*c)) == want


@settings(max_examples=500, deadline=None)
@given(points, points, st.fractions(min_value=0, max_value=1))
def test_lerp_points_lie_on_segment(a, b, t):
    seg = Segment(pt(*a), pt(*b))
    p = lerp(seg.p, seg.q, Quad(f"{t.numerator}/{t.denominator}"))
    assert point_on_segment(p, seg)
    assert point_on_segment(midpoint(seg.p, seg.q), seg)


@settings(max_examples=500, deadline=None)
@given(points, points)
def test_angular_compare_matches_atan2(a, b):
    if a == (0, 0) or b == (0, 0):
        return
    ang_a = math.atan2(a[1], a[0]) % (2 * math.pi)
    ang_b = math.atan2(b[1], b[0]) % (2 * math.pi)
    if abs(ang_a - ang_b) < 1e-9:
        return  # float oracle unreliable near ties
    want = -1 if ang_a < ang_b else 1
    assert angular_compare(pt(*a), pt(*b)) == want


@settings(max_examples=300, deadline=None)
@given(points, points, points)
def test_angular_order_transitive(a, b, c):
    ds = [pt(*p) for p in (a, b, c) if p != (0, 0)]
    ds_sorted = sorted(ds, key=angular_key)
    for i in range(len(ds_sorted) - 1):
        assert angular_compare(ds_sorted[i], ds_sorted[i + 1]) <= 0
