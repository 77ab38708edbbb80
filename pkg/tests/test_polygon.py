"""SimplePolygon invariants, membership, transforms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from artgallery.geometry import Point2, Segment, orientation, pt
from artgallery.numbers import Quad
from artgallery.polygon import PolygonError, SimplePolygon, validate_simple


SQUARE = SimplePolygon([pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)])


def test_rejects_bowtie():
    bowtie = [pt(0, 0), pt(1, 1), pt(1, 0), pt(0, 1)]
    assert not validate_simple(bowtie)
    with pytest.raises(PolygonError):
        SimplePolygon(bowtie)


def test_rejects_clockwise():
    with pytest.raises(PolygonError, match="counterclockwise"):
        SimplePolygon([pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)])


def test_rejects_degenerate():
    with pytest.raises(PolygonError):
        SimplePolygon([pt(0, 0), pt(1, 0)])
    with pytest.raises(PolygonError, match="consecutive"):
        SimplePolygon([pt(0, 0), pt(1, 0), pt(1, 0), pt(0, 1)])


def test_rejects_spur():
    # A zero-width spike doubling back on itself.
    with pytest.raises(PolygonError):
        SimplePolygon([pt(0, 0), pt(4, 0), pt(2, 2), pt(4, 0 + 4), pt(2, 2), pt(0, 4)])


def test_rejects_bad_feature():
    with pytest.raises(PolygonError, match="feature"):
        SimplePolygon([pt(0, 0), pt(1, 0), pt(0, 1)], {"oops": (0, 9)})
    with pytest.raises(PolygonError, match="feature"):
        SimplePolygon([pt(0, 0), pt(1, 0), pt(0, 1)], {"oops": (1, 1)})


def test_collinear_run_is_allowed():
    poly = SimplePolygon([pt(0, 0), pt(2, 0), pt(4, 0), pt(4, 4), pt(0, 4)])
    assert poly.area() == Quad(16)


def test_area_and_membership_square():
    assert SQUARE.area() == Quad(16)
    assert SQUARE.contains(pt(2, 2))
    assert SQUARE.contains(pt(0, 0))          # vertex
    assert SQUARE.contains(pt(2, 0))          # edge
    assert SQUARE.on_boundary(pt(2, 0))
    assert not SQUARE.strictly_contains(pt(2, 0))
    assert SQUARE.strictly_contains(pt(2, 2))
    assert not SQUARE.contains(pt(5, 2))
    assert not SQUARE.contains(pt(2, -1))
    assert not SQUARE.contains(pt(Quad(2), Quad(4, "1/1000")))


def test_membership_with_pocket():
    # Square with a notch cut into the top edge.
    poly = SimplePolygon(
        [pt(0, 0), pt(4, 0), pt(4, 4), pt(3, 4), pt(3, 2), pt(1, 2), pt(1, 4), pt(0, 4)]
    )
    assert poly.contains(pt(2, 1))
    assert not poly.contains(pt(2, 3))        # inside the notch void
    assert poly.contains(pt(2, 2))            # notch floor is boundary
    assert poly.contains(pt("7/2", 3))
    assert poly.area() == Quad(12)


def test_membership_irrational_point():
    assert SQUARE.contains(Point2(Quad(0, 1), Quad(0, 1)))  # (sqrt2, sqrt2)
    assert not SQUARE.contains(Point2(Quad(0, 3), Quad(1)))  # 3*sqrt2 > 4


def test_feature_accessors():
    poly = SimplePolygon(
        [pt(0, 0), pt(4, 0), pt(4, 4), pt(3, 4), pt(3, 2), pt(1, 2), pt(1, 4), pt(0, 4)],
        {"notch": (3, 6), "diag": (0, 2)},
    )
    assert poly.feature_chain("notch") == (pt(3, 4), pt(3, 2), pt(1, 2), pt(1, 4))
    assert poly.feature_edges("notch") == (
        Segment(pt(3, 4), pt(3, 2)),
        Segment(pt(3, 2), pt(1, 2)),
        Segment(pt(1, 2), pt(1, 4)),
    )
    assert poly.feature_segment("diag") == Segment(pt(0, 0), pt(4, 4))
    with pytest.raises(KeyError, match="unknown feature"):
        poly.feature_segment("nope")


def test_feature_chain_wraps():
    poly = SimplePolygon([pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)], {"wrap": (3, 1)})
    assert poly.feature_chain("wrap") == (pt(0, 4), pt(0, 0), pt(4, 0))


def test_translate():
    moved = SQUARE.translated(Quad(10), Quad(0, 1))
    assert moved.vertices[0] == Point2(Quad(10), Quad(0, 1))
    assert moved.area() == SQUARE.area()


def test_scale_to_integer():
    tri = SimplePolygon([pt(0, 0), pt(1, 0), pt("1/3", "1/3")])
    scaled, scale = tri.scale_to_integer()
    assert scale == 3
    assert scaled.vertices == (pt(0, 0), pt(3, 0), pt(1, 1))

    unit = SimplePolygon([pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
    same, scale = unit.scale_to_integer()
    assert scale == 1
    assert same == unit

    with pytest.raises(PolygonError, match="irrational"):
        SimplePolygon([pt(0, 0), pt(1, 0), Point2(Quad(0, 1), Quad(1))]).scale_to_integer()


def test_monotone_and_rectilinear():
    assert SQUARE.is_x_monotone()
    assert SQUARE.is_rectilinear()
    # A plus sign IS x-monotone: every vertical line meets it in one interval.
    plus = SimplePolygon(
        [
            pt(1, 0), pt(2, 0), pt(2, 1), pt(3, 1), pt(3, 2), pt(2, 2),
            pt(2, 3), pt(1, 3), pt(1, 2), pt(0, 2), pt(0, 1), pt(1, 1),
        ]
    )
    assert plus.is_x_monotone()
    assert plus.is_rectilinear()
    # A C-shape opening left is not: x=1 hits two separate bars.
    cshape = SimplePolygon(
        [
            pt(0, 0), pt(3, 0), pt(3, 3), pt(0, 3), pt(0, 2),
            pt(2, 2), pt(2, 1), pt(0, 1),
        ]
    )
    assert not cshape.is_x_monotone()
    assert cshape.is_rectilinear()
    tri = SimplePolygon([pt(0, 0), pt(2, 0), pt(1, 2)])
    assert tri.is_x_monotone()
    assert not tri.is_rectilinear()


# -- property tests ------------------------------------------------------------


def _hull(points):
    """Andrew's monotone chain on integer points (independent oracle path)."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return []

    def build(seq):
        out = []
        for p in seq:
            while (
                len(out) >= 2
                and (out[-1][0] - out[-2][0]) * (p[1] - out[-2][1])
                - (out[-1][1] - out[-2][1]) * (p[0] - out[-2][0])
                <= 0
            ):
                out.pop()
            out.append(p)
        return out

    lower = build(pts)
    upper = build(reversed(pts))
    return lower[:-1] + upper[:-1]


ipoints = st.lists(
    st.tuples(st.integers(-20, 20), st.integers(-20, 20)), min_size=3, max_size=12
)


@settings(max_examples=300, deadline=None)
@given(ipoints)
def test_convex_hull_polygons_validate_and_area_matches(points):
    hull = _hull(points)
    if len(hull) < 3:
        return
    poly = SimplePolygon([pt(x, y) for x, y in hull])
    # Independent shoelace with Fractions:
    total = Fraction(0)
    for i in range(len(hull)):
        x1, y1 = hull[i]
        x2, y2 = hull[(i + 1) % len(hull)]
        total += Fraction(x1 * y2 - x2 * y1)
    want = abs(total) / 2
    got = poly.area()
    assert got.b == 0 and got.a == want


@settings(max_examples=300, deadline=None)
@given(ipoints, st.tuples(st.integers(-25, 25), st.integers(-25, 25)))
def test_convex_membership_matches_halfplane_oracle(points, probe):
    hull = _hull(points)
    if len(hull) < 3:
        return
    poly = SimplePolygon([pt(x, y) for x, y in hull])
    p = pt(*probe)
    want = all(
        orientation(pt(*hull[i]), pt(*hull[(i + 1) % len(hull)]), p) >= 0
        for i in range(len(hull))
    )
    assert poly.contains(p) == want
