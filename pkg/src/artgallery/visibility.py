"""Exact visibility inside a simple polygon.

Visibility is *closed*: two points of the closed region see each other when
the straight segment joining them stays inside the closed region.  Touching
or sliding along the boundary does not break a line of sight, so a sight
line may graze a reflex corner or run along a wall.

Everything below decides with exact arithmetic over Q(sqrt(2)); there are no
tolerances and no floating point anywhere.
"""

from __future__ import annotations

import functools
from typing import List, Optional, Sequence, Tuple

from .geometry import (
    Line,
    Point2,
    Segment,
    angular_key,
    lerp,
    line_intersection,
    point_on_segment,
    same_direction,
    segment_intersection,
)
from .numbers import Quad
from .polygon import SimplePolygon

_ZERO = Quad(0)
_ONE = Quad(1)
_HALF = Quad("1/2")


class VisibilityError(ValueError):
    """Raised when a visibility query is posed outside its domain."""


# -- point-to-point visibility -------------------------------------------------


def sees(poly: SimplePolygon, a: Point2, b: Point2) -> bool:
    """True iff ``a`` and ``b`` see each other inside the closed region.

    Points outside the closed region see nothing (including themselves).
    """
    if a > b:
        a, b = b, a
    return _sees_cached(poly, a, b)


@functools.lru_cache(maxsize=None)
def _sees_cached(poly: SimplePolygon, a: Point2, b: Point2) -> bool:
    if not poly.contains(a) or not poly.contains(b):
        return False
    if a == b:
        return True
    seg = Segment(a, b)
    d = b - a
    use_x = d.x.sign() != 0

    def param(p: Point2) -> Quad:
        return (p.x - a.x) / d.x if use_x else (p.y - a.y) / d.y

    # Cut the segment at every boundary contact; membership is constant on
    # the open spans in between, so testing one midpoint per span is exact.
    cuts = {_ZERO, _ONE}
    for e in poly.edges():
        kind, meet = segment_intersection(seg, e)
        if kind == "point":
            cuts.add(param(meet))
        elif kind == "overlap":
            cuts.add(param(meet.p))
            cuts.add(param(meet.q))
    ordered = sorted(cuts)
    for t0, t1 in zip(ordered, ordered[1:]):
        if not poly.contains(a + d.scaled((t0 + t1) * _HALF)):
            return False
    return True


# -- visibility region ---------------------------------------------------------


class VisRegion:
    """The part of a polygon visible from one guard point.

    ``loop`` walks the region boundary counterclockwise.  The walk is weakly
    simple: one-dimensional sight lines whose neighborhoods are blocked on
    both sides ("needles") are traversed out and back, contributing zero
    area.  ``needles`` lists those maximal one-dimensional excursions.
    """

    __slots__ = ("guard", "loop", "needles")

    def __init__(
        self,
        guard: Point2,
        loop: Tuple[Point2, ...],
        needles: Tuple[Segment, ...],
    ):
        self.guard = guard
        self.loop = loop
        self.needles = needles

    def area(self) -> Quad:
        total = _ZERO
        pts = self.loop
        for i in range(len(pts)):
            total = total + pts[i].cross(pts[(i + 1) % len(pts)])
        return total / 2

    def boundary_segments(self) -> List[Segment]:
        pts = self.loop
        out = []
        for i in range(len(pts)):
            a, b = pts[i], pts[(i + 1) % len(pts)]
            if a != b:
                out.append(Segment(a, b))
        return out

    def __repr__(self) -> str:
        return (
            f"VisRegion(guard={self.guard}, {len(self.loop)} loop vertices, "
            f"{len(self.needles)} needles)"
        )


def _ray_param_fn(g: Point2, d: Point2):
    if d.x.sign() != 0:
        return lambda p: (p.x - g.x) / d.x
    return lambda p: (p.y - g.y) / d.y


def _reach(poly: SimplePolygon, g: Point2, d: Point2) -> Quad:
    """Largest t with the segment from g to g + t*d inside the closed region."""
    param = _ray_param_fn(g, d)
    ray_line = Line.through(g, g + d)
    events = set()
    for e in poly.edges():
        kind, meet = line_intersection(ray_line, Line.through(e.p, e.q))
        if kind == "point":
            if point_on_segment(meet, e):
                t = param(meet)
                if t.sign() >= 0:
                    events.add(t)
        elif kind == "same":
            ta, tb = sorted((param(e.p), param(e.q)))
            if tb.sign() >= 0:
                events.add(ta if ta.sign() > 0 else _ZERO)
                events.add(tb)
    if not events:
        raise VisibilityError("ray from an interior point never meets the boundary")
    cur = _ZERO
    for t in sorted(events):
        if t > cur:
            mid = g + d.scaled((cur + t) * _HALF)
            if not poly.contains(mid):
                return cur
        cur = t
    return cur


_Piece = Tuple[Segment, Tuple[Quad, Point2], Tuple[Quad, Point2]]


def _sector_piece(
    poly: SimplePolygon, g: Point2, d_lo: Point2, d_hi: Point2
) -> Optional[_Piece]:
    """Boundary piece of the visible region inside one open direction sector.

    Consecutive critical directions span less than a half turn and no vertex
    direction lies strictly inside the sector, so a probe ray along
    ``d_lo + d_hi`` exits through the interior of a single edge, and that
    edge faces the whole sector.  Returns None for an empty sector.
    """
    probe = d_lo + d_hi
    reach = _reach(poly, g, probe)
    if reach.sign() == 0:
        return None
    far = g + probe.scaled(reach)
    facing = None
    for e in poly.edges():
        if point_on_segment(far, e):
            facing = e
            break
    if facing is None:
        raise VisibilityError("sector probe left the region off the boundary")
    edge_line = Line.through(facing.p, facing.q)
    ends = []
    for d in (d_lo, d_hi):
        kind, meet = line_intersection(Line.through(g, g + d), edge_line)
        if kind != "point" or meet is None:
            raise VisibilityError("sector boundary ray parallel to facing edge")
        t = _ray_param_fn(g, d)(meet)
        if t.sign() < 0 or not point_on_segment(meet, facing):
            raise VisibilityError("sector piece endpoint left its facing edge")
        ends.append((t, meet))
    return facing, ends[0], ends[1]


def visibility_polygon(poly: SimplePolygon, guard: Point2) -> VisRegion:
    """Exact region of ``poly`` visible from ``guard`` (anywhere in the
    closed region, boundary included)."""
    if not poly.contains(guard):
        raise VisibilityError(f"guard {guard} lies outside the region")

    dirs: List[Point2] = []
    for v in poly.vertices:
        d = v - guard
        if not d.is_zero():
            dirs.append(d)
    dirs.extend(
        (
            Point2(_ONE, _ZERO),
            Point2(_ZERO, _ONE),
            Point2(-_ONE, _ZERO),
            Point2(_ZERO, -_ONE),
        )
    )
    dirs.sort(key=angular_key)
    unique: List[Point2] = []
    for d in dirs:
        if not unique or not same_direction(unique[-1], d):
            unique.append(d)
    m = len(unique)

    pieces = [
        _sector_piece(poly, guard, unique[i], unique[(i + 1) % m]) for i in range(m)
    ]
    reaches = [_reach(poly, guard, d) for d in unique]

    loop: List[Point2] = []
    needles: List[Segment] = []

    def emit(p: Point2) -> None:
        if not loop or loop[-1] != p:
            loop.append(p)

    for i in range(m):
        prev_piece = pieces[i - 1]
        cur_piece = pieces[i]
        t_in, p_in = prev_piece[2] if prev_piece else (_ZERO, guard)
        t_out, p_out = cur_piece[1] if cur_piece else (_ZERO, guard)
        emit(p_in)
        base_t = t_in if t_in >= t_out else t_out
        if reaches[i] > base_t:
            far = guard + unique[i].scaled(reaches[i])
            needles.append(Segment(p_in if t_in >= t_out else p_out, far))
            emit(far)
        emit(p_out)
        if cur_piece:
            emit(cur_piece[2][1])
    if len(loop) > 1 and loop[0] == loop[-1]:
        loop.pop()
    return VisRegion(guard, tuple(loop), tuple(needles))


# -- one-dimensional visibility along a segment ---------------------------------


def seen_part_of_segment(
    poly: SimplePolygon, guard: Point2, seg: Segment
) -> List[Tuple[Quad, Quad]]:
    """Maximal closed parameter intervals of ``seg`` visible from ``guard``.

    ``seg`` must lie inside the closed region.  Intervals are returned as
    sorted disjoint pairs (t0, t1) with 0 <= t0 <= t1 <= 1 measured from
    ``seg.p``; an isolated grazing contact appears as a pair with t0 == t1.
    """
    if seg.is_degenerate():
        return [(_ZERO, _ZERO)] if sees(poly, guard, seg.p) else []

    a, b = seg.p, seg.q
    d = b - a
    seg_line = Line.through(a, b)
    use = _ray_param_fn(a, d)

    # Visibility along the segment changes only where the segment crosses a
    # sight ray through a vertex, or at the segment's own boundary contacts
    # (which are vertex contacts or collinear wall overlaps, again delimited
    # by vertices, because the segment never leaves the closed region).
    cuts = {_ZERO, _ONE}
    for v in poly.vertices:
        if v == guard:
            continue
        kind, meet = line_intersection(Line.through(guard, v), seg_line)
        if kind == "point":
            t = use(meet)
        elif kind == "same":
            t = use(v)
        else:
            continue
        if _ZERO <= t <= _ONE:
            cuts.add(t)

    ordered = sorted(cuts)
    span_seen = [
        sees(poly, guard, lerp(a, b, (t0 + t1) * _HALF))
        for t0, t1 in zip(ordered, ordered[1:])
    ]

    out: List[Tuple[Quad, Quad]] = []
    for i, seen in enumerate(span_seen):
        if not seen:
            continue
        t0, t1 = ordered[i], ordered[i + 1]
        if out and out[-1][1] == t0:
            out[-1] = (out[-1][0], t1)
        else:
            out.append((t0, t1))
    # Isolated grazing contacts: cut points visible on their own although
    # neither neighboring span is.
    for i, t in enumerate(ordered):
        left = span_seen[i - 1] if i > 0 else False
        right = span_seen[i] if i < len(span_seen) else False
        if not left and not right and sees(poly, guard, lerp(a, b, t)):
            out.append((t, t))
    out.sort(key=lambda pair: pair[0])
    return out


def spans_to_segments(
    seg: Segment, spans: Sequence[Tuple[Quad, Quad]]
) -> List[Segment]:
    """Map parameter intervals back to sub-segments of ``seg``."""
    return [
        Segment(lerp(seg.p, seg.q, t0), lerp(seg.p, seg.q, t1)) for t0, t1 in spans
    ]
