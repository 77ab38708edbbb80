"""One-parameter exact analysis of guards sliding along the forcing chords.

The main gallery pins any 3-guard solution to three vertical/slanted chords
(see :mod:`artgallery.galleries` features ``force_left``, ``force_mid``,
``force_right``).  This module studies, symbolically and exactly:

* which heights on the side chords let a guard cover the far slab pockets
  (:func:`admissible_height_interval`),
* how much of each sloped ramp edge a side guard at height ``h`` sees
  (:func:`extreme_seen_point_formula`), and how far along the mid chord a
  guard must sit to cover the remainder (:func:`middle_guard_bound`),
* the optimal side-guard height, obtained exactly as the crossing point of
  two monotone Möbius bounds (:func:`optimize_guard_height`) — the value
  lands outside the rationals, inside Q(sqrt 2), and both side optima force
  the *same* mid-chord position,
* the conic locus traced by the "exactly enough" mid position as the side
  guard slides (:func:`derive_conic`), fitted exactly through rational
  samples and verified on held-out samples.

Everything here is derived from the gallery's feature geometry at call time;
no formula is hard-coded.  The test suite freezes the resulting coefficient
tuples after independent verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .geometry import Line, Point2, Segment, line_intersection, pt
from .numbers import Quad, Rational
from .polygon import SimplePolygon
from .ratfunc import (
    MonotonicityError,
    Poly1,
    RationalFunction1,
    rational_sqrt_in_quad,
    rf_monotone,
)
from .visibility import seen_part_of_segment

__all__ = [
    "AnalysisError",
    "GuardOptimum",
    "SIDES",
    "EDGES",
    "admissible_height_interval",
    "side_chord",
    "mid_chord_segment",
    "mid_chord_height_map",
    "mid_guard_x_interval",
    "mid_guard_y_interval",
    "extreme_seen_point_formula",
    "mid_reach_formula",
    "middle_guard_bound",
    "optimize_guard_height",
    "derive_conic",
    "conic_value",
]

SIDES = ("left", "right")
EDGES = ("top", "bottom")

RFPair = Tuple[RationalFunction1, RationalFunction1]
RFLine = Tuple[RationalFunction1, RationalFunction1, RationalFunction1]


class AnalysisError(ValueError):
    """Raised when the gallery geometry violates an analysis precondition."""


def _rational(value: Quad) -> Rational:
    """Extract the rational part of a Quad that must be rational."""
    if isinstance(value, Quad):
        if value.b != 0:
            raise AnalysisError(f"expected a rational value, got {value!r}")
        return value.a
    return Rational(value)


def _rf_const(value) -> RationalFunction1:
    return RationalFunction1.constant(_rational(value) if isinstance(value, Quad) else value)


def _rf_point(point: Point2) -> RFPair:
    return (_rf_const(point.x), _rf_const(point.y))


def _rf_line_through(p: RFPair, q: RFPair) -> RFLine:
    """Line alpha*x + beta*y + gamma = 0 through two symbolic points."""
    alpha = p[1] - q[1]
    beta = q[0] - p[0]
    gamma = p[0] * q[1] - q[0] * p[1]
    return (alpha, beta, gamma)


def _rf_line_fixed(line: Line) -> RFLine:
    return (_rf_const(line.alpha), _rf_const(line.beta), _rf_const(line.gamma))


def _rf_intersect(l1: RFLine, l2: RFLine) -> RFPair:
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    if det == RationalFunction1.constant(0):
        raise AnalysisError("symbolic lines are parallel for every parameter value")
    x = (b1 * c2 - b2 * c1) / det
    y = (c1 * a2 - c2 * a1) / det
    return (x, y)


# ---------------------------------------------------------------------------
# Chords, pockets, and admissible height intervals
# ---------------------------------------------------------------------------


def side_chord(gallery: SimplePolygon, side: str) -> Tuple[Rational, Segment]:
    """The vertical forcing chord for a side: (x-coordinate, chord segment)."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    seg = gallery.feature_segment(f"force_{side}")
    x0, x1 = _rational(seg.p.x), _rational(seg.q.x)
    if x0 != x1:
        raise AnalysisError(f"force_{side} chord is not vertical")
    return x0, seg


def mid_chord_segment(gallery: SimplePolygon) -> Segment:
    return gallery.feature_segment("force_mid")


def mid_chord_height_map(gallery: SimplePolygon) -> RationalFunction1:
    """y as a function of x along the mid forcing chord (affine)."""
    seg = mid_chord_segment(gallery)
    x0, y0 = _rational(seg.p.x), _rational(seg.p.y)
    x1, y1 = _rational(seg.q.x), _rational(seg.q.y)
    if x0 == x1:
        raise AnalysisError("mid chord is vertical; cannot parameterize by x")
    slope = (y1 - y0) / (x1 - x0)
    return RationalFunction1(Poly1([y0 - slope * x0, slope]))


def _slab_far_corners(gallery: SimplePolygon, label: str) -> Tuple[Point2, Point2]:
    """The two corners of a slab pocket on the wall opposite its mouth."""
    chain = gallery.feature_chain(label)
    if len(chain) != 4:
        raise AnalysisError(f"{label} does not look like a rectangular pocket")
    return chain[1], chain[2]


def _single_span(
    spans: Sequence[Tuple[Quad, Quad]], what: str
) -> Tuple[Quad, Quad]:
    proper = [(lo, hi) for lo, hi in spans if lo != hi]
    if len(proper) != 1:
        raise AnalysisError(f"{what}: expected one visible span, got {spans!r}")
    return proper[0]


def _intersect_intervals(
    a: Tuple[Rational, Rational], b: Tuple[Rational, Rational], what: str
) -> Tuple[Rational, Rational]:
    lo, hi = max(a[0], b[0]), min(a[1], b[1])
    if lo >= hi:
        raise AnalysisError(f"{what}: admissible interval is empty or degenerate")
    return lo, hi


def _span_on_chord_from_point(
    gallery: SimplePolygon, eye: Point2, chord: Segment, axis: str
) -> Tuple[Rational, Rational]:
    """Coordinates (y for vertical chords, x otherwise) visible from ``eye``."""
    span = _single_span(
        seen_part_of_segment(gallery, eye, chord),
        f"view of chord from {eye}",
    )
    coords = []
    for t in span:
        x = chord.p.x + (chord.q.x - chord.p.x) * t
        y = chord.p.y + (chord.q.y - chord.p.y) * t
        coords.append(_rational(y if axis == "y" else x))
    lo, hi = min(coords), max(coords)
    return lo, hi


_OPPOSITE_SLAB = {"left": "slab_right", "right": "slab_left"}


def admissible_height_interval(
    gallery: SimplePolygon, side: str
) -> Tuple[Rational, Rational]:
    """Heights on a side chord from which the far slab pocket stays covered.

    A side-chord guard is responsible for the slab pocket on the *opposite*
    wall of the gallery; it must see both far corners of that pocket through
    the slab's mouth.  The admissible set is the intersection of the chord
    spans visible from the two far corners, computed with the exact
    visibility engine rather than assumed.
    """
    x0, chord = side_chord(gallery, side)
    far_a, far_b = _slab_far_corners(gallery, _OPPOSITE_SLAB[side])
    span_a = _span_on_chord_from_point(gallery, far_a, chord, axis="y")
    span_b = _span_on_chord_from_point(gallery, far_b, chord, axis="y")
    return _intersect_intervals(span_a, span_b, f"force_{side} heights")


def mid_guard_x_interval(gallery: SimplePolygon) -> Tuple[Rational, Rational]:
    """Mid-chord x-positions that keep the overhead slab pocket covered."""
    chord = mid_chord_segment(gallery)
    far_a, far_b = _slab_far_corners(gallery, "slab_mid")
    span_a = _span_on_chord_from_point(gallery, far_a, chord, axis="x")
    span_b = _span_on_chord_from_point(gallery, far_b, chord, axis="x")
    return _intersect_intervals(span_a, span_b, "force_mid positions")


def mid_guard_y_interval(gallery: SimplePolygon) -> Tuple[Rational, Rational]:
    """The y-range matching :func:`mid_guard_x_interval` along the mid chord."""
    lo, hi = mid_guard_x_interval(gallery)
    height = mid_chord_height_map(gallery)
    y_lo, y_hi = height.evaluate(lo), height.evaluate(hi)
    pair = sorted([_rational(y_lo), _rational(y_hi)])
    return pair[0], pair[1]


# ---------------------------------------------------------------------------
# Ramp pockets: what a sliding guard sees, and what remains for the mid guard
# ---------------------------------------------------------------------------


def _ramp_parts(
    gallery: SimplePolygon, side: str, edge: str
) -> Tuple[Line, Point2, Point2]:
    """(sloped-edge line, mouth lip near the side chord, lip far from it)."""
    if edge not in EDGES:
        raise ValueError(f"edge must be one of {EDGES}, got {edge!r}")
    seg = gallery.feature_segment(f"ramp_edge_{edge}_{side}")
    mouth = gallery.feature_segment(f"ramp_{edge}_{side}")
    chord_x, _ = side_chord(gallery, side)
    lips = sorted([mouth.p, mouth.q], key=lambda p: abs(p.x - chord_x))
    near, far = lips[0], lips[1]
    return Line.through(seg.p, seg.q), near, far


def extreme_seen_point_formula(
    gallery: SimplePolygon, side: str, edge: str
) -> RFPair:
    """The ramp-edge point where a side guard's view past the near lip ends.

    The guard sits at (chord_x, h); the ray from the guard through the mouth
    lip nearest the chord meets the sloped edge's supporting line at the
    returned point (x(h), y(h)).  The guard sees exactly the edge portion on
    the far side of this point, so it marks the visibility watershed.
    """
    edge_line, near_lip, _ = _ramp_parts(gallery, side, edge)
    chord_x, _ = side_chord(gallery, side)
    guard: RFPair = (_rf_const(Quad(chord_x)), RationalFunction1.identity())
    sight = _rf_line_through(guard, _rf_point(near_lip))
    return _rf_intersect(sight, _rf_line_fixed(edge_line))


def mid_reach_formula(gallery: SimplePolygon, side: str, edge: str) -> RFPair:
    """Where a mid-chord guard's view past the far lip meets a ramp edge.

    The mid guard sits at (u, height(u)) on the mid chord; the lip of the
    ramp mouth far from the side chord is the one that limits the mid
    guard's view into that pocket.  Returns (x(u), y(u)).
    """
    edge_line, _, far_lip = _ramp_parts(gallery, side, edge)
    height = mid_chord_height_map(gallery)
    guard: RFPair = (RationalFunction1.identity(), height)
    sight = _rf_line_through(guard, _rf_point(far_lip))
    return _rf_intersect(sight, _rf_line_fixed(edge_line))


_OPPOSITE_SIDE = {"left": "right", "right": "left"}


def cross_reach_formula(gallery: SimplePolygon, side: str, edge: str) -> RFPair:
    """Where the *opposite* side guard's view past the far lip meets a ramp edge.

    The guard on the other side chord sits at (opposite_chord_x, h).  Looking
    across the hall into this side's pocket it shares the mid guard's limiting
    lip — the mouth lip far from the pocket's own chord.  Returns (x(h), y(h))
    on the edge's supporting line.
    """
    edge_line, _, far_lip = _ramp_parts(gallery, side, edge)
    chord_x, _ = side_chord(gallery, _OPPOSITE_SIDE[side])
    guard: RFPair = (_rf_const(Quad(chord_x)), RationalFunction1.identity())
    sight = _rf_line_through(guard, _rf_point(far_lip))
    return _rf_intersect(sight, _rf_line_fixed(edge_line))


def middle_guard_bound(
    gallery: SimplePolygon, side: str, edge: str
) -> RationalFunction1:
    """Mid-chord x-position that exactly picks up a ramp edge's remainder.

    For a side guard at height ``h``, the ramp edge is covered by the pair
    iff the mid guard's watershed reaches the side guard's watershed.  The
    bound B(h) — a Möbius function of the side guard's height — is the
    mid-chord x-position where the two watersheds coincide.  Left-pocket
    bounds cap the mid position from above, right-pocket bounds from below
    (the mid chord's feasible stretch lies between the two pocket groups;
    :func:`optimize_guard_height` checks the directions rather than assumes
    them).
    """
    p_x = extreme_seen_point_formula(gallery, side, edge)[0]
    reach_x = mid_reach_formula(gallery, side, edge)[0]
    if not reach_x.is_mobius():
        raise AnalysisError("mid-guard watershed is not a Möbius map")
    return reach_x.mobius_inverse().compose(p_x)


@dataclass(frozen=True)
class GuardOptimum:
    """Result of optimizing one side guard's height against the mid chord."""

    side: str
    height: Quad
    meet_x: Quad
    height_interval: Tuple[Rational, Rational]
    top_bound: RationalFunction1
    bottom_bound: RationalFunction1
    top_direction: str
    bottom_direction: str
    sense: str  # "upper" if the side's bounds cap the mid position, else "lower"


def _quadratic_roots_in_field(poly: Poly1) -> List[Quad]:
    """Exact roots of a degree<=2 rational polynomial that lie in Q(sqrt 2).

    Raises AnalysisError if a root would require a square root outside the
    field — silently approximating would defeat the exactness guarantee.
    """
    coeffs = poly.coefficients
    if poly.degree <= 0:
        raise AnalysisError("bound difference is constant; no crossing to solve")
    if poly.degree == 1:
        c0, c1 = coeffs
        return [Quad(-c0 / c1)]
    c0, c1, c2 = coeffs
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return []
    sqrt_disc = rational_sqrt_in_quad(disc)
    if sqrt_disc is None:
        raise AnalysisError(
            f"crossing height needs sqrt({disc}), which leaves Q(sqrt 2)"
        )
    scale = 1 / (2 * c2)
    roots = [(-c1 + sqrt_disc) * scale, (-c1 - sqrt_disc) * scale]
    return sorted(set(roots), key=lambda r: (r.a, r.b))


def optimize_guard_height(gallery: SimplePolygon, side: str) -> GuardOptimum:
    """Best height for a side-chord guard, solved exactly.

    The top and bottom ramp bounds are monotone in opposite directions over
    the admissible height interval, so the binding requirement on the mid
    guard is best exactly where the two bounds cross.  The crossing height
    solves a quadratic whose roots stay in Q(sqrt 2); exactly one lies in
    the admissible interval.
    """
    lo, hi = admissible_height_interval(gallery, side)
    top = middle_guard_bound(gallery, side, "top")
    bottom = middle_guard_bound(gallery, side, "bottom")
    try:
        top_dir = rf_monotone(top, lo, hi)
        bottom_dir = rf_monotone(bottom, lo, hi)
    except MonotonicityError as exc:
        raise AnalysisError(f"ramp bound is not monotone in height: {exc}") from exc
    if top_dir == bottom_dir:
        raise AnalysisError(
            "ramp bounds move together; no interior crossing exists"
        )
    difference = top - bottom
    roots = _quadratic_roots_in_field(difference.numerator)
    lo_q, hi_q = Quad(lo), Quad(hi)
    inside = [r for r in roots if lo_q <= r <= hi_q]
    if len(inside) != 1:
        raise AnalysisError(
            f"expected exactly one crossing inside [{lo}, {hi}], got {inside!r}"
        )
    height = inside[0]
    meet_top = top.evaluate(height)
    meet_bottom = bottom.evaluate(height)
    if meet_top != meet_bottom:  # pragma: no cover - roots are exact
        raise AnalysisError("bounds disagree at their own crossing point")

    # The mid chord's feasible stretch sits strictly between the two pocket
    # groups, so one side's pockets cap the mid position from above and the
    # other's support it from below.
    mid_lo, mid_hi = mid_guard_x_interval(gallery)
    pocket = gallery.feature_segment(f"ramp_top_{side}")
    pocket_max_x = max(_rational(pocket.p.x), _rational(pocket.q.x))
    sense = "upper" if pocket_max_x <= mid_lo else "lower"

    return GuardOptimum(
        side=side,
        height=height,
        meet_x=meet_top,
        height_interval=(lo, hi),
        top_bound=top,
        bottom_bound=bottom,
        top_direction=top_dir,
        bottom_direction=bottom_dir,
        sense=sense,
    )


# ---------------------------------------------------------------------------
# The conic locus of "exactly enough" mid positions
# ---------------------------------------------------------------------------


def _default_sample_heights(
    lo: Rational, hi: Rational, count: int = 9
) -> List[Rational]:
    step = (hi - lo) / (count + 1)
    return [lo + step * (k + 1) for k in range(count)]


def conic_samples(
    gallery: SimplePolygon, side: str, heights: Iterable[Rational]
) -> List[Tuple[Rational, Rational]]:
    """Exact rational sample points of the side's mid-position locus.

    For each side-guard height t, project the guard's two watershed points
    back through the corresponding far lips; the rays meet at the unique
    position that exactly picks up both ramp remainders at once.
    """
    top_x, top_y = extreme_seen_point_formula(gallery, side, "top")
    bot_x, bot_y = extreme_seen_point_formula(gallery, side, "bottom")
    _, _, far_top = _ramp_parts(gallery, side, "top")
    _, _, far_bottom = _ramp_parts(gallery, side, "bottom")
    samples: List[Tuple[Rational, Rational]] = []
    for t in heights:
        t = Rational(t)
        p_top = pt(top_x.evaluate(t), top_y.evaluate(t))
        p_bot = pt(bot_x.evaluate(t), bot_y.evaluate(t))
        kind, point = line_intersection(
            Line.through(p_top, far_top), Line.through(p_bot, far_bottom)
        )
        if kind != "point":
            raise AnalysisError(f"watershed rays do not meet at height {t}")
        samples.append((_rational(point.x), _rational(point.y)))
    return samples


def _nullspace_vector(rows: List[List[Rational]]) -> List[Rational]:
    """One basis vector of the nullspace of a rank-(n-1) matrix, exactly."""
    cols = len(rows[0])
    matrix = [row[:] for row in rows]
    pivot_cols: List[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        inv = 1 / matrix[r][c]
        matrix[r] = [v * inv for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivot_cols.append(c)
        r += 1
    if r != cols - 1:
        raise AnalysisError(
            f"degenerate sample set: conic system has rank {r}, need {cols - 1}"
        )
    free_col = next(c for c in range(cols) if c not in pivot_cols)
    vector = [Rational(0)] * cols
    vector[free_col] = Rational(1)
    for row_idx, c in enumerate(pivot_cols):
        vector[c] = -matrix[row_idx][free_col]
    return vector


def _primitive_integer(vector: Sequence[Rational]) -> Tuple[int, ...]:
    from math import lcm

    denominators = [int(v.denominator) for v in vector]
    scale = lcm(*denominators)
    ints = [int(v * scale) for v in vector]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g:
        ints = [v // g for v in ints]
    first = next((v for v in ints if v != 0), 0)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def conic_value(coefficients: Sequence[int], x, y):
    """Evaluate A x^2 + B xy + C y^2 + D x + E y + F exactly."""
    a, b, c, d, e, f = coefficients
    return a * x * x + b * x * y + c * y * y + d * x + e * y + f


def derive_conic(
    gallery: SimplePolygon,
    side: str,
    sample_heights: Optional[Sequence[Rational]] = None,
) -> Tuple[int, ...]:
    """Primitive integer coefficients (A, B, C, D, E, F) of the mid locus.

    Fits the conic exactly through five rational samples of the locus and
    verifies every remaining sample lies on it; any failure raises rather
    than returning an approximate curve.
    """
    if sample_heights is None:
        lo, hi = admissible_height_interval(gallery, side)
        sample_heights = _default_sample_heights(lo, hi)
    heights = [Rational(h) for h in sample_heights]
    if len(heights) < 7:
        raise AnalysisError("need at least 7 samples: 5 to fit, 2 to verify")
    if len(set(heights)) != len(heights):
        raise AnalysisError("sample heights must be distinct")
    samples = conic_samples(gallery, side, heights)
    rows = [[x * x, x * y, y * y, x, y, Rational(1)] for x, y in samples]
    coefficients = _primitive_integer(_nullspace_vector(rows[:5]))
    for (x, y), height in zip(samples, heights):
        if conic_value(coefficients, x, y) != 0:
            raise AnalysisError(
                f"held-out sample at height {height} misses the fitted conic"
            )
    return coefficients
