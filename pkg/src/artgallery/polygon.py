"""Simple polygons with named feature annotations.

A polygon is a counterclockwise closed loop of exact points.  Named
features map a label to a pair of vertex indices: pocket features span the
boundary chain from the first index forward to the second, single-edge
features span one edge, and chord features (the three guard-forcing lines)
join two non-adjacent vertices straight across the interior.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .geometry import Point2, Segment, point_on_segment, segment_intersection
from .numbers import Quad, Rational


class PolygonError(ValueError):
    """Raised when polygon data violates a structural invariant."""


def _loop_defect(vertices: Sequence[Point2]) -> Optional[str]:
    """None if the closed loop is simple, else a description of the defect."""
    n = len(vertices)
    if n < 3:
        return "polygon needs at least 3 vertices"
    for i, v in enumerate(vertices):
        if not isinstance(v, Point2):
            return f"vertex {i} is not a Point2"
        if v == vertices[(i + 1) % n]:
            return f"consecutive equal vertices at index {i}"
    edges = [Segment(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            kind, meet = segment_intersection(edges[i], edges[j])
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent:
                shared = vertices[j % n] if j == i + 1 else vertices[0]
                if kind != "point" or meet != shared:
                    return (
                        f"adjacent edges {i} and {j} intersect beyond their "
                        f"shared vertex ({kind})"
                    )
            elif kind != "empty":
                return f"edges {i} and {j} intersect ({kind})"
    return None


def validate_simple(vertices: Sequence[Point2]) -> bool:
    """True iff the closed loop has no self-intersections."""
    return _loop_defect(vertices) is None


class SimplePolygon:
    """An immutable simple polygon over Q(sqrt(2)) with labeled features."""

    __slots__ = ("_vertices", "_features", "_edges", "_bbox")

    def __init__(
        self,
        vertices: Sequence[Point2],
        features: Optional[Mapping[str, Tuple[int, int]]] = None,
        _validated: bool = False,
    ):
        verts = tuple(vertices)
        feats: Dict[str, Tuple[int, int]] = {
            str(k): (int(v[0]), int(v[1])) for k, v in (features or {}).items()
        }
        object.__setattr__(self, "_vertices", verts)
        object.__setattr__(self, "_features", feats)
        object.__setattr__(self, "_edges", None)
        object.__setattr__(self, "_bbox", None)
        if not _validated:
            self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("SimplePolygon is immutable")

    # -- validation ---------------------------------------------------------

    def _validate(self) -> None:
        verts = self._vertices
        n = len(verts)
        defect = _loop_defect(verts)
        if defect is not None:
            raise PolygonError(defect)
        if self.signed_area().sign() <= 0:
            raise PolygonError("vertices must wind counterclockwise")
        for label, (start, end) in self._features.items():
            if not (0 <= start < n and 0 <= end < n):
                raise PolygonError(f"feature {label!r} references missing vertices")
            if start == end:
                raise PolygonError(f"feature {label!r} is a single vertex")

    # -- basic queries ------------------------------------------------------

    @property
    def vertices(self) -> Tuple[Point2, ...]:
        return self._vertices

    @property
    def features(self) -> Dict[str, Tuple[int, int]]:
        return dict(self._features)

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplePolygon):
            return NotImplemented
        return self._vertices == other._vertices and self._features == other._features

    def __hash__(self):
        return hash(self._vertices)

    def edges(self) -> Tuple[Segment, ...]:
        if self._edges is None:
            verts = self._vertices
            n = len(verts)
            object.__setattr__(
                self,
                "_edges",
                tuple(Segment(verts[i], verts[(i + 1) % n]) for i in range(n)),
            )
        return self._edges

    def bbox(self) -> Tuple[Quad, Quad, Quad, Quad]:
        """(min_x, min_y, max_x, max_y)."""
        if self._bbox is None:
            xs = [v.x for v in self._vertices]
            ys = [v.y for v in self._vertices]
            object.__setattr__(
                self, "_bbox", (min(xs), min(ys), max(xs), max(ys))
            )
        return self._bbox

    def signed_area(self) -> Quad:
        total = Quad(0)
        verts = self._vertices
        for i in range(len(verts)):
            a, b = verts[i], verts[(i + 1) % len(verts)]
            total = total + a.cross(b)
        return total / 2

    def area(self) -> Quad:
        return abs(self.signed_area())

    def is_rectilinear(self) -> bool:
        return all(
            e.p.x == e.q.x or e.p.y == e.q.y for e in self.edges()
        )

    def is_x_monotone(self) -> bool:
        """True iff every vertical line meets the region in a connected set.

        Equivalent test: ignoring vertical edges, the cyclic sequence of
        edge x-directions switches sign at most twice.
        """
        signs = []
        for a, b in self.edges():
            s = (b.x - a.x).sign()
            if s != 0:
                signs.append(s)
        changes = sum(
            1 for i in range(len(signs)) if signs[i] != signs[i - 1]
        )
        return changes <= 2

    # -- membership ---------------------------------------------------------

    def on_boundary(self, point: Point2) -> bool:
        min_x, min_y, max_x, max_y = self.bbox()
        if point.x < min_x or point.x > max_x or point.y < min_y or point.y > max_y:
            return False
        return any(point_on_segment(point, e) for e in self.edges())

    def contains(self, point: Point2) -> bool:
        """Exact closed-region membership (boundary counts as inside)."""
        min_x, min_y, max_x, max_y = self.bbox()
        if point.x < min_x or point.x > max_x or point.y < min_y or point.y > max_y:
            return False
        if self.on_boundary(point):
            return True
        inside = False
        for a, b in self.edges():
            if (a.y > point.y) != (b.y > point.y):
                # Upward/downward crossing: exact x of the edge at height y.
                x_cross = a.x + (point.y - a.y) * (b.x - a.x) / (b.y - a.y)
                if x_cross > point.x:
                    inside = not inside
        return inside

    def strictly_contains(self, point: Point2) -> bool:
        return self.contains(point) and not self.on_boundary(point)

    # -- features -----------------------------------------------------------

    def feature_indices(self, label: str) -> Tuple[int, int]:
        try:
            return self._features[label]
        except KeyError:
            raise KeyError(
                f"unknown feature {label!r}; available: {sorted(self._features)}"
            ) from None

    def feature_chain(self, label: str) -> Tuple[Point2, ...]:
        """Boundary vertices from the feature's start forward to its end."""
        start, end = self.feature_indices(label)
        n = len(self._vertices)
        out = [self._vertices[start]]
        i = start
        while i != end:
            i = (i + 1) % n
            out.append(self._vertices[i])
        return tuple(out)

    def feature_segment(self, label: str) -> Segment:
        """The straight segment joining the feature's two index vertices."""
        start, end = self.feature_indices(label)
        return Segment(self._vertices[start], self._vertices[end])

    def feature_edges(self, label: str) -> Tuple[Segment, ...]:
        chain = self.feature_chain(label)
        return tuple(Segment(chain[i], chain[i + 1]) for i in range(len(chain) - 1))

    # -- transforms ---------------------------------------------------------

    def translated(self, dx: Quad, dy: Quad) -> "SimplePolygon":
        moved = [Point2(v.x + dx, v.y + dy) for v in self._vertices]
        return SimplePolygon(moved, self._features, _validated=True)

    def scale_to_integer(self) -> Tuple["SimplePolygon", int]:
        """Scale so every coordinate is an integer; also return the factor.

        Only defined for polygons whose coordinates are all rational.
        """
        denominators = []
        for v in self._vertices:
            for c in (v.x, v.y):
                if not c.is_rational:
                    raise PolygonError(
                        f"cannot integer-scale: irrational coordinate {c}"
                    )
                denominators.append(int(c.a.denominator))
        scale = 1
        for d in denominators:
            scale = scale * d // math.gcd(scale, d)
        scaled = [
            Point2(v.x * scale, v.y * scale) for v in self._vertices
        ]
        return SimplePolygon(scaled, self._features, _validated=True), scale

    def __repr__(self) -> str:
        return (
            f"SimplePolygon({len(self._vertices)} vertices, "
            f"{len(self._features)} features)"
        )
