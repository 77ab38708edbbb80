"""Exact planar arrangements and coverage accounting.

Coverage soundness rests on two facts, both preserved by the code below:

1. Every guard's visible region is a closed set whose boundary lies on the
   arrangement's edges.  The interior of an arrangement face therefore lies
   entirely inside or entirely outside each visible region, so testing one
   interior representative point per face decides the whole face exactly.
2. The unseen set (region interior minus the union of the closed visible
   regions) is open in the plane.  If it is nonempty it has positive area
   and meets some face's interior, so "every face representative is seen"
   is equivalent to full coverage; one-dimensional grazing needles can
   neither hide nor contribute uncovered points.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .geometry import (
    Line,
    Point2,
    Segment,
    angular_key,
    midpoint,
    orientation,
)
from .numbers import Quad, quad
from .polygon import SimplePolygon
from .visibility import sees, visibility_polygon

_ZERO = Quad(0)


class CoverageError(ValueError):
    """Raised for invalid coverage queries (e.g. a guard outside the region)."""


# -- segment splitting ----------------------------------------------------------


def _canonical(a: Point2, b: Point2) -> Tuple[Point2, Point2]:
    return (a, b) if a <= b else (b, a)


def split_segments(segments: Iterable[Segment]) -> List[Segment]:
    """Interior-disjoint sub-segments of the input (shared only at endpoints)."""
    base: List[Segment] = []
    seen = set()
    for s in segments:
        if s.p == s.q:
            continue
        key = _canonical(s.p, s.q)
        if key not in seen:
            seen.add(key)
            base.append(Segment(*key))

    boxes = []
    for s in base:
        lo_x, hi_x = sorted((s.p.x, s.q.x))
        lo_y, hi_y = sorted((s.p.y, s.q.y))
        boxes.append((lo_x, hi_x, lo_y, hi_y))

    cuts: List[set] = [{s.p, s.q} for s in base]
    from .geometry import segment_intersection

    for i in range(len(base)):
        bi = boxes[i]
        for j in range(i + 1, len(base)):
            bj = boxes[j]
            if bi[1] < bj[0] or bj[1] < bi[0] or bi[3] < bj[2] or bj[3] < bi[2]:
                continue
            kind, meet = segment_intersection(base[i], base[j])
            if kind == "point":
                cuts[i].add(meet)
                cuts[j].add(meet)
            elif kind == "overlap":
                for p in (meet.p, meet.q):
                    cuts[i].add(p)
                    cuts[j].add(p)

    out = set()
    for s, cut in zip(base, cuts):
        d = s.q - s.p
        if d.x.sign() != 0:
            key = lambda p: (p.x - s.p.x) / d.x  # noqa: E731
        else:
            key = lambda p: (p.y - s.p.y) / d.y  # noqa: E731
        pts = sorted(cut, key=key)
        for a, b in zip(pts, pts[1:]):
            if a != b:
                out.add(_canonical(a, b))
    return [Segment(a, b) for a, b in sorted(out)]


def _prune_antennae(edges: List[Segment]) -> List[Segment]:
    adj: Dict[Point2, set] = defaultdict(set)
    for e in edges:
        adj[e.p].add(e.q)
        adj[e.q].add(e.p)
    stack = [v for v, nb in adj.items() if len(nb) <= 1]
    while stack:
        v = stack.pop()
        if len(adj[v]) != 1:
            continue
        (u,) = adj[v]
        adj[v].clear()
        adj[u].discard(v)
        if len(adj[u]) == 1:
            stack.append(u)
    return [e for e in edges if e.q in adj[e.p]]


# -- face extraction -------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    """A bounded arrangement face: ccw boundary cycle, interior point, area."""

    cycle: Tuple[Point2, ...]
    representative: Point2
    area: Quad


def _cycle_area(cycle: Sequence[Point2]) -> Quad:
    total = _ZERO
    for i in range(len(cycle)):
        total = total + cycle[i].cross(cycle[(i + 1) % len(cycle)])
    return total / 2


def _in_closed_triangle(p: Point2, a: Point2, b: Point2, c: Point2) -> bool:
    return (
        orientation(a, b, p) >= 0
        and orientation(b, c, p) >= 0
        and orientation(c, a, p) >= 0
    )


def face_representative(cycle: Sequence[Point2]) -> Point2:
    """A point strictly interior to a ccw face cycle.

    Take the lexicographically smallest vertex v (necessarily convex) with
    cycle neighbors a, b.  If no other cycle vertex lies in the closed
    triangle (a, v, b), its centroid is interior; otherwise the midpoint of
    v and the triangle vertex farthest from line(a, b) is.
    """
    n = len(cycle)
    i = min(range(n), key=lambda k: cycle[k])
    v = cycle[i]
    a, b = cycle[i - 1], cycle[(i + 1) % n]
    if orientation(a, v, b) <= 0:
        raise CoverageError("face cycle is not locally convex at its minimum")
    candidates = [
        q
        for q in cycle
        if q not in (a, v, b) and _in_closed_triangle(q, a, v, b)
    ]
    if not candidates:
        return (a + v + b).scaled(quad("1/3"))
    base = Line.through(a, b)
    best = candidates[0]
    best_d = abs(base.evaluate(best))
    for q in candidates[1:]:
        dq = abs(base.evaluate(q))
        if dq > best_d:
            best, best_d = q, dq
    return midpoint(v, best)


def arrangement_faces(segments: Iterable[Segment]) -> List[Face]:
    """All bounded faces of the arrangement of the given segments."""
    edges = _prune_antennae(split_segments(segments))
    if not edges:
        return []

    neighbors: Dict[Point2, List[Point2]] = defaultdict(list)
    for e in edges:
        neighbors[e.p].append(e.q)
        neighbors[e.q].append(e.p)
    order: Dict[Point2, Dict[Point2, int]] = {}
    for v, nbrs in neighbors.items():
        nbrs.sort(key=lambda u: angular_key(u - v))
        order[v] = {u: k for k, u in enumerate(nbrs)}

    visited = set()
    faces: List[Face] = []
    for start_v in sorted(neighbors):
        for start_u in neighbors[start_v]:
            if (start_v, start_u) in visited:
                continue
            cycle = []
            a, b = start_v, start_u
            while (a, b) not in visited:
                visited.add((a, b))
                cycle.append(a)
                nbrs = neighbors[b]
                k = order[b][a]
                a, b = b, nbrs[(k - 1) % len(nbrs)]
            area = _cycle_area(cycle)
            if area.sign() > 0:
                faces.append(
                    Face(tuple(cycle), face_representative(cycle), area)
                )
    return faces


# -- coverage -------------------------------------------------------------------


GuardsLike = Union[Mapping[str, Point2], Sequence[Point2]]


def _named_guards(guards: GuardsLike) -> Dict[str, Point2]:
    if isinstance(guards, Mapping):
        return dict(guards)
    return {f"guard_{i}": g for i, g in enumerate(guards)}


@dataclass(frozen=True)
class CoverageReport:
    covered: bool
    total_area: Quad
    uncovered_area: Quad
    face_count: int
    uncovered_face_count: int
    witnesses: Tuple[Point2, ...]
    uncovered_cycles: Tuple[Tuple[Point2, ...], ...]
    guard_names: Tuple[str, ...]


def coverage_report(
    poly: SimplePolygon, guards: GuardsLike, max_witnesses: int = 16
) -> CoverageReport:
    """Exact coverage of the region by the guards' joint visibility."""
    named = _named_guards(guards)
    if not named:
        raise CoverageError("at least one guard is required")
    for name, g in named.items():
        if not poly.contains(g):
            raise CoverageError(f"guard {name!r} at {g} lies outside the region")

    segments: List[Segment] = list(poly.edges())
    for g in named.values():
        segments.extend(visibility_polygon(poly, g).boundary_segments())

    faces = arrangement_faces(segments)
    total = _ZERO
    for f in faces:
        total = total + f.area
    if total != poly.area():
        raise CoverageError(
            "arrangement faces do not tile the region; "
            f"face area {total} vs region area {poly.area()}"
        )

    uncovered_area = _ZERO
    missed: List[Tuple[Point2, Tuple[Point2, ...]]] = []
    guard_points = list(named.values())
    for f in faces:
        if any(sees(poly, g, f.representative) for g in guard_points):
            continue
        uncovered_area = uncovered_area + f.area
        missed.append((f.representative, f.cycle))

    # Hard re-check: a reported witness must defeat every guard.
    for w, _ in missed:
        for name, g in named.items():
            if sees(poly, g, w):
                raise CoverageError(
                    f"internal error: witness {w} is visible to guard {name!r}"
                )

    missed.sort(key=lambda item: item[0])
    return CoverageReport(
        covered=not missed,
        total_area=poly.area(),
        uncovered_area=uncovered_area,
        face_count=len(faces),
        uncovered_face_count=len(missed),
        witnesses=tuple(w for w, _ in missed[:max_witnesses]),
        uncovered_cycles=tuple(cycle for _, cycle in missed[:max_witnesses]),
        guard_names=tuple(named.keys()),
    )
