"""Builders for the gallery polygons and their guard presets.

Three constructions:

* ``build_main_gallery()`` — a monotone polygon on a 20 x 4 base with
  thirteen pockets (six triangular spikes, three rectangular slabs, four
  sloped-roof ramps).  Its optimal 3-guard solution needs irrational
  coordinates; the guard presets carry the exact values in Q(sqrt(2)).
* ``build_chained_gallery(n)`` — n translated copies joined by thin
  L-shaped corridors, multiplying the guard count while keeping each
  copy's forcing structure isolated (bend guards are provably blind to
  every forcing feature; a certificate checks this).
* ``build_rect_gallery()`` — a fully rectilinear, all-rational variant in
  which every sloped pocket is replaced by a rectilinear pocket carrying
  a distinguished rational point ``q`` on the old edge's extension plus
  four pin guards whose visibility cones intersect exactly in ``q``.

All coordinates are exact; the builders validate simplicity and
counterclockwise orientation on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .geometry import Point2, Segment, pt
from .numbers import Quad, Rational, quad
from .polygon import PolygonError, SimplePolygon


class _Walk:
    """Accumulates a vertex loop and feature index ranges."""

    def __init__(self) -> None:
        self.vertices: List[Point2] = []
        self.features: Dict[str, Tuple[int, int]] = {}

    def add(self, *points: Point2) -> None:
        self.vertices.extend(points)

    def chain(
        self,
        label: Optional[str],
        points: Sequence[Point2],
        sub_edges: Optional[Dict[str, Tuple[int, int]]] = None,
        from_prev: bool = False,
    ) -> None:
        start = len(self.vertices) - (1 if from_prev else 0)
        self.vertices.extend(points)
        end = len(self.vertices) - 1
        if label is not None:
            self.features[label] = (start, end)
        for sub_label, (rel_a, rel_b) in (sub_edges or {}).items():
            self.features[sub_label] = (start + rel_a, start + rel_b)

    def mark_chord(self, label: str, a: Point2, b: Point2) -> None:
        self.features[label] = (self.vertices.index(a), self.vertices.index(b))

    def build(self) -> SimplePolygon:
        return SimplePolygon(self.vertices, self.features)


# ---------------------------------------------------------------------------
# Main gallery
# ---------------------------------------------------------------------------

# Pocket vertex chains in boundary-walk order (bottom wall is walked east,
# top wall west, left wall down, right wall up).


def _tag(label: str, suffix: str) -> str:
    return f"{label}{suffix}"


def _shift(points: Sequence[Point2], offset: Point2) -> List[Point2]:
    return [p + offset for p in points]


_BOTTOM_LEFT_POCKETS: List[Tuple[str, List[Point2], Dict[str, Tuple[int, int]]]] = [
    ("spike_bottom_left", [pt("1.9", 0), pt(2, "-0.5"), pt(2, 0)], {}),
    ("spike_bottom_mid", [pt(3, 0), pt(3, "-0.15"), pt("3.5", 0)], {}),
    (
        "ramp_bottom_left",
        [pt(4, 0), pt(4, "-12/19"), pt(8, "-18/19"), pt(8, 0)],
        {"ramp_edge_bottom_left": (1, 2)},
    ),
]

_BOTTOM_RIGHT_POCKETS: List[Tuple[str, List[Point2], Dict[str, Tuple[int, int]]]] = [
    (
        "ramp_bottom_right",
        [pt(12, 0), pt(12, "-34/21"), pt(16, "-36/21"), pt(16, 0)],
        {"ramp_edge_bottom_right": (1, 2)},
    ),
    ("spike_bottom_right", [pt("18.9", 0), pt(19, "-0.5"), pt(19, 0)], {}),
]

_TOP_POCKETS: List[Tuple[str, List[Point2], Dict[str, Tuple[int, int]]]] = [
    ("spike_top_right", [pt("19.1", 4), pt(19, "4.5"), pt(19, 4)], {}),
    ("spike_top_mid", [pt("52/3", 4), pt("52/3", "4.15"), pt("101/6", 4)], {}),
    (
        "ramp_top_right",
        [pt(16, 4), pt(16, "1776/375"), pt(12, "2486/375"), pt(12, 4)],
        {"ramp_edge_top_right": (1, 2)},
    ),
    ("slab_mid", [pt("10.6", 4), pt("10.6", 8), pt("10.5", 8), pt("10.5", 4)], {}),
    (
        "ramp_top_left",
        [pt(8, 4), pt(8, "294/47"), pt(4, "280/47"), pt(4, 4)],
        {"ramp_edge_top_left": (1, 2)},
    ),
    ("spike_top_left", [pt("2.1", 4), pt(2, "4.5"), pt(2, 4)], {}),
]

_SLAB_RIGHT = [pt(20, "0.5"), pt(30, "0.5"), pt(30, "0.6"), pt(20, "0.6")]
_SLAB_LEFT = [pt(0, "1.8"), pt(-10, "1.8"), pt(-10, "1.7"), pt(0, "1.7")]

_FORCE_CHORDS = {
    "force_left": (pt(2, "-0.5"), pt(2, "4.5")),
    "force_mid": (pt(3, "-0.15"), pt("52/3", "4.15")),
    "force_right": (pt(19, "-0.5"), pt(19, "4.5")),
}


def _emit_bottom_left(w: _Walk, offset: Point2, suffix: str) -> None:
    for label, pts_, subs in _BOTTOM_LEFT_POCKETS:
        w.chain(
            _tag(label, suffix),
            _shift(pts_, offset),
            {_tag(k, suffix): v for k, v in subs.items()},
        )


def _emit_bottom_right(w: _Walk, offset: Point2, suffix: str) -> None:
    for label, pts_, subs in _BOTTOM_RIGHT_POCKETS:
        w.chain(
            _tag(label, suffix),
            _shift(pts_, offset),
            {_tag(k, suffix): v for k, v in subs.items()},
        )


def _emit_slab_right(w: _Walk, offset: Point2, suffix: str) -> None:
    w.chain(_tag("slab_right", suffix), _shift(_SLAB_RIGHT, offset))


def _emit_top(w: _Walk, offset: Point2, suffix: str) -> None:
    for label, pts_, subs in _TOP_POCKETS:
        w.chain(
            _tag(label, suffix),
            _shift(pts_, offset),
            {_tag(k, suffix): v for k, v in subs.items()},
        )


def _emit_slab_left(w: _Walk, offset: Point2, suffix: str) -> None:
    w.chain(_tag("slab_left", suffix), _shift(_SLAB_LEFT, offset))


def _mark_force_chords(w: _Walk, offset: Point2, suffix: str) -> None:
    for label, (a, b) in _FORCE_CHORDS.items():
        w.mark_chord(_tag(label, suffix), a + offset, b + offset)


def build_main_gallery() -> SimplePolygon:
    """The 50-vertex gallery whose optimum needs irrational guards."""
    w = _Walk()
    origin = pt(0, 0)
    w.add(pt(0, 0))
    _emit_bottom_left(w, origin, "")
    _emit_bottom_right(w, origin, "")
    w.add(pt(20, 0))
    _emit_slab_right(w, origin, "")
    w.add(pt(20, 4))
    _emit_top(w, origin, "")
    w.add(pt(0, 4))
    _emit_slab_left(w, origin, "")
    _mark_force_chords(w, origin, "")
    return w.build()


def main_guards() -> Dict[str, Point2]:
    """The unique optimal 3-guard placement (exact, irrational)."""
    return {
        "guard_left": Point2(Quad(2), Quad(2, -1)),          # (2, 2 - sqrt2)
        "guard_mid": Point2(Quad("7/2", 5), Quad(0, "3/2")),  # (7/2 + 5*sqrt2, 3/2*sqrt2)
        "guard_right": Point2(Quad(19), Quad(1, "1/2")),      # (19, 1 + sqrt2/2)
    }


def main_rational_guards() -> Dict[str, Point2]:
    """A 4-guard all-rational cover of the main gallery.

    Derived computationally (coverage-checked by the test suite): two
    guards on the middle forcing chord straddling the irrational optimum,
    plus near-optimal left and right wall guards.
    """
    return {
        "guard_left": Point2(Quad(2), Quad("0.586")),
        "guard_mid_a": Point2(Quad("10.57"), Quad("2.121")),
        "guard_mid_b": Point2(Quad("10.5711"), Quad("2.12133")),
        "guard_right": Point2(Quad(19), Quad("1.7071")),
    }


# ---------------------------------------------------------------------------
# Chained gallery
# ---------------------------------------------------------------------------

# Corridor geometry (all exact rationals):
#   horizontal piece per link:  [20, 7001/100] x [3413/2000, 3433/2000]
#   vertical piece per link:    [70, 7001/100] x [3413/2000, 543/25]
#   copy-to-copy offset:        (5943/100, 543/25)
# The vertical piece meets the next copy's bottom wall on the free span
# x in [10.57, 10.58] (local), which brackets the middle guard's x-line.

CORRIDOR_Y_LOW = quad("3413/2000")
CORRIDOR_Y_HIGH = quad("3433/2000")
CORRIDOR_X_END = quad("7001/100")
CORRIDOR_V_WEST = quad(70)
CHAIN_OFFSET = Point2(quad("5943/100"), quad("543/25"))


def chain_offset(i: int) -> Point2:
    return Point2(CHAIN_OFFSET.x * i, CHAIN_OFFSET.y * i)


def build_chained_gallery(n: int) -> SimplePolygon:
    """n linked copies of the main gallery (n >= 1)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("the chained gallery needs a positive number of copies")
    if n == 1:
        return build_main_gallery()

    w = _Walk()

    def sfx(i: int) -> str:
        return f"#{i}"

    # Ascending pass: lower-right portion of each copy plus its outgoing
    # corridor's bottom/east walls.
    for i in range(n):
        off = chain_offset(i)
        if i == 0:
            w.add(pt(0, 0))
            _emit_bottom_left(w, off, sfx(i))
        _emit_bottom_right(w, off, sfx(i))
        w.add(pt(20, 0) + off)
        _emit_slab_right(w, off, sfx(i))
        if i < n - 1:
            w.chain(
                _tag("corridor_south", sfx(i)),
                [
                    Point2(quad(20) + off.x, CORRIDOR_Y_LOW + off.y),
                    Point2(CORRIDOR_X_END + off.x, CORRIDOR_Y_LOW + off.y),
                ],
            )
            w.chain(
                _tag("corridor_east", sfx(i)),
                [Point2(CORRIDOR_X_END + off.x, CHAIN_OFFSET.y + off.y)],
                from_prev=True,
            )
        else:
            w.add(pt(20, 4) + off)

    # Descending pass: upper-left portion of each copy plus the incoming
    # corridor's west/top walls.
    for i in range(n - 1, -1, -1):
        off = chain_offset(i)
        _emit_top(w, off, sfx(i))
        w.add(pt(0, 4) + off)
        _emit_slab_left(w, off, sfx(i))
        if i > 0:
            w.add(pt(0, 0) + off)
            _emit_bottom_left(w, off, sfx(i))
            prev = chain_offset(i - 1)
            w.chain(
                _tag("corridor_west", sfx(i - 1)),
                [
                    Point2(CORRIDOR_V_WEST + prev.x, CHAIN_OFFSET.y + prev.y),
                    Point2(CORRIDOR_V_WEST + prev.x, CORRIDOR_Y_HIGH + prev.y),
                ],
            )
            w.chain(
                _tag("corridor_north", sfx(i - 1)),
                [Point2(quad(20) + prev.x, CORRIDOR_Y_HIGH + prev.y)],
                from_prev=True,
            )
            w.add(pt(20, 4) + prev)
    for i in range(n):
        _mark_force_chords(w, chain_offset(i), sfx(i))
    return w.build()


def chained_guards(n: int) -> Dict[str, Point2]:
    """3n irrational guards: the optimal triple in every copy."""
    out: Dict[str, Point2] = {}
    base = main_guards()
    for i in range(n):
        off = chain_offset(i)
        suffix = "" if n == 1 else f"#{i}"
        for name, g in base.items():
            out[f"{name}{suffix}"] = g + off
    return out


def chained_rational_guards(n: int) -> Dict[str, Point2]:
    """4n rational guards covering the chained gallery."""
    out: Dict[str, Point2] = {}
    base = main_rational_guards()
    for i in range(n):
        off = chain_offset(i)
        suffix = "" if n == 1 else f"#{i}"
        for name, g in base.items():
            out[f"{name}{suffix}"] = g + off
    return out


def corridor_bend_box(i: int = 0) -> Tuple[Quad, Quad, Quad, Quad]:
    """(min_x, min_y, max_x, max_y) of link i's corridor bend square."""
    off = chain_offset(i)
    return (
        CORRIDOR_V_WEST + off.x,
        CORRIDOR_Y_LOW + off.y,
        CORRIDOR_X_END + off.x,
        CORRIDOR_Y_HIGH + off.y,
    )


# ---------------------------------------------------------------------------
# Rectilinear gallery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RectPocket:
    """One rectilinear replacement pocket with its distinguished points.

    ``q`` sits on the extension of the replaced sloped edge; the four pins
    sit in wall slits, axis-aligned with ``q``, and each sees ``q`` along a
    grazing ray.  ``region`` is the closed area the pocket adds beyond the
    original polygon: it carries the replaced sloped edge as its one
    non-axis-parallel side (the gallery polygon itself stays rectilinear).
    ``needle`` marks the two middle pockets whose sloped edge lies on the
    middle forcing chord, so ``q`` additionally sees a one-dimensional
    sliver along that chord (measure zero; reported, never hidden).
    """

    name: str
    q: Point2
    pins: Dict[str, Point2]
    region: SimplePolygon
    window: Segment
    sloped_edge: Segment
    needle: bool


@dataclass(frozen=True)
class _PocketFrame:
    """Axis frame mapping pocket-local (u, v) to global coordinates.

    u runs from the sloped edge's shallow end (W) toward the deep end (K);
    v runs from the mouth into the pocket.  Both axis maps are +/-1 scaled,
    so the determinant is +1 (walk enters at K) or -1 (walk enters at W).
    """

    origin: Point2
    u_sign: int
    v_sign: int
    u_is_x: bool = True

    def to_global(self, u: Quad, v: Quad) -> Point2:
        du = u * self.u_sign
        dv = v * self.v_sign
        return Point2(self.origin.x + du, self.origin.y + dv)

    @property
    def det(self) -> int:
        return self.u_sign * self.v_sign


@dataclass(frozen=True)
class _PocketSpec:
    name: str
    frame: _PocketFrame
    width: Rational          # mouth span along u
    slope: Rational          # |slope| of the replaced edge (rise per unit u)
    w_height: Rational       # height of the sloped line at u = 0 (>= 0)


_ROOM_DEPTH = quad("57/100")
_SLIT_ACROSS = quad("1/100")   # width of the up/down pin slit mouths
_SIDE_GAP = quad("3/100")      # depth of the room-side pin slit
_FAR_DEPTH = quad("1/10")      # depth of the far-side pin slit


def _pocket_chain_local(spec: _PocketSpec):
    """K-first boundary chain, q, pins, and region polygon in local coords."""
    w_p = quad(spec.width)
    s = quad(spec.slope)
    w_v = quad(spec.w_height)
    k_v = w_v + s * w_p
    lh_v = k_v + s
    qu = w_p + quad("1/2")
    qv = k_v + s / 2
    deep = s * quad("3/10")     # depth of up/down slits
    side_drop = s / 50          # height of the room-side slit mouth

    chain = [
        (w_p, quad(0)),                  # K-side mouth corner
        (w_p, k_v),                      # top of the retained K wall
        (qu - _SLIT_ACROSS, k_v),
        (qu - _SLIT_ACROSS, k_v - deep),
        (qu, k_v - deep),                # down-pin corner
        (qu, k_v),
        (w_p + _ROOM_DEPTH, k_v),
        (w_p + _ROOM_DEPTH, qv - side_drop),
        (w_p + _ROOM_DEPTH + _SIDE_GAP, qv - side_drop),
        (w_p + _ROOM_DEPTH + _SIDE_GAP, qv),   # side-pin corner
        (w_p + _ROOM_DEPTH, qv),
        (w_p + _ROOM_DEPTH, lh_v),
        (qu + _SLIT_ACROSS, lh_v),
        (qu + _SLIT_ACROSS, lh_v + deep),
        (qu, lh_v + deep),               # up-pin corner
        (qu, lh_v),
        (quad(0), lh_v),
        (quad(0), qv + deep),
        (-_FAR_DEPTH, qv + deep),
        (-_FAR_DEPTH, qv),               # far-pin corner
        (quad(0), qv),
        (quad(0), quad(0)),              # W-side mouth corner
    ]
    q_local = (qu, qv)
    pins_local = {
        "pin_down": (qu, k_v - deep),
        "pin_side": (w_p + _ROOM_DEPTH + _SIDE_GAP, qv),
        "pin_up": (qu, lh_v + deep),
        "pin_far": (-_FAR_DEPTH, qv),
    }
    # Added region: sloped edge from (0, w_v) to K, then the same boundary
    # as the pocket chain from K around to the W wall at qv .. back down.
    region = [
        (quad(0), w_v),
    ] + chain[1:-1]
    window = ((w_p, k_v), (w_p, lh_v))
    sloped = ((quad(0), w_v), (w_p, k_v))
    return chain, q_local, pins_local, region, window, sloped


def _rect_pocket(spec: _PocketSpec) -> Tuple[List[Point2], RectPocket]:
    chain, q_local, pins_local, region_local, window_local, sloped_local = (
        _pocket_chain_local(spec)
    )
    f = spec.frame
    chain_global = [f.to_global(u, v) for (u, v) in chain]
    if f.det < 0:
        chain_global.reverse()
    region_global = [f.to_global(u, v) for (u, v) in region_local]
    if f.det < 0:
        region_global.reverse()
    pocket = RectPocket(
        name=spec.name,
        q=f.to_global(*q_local),
        pins={k: f.to_global(*v) for k, v in pins_local.items()},
        region=SimplePolygon(region_global),
        window=Segment(f.to_global(*window_local[0]), f.to_global(*window_local[1])),
        sloped_edge=Segment(
            f.to_global(*sloped_local[0]), f.to_global(*sloped_local[1])
        ),
        needle=(quad(spec.w_height) == quad(0)),
    )
    return chain_global, pocket


def _rect_pocket_specs() -> Dict[str, _PocketSpec]:
    return {
        "ramp_top_left": _PocketSpec(
            name="ramp_top_left",
            # W at (4, 280/47), K at (8, 294/47); pocket opens up from y=4.
            frame=_PocketFrame(origin=pt(4, 4), u_sign=1, v_sign=1),
            width=Rational(4),
            slope=Rational(7, 94),
            w_height=Rational(92, 47),
        ),
        "ramp_top_right": _PocketSpec(
            name="ramp_top_right",
            # W at (16, 1776/375), K at (12, 2486/375).
            frame=_PocketFrame(origin=pt(16, 4), u_sign=-1, v_sign=1),
            width=Rational(4),
            slope=Rational(71, 150),
            w_height=Rational(276, 375),
        ),
        "ramp_bottom_left": _PocketSpec(
            name="ramp_bottom_left",
            # W at (4, -12/19), K at (8, -18/19); pocket opens down from y=0.
            frame=_PocketFrame(origin=pt(4, 0), u_sign=1, v_sign=-1),
            width=Rational(4),
            slope=Rational(3, 38),
            w_height=Rational(12, 19),
        ),
        "ramp_bottom_right": _PocketSpec(
            name="ramp_bottom_right",
            # W at (12, -34/21), K at (16, -36/21).
            frame=_PocketFrame(origin=pt(12, 0), u_sign=1, v_sign=-1),
            width=Rational(4),
            slope=Rational(1, 42),
            w_height=Rational(34, 21),
        ),
        "spike_bottom_mid": _PocketSpec(
            name="spike_bottom_mid",
            # W is the mouth corner (3.5, 0); K is the old apex (3, -0.15).
            frame=_PocketFrame(origin=pt("3.5", 0), u_sign=-1, v_sign=-1),
            width=Rational(1, 2),
            slope=Rational(3, 10),
            w_height=Rational(0),
        ),
        "spike_top_mid": _PocketSpec(
            name="spike_top_mid",
            # W is the mouth corner (101/6, 4); K is the old apex (52/3, 4.15).
            frame=_PocketFrame(origin=pt("101/6", 4), u_sign=1, v_sign=1),
            width=Rational(1, 2),
            slope=Rational(3, 10),
            w_height=Rational(0),
        ),
    }


_RECT_CORNER_SPIKES = {
    # Triangular corner spikes become rectangles sharing three vertices;
    # the forcing corner (the old apex) stays a vertex.
    "spike_bottom_left": [pt("1.9", 0), pt("1.9", "-0.5"), pt(2, "-0.5"), pt(2, 0)],
    "spike_bottom_right": [pt("18.9", 0), pt("18.9", "-0.5"), pt(19, "-0.5"), pt(19, 0)],
    "spike_top_right": [pt("19.1", 4), pt("19.1", "4.5"), pt(19, "4.5"), pt(19, 4)],
    "spike_top_left": [pt("2.1", 4), pt("2.1", "4.5"), pt(2, "4.5"), pt(2, 4)],
}


@dataclass(frozen=True)
class RectGallery:
    polygon: SimplePolygon
    pockets: Dict[str, RectPocket]

    def pocket_guards(self) -> Dict[str, Point2]:
        return {f"q_{name}": p.q for name, p in self.pockets.items()}

    def pin_guards(self) -> Dict[str, Point2]:
        out = {}
        for name, p in self.pockets.items():
            for pin_name, pin in p.pins.items():
                out[f"{pin_name}_{name}"] = pin
        return out


def build_rect_gallery() -> RectGallery:
    """All-rational rectilinear gallery with six q-pockets."""
    specs = _rect_pocket_specs()
    chains: Dict[str, List[Point2]] = {}
    pockets: Dict[str, RectPocket] = {}
    for name, spec in specs.items():
        chains[name], pockets[name] = _rect_pocket(spec)

    w = _Walk()
    w.add(pt(0, 0))
    w.chain("spike_bottom_left", _RECT_CORNER_SPIKES["spike_bottom_left"])
    w.chain("spike_bottom_mid", chains["spike_bottom_mid"])
    w.chain("ramp_bottom_left", chains["ramp_bottom_left"])
    w.chain("ramp_bottom_right", chains["ramp_bottom_right"])
    w.chain("spike_bottom_right", _RECT_CORNER_SPIKES["spike_bottom_right"])
    w.add(pt(20, 0))
    _emit_slab_right(w, pt(0, 0), "")
    w.add(pt(20, 4))
    w.chain("spike_top_right", _RECT_CORNER_SPIKES["spike_top_right"])
    w.chain("spike_top_mid", chains["spike_top_mid"])
    w.chain("ramp_top_right", chains["ramp_top_right"])
    w.chain("slab_mid", [pt("10.6", 4), pt("10.6", 8), pt("10.5", 8), pt("10.5", 4)])
    w.chain("ramp_top_left", chains["ramp_top_left"])
    w.chain("spike_top_left", _RECT_CORNER_SPIKES["spike_top_left"])
    w.add(pt(0, 4))
    _emit_slab_left(w, pt(0, 0), "")
    w.mark_chord("force_left", pt(2, "-0.5"), pt(2, "4.5"))
    w.mark_chord("force_mid", pt(3, "-0.15"), pt("52/3", "4.15"))
    w.mark_chord("force_right", pt(19, "-0.5"), pt(19, "4.5"))
    poly = w.build()
    if not poly.is_rectilinear():
        raise PolygonError("rectilinear gallery has a non-axis-parallel edge")
    return RectGallery(polygon=poly, pockets=pockets)


def rect_guards() -> Dict[str, Point2]:
    """9 guards covering the rectilinear gallery: six pocket q's + the triple."""
    g = build_rect_gallery()
    out = g.pocket_guards()
    out.update(main_guards())
    return out


def rect_rational_guards() -> Dict[str, Point2]:
    """10 all-rational guards: six pocket q's + the rational main fixture."""
    g = build_rect_gallery()
    out = g.pocket_guards()
    out.update(main_rational_guards())
    return out
