"""Exact JSON and SVG encoding shared by the CLI and the HTTP service.

Every numeric payload crosses process boundaries as an exact string:
rationals as ``"p/q"`` (or ``"p"`` when the denominator is 1), field
elements as ``{"a": "p/q", "b": "r/s"}`` meaning ``a + b*sqrt(2)``, with an
optional display-only ``"approx"`` field that is never read back.  SVG
coordinates are exact until the final string-formatting step, where they
are rounded once to twelve decimal digits.

The CLI and the service both emit documents through :func:`canonical_json`,
so identical inputs produce byte-identical reports on either path.
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .arrangement import CoverageReport
from .certificates import Certificate
from .geometry import Point2
from .numbers import Quad, format_rational
from .polygon import SimplePolygon
from .visibility import VisRegion

__all__ = [
    "SerializationError",
    "canonical_json",
    "certificate_to_json",
    "coverage_report_to_json",
    "guards_from_json",
    "guards_to_json",
    "point_from_json",
    "point_to_json",
    "polygon_from_json",
    "polygon_to_json",
    "polygon_to_svg",
    "coverage_to_svg",
    "quad_from_json",
    "quad_to_json",
    "vis_region_to_json",
]

APPROX_DIGITS = 12


class SerializationError(ValueError):
    """A payload is structurally or numerically malformed."""


def canonical_json(document) -> str:
    """The one JSON writer used by every output path (CLI and HTTP)."""
    return json.dumps(document, indent=2, sort_keys=False)


# ---------------------------------------------------------------------------
# Numbers and points


def quad_to_json(value: Quad, digits: Optional[int] = APPROX_DIGITS) -> Dict[str, str]:
    out = {"a": format_rational(value.a), "b": format_rational(value.b)}
    if digits is not None:
        out["approx"] = value.approx(digits)
    return out


def _context(where: str) -> str:
    return f" (in {where})" if where else ""


def quad_from_json(obj, where: str = "") -> Quad:
    """Parse an exact field element: ``{"a", "b"}`` or a bare rational string."""
    if isinstance(obj, bool):
        raise SerializationError(f"a number cannot be a boolean{_context(where)}")
    if isinstance(obj, int):
        return Quad(obj)
    if isinstance(obj, float):
        raise SerializationError(
            f"floating-point numbers are not accepted; send an exact string "
            f"like \"21/10\"{_context(where)}"
        )
    if isinstance(obj, str):
        try:
            return Quad(obj)
        except ValueError as exc:
            raise SerializationError(f"{exc}{_context(where)}") from exc
    if isinstance(obj, dict):
        unknown = set(obj) - {"a", "b", "approx"}
        if unknown:
            raise SerializationError(
                f"unknown number fields {sorted(unknown)}{_context(where)}"
            )
        parts = []
        for key in ("a", "b"):
            raw = obj.get(key, "0")
            if isinstance(raw, bool) or not isinstance(raw, (str, int)):
                raise SerializationError(
                    f"field {key!r} must be an exact string (or integer), "
                    f"got {type(raw).__name__}{_context(where)}"
                )
            parts.append(str(raw))
        try:
            return Quad(parts[0], parts[1])
        except ValueError as exc:
            raise SerializationError(f"{exc}{_context(where)}") from exc
    raise SerializationError(
        f"a number must be a string or an object with 'a'/'b'{_context(where)}"
    )


def point_to_json(p: Point2, digits: Optional[int] = APPROX_DIGITS) -> Dict[str, object]:
    return {"x": quad_to_json(p.x, digits), "y": quad_to_json(p.y, digits)}


def point_from_json(obj, where: str = "point") -> Point2:
    if not isinstance(obj, dict) or not {"x", "y"} <= set(obj):
        raise SerializationError(f"{where} must be an object with 'x' and 'y'")
    return Point2(
        quad_from_json(obj["x"], f"{where}.x"),
        quad_from_json(obj["y"], f"{where}.y"),
    )


# ---------------------------------------------------------------------------
# Polygons and guard sets


def polygon_to_json(poly: SimplePolygon, digits: Optional[int] = None) -> Dict[str, object]:
    return {
        "vertices": [point_to_json(v, digits) for v in poly.vertices],
        "features": {
            label: [start, end] for label, (start, end) in sorted(poly.features.items())
        },
    }


def polygon_from_json(obj) -> SimplePolygon:
    """Parse and validate a polygon document (raises on malformed payloads;
    geometric violations surface as :class:`~artgallery.polygon.PolygonError`)."""
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise SerializationError("polygon must be an object with 'vertices'")
    raw_vertices = obj["vertices"]
    if not isinstance(raw_vertices, list):
        raise SerializationError("polygon 'vertices' must be a list")
    vertices = [
        point_from_json(v, f"vertices[{i}]") for i, v in enumerate(raw_vertices)
    ]
    features: Dict[str, Tuple[int, int]] = {}
    raw_features = obj.get("features", {})
    if not isinstance(raw_features, dict):
        raise SerializationError("polygon 'features' must be an object")
    for label, span in raw_features.items():
        if (
            not isinstance(span, (list, tuple))
            or len(span) != 2
            or not all(isinstance(k, int) and not isinstance(k, bool) for k in span)
        ):
            raise SerializationError(
                f"feature {label!r} must be a pair of vertex indices"
            )
        if not all(0 <= k < len(vertices) for k in span):
            raise SerializationError(f"feature {label!r} indexes a missing vertex")
        features[str(label)] = (span[0], span[1])
    return SimplePolygon(vertices, features or None)


def guards_to_json(
    guards: Mapping[str, Point2], digits: Optional[int] = APPROX_DIGITS
) -> Dict[str, object]:
    return {"guards": {name: point_to_json(g, digits) for name, g in guards.items()}}


def guards_from_json(obj) -> Dict[str, Point2]:
    """Parse a guard set: ``{"guards": {name: point}}`` or a bare list of points."""
    if isinstance(obj, dict) and "guards" in obj:
        obj = obj["guards"]
    if isinstance(obj, list):
        obj = {f"guard_{i}": g for i, g in enumerate(obj)}
    if not isinstance(obj, dict) or not obj:
        raise SerializationError(
            "guards must be a non-empty mapping of names to points or a list of points"
        )
    return {
        str(name): point_from_json(g, f"guards[{name!r}]") for name, g in obj.items()
    }


# ---------------------------------------------------------------------------
# Reports, regions, certificates


def coverage_report_to_json(report: CoverageReport) -> Dict[str, object]:
    return {
        "covered": report.covered,
        "total_area": quad_to_json(report.total_area),
        "uncovered_area": quad_to_json(report.uncovered_area),
        "face_count": report.face_count,
        "uncovered_face_count": report.uncovered_face_count,
        "witnesses": [point_to_json(w) for w in report.witnesses],
        "uncovered_faces": [
            {"vertices": [point_to_json(v) for v in cycle], "features": {}}
            for cycle in report.uncovered_cycles
        ],
        "guard_names": list(report.guard_names),
    }


def vis_region_to_json(region: VisRegion) -> Dict[str, object]:
    return {
        "guard": point_to_json(region.guard),
        "boundary": [point_to_json(v) for v in region.loop],
        "needles": [
            [point_to_json(seg.p), point_to_json(seg.q)] for seg in region.needles
        ],
    }


def certificate_to_json(cert: Certificate) -> Dict[str, object]:
    out: Dict[str, object] = {
        "name": cert.name,
        "status": "pass" if cert.verified else "fail",
        "runtime_ms": cert.runtime_ms,
        "details": list(cert.details),
    }
    if cert.counterexample is not None:
        out["counterexample"] = cert.counterexample
    return out


# ---------------------------------------------------------------------------
# SVG


_SVG_STYLE = """\
    .outline { fill: #f8f8f4; stroke: #222; stroke-width: 0.04; }
    .feature { fill: none; stroke-width: 0.08; stroke-linejoin: round; }
    .spike { stroke: #2e8b57; }
    .slab { stroke: #1f6feb; }
    .ramp { stroke: #d73a49; }
    .chord { stroke: #666; stroke-width: 0.03; stroke-dasharray: 0.15 0.1; }
    .vis { fill: #ffd33d; fill-opacity: 0.35; stroke: #b08800; stroke-width: 0.02; }
    .uncovered { fill: #d73a49; fill-opacity: 0.55; stroke: #86181d; stroke-width: 0.02; }
    .guard { fill: #1f6feb; stroke: #0a3069; stroke-width: 0.02; }
"""


def _feature_class(label: str) -> str:
    base = label.split("#", 1)[0]
    if base.startswith("spike"):
        return "feature spike"
    if base.startswith("slab"):
        return "feature slab"
    if base.startswith("ramp"):
        return "feature ramp"
    return "chord"


class _SvgCanvas:
    """Exact-to-text coordinate mapping; rounding happens only here."""

    def __init__(self, poly: SimplePolygon, margin: str = "1"):
        min_x, min_y, max_x, max_y = poly.bbox()
        pad = Quad(margin)
        self._shift_x = min_x - pad
        self._top_y = max_y + pad
        self.width = (max_x - min_x + pad * Quad(2)).approx(APPROX_DIGITS)
        self.height = (max_y - min_y + pad * Quad(2)).approx(APPROX_DIGITS)

    def xy(self, p: Point2) -> str:
        x = (p.x - self._shift_x).approx(APPROX_DIGITS)
        y = (self._top_y - p.y).approx(APPROX_DIGITS)
        return f"{x},{y}"

    def points(self, pts: Iterable[Point2]) -> str:
        return " ".join(self.xy(p) for p in pts)


def _svg_document(canvas: _SvgCanvas, body: List[str]) -> str:
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {canvas.width} {canvas.height}" '
        f'width="{canvas.width}" height="{canvas.height}">'
    )
    return "\n".join(
        [head, "  <style>", _SVG_STYLE.rstrip(), "  </style>", *body, "</svg>", ""]
    )


def _polygon_body(canvas: _SvgCanvas, poly: SimplePolygon) -> List[str]:
    body = [f'  <polygon class="outline" points="{canvas.points(poly.vertices)}"/>']
    for label in sorted(poly.features):
        cls = _feature_class(label)
        if cls == "chord":
            seg = poly.feature_segment(label)
            body.append(
                f'  <polyline class="{cls}" data-label="{label}" '
                f'points="{canvas.points((seg.p, seg.q))}"/>'
            )
        else:
            chain = poly.feature_chain(label)
            body.append(
                f'  <polyline class="{cls}" data-label="{label}" '
                f'points="{canvas.points(chain)}"/>'
            )
    return body


def polygon_to_svg(poly: SimplePolygon) -> str:
    """Standalone SVG drawing of a polygon with per-feature styling."""
    canvas = _SvgCanvas(poly)
    return _svg_document(canvas, _polygon_body(canvas, poly))


def coverage_to_svg(
    poly: SimplePolygon,
    guards: Mapping[str, Point2],
    report: CoverageReport,
    regions: Sequence[VisRegion] = (),
) -> str:
    """Polygon plus visibility regions, uncovered faces, and guard markers."""
    canvas = _SvgCanvas(poly)
    body = _polygon_body(canvas, poly)
    for region in regions:
        body.append(f'  <polygon class="vis" points="{canvas.points(region.loop)}"/>')
    for cycle in report.uncovered_cycles:
        body.append(
            f'  <polygon class="uncovered" points="{canvas.points(cycle)}"/>'
        )
    for name, g in guards.items():
        x, y = canvas.xy(g).split(",")
        body.append(
            f'  <circle class="guard" data-name="{name}" cx="{x}" cy="{y}" r="0.12"/>'
        )
    return _svg_document(canvas, body)
