"""Exact art-gallery geometry toolkit.

Constructs a family of gallery polygons with coordinates in Q(sqrt(2)),
decides visibility and guard coverage exactly (no floating point in any
decision), and machine-checks the certificates that make an irrational
guard placement provably necessary for the main gallery.
"""

from .numbers import Quad, Rational, SQRT2, parse_rational, format_rational, quad

__all__ = [
    "Quad",
    "Rational",
    "SQRT2",
    "quad",
    "parse_rational",
    "format_rational",
]
