"""Constructive separating-pair certificates for disjoint convex polygons."""

from .cover import CoverResult, assert_cover_conditions, grow_cover
from .geometry import ConvexPolygon, DirectedLine, HalfPlane, Point, Side, point
from .instances import Instance, parse_instance, random_disjoint_polygons, serialize_instance, validate_instance
from .oracle import verify_certificate
from .pipeline import TheoremCertificate, solve
from .separator import find_separating_side

__version__ = "0.1.0"

__all__ = [
    "ConvexPolygon",
    "CoverResult",
    "DirectedLine",
    "HalfPlane",
    "Instance",
    "Point",
    "Side",
    "TheoremCertificate",
    "assert_cover_conditions",
    "find_separating_side",
    "grow_cover",
    "parse_instance",
    "point",
    "random_disjoint_polygons",
    "serialize_instance",
    "solve",
    "validate_instance",
    "verify_certificate",
]
