"""Minimal perimeter and area pieces cut from triangles and convex polygons by lines through a point."""

__version__ = "0.1.0"

from .closed_form import (
    CutResult, VertexCuts, min_cut_at_point, min_cut_centroid,
    upper_bound_margin, vertex_cuts_centroid,
)
from .convex_poly import (
    ConvexPolygon, NeumannResult, is_centrally_symmetric, make_polygon,
    neumann_search, poly_centroid, poly_min_fraction,
)
from .oracle import SweepProfile, range_interval, sweep_min_area, sweep_min_perimeter
from .shape_scan import F, ScanReport, corner_values, random_triangle, scan_region
from .triangle import (
    Chord, EmbeddedTriangle, ObliqueCoords, Triangle, area_cut_at_angle, centroid,
    cut_at_angle, embed, make_triangle, oblique_coords,
)
from .wline import VertexCut, WLineSolution, lagrange_oracle, vertex_min_cut, wline_extreme

__all__ = [
    "CutResult", "VertexCuts", "min_cut_at_point", "min_cut_centroid",
    "upper_bound_margin", "vertex_cuts_centroid",
    "ConvexPolygon", "NeumannResult", "is_centrally_symmetric", "make_polygon",
    "neumann_search", "poly_centroid", "poly_min_fraction",
    "SweepProfile", "range_interval", "sweep_min_area", "sweep_min_perimeter",
    "F", "ScanReport", "corner_values", "random_triangle", "scan_region",
    "Chord", "EmbeddedTriangle", "ObliqueCoords", "Triangle", "area_cut_at_angle",
    "centroid", "cut_at_angle", "embed", "make_triangle", "oblique_coords",
    "VertexCut", "WLineSolution", "lagrange_oracle", "vertex_min_cut", "wline_extreme",
]
