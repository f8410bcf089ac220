"""Triangles given by side lengths, their canonical planar embedding, and chord cuts.

Sides are stored sorted, ``a >= b >= c``, with ``a = BC``, ``b = CA`` and ``c = AB``.
The embedding puts ``B`` at the origin and ``C`` on the positive x-axis, so the
boundary parameter starts at ``B`` and runs ``B -> C -> A -> B`` counterclockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .boundary import PolygonBoundary
from .errors import NonPositiveSide, NotInterior, SingularFrame, TriangleInequalityViolated

VERTICES = ("A", "B", "C")
REJECT_SLACK = 1e-12
NEAR_DEGENERATE_SLACK = 1e-6


@dataclass(frozen=True)
class Triangle:
    a: float
    b: float
    c: float
    s: float
    original: tuple[float, float, float] = (0.0, 0.0, 0.0)
    near_degenerate: bool = False

    @property
    def perimeter(self) -> float:
        return 2.0 * self.s

    @property
    def sides(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def scaled(self, factor: float) -> "Triangle":
        return make_triangle(self.a * factor, self.b * factor, self.c * factor)


def make_triangle(a: float, b: float, c: float) -> Triangle:
    """Validate three side lengths and return them sorted as a Triangle."""
    original = (float(a), float(b), float(c))
    if not all(math.isfinite(x) and x > 0 for x in original):
        raise NonPositiveSide(f"sides must be positive and finite, got {original}")
    a_, b_, c_ = sorted(original, reverse=True)
    perimeter = a_ + b_ + c_
    slack = (b_ + c_ - a_) / perimeter
    if slack <= REJECT_SLACK:
        raise TriangleInequalityViolated(original, slack)
    return Triangle(
        a=a_, b=b_, c=c_, s=perimeter / 2.0,
        original=original, near_degenerate=slack < NEAR_DEGENERATE_SLACK,
    )


@dataclass(frozen=True)
class Chord:
    t1: float
    t2: float
    p1: tuple[float, float]
    p2: tuple[float, float]
    theta: float

    def to_dict(self):
        return {
            "t1": self.t1, "t2": self.t2,
            "p1": list(self.p1), "p2": list(self.p2), "theta": self.theta,
        }


@dataclass(frozen=True)
class ObliqueCoords:
    x: float
    y: float


@dataclass(frozen=True)
class EmbeddedTriangle:
    triangle: Triangle
    A: tuple[float, float]
    B: tuple[float, float]
    C: tuple[float, float]
    boundary: PolygonBoundary = field(repr=False, compare=False)
    arc_origin: str = "B"
    orientation: str = "ccw"

    @property
    def perimeter(self) -> float:
        return self.boundary.perimeter

    @property
    def area(self) -> float:
        return self.boundary.area

    def vertex(self, name: str) -> np.ndarray:
        return np.array({"A": self.A, "B": self.B, "C": self.C}[name])

    def vertex_param(self, name: str) -> float:
        t = self.triangle
        return {"B": 0.0, "C": t.a, "A": t.a + t.b}[name]

    def contains_strictly(self, P) -> bool:
        return self.boundary.is_strictly_inside(P)


def embed(t: Triangle) -> EmbeddedTriangle:
    ax = (t.a * t.a + t.c * t.c - t.b * t.b) / (2.0 * t.a)
    ay = math.sqrt(max(t.c * t.c - ax * ax, 0.0))
    A, B, C = (ax, ay), (0.0, 0.0), (t.a, 0.0)
    return EmbeddedTriangle(t, A, B, C, PolygonBoundary([B, C, A]))


def centroid(e: EmbeddedTriangle) -> np.ndarray:
    return (e.vertex("A") + e.vertex("B") + e.vertex("C")) / 3.0


def frame(e: EmbeddedTriangle, vertex: str):
    """Vertex position, unit vectors (u, v) along its two sides, and the side lengths.

    Cyclic convention: A uses (AB, AC), B uses (BC, BA), C uses (CA, CB).
    """
    nxt = {"A": ("B", "C"), "B": ("C", "A"), "C": ("A", "B")}[vertex]
    V = e.vertex(vertex)
    U = e.vertex(nxt[0]) - V
    W = e.vertex(nxt[1]) - V
    lu, lv = float(np.hypot(*U)), float(np.hypot(*W))
    return V, U / lu, W / lv, lu, lv


def oblique_coords(e: EmbeddedTriangle, vertex: str, P) -> ObliqueCoords:
    P = np.asarray(P, dtype=float)
    if not e.contains_strictly(P):
        raise NotInterior(f"point {tuple(P)} is not strictly inside the triangle")
    V, u, v, _, _ = frame(e, vertex)
    det = float(u[0] * v[1] - u[1] * v[0])
    if abs(det) < 1e-15:
        raise SingularFrame(f"sides at vertex {vertex} are parallel")
    r = P - V
    x = float(r[0] * v[1] - r[1] * v[0]) / det
    y = float(u[0] * r[1] - u[1] * r[0]) / det
    if x <= 0 or y <= 0:
        raise NotInterior(f"oblique coordinates ({x}, {y}) are not positive")
    return ObliqueCoords(x, y)


def _check_interior(boundary: PolygonBoundary, P) -> np.ndarray:
    P = np.asarray(P, dtype=float)
    if P.shape != (2,) or not boundary.is_strictly_inside(P):
        raise NotInterior(f"point {tuple(np.ravel(P))} is not strictly interior")
    return P


def chord_from_crossings(boundary: PolygonBoundary, P, theta: float) -> Chord:
    x = boundary.crossings(P, [theta])
    pairs = sorted([
        (float(x.t_plus[0]), tuple(map(float, x.plus[0]))),
        (float(x.t_minus[0]), tuple(map(float, x.minus[0]))),
    ])
    (t1, p1), (t2, p2) = pairs
    return Chord(t1, t2, p1, p2, float(theta) % math.pi)


def cut_at_angle(e: EmbeddedTriangle, P, theta: float):
    """Chord through ``P`` at inclination ``theta`` and its two boundary pieces.

    Returns ``(chord, piece_min, piece_max)``.
    """
    P = _check_interior(e.boundary, P)
    x = e.boundary.crossings(P, [theta])
    lo, hi = sorted((float(x.fwd_length[0]), float(x.back_length[0])))
    return chord_from_crossings(e.boundary, P, theta), lo, hi


def area_cut_at_angle(e: EmbeddedTriangle, P, theta: float):
    P = _check_interior(e.boundary, P)
    x = e.boundary.crossings(P, [theta])
    lo, hi = sorted((float(x.fwd_area[0]), float(x.back_area[0])))
    return lo, hi
