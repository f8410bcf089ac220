"""Convex polygons: centroid cut fractions, central symmetry and Neumann-point search.

A Neumann point maximizes, over interior points ``P``, the worst perimeter
fraction ``Q(P)`` cut off by a line through ``P``.  The search is a seeded
multi-start Nelder-Mead on ``-Q``; points outside the polygon score ``Q = 0``.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .boundary import PolygonBoundary, cross
from .errors import DuplicateVertex, NotConvex, TooFewVertices
from .oracle import DEFAULT_SAMPLES, SweepProfile, sweep_boundary

NEUMANN_CONSTANT = (3 - math.sqrt(5)) / 2
CONVEXITY_TOL = 1e-12


@dataclass(frozen=True)
class ConvexPolygon:
    vertices: tuple
    perimeter: float
    area: float
    boundary: PolygonBoundary = field(repr=False, compare=False)

    @property
    def scale(self) -> float:
        return self.boundary.scale


@dataclass(frozen=True)
class NeumannResult:
    point: tuple
    value: float
    iterations: int
    converged: bool
    starts: int = 0
    seed: int = 0
    centroid_value: float = 0.0

    def as_dict(self):
        return {
            "point": list(self.point), "value": self.value,
            "iterations": self.iterations, "converged": self.converged,
            "starts": self.starts, "seed": self.seed,
            "centroid_value": self.centroid_value,
            "neumann_constant": NEUMANN_CONSTANT,
            "value_minus_neumann_constant": self.value - NEUMANN_CONSTANT,
        }


def make_polygon(points) -> ConvexPolygon:
    """Validate a strictly convex polygon, reorienting clockwise input."""
    v = np.asarray(points, dtype=float)
    if v.ndim != 2 or v.shape[1] != 2:
        raise ValueError("points must be a list of (x, y) pairs")
    if len(v) < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {len(v)}")
    scale = float(np.max(np.ptp(v, axis=0)))
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            if np.hypot(*(v[i] - v[j])) <= 1e-12 * max(scale, 1e-300):
                raise DuplicateVertex(f"vertices {i} and {j} coincide")
    if 0.5 * np.sum(cross(v, np.roll(v, -1, axis=0))) < 0:
        v = v[::-1].copy()
    e = np.roll(v, -1, axis=0) - v
    turns = cross(e, np.roll(e, -1, axis=0))
    if np.any(turns <= CONVEXITY_TOL * scale * scale):
        raise NotConvex("polygon is not strictly convex")
    # a star polygon turns left everywhere yet winds more than once
    heading = np.arctan2(e[:, 1], e[:, 0])
    winding = np.sum(np.mod(np.diff(np.concatenate((heading, heading[:1]))), 2 * math.pi))
    if winding > 2 * math.pi + 1e-9:
        raise NotConvex("polygon winds more than once")
    b = PolygonBoundary(v)
    return ConvexPolygon(tuple(map(tuple, v.tolist())), b.perimeter, b.area, b)


def load_polygon(path) -> ConvexPolygon:
    with open(path) as fh:
        data = json.load(fh)
    return make_polygon(data["vertices"])


def poly_centroid(p: ConvexPolygon, kind: str = "area") -> np.ndarray:
    """Area centroid by default; ``kind="perimeter"`` gives the centroid of the boundary."""
    v = p.boundary.vertices
    if kind == "perimeter":
        mids = v + 0.5 * p.boundary.edges
        return (mids * p.boundary.lengths[:, None]).sum(axis=0) / p.perimeter
    if kind != "area":
        raise ValueError(f"unknown centroid kind {kind!r}")
    # shift to the first vertex to keep the shoelace well conditioned
    q = v - v[0]
    nxt = np.roll(q, -1, axis=0)
    w = cross(q, nxt)
    c = ((q + nxt) * w[:, None]).sum(axis=0) / (3.0 * w.sum())
    return c + v[0]


def poly_min_fraction(p: ConvexPolygon, P, n: int = DEFAULT_SAMPLES) -> SweepProfile:
    return sweep_boundary(p.boundary, P, n, "perimeter")


def is_centrally_symmetric(p: ConvexPolygon, tol: float = 1e-9):
    v = p.boundary.vertices
    if len(v) % 2:
        return None
    k = len(v) // 2
    sums = v[:k] + v[k:]
    if np.max(np.ptp(sums, axis=0)) > tol * p.scale:
        return None
    return tuple((sums.mean(axis=0) / 2).tolist())


def _q(p: ConvexPolygon, n: int):
    def q(z):
        if not p.boundary.is_strictly_inside(z):
            return 0.0
        return sweep_boundary(p.boundary, z, n, "perimeter").min_fraction
    return q


def _start_points(p: ConvexPolygon, starts: int, seed: int):
    rng = np.random.default_rng(seed)
    pts = [poly_centroid(p)]
    v = p.boundary.vertices
    for _ in range(starts - 1):
        w = rng.dirichlet(np.ones(len(v)))
        pts.append(w @ v)
    return pts


def neumann_search(p: ConvexPolygon, n: int = 360, starts: int = 5, seed: int = 0,
                   workers: int | None = None) -> NeumannResult:
    """Multi-start simplex search for the point maximizing the worst perimeter fraction.

    The first start is the area centroid, so the result never scores below it.
    Ties between starts go to the lowest start index.
    """
    starts = max(int(starts), 5)
    q = _q(p, n)
    xatol = 1e-7 * p.scale

    def run(z0):
        z0 = np.asarray(z0, dtype=float)
        step = 0.05 * p.scale
        simplex = np.array([z0, z0 + (step, 0.0), z0 + (0.0, step)])
        res = minimize(lambda z: -q(z), z0, method="Nelder-Mead",
                       options={"xatol": xatol, "fatol": 1e-13,
                                "initial_simplex": simplex, "maxiter": 2000})
        z, val = res.x, -res.fun
        f0 = q(z0)
        if f0 >= val:
            z, val = z0, f0
        return z, val, int(res.nit), bool(res.success)

    pts = _start_points(p, starts, seed)
    with ThreadPoolExecutor(max_workers=workers) as ex:
        results = list(ex.map(run, pts))
    best = 0
    for i, r in enumerate(results):
        if r[1] > results[best][1]:
            best = i
    z, val, _, _ = results[best]
    return NeumannResult(
        point=tuple(map(float, z)), value=float(val),
        iterations=sum(r[2] for r in results),
        converged=all(r[3] for r in results),
        starts=starts, seed=seed, centroid_value=float(q(pts[0])),
    )
