"""Brute-force minimization of the smaller boundary (or area) piece over lines through a point.

This path never uses the W-line formulas.  Directions are sampled on a uniform
grid over ``[0, pi)`` together with the breakpoint directions, i.e. the lines
through ``P`` and a vertex.  Between two consecutive breakpoints each end of
the chord stays on one edge, so the piece lengths are smooth there, and each
sub-interval is refined by golden-section search.
"""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass

import numpy as np

from .boundary import PolygonBoundary
from .errors import GapDetected, NotInterior
from .golden import golden_min
from .triangle import EmbeddedTriangle

log = logging.getLogger(__name__)

DEFAULT_SAMPLES = 3600
THETA_TOL = 1e-10
DENSE_LOCAL = 64
TIE_TOL = 1e-11
CLUSTER_RAD = 1e-4


@dataclass(frozen=True)
class SweepProfile:
    thetas: np.ndarray
    piece_min_fractions: np.ndarray
    breakpoints: np.ndarray
    argmin_theta: float
    min_fraction: float
    argmin_thetas: tuple
    continuity_bound: float
    coarse_min: float
    measure: str = "perimeter"

    def to_csv(self, fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["theta", "piece_min_fraction"])
        for th, f in zip(self.thetas, self.piece_min_fractions):
            w.writerow([f"{th:.12g}", f"{f:.12g}"])

    def summary(self):
        return {
            "measure": self.measure,
            "samples": int(len(self.thetas)),
            "min_fraction": self.min_fraction,
            "argmin_theta": self.argmin_theta,
            "argmin_thetas": list(self.argmin_thetas),
            "breakpoints": [float(b) for b in self.breakpoints],
            "coarse_min": self.coarse_min,
            "continuity_bound": self.continuity_bound,
        }


def _pieces(x, measure):
    if measure == "area":
        return x.fwd_area, x.back_area, x.area_rate
    return x.fwd_length, x.back_length, x.length_rate


def breakpoint_angles(boundary: PolygonBoundary, P) -> np.ndarray:
    rel = boundary.vertices - np.asarray(P, dtype=float)
    ang = np.sort(np.mod(np.arctan2(rel[:, 1], rel[:, 0]), math.pi))
    keep = np.concatenate(([True], np.diff(ang) > 1e-13))
    ang = ang[keep]
    if len(ang) > 1 and ang[-1] - ang[0] > math.pi - 1e-13:
        ang = ang[:-1]
    return ang


def sweep_boundary(boundary: PolygonBoundary, P, n: int = DEFAULT_SAMPLES,
                   measure: str = "perimeter") -> SweepProfile:
    """Global minimum of the smaller piece fraction over all lines through ``P``."""
    P = np.asarray(P, dtype=float)
    if P.shape != (2,) or not boundary.is_strictly_inside(P):
        raise NotInterior(f"point {tuple(np.ravel(P))} is not strictly interior")
    if measure not in ("perimeter", "area"):
        raise ValueError(f"unknown measure {measure!r}")
    total = boundary.perimeter if measure == "perimeter" else boundary.area
    n = int(n)

    bps = breakpoint_angles(boundary, P)
    grid = np.arange(n) * (math.pi / n)
    thetas = np.unique(np.concatenate((grid, bps)))
    x = boundary.crossings(P, thetas)
    fwd, back, rate = _pieces(x, measure)
    fractions = np.minimum(fwd, back) / total
    rate = rate / total

    # chord-motion bound on how far the fraction can move between neighbouring samples
    steps = np.diff(np.concatenate((thetas, [thetas[0] + math.pi])))
    local = np.maximum(rate, np.roll(rate, -1))
    continuity = float(2.0 * np.max(steps * local))

    k0 = int(np.argmin(fractions))
    coarse_min = float(fractions[k0])

    evaluate = boundary.evaluator(P)
    slot = {"fwd": 0, "back": 1} if measure == "perimeter" else {"fwd": 2, "back": 3}

    def one(theta, kind):
        r = evaluate(theta)
        f, b = r[slot["fwd"]], r[slot["back"]]
        if kind == "fwd":
            return f
        if kind == "back":
            return b
        return min(f, b) / total

    candidates = [(coarse_min, float(thetas[k0]))]
    candidates += [(float(f), float(t)) for f, t in zip(fractions, thetas)
                   if f <= coarse_min + TIE_TOL]
    edges = np.concatenate((bps, [bps[0] + math.pi]))
    for lo, hi in zip(edges[:-1], edges[1:]):
        if hi - lo <= THETA_TOL:
            continue
        # each piece is unimodal on a single-angle sub-interval; try both, keep real values only
        for kind in ("fwd", "back"):
            th, _ = golden_min(lambda t: one(t, kind), lo, hi, tol=THETA_TOL)
            candidates.append((one(th, "frac"), th))
        dense = np.linspace(lo, hi, DENSE_LOCAL + 1)
        dx = boundary.crossings(P, dense)
        df, db, _ = _pieces(dx, measure)
        dv = np.minimum(df, db) / total
        j = int(np.argmin(dv))
        a, b = dense[max(j - 1, 0)], dense[min(j + 1, DENSE_LOCAL)]
        th, val = golden_min(lambda t: one(t, "frac"), a, b, tol=THETA_TOL)
        candidates.append((val, th))

    best_val, best_theta = min(candidates)
    if best_val > coarse_min:
        log.warning("refinement (%.3g) worse than coarse sample (%.3g); keeping coarse",
                    best_val, coarse_min)
        best_val, best_theta = coarse_min, float(thetas[k0])

    ties = sorted((t % math.pi, v) for v, t in candidates if v <= best_val + TIE_TOL)
    clusters: list[tuple[float, float]] = []
    for t, v in ties:
        if clusters and (t - clusters[-1][0]) < CLUSTER_RAD:
            if v < clusters[-1][1]:
                clusters[-1] = (t, v)
            continue
        clusters.append((t, v))
    if len(clusters) > 1 and clusters[0][0] + math.pi - clusters[-1][0] < CLUSTER_RAD:
        last = clusters.pop()
        if last[1] < clusters[0][1]:
            clusters[0] = last
    argmins = tuple(float(t) for t, _ in clusters)

    return SweepProfile(
        thetas=thetas, piece_min_fractions=fractions, breakpoints=bps,
        argmin_theta=float(best_theta % math.pi), min_fraction=float(best_val),
        argmin_thetas=argmins, continuity_bound=continuity, coarse_min=coarse_min,
        measure=measure,
    )


def sweep_min_perimeter(e: EmbeddedTriangle, P, n: int = DEFAULT_SAMPLES) -> SweepProfile:
    return sweep_boundary(e.boundary, P, n, "perimeter")


def sweep_min_area(e: EmbeddedTriangle, P, n: int = DEFAULT_SAMPLES) -> SweepProfile:
    return sweep_boundary(e.boundary, P, n, "area")


def range_interval(profile: SweepProfile):
    """``(m, 1 - m)`` for a full sweep, after checking the samples cover ``[m, 1/2]``."""
    m = profile.min_fraction
    vals = np.sort(np.concatenate(([m], profile.piece_min_fractions, [0.5])))
    gap = float(np.max(np.diff(vals)))
    if gap > profile.continuity_bound:
        raise GapDetected(
            f"largest gap {gap:.3g} exceeds the continuity bound {profile.continuity_bound:.3g}"
        )
    return m, 1.0 - m
