"""Scan of triangle shape space for the centroid cut fraction.

Shapes are normalized to perimeter 1 with ``a = 1 - b - c``; sorting and the
triangle inequality confine ``(b, c)`` to ``(1 - c)/2 >= b >= c > 1/2 - b``.
On that region the minimal centroid cut equals the fraction itself:
``F(b, c) = (b + c + 2*sqrt(bc))/3`` for ``b <= 4c`` and ``c + b/2`` beyond.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .closed_form import CLAIMED_INFIMUM, MEDIAN, ROOT
from .errors import OutsideRegion
from .oracle import sweep_min_perimeter
from .triangle import NEAR_DEGENERATE_SLACK, Triangle, centroid, embed, make_triangle

REGION_TOL = 1e-12
RANDOM_MARGIN = 1e-4

# (c, b) as plotted, horizontal axis c
FIG_CORNERS = (
    (0.0, 1 / 2),
    (1 / 4, 1 / 4),
    (1 / 3, 1 / 3),
    (1 / 10, 4 / 10),
    (1 / 9, 4 / 9),
)


@dataclass(frozen=True)
class ShapePoint:
    b: float
    c: float
    F: float
    branch: str = ROOT
    flag: str = ""

    @property
    def a(self) -> float:
        return 1.0 - self.b - self.c


@dataclass(frozen=True)
class Corner:
    c: float
    b: float
    F: float
    branch: str
    degenerate: bool

    def as_dict(self):
        return {
            "c_b": [self.c, self.b], "b_c": [self.b, self.c], "F": self.F,
            "branch": self.branch, "degenerate": self.degenerate,
        }


def in_region(b, c, tol=REGION_TOL) -> bool:
    return (c >= -tol and b >= c - tol and b <= (1 - c) / 2 + tol and b + c >= 0.5 - tol)


def branch(b: float, c: float) -> str:
    return ROOT if b <= 4 * c else MEDIAN


def F(b: float, c: float) -> float:
    if not in_region(b, c):
        raise OutsideRegion(f"(b, c) = ({b}, {c}) is outside the normalized shape region")
    c = max(c, 0.0)
    if b <= 4 * c:
        return (b + c + 2 * math.sqrt(b * c)) / 3
    return c + b / 2


def F_grid(b, c):
    """Vectorized F without the region check, for grids already filtered."""
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    root = (b + c + 2 * np.sqrt(b * c)) / 3
    return np.where(b <= 4 * c, root, c + b / 2)


def corner_values() -> list[Corner]:
    out = []
    for c, b in FIG_CORNERS:
        degenerate = c == 0.0 or abs(b + c - 0.5) <= REGION_TOL
        out.append(Corner(c, b, F(b, c), branch(b, c), degenerate))
    return out


def random_triangle(seed: int, margin: float = RANDOM_MARGIN) -> Triangle:
    """Seeded uniform sample from the shape region, kept ``margin`` off its degenerate edges."""
    rng = np.random.default_rng(seed)
    while True:
        c = rng.uniform(0.0, 1 / 3)
        b = rng.uniform(0.25, 0.5)
        if c >= margin and b >= c and b <= (1 - c) / 2 and b + c >= 0.5 + margin:
            return make_triangle(1 - b - c, b, c)


@dataclass
class ScanReport:
    resolution: int
    margin: float
    seed: int
    b: np.ndarray = field(repr=False)
    c: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)
    min_point: ShapePoint
    max_point: ShapePoint
    corner_values: list
    below_claimed_bound: list = field(repr=False)
    oracle_checks: list = field(repr=False)
    oracle_max_rel_dev: float = 0.0

    @property
    def grid(self) -> list[ShapePoint]:
        return [_point(b, c, f) for b, c, f in zip(self.b, self.c, self.values)]

    def to_csv(self, fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["c", "b", "a", "F", "branch", "flag"])
        for p in self.grid:
            w.writerow([f"{p.c:.12g}", f"{p.b:.12g}", f"{p.a:.12g}", f"{p.F:.12g}", p.branch, p.flag])

    def summary(self):
        def pt(p):
            return {"c": p.c, "b": p.b, "a": p.a, "F": p.F, "branch": p.branch}
        measured = min(k.F for k in self.corner_values)
        return {
            "resolution": self.resolution,
            "margin": self.margin,
            "seed": self.seed,
            "grid_points": int(len(self.values)),
            "min_point": pt(self.min_point),
            "max_point": pt(self.max_point),
            "corners": [k.as_dict() for k in self.corner_values],
            "claimed_infimum": CLAIMED_INFIMUM,
            "corner_minimum": measured,
            "below_claimed_bound_count": len(self.below_claimed_bound),
            "below_claimed_bound": [[p.c, p.b, p.F] for p in self.below_claimed_bound],
            "oracle_checks": len(self.oracle_checks),
            "oracle_max_rel_dev": self.oracle_max_rel_dev,
        }


def _point(b, c, f) -> ShapePoint:
    b, c, f = float(b), float(c), float(f)
    a = 1.0 - b - c
    slack = b + c - a
    flag = "near_degenerate" if slack < NEAR_DEGENERATE_SLACK else ""
    return ShapePoint(b=b, c=c, F=f, branch=branch(b, c), flag=flag)


def scan_region(resolution: int = 400, margin: float = 1e-3, seed: int = 0,
                oracle_fraction: float = 0.01, oracle_samples: int = 720) -> ScanReport:
    """Evaluate F on a grid over the shape region and cross-check a random subsample.

    The grid is ``resolution x resolution`` over ``c in [margin, 1/3]`` and
    ``b in [1/4, 1/2]``, keeping points with ``c <= b <= (1 - c)/2`` and
    ``b + c >= 1/2 + margin``.  Points ordered by row (b) then column (c).
    """
    if resolution < 50:
        raise ValueError("resolution must be at least 50")
    # the shrunk region keeps the equilateral point only while margin < 1/6
    if not 0 < margin < 1 / 6:
        raise ValueError("margin must lie in (0, 1/6)")
    cs = np.linspace(margin, 1 / 3, resolution)
    bs = np.linspace(0.25, 0.5, resolution)
    B, C = np.meshgrid(bs, cs, indexing="ij")
    B, C = B.ravel(), C.ravel()
    keep = (B >= C) & (B <= (1 - C) / 2) & (B + C >= 0.5 + margin)
    B, C = B[keep], C[keep]
    vals = F_grid(B, C)

    i_min, i_max = int(np.argmin(vals)), int(np.argmax(vals))
    below = [_point(B[i], C[i], vals[i]) for i in np.flatnonzero(vals < CLAIMED_INFIMUM)]

    rng = np.random.default_rng(seed)
    k = max(1, int(math.ceil(oracle_fraction * len(vals))))
    picks = np.sort(rng.choice(len(vals), size=k, replace=False))
    checks, worst = [], 0.0
    for i in picks:
        t = make_triangle(1 - B[i] - C[i], B[i], C[i])
        e = embed(t)
        m = sweep_min_perimeter(e, centroid(e), oracle_samples).min_fraction
        dev = abs(m - vals[i]) / vals[i]
        worst = max(worst, dev)
        checks.append((float(C[i]), float(B[i]), float(vals[i]), m))

    return ScanReport(
        resolution=resolution, margin=margin, seed=seed, b=B, c=C, values=vals,
        min_point=_point(B[i_min], C[i_min], vals[i_min]),
        max_point=_point(B[i_max], C[i_max], vals[i_max]),
        corner_values=corner_values(), below_claimed_bound=below,
        oracle_checks=checks, oracle_max_rel_dev=worst,
    )
