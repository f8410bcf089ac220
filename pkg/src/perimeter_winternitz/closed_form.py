"""Closed-form minimal perimeter cuts through the centroid and the min rule at any point.

With sides sorted ``a >= b >= c`` and ``P`` the centroid, the parallels through
``P`` cut every side into thirds, so the oblique coordinates at each vertex are
thirds of the adjacent sides.  The W-line value at vertex ``A`` is
``(b + c + 2*sqrt(bc))/3`` while that chord fits inside the triangle (``b <= 4c``);
past that it degenerates to the median from ``B`` with value ``c + b/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .triangle import Chord, EmbeddedTriangle, Triangle, centroid, embed
from .wline import WLINE, vertex_min_cut

ROOT = "Root"
MEDIAN = "Median"
CLAIMED_INFIMUM = 3 / 10
WINTERNITZ_FRACTION = 4 / 9


@dataclass(frozen=True)
class VertexCuts:
    wA: float
    wB: float
    wC: float
    branchA: str
    branchB: str
    branchC: str

    def as_dict(self):
        return {
            "wA": self.wA, "wB": self.wB, "wC": self.wC,
            "branchA": self.branchA, "branchB": self.branchB, "branchC": self.branchC,
        }


@dataclass(frozen=True)
class CutResult:
    w: float
    m: float
    achieving_vertex: str
    chord: Chord
    classification: str

    def as_dict(self):
        return {
            "w": self.w, "m": self.m,
            "achieving_vertex": self.achieving_vertex,
            "classification": self.classification,
            "chord": self.chord.to_dict(),
        }


def _root_or_median(far: float, near: float):
    """Centroid cut at the vertex between sides ``far >= near``."""
    if far <= 4 * near:
        return (far + near + 2 * math.sqrt(far * near)) / 3, ROOT
    return near + far / 2, MEDIAN


def vertex_cuts_centroid(t: Triangle) -> VertexCuts:
    a, b, c = t.a, t.b, t.c
    wA, brA = _root_or_median(b, c)
    wB, brB = _root_or_median(a, c)
    # a > 4b is impossible for a triangle with a >= b >= c
    wC = (a + b + 2 * math.sqrt(a * b)) / 3
    return VertexCuts(wA, wB, wC, brA, brB, ROOT)


def min_cut_centroid(t: Triangle) -> CutResult:
    cuts = vertex_cuts_centroid(t)
    e = embed(t)
    vc = vertex_min_cut(e, "A", centroid(e))
    kind = WLINE if cuts.branchA == ROOT else MEDIAN
    return CutResult(
        w=cuts.wA, m=cuts.wA / t.perimeter, achieving_vertex="A",
        chord=vc.chord, classification=kind,
    )


def _classify(e: EmbeddedTriangle, kind: str, chord: Chord) -> str:
    if kind == WLINE:
        return WLINE
    # a boundary chord through a vertex is a median when it also bisects the opposite side
    b = e.boundary
    for p in (chord.p1, chord.p2):
        for k in range(3):
            mid = b.vertices[k] + 0.5 * b.edges[k]
            if math.dist(p, mid) <= 1e-9 * b.perimeter:
                return MEDIAN
    return "BoundaryChord"


def min_cut_at_point(e: EmbeddedTriangle, P) -> CutResult:
    """Smallest perimeter piece over all lines through an interior point.

    All three vertices are evaluated; ties go to the first of A, B, C.
    """
    P = np.asarray(P, dtype=float)
    best = None
    for name in ("A", "B", "C"):
        vc = vertex_min_cut(e, name, P)
        if best is None or vc.value < best.value:
            best = vc
    return CutResult(
        w=best.value, m=best.value / e.perimeter, achieving_vertex=best.vertex,
        chord=best.chord, classification=_classify(e, best.kind, best.chord),
    )


def upper_bound_margin(t: Triangle) -> float:
    return 4 * (t.a + t.b + t.c) / 9 - vertex_cuts_centroid(t).wA

