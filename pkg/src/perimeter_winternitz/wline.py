"""W-lines: chords of an angle through a point that minimize the cut-off side lengths.

For an angle at ``V`` with unit side vectors ``u`` and ``v`` and a point
``P = V + x*u + y*v``, a line through ``P`` meeting the sides at ``s*u`` and
``t*v`` satisfies ``x/s + y/t = 1``.  The minimum of ``s + t`` sits at
``s = x + sqrt(xy)``, ``t = y + sqrt(xy)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveInput
from .golden import golden_min
from .triangle import Chord, EmbeddedTriangle, chord_from_crossings, frame, oblique_coords

WLINE = "WLine"
BOUNDARY_LEFT = "BoundaryChordLeft"
BOUNDARY_RIGHT = "BoundaryChordRight"

FEASIBILITY_RTOL = 1e-12
ORACLE_BRACKET = 1e3


@dataclass(frozen=True)
class WLineSolution:
    s: float
    t: float
    cut: float


@dataclass(frozen=True)
class VertexCut:
    """Smallest ``VM + VN`` over chords through P crossing both sides at a vertex.

    ``kind`` is ``WLine`` when the unconstrained optimum fits on the sides.
    Otherwise the optimum is pushed to a chord through the far end of one side:
    ``BoundaryChordLeft`` passes through the end of the ``u`` side,
    ``BoundaryChordRight`` through the end of the ``v`` side.
    """

    vertex: str
    value: float
    kind: str
    chord: Chord
    s: float
    t: float


def wline_extreme(x: float, y: float) -> WLineSolution:
    if not (x > 0 and y > 0):
        raise NonPositiveInput(f"oblique coordinates must be positive, got ({x}, {y})")
    r = math.sqrt(x * y)
    return WLineSolution(s=x + r, t=y + r, cut=(math.sqrt(x) + math.sqrt(y)) ** 2)


def lagrange_oracle(x: float, y: float, n: int = 10_000, bracket: float = ORACLE_BRACKET):
    """Numeric minimizer of ``s + t`` subject to ``x/s + y/t = 1``.

    Does not use the closed form.  The constraint is solved for ``t``, ``s`` is
    scanned on a geometric grid over ``(x, bracket*x]`` and the best cell is
    refined by golden-section search, first on the objective and then on the
    Lagrange stationarity residual.  Stationarity of
    ``s + t + lam*(x/s + y/t - 1)`` gives ``lam = s**2/x`` from the ``s``
    equation; substituting into the ``t`` equation leaves a residual with a
    sharp zero, which pins the optimum to rounding precision where the flat
    objective cannot.
    """
    if not (x > 0 and y > 0):
        raise NonPositiveInput(f"oblique coordinates must be positive, got ({x}, {y})")
    n = max(int(n), 100)

    def t_of(s):
        return y * s / (s - x)

    def objective(s):
        return s + t_of(s)

    def residual(s):
        lam = s * s / x
        t = t_of(s)
        return abs(1.0 - lam * y / (t * t))

    offsets = x * np.geomspace(1e-9, bracket - 1.0, n)
    grid = x + offsets
    values = grid + y * grid / offsets
    k = int(np.argmin(values))
    lo = x + offsets[k - 1] if k > 0 else x + 0.5 * offsets[0]
    hi = grid[min(k + 1, n - 1)]
    s_obj, _ = golden_min(objective, lo, hi, tol=1e-14 * hi)

    # the residual is monotone-in-magnitude around its root; a cell around s_obj contains it
    width = max(1e-6 * s_obj, 1e-12)
    a, b = max(lo, s_obj - width), min(hi, s_obj + width)
    s_best, _ = golden_min(residual, a, b, tol=1e-16 * b, max_iter=400)
    return float(s_best), float(t_of(s_best))


def _boundary_values(x, y, lu, lv):
    left_t = lu * y / (lu - x)
    right_s = lv * x / (lv - y)
    return (lu, left_t), (right_s, lv)


def vertex_min_cut(e: EmbeddedTriangle, vertex: str, P) -> VertexCut:
    P = np.asarray(P, dtype=float)
    oc = oblique_coords(e, vertex, P)
    V, u, v, lu, lv = frame(e, vertex)
    sol = wline_extreme(oc.x, oc.y)
    if sol.s <= lu * (1 + FEASIBILITY_RTOL) and sol.t <= lv * (1 + FEASIBILITY_RTOL):
        s, t, kind = min(sol.s, lu), min(sol.t, lv), WLINE
        value = sol.cut
    else:
        (ls, lt), (rs, rt) = _boundary_values(oc.x, oc.y, lu, lv)
        if ls + lt <= rs + rt:
            s, t, kind = ls, lt, BOUNDARY_LEFT
        else:
            s, t, kind = rs, rt, BOUNDARY_RIGHT
        value = s + t
    M = V + s * u
    N = V + t * v
    theta = math.atan2(N[1] - M[1], N[0] - M[0]) % math.pi
    chord = chord_from_crossings(e.boundary, P, theta)
    return VertexCut(vertex=vertex, value=value, kind=kind, chord=chord, s=s, t=t)
