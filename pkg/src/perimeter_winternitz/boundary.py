"""Arc-length parameterized boundary of a convex polygon and chords through a point.

Shared by the triangle layer and the convex polygon explorer.  Lines through an
interior point are clipped with the Cyrus-Beck rule, which needs only the outward
edge normals, so chords passing exactly through a vertex need no special case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def cross(u, v):
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


@dataclass(frozen=True)
class Crossings:
    """Vectorized chord data for a batch of angles.

    ``plus`` is the exit point along +direction, ``minus`` along -direction.
    ``fwd_length``/``fwd_area`` describe the piece traversed counterclockwise
    from the plus point to the minus point; ``back_*`` the complementary piece.
    """

    thetas: np.ndarray
    lam_plus: np.ndarray
    lam_minus: np.ndarray
    edge_plus: np.ndarray
    edge_minus: np.ndarray
    plus: np.ndarray
    minus: np.ndarray
    t_plus: np.ndarray
    t_minus: np.ndarray
    fwd_length: np.ndarray
    back_length: np.ndarray
    fwd_area: np.ndarray
    back_area: np.ndarray
    length_rate: np.ndarray
    area_rate: np.ndarray


class PolygonBoundary:
    """Counterclockwise convex polygon with boundary parameter starting at vertex 0."""

    def __init__(self, vertices):
        v = np.asarray(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or len(v) < 3:
            raise ValueError("need an (n, 2) array with n >= 3")
        self.vertices = v
        self.n = len(v)
        self.edges = np.roll(v, -1, axis=0) - v
        self.lengths = np.hypot(self.edges[:, 0], self.edges[:, 1])
        self.units = self.edges / self.lengths[:, None]
        self.cum = np.concatenate(([0.0], np.cumsum(self.lengths)))
        self.perimeter = float(self.cum[-1])
        # outward normal of a counterclockwise edge (ex, ey) is (ey, -ex)
        self.normals = np.column_stack((self.units[:, 1], -self.units[:, 0]))
        self.offsets = np.einsum("ij,ij->i", self.normals, v)
        self.area = 0.5 * float(np.sum(cross(v, np.roll(v, -1, axis=0))))
        self.scale = float(np.max(np.ptp(v, axis=0)))

    def point_at(self, t):
        """Boundary point at arc parameter ``t`` (taken modulo the perimeter)."""
        t = float(t) % self.perimeter
        k = int(np.searchsorted(self.cum, t, side="right") - 1)
        k = min(max(k, 0), self.n - 1)
        return self.vertices[k] + (t - self.cum[k]) * self.units[k]

    def distance_to_boundary(self, point):
        p = np.asarray(point, dtype=float)
        rel = p - self.vertices
        u = np.clip(np.einsum("ij,ij->i", rel, self.units), 0.0, self.lengths)
        foot = self.vertices + u[:, None] * self.units
        return float(np.min(np.hypot(*(p - foot).T)))

    def inner_distances(self, point):
        """Signed distance from ``point`` to each edge line, positive inside."""
        return self.offsets - self.normals @ np.asarray(point, dtype=float)

    def is_strictly_inside(self, point, rel_tol=1e-14):
        return bool(np.all(self.inner_distances(point) > rel_tol * self.perimeter))

    def crossings(self, point, thetas) -> Crossings:
        P = np.asarray(point, dtype=float)
        th = np.atleast_1d(np.asarray(thetas, dtype=float))
        d = np.column_stack((np.cos(th), np.sin(th)))
        denom = d @ self.normals.T
        num = self.inner_distances(P)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ratio = num[None, :] / denom
        fwd_ratio = np.where(denom > 0, ratio, np.inf)
        back_ratio = np.where(denom < 0, ratio, -np.inf)
        kp = np.argmin(fwd_ratio, axis=1)
        km = np.argmax(back_ratio, axis=1)
        rows = np.arange(len(th))
        lam_p = fwd_ratio[rows, kp]
        lam_m = back_ratio[rows, km]
        xp = P + lam_p[:, None] * d
        xm = P + lam_m[:, None] * d

        tp = self._arc_param(xp, kp)
        tm = self._arc_param(xm, km)
        fwd = np.mod(tm - tp, self.perimeter)
        back = self.perimeter - fwd

        # shoelace with P as origin: the chord term vanishes since X+, P, X- are collinear
        q = self.vertices - P
        c = np.concatenate(([0.0], np.cumsum(cross(q, np.roll(q, -1, axis=0)))))
        qp = xp - P
        qm = xm - P
        fwd_area = 0.5 * self._fan(qp, kp, qm, km, q, c)
        back_area = 0.5 * self._fan(qm, km, qp, kp, q, c)

        sin_p = np.abs(cross(d, self.units[kp]))
        sin_m = np.abs(cross(d, self.units[km]))
        with np.errstate(divide="ignore"):
            length_rate = np.abs(lam_p) / sin_p + np.abs(lam_m) / sin_m
        area_rate = 0.5 * (lam_p**2 + lam_m**2)
        return Crossings(
            thetas=th, lam_plus=lam_p, lam_minus=lam_m, edge_plus=kp, edge_minus=km,
            plus=xp, minus=xm, t_plus=tp, t_minus=tm, fwd_length=fwd, back_length=back,
            fwd_area=fwd_area, back_area=back_area,
            length_rate=length_rate, area_rate=area_rate,
        )

    def _arc_param(self, x, k):
        local = np.einsum("ij,ij->i", x - self.vertices[k], self.units[k])
        local = np.clip(local, 0.0, self.lengths[k])
        return np.mod(self.cum[k] + local, self.perimeter)

    def _fan(self, start, k_start, end, k_end, q, c):
        # polygon: start, V[k_start+1], ..., V[k_end], end
        i = (k_start + 1) % self.n
        j = k_end
        inner = np.where(j >= i, c[j] - c[i], c[self.n] - c[i] + c[j])
        return cross(start, q[i]) + inner + cross(q[j], end)

    def evaluator(self, point):
        """Scalar ``theta -> (fwd_length, back_length, fwd_area, back_area)`` for a fixed point.

        Same conventions as :meth:`crossings`, without numpy call overhead; used
        by the one-dimensional refinements, which evaluate single angles.
        """
        px, py = float(point[0]), float(point[1])
        n = self.n
        vx = [float(v[0]) - px for v in self.vertices]
        vy = [float(v[1]) - py for v in self.vertices]
        ux = self.units[:, 0].tolist()
        uy = self.units[:, 1].tolist()
        lengths = self.lengths.tolist()
        cum = self.cum.tolist()
        per = self.perimeter
        dist = self.inner_distances((px, py)).tolist()
        pref = [0.0]
        for i in range(n):
            j = (i + 1) % n
            pref.append(pref[-1] + vx[i] * vy[j] - vy[i] * vx[j])

        def exit_point(dx, dy, sign):
            best, kb = math.inf, -1
            for k in range(n):
                # outward normal is (uy, -ux)
                den = sign * (dx * uy[k] - dy * ux[k])
                if den > 0:
                    r = dist[k] / den
                    if r < best:
                        best, kb = r, k
            x, y = sign * best * dx, sign * best * dy
            local = (x - vx[kb]) * ux[kb] + (y - vy[kb]) * uy[kb]
            local = min(max(local, 0.0), lengths[kb])
            return x, y, kb, (cum[kb] + local) % per

        def fan(sx, sy, ks, ex, ey, ke):
            i = (ks + 1) % n
            j = ke
            inner = pref[j] - pref[i] if j >= i else pref[n] - pref[i] + pref[j]
            return 0.5 * (sx * vy[i] - sy * vx[i] + inner + vx[j] * ey - vy[j] * ex)

        def evaluate(theta):
            dx, dy = math.cos(theta), math.sin(theta)
            xp, yp, kp, tp = exit_point(dx, dy, 1.0)
            xm, ym, km, tm = exit_point(dx, dy, -1.0)
            fwd = (tm - tp) % per
            return (fwd, per - fwd, fan(xp, yp, kp, xm, ym, km), fan(xm, ym, km, xp, yp, kp))

        return evaluate
