"""Planar group elements, norms, Hausdorff distance, and frame registration.

Points and vectors are rows.  Group elements store their matrix part ``M``
and act by ``p -> p @ inv(M) + v``; composition is
``(M1, v1) * (M2, v2) = (M1 @ M2, v2 @ inv(M1) + v1)``.  Keeping the inverse
in the action makes composition associative for non-commuting matrix parts.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

__all__ = [
    "DegenerateFrameError",
    "EquiAffineMap",
    "RigidMotion",
    "SampledCurve",
    "BoundReport",
    "apply_motion",
    "compose",
    "hausdorff_distance",
    "max_norm",
    "normalize_to_standard_frame",
    "rotation_matrix",
    "sup_norm",
]


class DegenerateFrameError(ValueError):
    """Raised when a start frame cannot be formed (non-regular parametrization)."""


def rotation_matrix(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def _inv2(m: np.ndarray) -> np.ndarray:
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]]) / det


@dataclass(frozen=True)
class RigidMotion:
    """Orientation-preserving rigid motion: rotation part plus translation."""

    rotation: np.ndarray
    translation: np.ndarray
    tol: float = field(default=1e-9, compare=False)

    def __post_init__(self):
        r = np.asarray(self.rotation, dtype=float).reshape(2, 2)
        v = np.asarray(self.translation, dtype=float).reshape(2)
        if not (np.isfinite(r).all() and np.isfinite(v).all()):
            raise ValueError("rigid motion entries must be finite")
        if np.abs(r @ r.T - np.eye(2)).max() > self.tol:
            raise ValueError("rotation part is not orthogonal")
        if abs(np.linalg.det(r) - 1.0) > self.tol:
            raise ValueError("rotation part must have determinant +1")
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", v)

    @classmethod
    def identity(cls) -> "RigidMotion":
        return cls(np.eye(2), np.zeros(2))

    @classmethod
    def from_angle(cls, theta: float, translation=(0.0, 0.0)) -> "RigidMotion":
        return cls(rotation_matrix(theta), np.asarray(translation, dtype=float))

    @property
    def matrix(self) -> np.ndarray:
        return self.rotation

    @property
    def angle(self) -> float:
        return float(np.arctan2(self.rotation[1, 0], self.rotation[0, 0]))

    def apply(self, points: np.ndarray) -> np.ndarray:
        p = np.asarray(points, dtype=float)
        return p @ self.rotation.T + self.translation

    def inverse(self) -> "RigidMotion":
        return RigidMotion(self.rotation.T, -self.translation @ self.rotation, tol=self.tol)

    def compose(self, other: "RigidMotion") -> "RigidMotion":
        return RigidMotion(
            self.rotation @ other.rotation,
            other.translation @ self.rotation.T + self.translation,
            tol=max(self.tol, other.tol),
        )

    def as_equi_affine(self) -> "EquiAffineMap":
        return EquiAffineMap(self.rotation, self.translation, tol=self.tol)


@dataclass(frozen=True)
class EquiAffineMap:
    """Area- and orientation-preserving affine map: unimodular part plus translation."""

    linear: np.ndarray
    translation: np.ndarray
    tol: float = field(default=1e-9, compare=False)

    def __post_init__(self):
        m = np.asarray(self.linear, dtype=float).reshape(2, 2)
        v = np.asarray(self.translation, dtype=float).reshape(2)
        if not (np.isfinite(m).all() and np.isfinite(v).all()):
            raise ValueError("map entries must be finite")
        if abs(np.linalg.det(m) - 1.0) > self.tol:
            raise ValueError("linear part must have determinant 1")
        object.__setattr__(self, "linear", m)
        object.__setattr__(self, "translation", v)

    @classmethod
    def identity(cls) -> "EquiAffineMap":
        return cls(np.eye(2), np.zeros(2))

    @property
    def matrix(self) -> np.ndarray:
        return self.linear

    def apply(self, points: np.ndarray) -> np.ndarray:
        p = np.asarray(points, dtype=float)
        return p @ _inv2(self.linear) + self.translation

    def inverse(self) -> "EquiAffineMap":
        return EquiAffineMap(_inv2(self.linear), -self.translation @ self.linear, tol=self.tol)

    def compose(self, other) -> "EquiAffineMap":
        return EquiAffineMap(
            self.linear @ other.matrix,
            other.translation @ _inv2(self.linear) + self.translation,
            tol=max(self.tol, other.tol),
        )


def compose(g1, g2):
    """Group composition; applying the result equals applying g2 then g1."""
    if isinstance(g1, RigidMotion) and isinstance(g2, RigidMotion):
        return g1.compose(g2)
    a = g1.as_equi_affine() if isinstance(g1, RigidMotion) else g1
    b = g2.as_equi_affine() if isinstance(g2, RigidMotion) else g2
    return a.compose(b)


def se2_compose(g1: RigidMotion, g2: RigidMotion) -> RigidMotion:
    return g1.compose(g2)


def apply_motion(g, points):
    return g.apply(points)


@dataclass(frozen=True)
class SampledCurve:
    """A curve as a strictly increasing parameter grid plus 2D sample points."""

    params: np.ndarray
    points: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.params, dtype=float).reshape(-1)
        p = np.asarray(self.points, dtype=float)
        if p.ndim != 2 or p.shape[1] != 2:
            raise ValueError("points must have shape (n, 2)")
        if t.shape[0] != p.shape[0]:
            raise ValueError("params and points must have the same length")
        if t.shape[0] < 2:
            raise ValueError("a curve needs at least 2 samples")
        if not (np.isfinite(t).all() and np.isfinite(p).all()):
            raise ValueError("curve data must be finite")
        if np.any(np.diff(t) <= 0):
            raise ValueError("params must be strictly increasing")
        object.__setattr__(self, "params", t)
        object.__setattr__(self, "points", p)

    def __len__(self) -> int:
        return self.params.shape[0]

    @property
    def span(self) -> float:
        """Parameter length, params[-1] - params[0]."""
        return float(self.params[-1] - self.params[0])

    @property
    def endpoint_gap(self) -> float:
        return float(np.hypot(*(self.points[-1] - self.points[0])))

    def transformed(self, g) -> "SampledCurve":
        return SampledCurve(self.params, g.apply(self.points))


def max_norm(a) -> float:
    """Largest absolute entry of a matrix or vector."""
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        raise ValueError("max_norm of an empty array")
    return float(np.abs(a).max())


def sup_norm(values) -> float:
    """Max absolute value over grid samples (a lower bound of the continuum sup)."""
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        raise ValueError("sup_norm of an empty grid")
    return float(np.abs(v).max())


def _as_points(obj) -> np.ndarray:
    if isinstance(obj, SampledCurve):
        return obj.points
    p = np.asarray(obj, dtype=float)
    if p.ndim == 1:
        p = p.reshape(1, 2)
    return p


def _min_dist_to_segments(pts: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """For each point, min distance to any segment [a_j, b_j]."""
    ab = b - a
    denom = np.einsum("sd,sd->s", ab, ab)
    safe = np.where(denom > 0.0, denom, 1.0)
    ap = pts[:, None, :] - a[None, :, :]
    t = np.einsum("psd,sd->ps", ap, ab) / safe
    t = np.clip(t, 0.0, 1.0)
    t[:, denom == 0.0] = 0.0
    d = ap - t[:, :, None] * ab[None, :, :]
    return np.sqrt(np.einsum("psd,psd->ps", d, d).min(axis=1))


def _directed_hausdorff(p: np.ndarray, q: np.ndarray, chunk: int = 256) -> float:
    if q.shape[0] == 1:
        return float(np.hypot(*(p - q[0]).T).max())
    # point-to-vertex distances bound point-to-polyline from above, so points
    # are processed in decreasing order of that bound and dropped once they
    # cannot exceed the running maximum
    d_vertex = cKDTree(q).query(p)[0]
    a, b = q[:-1], q[1:]
    order = np.argsort(-d_vertex)
    best = -1.0
    for start in range(0, order.size, chunk):
        idx = order[start : start + chunk]
        idx = idx[d_vertex[idx] > best]
        if idx.size == 0:
            break
        best = max(best, float(_min_dist_to_segments(p[idx], a, b).max()))
    return max(best, 0.0)


def hausdorff_distance(p, q) -> float:
    """Hausdorff distance between two polylines (point-to-segment both ways)."""
    pp, qq = _as_points(p), _as_points(q)
    return max(_directed_hausdorff(pp, qq), _directed_hausdorff(qq, pp))


def _endpoint_derivatives(params: np.ndarray, points: np.ndarray):
    """First and second derivative at params[0], one-sided, order >= 2."""
    t = params
    h = np.diff(t[: min(4, t.size)])
    if t.size >= 4 and np.allclose(h, h[0], rtol=1e-9, atol=0.0):
        hh = h[0]
        p = points
        d1 = (-3.0 * p[0] + 4.0 * p[1] - p[2]) / (2.0 * hh)
        d2 = (2.0 * p[0] - 5.0 * p[1] + 4.0 * p[2] - p[3]) / hh**2
        return d1, d2
    # non-uniform start: fit a cubic (or the highest degree available)
    m = min(4, t.size)
    deg = m - 1
    ts = t[:m] - t[0]
    cx = np.polyfit(ts, points[:m, 0], deg)
    cy = np.polyfit(ts, points[:m, 1], deg)
    d1 = np.array([np.polyder(cx)[-1], np.polyder(cy)[-1]])
    if deg >= 2:
        d2 = np.array([np.polyder(cx, 2)[-1], np.polyder(cy, 2)[-1]])
    else:
        d2 = np.zeros(2)
    return d1, d2


def normalize_to_standard_frame(curve: SampledCurve, mode: str = "euclidean"):
    """Move a curve so it starts at the origin with the standard start frame.

    Returns ``(normalized_curve, g)`` where ``g`` is the unique group element
    (rigid motion for ``mode="euclidean"``, equi-affine map for
    ``mode="affine"``) with ``g . curve`` starting at (0,0) with tangent row
    (1,0) and normal row (0,1).  The curve is assumed to be arc-length
    parametrized in the stated mode.
    """
    d1, d2 = _endpoint_derivatives(curve.params, curve.points)
    if mode == "euclidean":
        speed = float(np.hypot(*d1))
        if speed < 1e-9:
            raise DegenerateFrameError(
                f"zero tangent at parameter {curve.params[0]!r}: non-regular parametrization"
            )
        tang = d1 / speed
        norm = np.array([-tang[1], tang[0]])
        frame = np.array([tang, norm])
        g = RigidMotion(frame, -curve.points[0] @ _inv2(frame))
    elif mode == "affine":
        det = d1[0] * d2[1] - d1[1] * d2[0]
        if det < 1e-9:
            raise DegenerateFrameError(
                f"start frame determinant {det:.3e} at parameter {curve.params[0]!r}"
            )
        frame = np.array([d1, d2]) / np.sqrt(det)
        g = EquiAffineMap(frame, -curve.points[0] @ _inv2(frame))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return curve.transformed(g), g


@dataclass(frozen=True)
class BoundReport:
    """A guaranteed reconstruction-distance bound next to the measured distance.

    ``bound`` is the certified value the ``satisfied`` flag is checked
    against; ``bound_stated`` is the (possibly tighter) headline value.
    ``solver_floor`` is the numerical allowance added to ``bound`` so that a
    zero theoretical bound does not flag quadrature round-off as a violation.
    """

    mode: str
    norm: str
    delta: float
    length: float
    c_hat: float | None
    bound_stated: float
    bound: float
    measured: float
    satisfied: bool
    stated_bound_held: bool
    solver_floor: float
