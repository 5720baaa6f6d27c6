"""Targets at a fixed angular distance along the chord of a prior.

For any non-uniform ``p`` the chord ``[a, b]`` through ``u`` and ``p``
subtends at least the minimal spread ``alpha_n``. Walking from ``p`` toward
``a`` (or, if that side is too short, toward ``b``) therefore reaches a point
``q`` with ``angle(p, q) = alpha_n / 2``; the same walk from ``u`` gives
``v``. Every prior thus gets a target of the same angular dissimilarity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ToleranceNotMet
from .simplex_core import (
    UNIFORM_EPS,
    SimplexPoint,
    make_simplex_point,
    uniform_point,
    vector_angle,
)
from .spread import SegmentExtension, extend_segment, min_angle_bound

MAX_ITERS = 200
DEFAULT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class HalfAngleTargets:
    q: SimplexPoint
    v: SimplexPoint
    alpha_n: float
    achieved_angle_pq: float
    achieved_angle_uv: float
    tolerance: float
    q_side: str
    v_side: str
    q_at_endpoint: bool
    v_at_endpoint: bool
    extension: SegmentExtension


def _angle_along(start: np.ndarray, end: np.ndarray):
    """``t -> angle(start, start + t (end - start))`` from three dot products."""
    d = end - start
    ss = float(np.dot(start, start))
    sd = float(np.dot(start, d))
    dd = float(np.dot(d, d))
    root_ss = math.sqrt(ss)

    def angle(t: float) -> float:
        c = (ss + t * sd) / (root_ss * math.sqrt(ss + t * (2.0 * sd + t * dd)))
        return math.acos(min(1.0, max(-1.0, c)))

    return angle


def _walk(start: np.ndarray, end: np.ndarray, target: float, tol: float) -> tuple[float, bool]:
    """Bisect for ``t`` in ``[0, 1]`` with ``angle(start, w(t)) = target``.

    Only continuity is used: the bracket ``angle(0) = 0 < target <= angle(1)``
    is checked up front. An end value short of ``target`` by at most ``tol``
    returns the endpoint itself, flagged.
    """
    angle = _angle_along(start, end)
    g_hi = angle(1.0) - target
    if g_hi < 0.0:
        if g_hi >= -tol:
            return 1.0, True
        raise ToleranceNotMet(f"no bracket: segment reaches only {target + g_hi!r} < {target!r}")
    if not target > 0.0:
        raise ToleranceNotMet("target angle must be positive")
    lo, hi = 0.0, 1.0
    t = 0.5
    for _ in range(MAX_ITERS):
        t = 0.5 * (lo + hi)
        g = angle(t) - target
        if abs(g) <= 0.5 * tol:
            return t, False
        if g < 0.0:
            lo = t
        else:
            hi = t
    return t, False


def _target_point(start, a, b, target, tol):
    # The a-side is preferred whenever it is long enough.
    start = np.asarray(start, dtype=np.float64)
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if vector_angle(a, start) >= target:
        side, end = "a", a
    else:
        side, end = "b", b
    t, at_end = _walk(start, end, target, tol)
    point = end.copy() if at_end else start + t * (end - start)
    return make_simplex_point(point), side, at_end


def half_angle_targets(
    p: SimplexPoint, tol: float = DEFAULT_TOL, eps: float = UNIFORM_EPS
) -> HalfAngleTargets:
    """Construct ``q`` and ``v`` on the chord of ``p`` at angle ``alpha_n / 2`` from ``p`` and ``u``."""
    if not tol >= 1e-12:
        raise ValueError(f"tol must be at least 1e-12, got {tol!r}")
    ext = extend_segment(p, eps)
    n = p.n
    alpha = min_angle_bound(n, allow_n2=True)[1]
    half = 0.5 * alpha
    u = uniform_point(n)

    q, q_side, q_end = _target_point(p, ext.a, ext.b, half, tol)
    v, v_side, v_end = _target_point(u, ext.a, ext.b, half, tol)
    got_pq = vector_angle(p, q)
    got_uv = vector_angle(u, v)
    for name, got in (("angle(p, q)", got_pq), ("angle(u, v)", got_uv)):
        if abs(got - half) > tol:
            raise ToleranceNotMet(f"{name} = {got!r}, wanted {half!r} +/- {tol}")
    return HalfAngleTargets(
        q=q,
        v=v,
        alpha_n=alpha,
        achieved_angle_pq=got_pq,
        achieved_angle_uv=got_uv,
        tolerance=tol,
        q_side=q_side,
        v_side=v_side,
        q_at_endpoint=q_end,
        v_at_endpoint=v_end,
        extension=ext,
    )
