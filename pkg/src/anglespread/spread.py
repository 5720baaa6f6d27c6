"""Maximal chords through the uniform point and the angle spread they subtend."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadDimension, UniformInput
from .simplex_core import (
    UNIFORM_EPS,
    SimplexPoint,
    is_uniform,
    make_simplex_point,
)


@dataclass(frozen=True, eq=False)
class SegmentExtension:
    """The longest segment ``[a, b]`` inside the simplex containing ``u`` and ``p``.

    ``a = u + lambda_minus * (p - u)`` and ``b = u + lambda_plus * (p - u)``.
    ``a`` vanishes at ``idx_max`` and ``b`` vanishes at ``idx_min``.
    """

    p: SimplexPoint
    a: SimplexPoint
    b: SimplexPoint
    lambda_minus: float
    lambda_plus: float
    idx_min: int
    idx_max: int

    @property
    def n(self) -> int:
        return self.p.n


@dataclass(frozen=True, eq=False)
class SpreadResult:
    cosine: float
    angle_radians: float
    extension: SegmentExtension


def extend_segment(p: SimplexPoint, eps: float = UNIFORM_EPS) -> SegmentExtension:
    """Maximal chord of the simplex through ``u`` and ``p``.

    The endpoints come from the coordinate formulas

        a_i = (max p - p_i) / (n max p - 1),   b_i = (p_i - min p) / (1 - n min p)

    rather than from ``u + lambda (p - u)``, which loses all precision when
    ``p`` is close to ``u``. The caller's coordinate order is preserved.
    """
    if is_uniform(p, eps):
        raise UniformInput(f"p is within {eps} of the uniform distribution")
    coords = np.asarray(p, dtype=np.float64)
    idx_min = int(np.argmin(coords))
    idx_max = int(np.argmax(coords))
    pmin = coords[idx_min]
    pmax = coords[idx_max]
    # sum(pmax - p_i) == n*pmax - 1 on the simplex, but is computed without
    # the cancellation and keeps each endpoint summing to one.
    above = pmax - coords
    below = coords - pmin
    da = math.fsum(above)
    db = math.fsum(below)
    a = make_simplex_point(above / da)
    b = make_simplex_point(below / db)
    return SegmentExtension(
        p=p,
        a=a,
        b=b,
        lambda_minus=-1.0 / da,
        lambda_plus=1.0 / db,
        idx_min=idx_min,
        idx_max=idx_max,
    )


def _chord_cosine(a: np.ndarray, b: np.ndarray, order: np.ndarray) -> float:
    # Summing in the sort order of p makes the value exactly invariant under
    # coordinate permutations (ties in p give identical a_i and b_i).
    a = a[order]
    b = b[order]
    c = float(np.dot(a, b)) / (float(np.linalg.norm(a)) * float(np.linalg.norm(b)))
    return min(1.0, max(-1.0, c))


def cos_spread(p: SimplexPoint, eps: float = UNIFORM_EPS) -> SpreadResult:
    """Cosine and angle of the spread ``<a, b> / (|a| |b|)`` for the chord of ``p``."""
    ext = extend_segment(p, eps)
    order = np.argsort(np.asarray(p), kind="stable")
    c = _chord_cosine(np.asarray(ext.a), np.asarray(ext.b), order)
    return SpreadResult(cosine=c, angle_radians=math.acos(c), extension=ext)


def spread_cosines(points: np.ndarray, eps: float = UNIFORM_EPS) -> np.ndarray:
    """Vectorised spread cosine for the rows of ``points``.

    Rows are assumed to already lie in the simplex. Rows within ``eps`` of
    the uniform point give ``nan``. Uses the same chord formulas as
    :func:`cos_spread`; the cosine is scale invariant so the normalising
    denominators are dropped.
    """
    P = np.atleast_2d(np.asarray(points, dtype=np.float64))
    n = P.shape[1]
    s = np.sort(P, axis=1)
    above = s[:, -1:] - s
    below = s - s[:, :1]
    num = np.einsum("ij,ij->i", above, below)
    den = np.linalg.norm(above, axis=1) * np.linalg.norm(below, axis=1)
    uniform = np.max(np.abs(P - 1.0 / n), axis=1) <= eps
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.clip(num / den, -1.0, 1.0)
    out[uniform] = np.nan
    return out


def min_angle_bound(n: int, allow_n2: bool = False) -> tuple[float, float]:
    """Largest achievable spread cosine in dimension ``n`` and the matching angle.

    Returns ``((n-2)/(n+2), arccos((n-2)/(n+2)))``. Dimension 2 is trivial
    (every chord is the whole simplex, angle pi/2) and is only accepted with
    ``allow_n2=True``.
    """
    if n == 2 and allow_n2:
        return 0.0, math.pi / 2
    if n < 3:
        raise BadDimension(f"n must be at least 3, got {n}")
    c = (n - 2) / (n + 2)
    return c, math.acos(c)


def optimal_pair(n: int) -> tuple[SimplexPoint, SimplexPoint, SimplexPoint]:
    """Witnesses ``(a*, b*, p*)`` attaining the bound; ``b*`` and ``p*`` coincide."""
    if n < 3:
        raise BadDimension(f"n must be at least 3, got {n}")
    a = np.ones(n)
    a[0], a[-1] = 2.0, 0.0
    b = a[::-1].copy()
    a_star = make_simplex_point(a / n)
    b_star = make_simplex_point(b / n)
    return a_star, b_star, b_star
