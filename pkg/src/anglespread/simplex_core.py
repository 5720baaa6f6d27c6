"""Validated points of the probability simplex and small vector helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import (
    BadSum,
    DimensionMismatch,
    EmptyInput,
    NegativeCoordinate,
    ZeroVector,
)

SUM_TOL = 1e-9
NEG_TOL = 1e-12
UNIFORM_EPS = 1e-10


@dataclass(frozen=True, eq=False)
class SimplexPoint:
    """A point of the probability simplex.

    Build instances with :func:`make_simplex_point`; the constructor does no
    validation. ``coords`` is a read-only float64 array.
    """

    coords: np.ndarray

    @property
    def n(self) -> int:
        return int(self.coords.shape[0])

    def __len__(self) -> int:
        return self.n

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.coords
        return self.coords.astype(dtype)

    def tolist(self) -> list[float]:
        return [float(c) for c in self.coords]

    def __repr__(self) -> str:
        return f"SimplexPoint({self.tolist()!r})"


def make_simplex_point(raw: Sequence[float] | np.ndarray) -> SimplexPoint:
    """Validate ``raw`` as a member of the simplex.

    Coordinates in ``[-NEG_TOL, 0)`` are clamped to zero, after which the
    vector is divided by its new total. Anything more negative raises
    :class:`NegativeCoordinate`; a sum further than ``SUM_TOL`` from one
    raises :class:`BadSum`.
    """
    arr = np.array(raw, dtype=np.float64).reshape(-1)
    if arr.size == 0:
        raise EmptyInput("simplex point needs at least one coordinate")
    if not np.all(np.isfinite(arr)):
        raise BadSum("coordinates must be finite")
    worst = float(arr.min())
    if worst < -NEG_TOL:
        i = int(arr.argmin())
        raise NegativeCoordinate(f"coordinate {i} is {worst!r} < -{NEG_TOL}")
    total = math.fsum(arr)
    if abs(total - 1.0) > SUM_TOL:
        raise BadSum(f"coordinates sum to {total!r}, not 1 (tolerance {SUM_TOL})")
    if worst < 0.0:
        arr = np.where(arr < 0.0, 0.0, arr)
        arr = arr / math.fsum(arr)
    arr.setflags(write=False)
    return SimplexPoint(arr)


@dataclass(frozen=True, eq=False)
class SimplexContext:
    n: int
    u: SimplexPoint
    ones: np.ndarray


@lru_cache(maxsize=256)
def simplex_context(n: int) -> SimplexContext:
    """Uniform point and all-ones vector for dimension ``n`` (cached)."""
    if n < 1:
        raise ValueError("n must be positive")
    u = np.full(n, 1.0 / n)
    u.setflags(write=False)
    ones = np.ones(n)
    ones.setflags(write=False)
    return SimplexContext(n=n, u=SimplexPoint(u), ones=ones)


def uniform_point(n: int) -> SimplexPoint:
    return simplex_context(n).u


def vector_angle(x, y) -> float:
    """Angle in radians between two nonzero vectors, measured at the origin."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise DimensionMismatch(f"shapes {x.shape} and {y.shape} differ")
    nx = float(np.linalg.norm(x))
    ny = float(np.linalg.norm(y))
    if nx == 0.0 or ny == 0.0:
        raise ZeroVector("angle undefined for a zero vector")
    c = float(np.dot(x, y)) / (nx * ny)
    return math.acos(min(1.0, max(-1.0, c)))


def is_uniform(p: SimplexPoint, eps: float = UNIFORM_EPS) -> bool:
    coords = np.asarray(p, dtype=np.float64)
    return float(np.max(np.abs(coords - 1.0 / coords.shape[0]))) <= eps
