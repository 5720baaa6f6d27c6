"""Brute-force maximisation of the spread cosine, independent of the closed form.

Two searches are provided: exhaustive enumeration of the lattice points of
the simplex with denominator ``k`` and uniform random sampling. Neither
consults the closed-form bound except to fill in the ``gap`` field of the
report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import BadDimension, TooLarge
from .simplex_core import SimplexPoint, make_simplex_point
from .spread import min_angle_bound, spread_cosines

MAX_ENUMERATION = 10**8
_CHUNK = 1 << 16


@dataclass(frozen=True)
class GridSpec:
    n: int
    k: int
    exclude_uniform_eps: float = 1e-12

    def __post_init__(self):
        if self.n < 3:
            raise BadDimension(f"n must be at least 3, got {self.n}")
        if self.k < self.n:
            raise ValueError(f"lattice resolution k={self.k} must be at least n={self.n}")

    @property
    def size(self) -> int:
        return math.comb(self.k + self.n - 1, self.n - 1)


@dataclass(frozen=True, eq=False)
class OracleReport:
    n: int
    best_cosine: float
    best_point: SimplexPoint
    points_evaluated: int
    closed_form_bound: float
    gap: float


def compositions(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """All ``n``-part compositions of ``k`` with nonnegative parts, in colex order."""
    if n == 1:
        yield (k,)
        return
    for last in range(k + 1):
        for head in compositions(k - last, n - 1):
            yield head + (last,)


def _chunks(k: int, n: int) -> Iterator[np.ndarray]:
    buf = []
    for c in compositions(k, n):
        buf.append(c)
        if len(buf) == _CHUNK:
            yield np.array(buf, dtype=np.int64)
            buf = []
    if buf:
        yield np.array(buf, dtype=np.int64)


class _Best:
    """Running maximum with a lexicographically-smallest tie-break.

    Combining is associative and commutative, so the result does not depend
    on how the candidates were partitioned.
    """

    def __init__(self):
        self.cosine = -math.inf
        self.key = None
        self.point = None

    def offer(self, cosines: np.ndarray, keys: np.ndarray, points: np.ndarray) -> None:
        valid = ~np.isnan(cosines)
        if not valid.any():
            return
        top = np.max(cosines[valid])
        rows = np.flatnonzero(valid & (cosines == top))
        # lexsort sorts by last key first, so feed the columns reversed.
        r = rows[np.lexsort(keys[rows].T[::-1])[0]]
        key = tuple(keys[r].tolist())
        if top > self.cosine or (top == self.cosine and key < self.key):
            self.cosine = float(top)
            self.key = key
            self.point = points[r].copy()


def _report(n: int, best: _Best, evaluated: int) -> OracleReport:
    if best.point is None:
        raise ValueError("every evaluated point was uniform; nothing to report")
    bound = min_angle_bound(n)[0]
    return OracleReport(
        n=n,
        best_cosine=best.cosine,
        best_point=make_simplex_point(best.point),
        points_evaluated=evaluated,
        closed_form_bound=bound,
        gap=bound - best.cosine,
    )


def lattice_cosines(counts: np.ndarray, exclude_uniform_eps: float = 1e-12) -> np.ndarray:
    """Spread cosine of the lattice points ``counts / k``, computed in integers.

    The chord vectors ``max c - c`` and ``c - min c`` are reduced by their
    gcd, so all lattice points on one chord (and all permutations of a
    point) share one primitive pair and get bit-identical cosines. The only
    rounding is in the final square root and division. Uniform rows are
    ``nan``.
    """
    C = np.atleast_2d(np.asarray(counts, dtype=np.int64))
    k = C.sum(axis=1)
    n = C.shape[1]
    s = np.sort(C, axis=1)
    above = s[:, -1:] - s
    below = s - s[:, :1]
    above //= np.maximum(np.gcd.reduce(above, axis=1), 1)[:, None]
    below //= np.maximum(np.gcd.reduce(below, axis=1), 1)[:, None]
    num = np.einsum("ij,ij->i", above, below).astype(np.float64)
    aa = np.einsum("ij,ij->i", above, above).astype(np.float64)
    bb = np.einsum("ij,ij->i", below, below).astype(np.float64)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.clip(num / np.sqrt(aa * bb), -1.0, 1.0)
    dist = np.max(np.abs(C / k[:, None] - 1.0 / n), axis=1)
    out[(dist <= exclude_uniform_eps) | (aa == 0)] = np.nan
    return out


def grid_maximize(spec: GridSpec) -> OracleReport:
    """Maximise the spread cosine over every lattice point ``c / k`` of the simplex.

    Ties (exact, see :func:`lattice_cosines`) go to the lexicographically
    smallest point.
    """
    if spec.size > MAX_ENUMERATION:
        raise TooLarge(f"{spec.size} lattice points exceed the guard of {MAX_ENUMERATION}")
    best = _Best()
    evaluated = 0
    for counts in _chunks(spec.k, spec.n):
        cos = lattice_cosines(counts, spec.exclude_uniform_eps)
        evaluated += int(np.count_nonzero(~np.isnan(cos)))
        best.offer(cos, counts, counts / spec.k)
    return _report(spec.n, best, evaluated)


def sample_simplex(n: int, samples: int, seed: int) -> np.ndarray:
    """Uniform draws from the simplex via normalised exponential spacings.

    The exponentials come from a Philox 4x64 counter-based generator keyed by
    ``seed``, so draws are reproducible across platforms.
    """
    rng = np.random.Generator(np.random.Philox(seed))
    e = rng.standard_exponential((samples, n))
    return e / e.sum(axis=1, keepdims=True)


def random_maximize(n: int, samples: int, seed: int) -> OracleReport:
    if n < 3:
        raise BadDimension(f"n must be at least 3, got {n}")
    if samples < 1:
        raise ValueError("samples must be positive")
    best = _Best()
    evaluated = 0
    done = 0
    # Chunks are consecutive slices of the stream sample_simplex draws from.
    rng = np.random.Generator(np.random.Philox(seed))
    while done < samples:
        m = min(_CHUNK, samples - done)
        e = rng.standard_exponential((m, n))
        P = e / e.sum(axis=1, keepdims=True)
        cos = spread_cosines(P)
        evaluated += int(np.count_nonzero(~np.isnan(cos)))
        best.offer(cos, P, P)
        done += m
    return _report(n, best, evaluated)
