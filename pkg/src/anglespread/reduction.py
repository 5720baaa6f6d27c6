"""Reduction of the spread maximisation to a one-variable problem.

The chain is: averaging the middle coordinates never hurts (both the
numerator and the denominator of the cosine quotient improve), so the middle
block can be taken constant; a point can be slid along its chord until its
smallest coordinate is zero; what remains is the scalar function ``Q(y)`` of
the largest coordinate ``y`` on ``[1/(n-1), 1]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BadDimension, DegenerateDenominator, InfeasiblePair, OutOfDomain

_BOX_TOL = 1e-12
_SUM_TOL = 1e-10
_DOMAIN_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class AveragingProblem:
    gamma: float
    x: np.ndarray = field(repr=False)

    @property
    def m(self) -> int:
        return int(self.x.shape[0])


def average_vector(prob: AveragingProblem) -> tuple[np.ndarray, float, float]:
    """Replace ``x`` by its mean vector and report ``h`` before and after.

    ``h(w) = |w - gamma * 1|^2``. By convexity of the square the averaged
    vector never has a larger ``h`` than ``x``.
    """
    x = np.asarray(prob.x, dtype=np.float64)
    if x.size == 0:
        raise ValueError("averaging needs m >= 1")
    eta = math.fsum(x) / x.size
    y = np.full(x.size, eta)
    h_x = float(np.sum((x - prob.gamma) ** 2))
    h_y = float(np.sum((y - prob.gamma) ** 2))
    return y, h_x, h_y


@dataclass(frozen=True, eq=False)
class ReducedProfile:
    """A simplex point written as (smallest, middle block, largest).

    ``x`` is the smallest coordinate, ``y`` the largest and ``z`` the
    remaining ``n - 2`` coordinates, each in ``[x, y]``.
    """

    n: int
    x: float
    y: float
    z: np.ndarray

    @property
    def zeta(self) -> float:
        return (1.0 - self.x - self.y) / (self.n - 2)

    def assembled(self) -> np.ndarray:
        return np.concatenate(([self.x], self.z, [self.y]))


def make_profile(n: int, x: float, y: float, z: Sequence[float]) -> ReducedProfile:
    if n < 3:
        raise BadDimension(f"n must be at least 3, got {n}")
    z = np.array(z, dtype=np.float64).reshape(-1)
    if z.size != n - 2:
        raise ValueError(f"middle block must have {n - 2} entries, got {z.size}")
    if not (x < 1.0 / n < y):
        raise InfeasiblePair(f"need x < 1/n < y, got x={x!r}, y={y!r}")
    if np.any(z < x - _BOX_TOL) or np.any(z > y + _BOX_TOL):
        raise InfeasiblePair("middle block leaves [x, y]")
    if abs(math.fsum(z) - (1.0 - x - y)) > _SUM_TOL:
        raise InfeasiblePair("middle block does not sum to 1 - x - y")
    z.setflags(write=False)
    return ReducedProfile(n=n, x=float(x), y=float(y), z=z)


def profile_from_point(p) -> ReducedProfile:
    """Split a simplex point into a profile (order of the middle block kept)."""
    c = np.asarray(p, dtype=np.float64)
    i, j = int(np.argmin(c)), int(np.argmax(c))
    rest = np.delete(c, [i, j])
    return make_profile(c.size, float(c[i]), float(c[j]), rest)


def cos_quotient_reduced(profile: ReducedProfile) -> float:
    n, x, y, z = profile.n, profile.x, profile.y, profile.z
    zz = float(np.dot(z, z))
    num = float(np.sum((y - z) * (z - x)))
    ra = x * x + zz + (n + 1) * y * y - 2.0 * y
    rb = (n + 1) * x * x - 2.0 * x + zz + y * y
    if ra <= 0.0 or rb <= 0.0:
        raise DegenerateDenominator(f"radicands {ra!r}, {rb!r} must be positive")
    return num / (math.sqrt(ra) * math.sqrt(rb))


def optimal_middle_block(n: int, x: float, y: float) -> tuple[np.ndarray, float]:
    """Constant middle block ``zeta * 1`` maximising the reduced quotient for fixed ``x, y``."""
    if n < 3:
        raise BadDimension(f"n must be at least 3, got {n}")
    if not (0.0 <= x < 1.0 / n < y <= 1.0):
        raise InfeasiblePair(f"need 0 <= x < 1/n < y <= 1, got x={x!r}, y={y!r}")
    zeta = (1.0 - x - y) / (n - 2)
    if zeta < x - _BOX_TOL or zeta > y + _BOX_TOL:
        raise InfeasiblePair(f"zeta={zeta!r} outside [{x!r}, {y!r}]")
    z = np.full(n - 2, zeta)
    return z, (1.0 - x - y) ** 2 / (n - 2)


def sample_middle_blocks(n: int, x: float, y: float, count: int, seed: int) -> np.ndarray:
    """Random feasible middle blocks for fixed ``x, y`` by rejection sampling.

    Draws ``x + (1 - x - y - (n-2) x) * Dirichlet(1, ..., 1)``, which meets
    the sum and lower-box constraints, and discards draws exceeding ``y``.
    Returns a ``(count, n-2)`` array.
    """
    if n < 3:
        raise BadDimension(f"n must be at least 3, got {n}")
    m = n - 2
    slack = 1.0 - x - y - m * x
    if slack < 0.0 or 1.0 - x - y > m * y + _BOX_TOL:
        raise InfeasiblePair("no feasible middle block")
    rng = np.random.default_rng(seed)
    out = []
    have = 0
    while have < count:
        draw = x + slack * rng.dirichlet(np.ones(m), size=max(2 * (count - have), 64))
        draw = draw[np.all(draw <= y, axis=1)]
        out.append(draw)
        have += draw.shape[0]
    return np.concatenate(out)[:count]


def q_value(n: int, y):
    """``Q(y)``: the squared spread cosine of ``(0, zeta, ..., zeta, y)``. Vectorised in ``y``."""
    y = np.asarray(y, dtype=np.float64)
    num = ((n - 1) * y - 1.0) ** 2 * (1.0 - y) ** 2
    d1 = (1.0 - y) ** 2 + (n - 2) * (n + 1) * y * y - 2.0 * (n - 2) * y
    d2 = (1.0 - y) ** 2 + (n - 2) * y * y
    out = num / (d1 * d2)
    return float(out) if out.ndim == 0 else out


def q_prime(n: int, y):
    """Derivative of ``Q`` in factored form. Vectorised in ``y``."""
    y = np.asarray(y, dtype=np.float64)
    num = (
        2.0
        * (n - 2)
        * ((n - 1) ** 2 * y * y - n * y + 1.0)
        * ((n - 1) * y - 1.0)
        * (n * y - 2.0)
        * (y - 1.0)
        * y
    )
    d1 = (n * n - n - 1) * y * y + 2.0 * (1 - n) * y + 1.0
    d2 = (n - 1) * y * y - 2.0 * y + 1.0
    out = num / (d1 * d1 * d2 * d2)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class QEval:
    n: int
    y: float
    q_value: float
    q_prime: float


def q_domain(n: int) -> tuple[float, float]:
    return 1.0 / (n - 1), 1.0


def q_eval(n: int, y: float) -> QEval:
    if n < 3:
        raise BadDimension(f"n must be at least 3, got {n}")
    lo, hi = q_domain(n)
    if not (lo - _DOMAIN_TOL <= y <= hi + _DOMAIN_TOL):
        raise OutOfDomain(f"y={y!r} outside [{lo!r}, {hi!r}]")
    return QEval(n=n, y=float(y), q_value=q_value(n, y), q_prime=q_prime(n, y))


@dataclass(frozen=True)
class QRoots:
    n: int
    real_roots: tuple[float, ...]
    complex_pair_discriminant: float
    complex_roots: tuple[complex, complex]
    maximizer: float
    maximum: float


def q_roots(n: int) -> QRoots:
    """Roots of ``Q'``: four real ones and a complex conjugate pair.

    On ``[1/(n-1), 1]`` the candidates are the two endpoints (where ``Q``
    vanishes) and ``2/n``, which is therefore the maximiser.
    """
    if n < 3:
        raise BadDimension(f"n must be at least 3, got {n}")
    disc = -float((3 * n - 2) * (n - 2))
    root = complex(0.0, math.sqrt(-disc))
    scale = 2.0 * (n - 1) ** 2
    pair = ((n + root) / scale, (n - root) / scale)
    return QRoots(
        n=n,
        real_roots=(0.0, 1.0 / (n - 1), 2.0 / n, 1.0),
        complex_pair_discriminant=disc,
        complex_roots=pair,
        maximizer=2.0 / n,
        maximum=((n - 2) / (n + 2)) ** 2,
    )


def check_denominators(n_max: int = 100) -> None:
    """Assert that neither factor of Q's denominator vanishes on the closed domain."""
    for n in range(3, n_max + 1):
        for y in q_domain(n):
            d1 = (1.0 - y) ** 2 + (n - 2) * (n + 1) * y * y - 2.0 * (n - 2) * y
            d2 = (1.0 - y) ** 2 + (n - 2) * y * y
            if not (d1 > 0.0 and d2 > 0.0):
                raise AssertionError(f"Q denominator vanishes at n={n}, y={y}")


check_denominators()
