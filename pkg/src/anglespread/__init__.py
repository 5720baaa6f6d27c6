"""Angle spread of maximal chords through the uniform point of the probability simplex."""

from .errors import (
    AngleSpreadError,
    BadDimension,
    BadSum,
    DegenerateDenominator,
    DimensionMismatch,
    EmptyInput,
    InfeasiblePair,
    NegativeCoordinate,
    OutOfDomain,
    ToleranceNotMet,
    TooLarge,
    UniformInput,
    ZeroVector,
)
from .oracle import GridSpec, OracleReport, grid_maximize, random_maximize
from .reduction import (
    AveragingProblem,
    QEval,
    QRoots,
    ReducedProfile,
    average_vector,
    cos_quotient_reduced,
    make_profile,
    optimal_middle_block,
    q_eval,
    q_roots,
)
from .simplex_core import (
    NEG_TOL,
    SUM_TOL,
    UNIFORM_EPS,
    SimplexContext,
    SimplexPoint,
    is_uniform,
    make_simplex_point,
    simplex_context,
    uniform_point,
    vector_angle,
)
from .spread import (
    SegmentExtension,
    SpreadResult,
    cos_spread,
    extend_segment,
    min_angle_bound,
    optimal_pair,
    spread_cosines,
)
from .targets import HalfAngleTargets, half_angle_targets

__version__ = "0.1.0"
