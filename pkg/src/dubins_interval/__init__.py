"""Shortest bounded-curvature paths with interval heading constraints."""
from .classic import solve_classic, solve_word
from .geometry import (
    AngleInterval,
    FrameTransform,
    IntervalInstance,
    InvalidArgumentError,
    Pose,
    canonicalize,
    interval_contains,
    normalize_angle,
    split_wrapping,
)
from .interval import (
    BatchResult,
    Tolerances,
    ValidationReport,
    candidates_free_free,
    candidates_free_pinned,
    candidates_pinned_free,
    candidates_pinned_pinned,
    solve_fixed_departure,
    solve_interval,
    solve_interval_batch,
    validate_path,
)
from .oracle import OracleResult, oracle_grid, oracle_grid_nested
from .paths import Case, Segment, SolvedPath

__all__ = [
    "AngleInterval",
    "BatchResult",
    "Case",
    "FrameTransform",
    "IntervalInstance",
    "InvalidArgumentError",
    "OracleResult",
    "Pose",
    "Segment",
    "SolvedPath",
    "Tolerances",
    "ValidationReport",
    "candidates_free_free",
    "candidates_free_pinned",
    "candidates_pinned_free",
    "candidates_pinned_pinned",
    "canonicalize",
    "interval_contains",
    "normalize_angle",
    "oracle_grid",
    "oracle_grid_nested",
    "solve_classic",
    "solve_fixed_departure",
    "solve_interval",
    "solve_interval_batch",
    "solve_word",
    "split_wrapping",
    "validate_path",
]

__version__ = "0.1.0"
