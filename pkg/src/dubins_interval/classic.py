"""Classical Dubins paths between two fully specified poses."""
from __future__ import annotations

import math
from typing import Optional

import numpy as np

from . import _kernels as K
from .geometry import InvalidArgumentError, Pose, frame_for
from .paths import Case, SolvedPath, path_from_row

# strict margin by which a middle arc of LRL / RLR must exceed pi
MAJOR_GUARD = 1e-9

_CODES = {w: i for i, w in enumerate(K.WORDS)}


def _check_rho(rho: float) -> None:
    if not (math.isfinite(rho) and rho > 0):
        raise InvalidArgumentError("rho must be positive")


def _canonical(start: Pose, end: Pose, rho: float):
    tf, d = frame_for(start.point, end.point, rho)
    return d, K.wrap(start.theta - tf.rotation), K.wrap(end.theta - tf.rotation)


def _to_path(code, m0, m1, m2, start: Pose, end: Pose, rho: float) -> SolvedPath:
    row = np.zeros(K.NCOL)
    row[K.C_CASE] = K.K_CLASSIC
    row[K.C_WORD] = code
    total = 0.0
    for i, (kind, m) in enumerate(zip(K.WORDS[code], (m0, m1, m2))):
        row[K.C_M0 + i] = m * rho if kind == "S" else m
        total += m * rho
    row[K.C_DEP] = start.theta
    row[K.C_ARR] = end.theta
    row[K.C_LEN] = total
    return path_from_row(row, rho)


def solve_word(start: Pose, end: Pose, rho: float, word: str,
               major_only: bool = True) -> Optional[SolvedPath]:
    """Path of the given three-segment word, or None if the word cannot connect.

    For LRL and RLR both middle-circle placements are tried and the shorter
    is returned.  With ``major_only`` (the default) placements whose middle
    arc is at most half a circle are discarded, since they are never
    shortest; pass ``major_only=False`` to see them anyway.
    """
    _check_rho(rho)
    if word not in K.WORDS[K.W_LSL:]:
        raise InvalidArgumentError(f"word must be one of LSL RSR LSR RSL LRL RLR, got {word!r}")
    code = _CODES[word]
    d, a, b = _canonical(start, end, rho)
    ok, m0, m1, m2 = K.word_path(code, d, a, b, major_only, MAJOR_GUARD)
    if not ok:
        return None
    return _to_path(code, m0, m1, m2, start, end, rho)


def solve_classic(start: Pose, end: Pose, rho: float) -> SolvedPath:
    """Shortest bounded-curvature path from ``start`` to ``end``.

    Ties within 1e-12 go to the first word in the order
    LSL, RSR, LSR, RSL, LRL, RLR.
    """
    _check_rho(rho)
    d, a, b = _canonical(start, end, rho)
    code, m0, m1, m2, _ = K.classic(d, a, b, MAJOR_GUARD)
    return _to_path(code, m0, m1, m2, start, end, rho)


def classic_length(start: Pose, end: Pose, rho: float) -> float:
    return solve_classic(start, end, rho).length


__all__ = ["solve_word", "solve_classic", "classic_length", "Case"]
