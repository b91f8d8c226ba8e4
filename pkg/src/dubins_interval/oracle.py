"""Brute-force reference: classical paths over a grid of heading pairs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable

import numpy as np

from . import _kernels as K
from .classic import MAJOR_GUARD
from .geometry import AngleInterval, InvalidArgumentError, IntervalInstance, frame_for


@dataclass(frozen=True)
class OracleResult:
    length: float
    argmin_depart: float
    argmin_arrive: float
    samples_per_axis: int


def _check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1 or n & (n - 1):
        raise InvalidArgumentError(f"grid size must be a positive power of two, got {n!r}")


def grid_headings(interval: AngleInterval, n: int) -> np.ndarray:
    """``n + 1`` evenly spaced headings including both ends; one if the interval is a point.

    Positions are ``lo + width * (i / n)``; with ``n`` a power of two the
    fraction is exact, so the grid for ``n`` is bit-for-bit a subset of the
    grid for ``2 n``.
    """
    if interval.width == 0:
        return np.array([interval.lo])
    return interval.lo + interval.width * (np.arange(n + 1) / n)


def _lengths(inst: IntervalInstance, deps: np.ndarray, arrs: np.ndarray) -> np.ndarray:
    tf, d = frame_for(inst.p1, inst.p2, inst.rho)
    alphas = (deps - tf.rotation) % K.TWO_PI
    betas = (arrs - tf.rotation) % K.TWO_PI
    out = np.empty((deps.shape[0], arrs.shape[0]))
    K.classic_grid(d, alphas, betas, MAJOR_GUARD, out)
    return out * inst.rho


def _best(table: np.ndarray, deps, arrs, n) -> OracleResult:
    i, j = np.unravel_index(np.argmin(table), table.shape)
    return OracleResult(float(table[i, j]), float(deps[i]), float(arrs[j]), n)


def oracle_grid(inst: IntervalInstance, n: int) -> OracleResult:
    """Minimum classical length over the inclusive ``(n+1) x (n+1)`` heading grid.

    Every grid point is a feasible path, so the result never undercuts the
    true optimum.
    """
    if not isinstance(inst, IntervalInstance):
        raise InvalidArgumentError("expected an IntervalInstance")
    _check_n(n)
    deps = grid_headings(inst.theta1, n)
    arrs = grid_headings(inst.theta2, n)
    return _best(_lengths(inst, deps, arrs), deps, arrs, n)


def oracle_grid_nested(inst: IntervalInstance, ns: Iterable[int]) -> Dict[int, OracleResult]:
    """``oracle_grid`` for several sizes from a single evaluation on the finest grid."""
    ns = sorted(set(ns))
    for n in ns:
        _check_n(n)
    top = ns[-1]
    deps = grid_headings(inst.theta1, top)
    arrs = grid_headings(inst.theta2, top)
    table = _lengths(inst, deps, arrs)
    out = {}
    for n in ns:
        k = top // n
        si = slice(None, None, k) if deps.shape[0] > 1 else slice(None)
        sj = slice(None, None, k) if arrs.shape[0] > 1 else slice(None)
        out[n] = _best(table[si, sj], deps[si], arrs[sj], n)
    return out
