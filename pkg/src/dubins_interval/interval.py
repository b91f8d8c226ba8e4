"""Shortest paths with departure and arrival headings confined to intervals.

A shortest path either leaves a heading constraint inactive (heading
strictly inside its interval) or pins the heading to an interval endpoint.
Each active/inactive combination admits only a handful of path shapes, so
the optimum is found by constructing every admissible shape and keeping
the shortest:

=============  ==========================================
case           shapes (arcs marked * turn more than pi)
=============  ==========================================
free/free      S, L*, R*, L*R*, R*L* (equal arcs)
max/max        LSR
max/min        LSL, LR*L
min/min        RSL
min/max        RSR, RL*R
max/free       LS, LR*
min/free       RS, RL*
free/max       SR, L*R
free/min       SL, R*L
=============  ==========================================

Degenerate shapes (zero-length segments) fall out of the constructions.
With a fixed departure heading the table collapses to ``fixed/free``
(LS, RS, LR*, RL*), ``fixed/max`` (LSR, RSR, RL*R) and ``fixed/min``
(RSL, LSL, LR*L).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from . import _kernels as K
from .classic import MAJOR_GUARD
from .geometry import (
    AngleInterval,
    InvalidArgumentError,
    IntervalInstance,
    Pose,
    Point,
    angle_gap,
    canonicalize,
    frame_for,
    interval_contains,
    normalize_angle,
)
from .paths import (
    CASE_WORDS,
    Case,
    SolvedPath,
    inflexion_points,
    is_legal_word,
    major_arc_slots,
    path_from_row,
    walk,
)

DEFAULT_TOL = 1e-9


def _candidates(inst: IntervalInstance, mask: int, fixed: bool = False,
                tol: float = DEFAULT_TOL) -> List[SolvedPath]:
    subs, tf = canonicalize(inst)
    buf = np.empty((K.MAX_ROWS, K.NCOL))
    row = np.empty(K.NCOL)
    t1, t2 = inst.theta1, inst.theta2
    out = []
    for sub in subs:
        n = K.generate(sub.p2[0], sub.theta1.lo, sub.theta1.hi, sub.theta2.lo, sub.theta2.hi,
                       mask, fixed, tol, MAJOR_GUARD, buf)
        for i in range(n):
            K.map_row(buf[i], tf.rotation, inst.rho, t1.lo, t1.hi, t2.lo, t2.hi, row)
            out.append(path_from_row(row, inst.rho))
    return out


def candidates_free_free(inst: IntervalInstance, tol: float = DEFAULT_TOL) -> List[SolvedPath]:
    """Straight line, single major arcs and equal major-arc pairs that fit both intervals."""
    return _candidates(inst, K.G_FREE_FREE, tol=tol)


def candidates_pinned_pinned(inst: IntervalInstance, tol: float = DEFAULT_TOL) -> List[SolvedPath]:
    """Three-segment words with both headings on interval endpoints."""
    return _candidates(inst, K.G_PINNED_PINNED, tol=tol)


def candidates_pinned_free(inst: IntervalInstance, tol: float = DEFAULT_TOL) -> List[SolvedPath]:
    """LS / LR* from the upper departure bound and RS / RL* from the lower one."""
    return _candidates(inst, K.G_PINNED_FREE, tol=tol)


def candidates_free_pinned(inst: IntervalInstance, tol: float = DEFAULT_TOL,
                           method: str = "reversal") -> List[SolvedPath]:
    """SR / L*R into the upper arrival bound and SL / R*L into the lower one.

    ``method="reversal"`` solves the time-reversed pinned-departure problem
    and flips the result back; ``method="direct"`` builds the shapes
    forwards.  Both must agree; the solver uses the reversal.
    """
    if method == "reversal":
        mask = K.G_FREE_PINNED
    elif method == "direct":
        mask = K.G_FREE_PINNED_DIRECT
    else:
        raise InvalidArgumentError(f"unknown method {method!r}")
    return _candidates(inst, mask, tol=tol)


def all_candidates(inst: IntervalInstance, tol: float = DEFAULT_TOL) -> List[SolvedPath]:
    return _candidates(inst, K.G_INTERVAL, tol=tol)


def _solve(x1, y1, lo1, hi1, x2, y2, lo2, hi2, rho, fixed, tol) -> SolvedPath:
    buf = np.empty((K.MAX_ROWS, K.NCOL))
    out = np.empty(K.NCOL)
    ok = K.solve_one(x1, y1, lo1, hi1, x2, y2, lo2, hi2, rho, fixed, tol, MAJOR_GUARD, buf, out)
    if not ok:  # pragma: no cover - the max/max and min/min corners always connect
        raise RuntimeError("no candidate path survived")
    return path_from_row(out, rho)


def solve_interval(inst: IntervalInstance, tol: float = DEFAULT_TOL) -> SolvedPath:
    """Shortest path whose departure heading lies in ``theta1`` and arrival in ``theta2``."""
    if not isinstance(inst, IntervalInstance):
        raise InvalidArgumentError("expected an IntervalInstance")
    return _solve(inst.p1[0], inst.p1[1], inst.theta1.lo, inst.theta1.hi,
                  inst.p2[0], inst.p2[1], inst.theta2.lo, inst.theta2.hi,
                  inst.rho, False, tol)


def solve_fixed_departure(start: Pose, p2: Point, theta2: AngleInterval, rho: float,
                          tol: float = DEFAULT_TOL) -> SolvedPath:
    """Shortest path leaving ``start`` as given and arriving with a heading in ``theta2``."""
    if not (math.isfinite(rho) and rho > 0):
        raise InvalidArgumentError("rho must be positive")
    return _solve(start.x, start.y, start.theta, start.theta, float(p2[0]), float(p2[1]),
                  theta2.lo, theta2.hi, rho, True, tol)


def fixed_departure_instance(start: Pose, p2: Point, theta2: AngleInterval,
                             rho: float) -> IntervalInstance:
    return IntervalInstance(start.point, AngleInterval.point(start.theta), p2, theta2, rho)


# ---------------------------------------------------------------------------
# batch
# ---------------------------------------------------------------------------

@dataclass
class BatchResult:
    """Column-wise solutions; row ``i`` belongs to instance ``i``."""

    length: np.ndarray
    depart: np.ndarray
    arrive: np.ndarray
    word: np.ndarray  # index into WORDS
    case: np.ndarray  # index into CASES
    magnitudes: np.ndarray  # (n, 3), unused slots zero
    rho: np.ndarray

    def path(self, i: int) -> SolvedPath:
        row = np.empty(K.NCOL)
        row[K.C_CASE] = self.case[i]
        row[K.C_WORD] = self.word[i]
        row[K.C_M0:K.C_M2 + 1] = self.magnitudes[i]
        row[K.C_DEP] = self.depart[i]
        row[K.C_ARR] = self.arrive[i]
        row[K.C_LEN] = self.length[i]
        return path_from_row(row, float(self.rho[i]))

    def __len__(self):
        return self.length.shape[0]


def solve_interval_batch(p1, theta1, p2, theta2, rho, fixed: bool = False,
                         tol: float = DEFAULT_TOL) -> BatchResult:
    """Solve many instances in one compiled loop.

    ``p1``, ``p2``, ``theta1`` and ``theta2`` are ``(n, 2)`` arrays (interval
    columns are ``lo, hi``), ``rho`` is ``(n,)``.  With ``fixed=True``
    ``theta1`` may instead be ``(n,)`` departure headings.
    """
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    rho = np.broadcast_to(np.asarray(rho, dtype=float), (p1.shape[0],))
    t1 = np.asarray(theta1, dtype=float)
    if t1.ndim == 1:
        if not fixed:
            raise InvalidArgumentError("theta1 must be (n, 2) intervals")
        t1 = np.column_stack([t1 % K.TWO_PI, t1 % K.TWO_PI])
    t2 = np.asarray(theta2, dtype=float)
    for name, arr in (("p1", p1), ("p2", p2), ("theta1", t1), ("theta2", t2)):
        if arr.ndim != 2 or arr.shape != (p1.shape[0], 2) or not np.isfinite(arr).all():
            raise InvalidArgumentError(f"{name} must be a finite (n, 2) array")
    if not (np.isfinite(rho).all() and (rho > 0).all()):
        raise InvalidArgumentError("rho must be positive")
    for name, arr in (("theta1", t1), ("theta2", t2)):
        if not ((arr[:, 0] >= 0) & (arr[:, 0] <= arr[:, 1]) & (arr[:, 1] <= K.TWO_PI)).all():
            raise InvalidArgumentError(f"{name} intervals must satisfy 0 <= lo <= hi <= 2*pi")
    out = np.zeros((p1.shape[0], K.NCOL))
    ok = K.solve_batch(
        np.ascontiguousarray(p1[:, 0]), np.ascontiguousarray(p1[:, 1]),
        np.ascontiguousarray(t1[:, 0]), np.ascontiguousarray(t1[:, 1]),
        np.ascontiguousarray(p2[:, 0]), np.ascontiguousarray(p2[:, 1]),
        np.ascontiguousarray(t2[:, 0]), np.ascontiguousarray(t2[:, 1]),
        np.ascontiguousarray(rho), fixed, tol, MAJOR_GUARD, out,
    )
    if not ok.all():  # pragma: no cover
        raise RuntimeError(f"no candidate for instances {np.flatnonzero(~ok)[:10]}")
    return BatchResult(
        length=out[:, K.C_LEN],
        depart=out[:, K.C_DEP],
        arrive=out[:, K.C_ARR],
        word=out[:, K.C_WORD].astype(np.int64),
        case=out[:, K.C_CASE].astype(np.int64),
        magnitudes=out[:, K.C_M0:K.C_M2 + 1].copy(),
        rho=np.array(rho),
    )


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Tolerances:
    closure: float = 1e-9  # relative to max(1, distance)
    membership: float = 1e-9
    major_arc: float = 1e-9
    collinear: float = 1e-9  # relative to max(1, distance)
    length: float = 1e-12  # relative


@dataclass
class ValidationReport:
    checks: Dict[str, bool] = field(default_factory=dict)
    messages: Dict[str, str] = field(default_factory=dict)

    def record(self, name: str, passed: bool, message: str = "") -> None:
        self.checks[name] = bool(passed)
        if not passed and message:
            self.messages[name] = message

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> List[str]:
        return [k for k, v in self.checks.items() if not v]


def validate_path(path: SolvedPath, inst: IntervalInstance,
                  tol: Tolerances = Tolerances()) -> ValidationReport:
    """Check a path against an instance; failures are reported, never raised."""
    rep = ValidationReport()
    d = inst.distance
    scale = max(1.0, d)

    legal = (is_legal_word(path.word) and len(path.segments) == len(path.word) <= 3
             and "".join(s.kind for s in path.segments) == path.word
             and all(s.magnitude >= 0 for s in path.segments))
    rep.record("word", legal, f"illegal word or segments {path.word!r}")
    rep.record("case_word", path.word in CASE_WORDS.get(path.case, ()),
               f"word {path.word} not admissible for case {path.case.value}")
    if not legal:
        return rep

    start = Pose(inst.p1[0], inst.p1[1], path.depart)
    end = list(walk(path, start))[-1]
    gap = math.hypot(end.x - inst.p2[0], end.y - inst.p2[1])
    hgap = angle_gap(end.theta, path.arrive)
    rep.record("closure", gap <= tol.closure * scale and hgap <= tol.closure * scale,
               f"endpoint off by {gap:.3e}, heading off by {hgap:.3e}")

    seg_sum = path.segment_length_sum()
    rep.record("length", abs(seg_sum - path.length) <= tol.length * max(1.0, path.length),
               f"length {path.length} != segment sum {seg_sum}")

    m = tol.membership
    rep.record("depart_in_interval", interval_contains(path.depart, inst.theta1, m),
               f"depart {path.depart} outside [{inst.theta1.lo}, {inst.theta1.hi}]")
    rep.record("arrive_in_interval", interval_contains(path.arrive, inst.theta2, m),
               f"arrive {path.arrive} outside [{inst.theta2.lo}, {inst.theta2.hi}]")

    # Intervals are cut at the heading pointing from p1 to p2 when they are
    # solved in the canonical frame, so that heading is also a valid pin.
    cut = normalize_angle(frame_for(inst.p1, inst.p2, inst.rho)[0].rotation)
    pins_ok = True
    for role, heading, iv in ((path.case.departure, path.depart, inst.theta1),
                              (path.case.arrival, path.arrive, inst.theta2)):
        if role == "fixed":
            pins_ok &= angle_gap(heading, iv.lo) <= m
        elif role in ("min", "max"):
            edge = iv.lo if role == "min" else iv.hi
            splits = iv.width >= K.TWO_PI or iv.lo < cut < iv.hi
            at_cut = splits and angle_gap(heading, cut) <= m
            pins_ok &= angle_gap(heading, edge) <= m or at_cut
    rep.record("pinned", pins_ok, "pinned heading not on its interval endpoint")

    slots = major_arc_slots(path.case, path.word)
    small = [i for i in slots if not path.segments[i].magnitude > math.pi + tol.major_arc]
    rep.record("major_arcs", not small, f"segments {small} turn at most pi")

    if path.case is Case.FREE_FREE and path.word in ("LR", "RL"):
        a, b = path.segments[0].magnitude, path.segments[1].magnitude
        junction = inflexion_points(path, start)[0]
        ux, uy = inst.p2[0] - inst.p1[0], inst.p2[1] - inst.p1[1]
        off = abs(ux * (junction.y - inst.p1[1]) - uy * (junction.x - inst.p1[0])) / max(d, 1e-300)
        rep.record("equal_arcs", abs(a - b) <= tol.major_arc, f"arcs {a} and {b} differ")
        rep.record("same_heading", angle_gap(path.depart, path.arrive) <= m,
                   "departure and arrival headings differ")
        rep.record("collinear", off <= tol.collinear * scale,
                   f"junction {off:.3e} off the line through the targets")
    return rep
