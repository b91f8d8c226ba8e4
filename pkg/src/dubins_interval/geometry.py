"""Angle arithmetic, heading intervals and the canonical solver frame."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

from . import _kernels as K

TWO_PI = 2.0 * math.pi

Point = Tuple[float, float]


class InvalidArgumentError(ValueError):
    """Raised for malformed inputs: non-finite angles, bad radii, bad intervals."""


def normalize_angle(theta: float) -> float:
    """Map ``theta`` onto [0, 2*pi)."""
    if not math.isfinite(theta):
        raise InvalidArgumentError(f"angle must be finite, got {theta!r}")
    r = theta % TWO_PI
    # a tiny negative input can round up to exactly 2*pi
    return 0.0 if r >= TWO_PI else r


def angle_gap(a: float, b: float) -> float:
    """Unsigned angular distance in [0, pi]."""
    g = (a - b) % TWO_PI
    return min(g, TWO_PI - g)


@dataclass(frozen=True)
class Pose:
    x: float
    y: float
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", normalize_angle(self.theta))

    @property
    def point(self) -> Point:
        return (self.x, self.y)

    def reversed(self) -> "Pose":
        """Same place, facing the opposite way."""
        return Pose(self.x, self.y, self.theta + math.pi)


@dataclass(frozen=True)
class AngleInterval:
    """Closed heading interval [lo, hi] inside [0, 2*pi]; never wraps."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvalidArgumentError("interval bounds must be finite")
        if not 0.0 <= self.lo <= self.hi <= TWO_PI:
            raise InvalidArgumentError(
                f"interval must satisfy 0 <= lo <= hi <= 2*pi, got [{self.lo}, {self.hi}]"
            )

    @classmethod
    def full(cls) -> "AngleInterval":
        return cls(0.0, TWO_PI)

    @classmethod
    def point(cls, theta: float) -> "AngleInterval":
        t = normalize_angle(theta)
        return cls(t, t)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, theta: float, tol: float = 1e-9) -> bool:
        return interval_contains(theta, self, tol)

    def intersects(self, other: "AngleInterval", tol: float = 1e-9) -> bool:
        return bool(K._common_heading(self.lo, self.hi, other.lo, other.hi, tol)[0])


def interval_contains(theta: float, interval: AngleInterval, tol: float = 1e-9) -> bool:
    """True iff ``lo - tol <= theta <= hi + tol``.

    Headings 0 and 2*pi are the same direction, so a heading just above 0
    counts as inside an interval ending at 2*pi and vice versa.  Nothing
    else wraps.
    """
    if tol < 0:
        raise InvalidArgumentError("tolerance must be non-negative")
    return bool(K.in_interval(theta, interval.lo, interval.hi, tol))


def split_wrapping(lo: float, hi: float) -> List[AngleInterval]:
    """Counter-clockwise sweep from ``lo`` to ``hi`` as non-wrapping intervals.

    Both ends are normalized first; ``lo > hi`` after normalization means
    the sweep crosses heading 0.  Use ``AngleInterval.full()`` for the
    whole circle, since equal ends give a single heading here.
    """
    a = normalize_angle(lo)
    b = normalize_angle(hi)
    if a <= b:
        return [AngleInterval(a, b)]
    return [AngleInterval(a, TWO_PI), AngleInterval(0.0, b)]


@dataclass(frozen=True)
class IntervalInstance:
    p1: Point
    theta1: AngleInterval
    p2: Point
    theta2: AngleInterval
    rho: float

    def __post_init__(self):
        if not (math.isfinite(self.rho) and self.rho > 0):
            raise InvalidArgumentError("rho must be positive")
        for name in ("p1", "p2"):
            pt = tuple(float(v) for v in getattr(self, name))
            if len(pt) != 2 or not all(math.isfinite(v) for v in pt):
                raise InvalidArgumentError(f"{name} must be a finite 2-vector")
            object.__setattr__(self, name, pt)

    @property
    def distance(self) -> float:
        return math.hypot(self.p2[0] - self.p1[0], self.p2[1] - self.p1[1])

    def reversed(self) -> List["IntervalInstance"]:
        """The time-reversed problem, split into non-wrapping instances.

        Travelling the reversed path from ``p2`` back to ``p1`` flips every
        heading by pi; the optimal length is unchanged.
        """
        firsts = _shifted(self.theta2, math.pi)
        seconds = _shifted(self.theta1, math.pi)
        return [IntervalInstance(self.p2, a, self.p1, b, self.rho)
                for a in firsts for b in seconds]


def _shifted(interval: AngleInterval, delta: float) -> List[AngleInterval]:
    if interval.width >= TWO_PI:
        return [AngleInterval.full()]
    if interval.width == 0:
        return [AngleInterval.point(interval.lo + delta)]
    return split_wrapping(interval.lo + delta, interval.hi + delta)


@dataclass(frozen=True)
class FrameTransform:
    """Maps the original frame onto the canonical one.

    ``to_canonical(p) = scale * R(-rotation) (p - translation)``; headings
    lose ``rotation`` and lengths gain a factor ``scale``.
    """

    translation: Point
    rotation: float
    scale: float

    def __post_init__(self):
        if not self.scale > 0:
            raise InvalidArgumentError("scale must be positive")

    def point_to_canonical(self, p: Point) -> Point:
        dx = p[0] - self.translation[0]
        dy = p[1] - self.translation[1]
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        return (self.scale * (c * dx + s * dy), self.scale * (-s * dx + c * dy))

    def point_from_canonical(self, q: Point) -> Point:
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        x, y = q[0] / self.scale, q[1] / self.scale
        return (self.translation[0] + c * x - s * y, self.translation[1] + s * x + c * y)

    def heading_to_canonical(self, theta: float) -> float:
        return normalize_angle(theta - self.rotation)

    def heading_from_canonical(self, theta: float) -> float:
        return normalize_angle(theta + self.rotation)

    def length_from_canonical(self, length: float) -> float:
        return length / self.scale


def frame_for(p1: Point, p2: Point, rho: float) -> Tuple[FrameTransform, float]:
    """Canonical frame for a target pair, with the canonical distance."""
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    dist = math.hypot(dx, dy)
    rot = math.atan2(dy, dx) if dist > 0 else 0.0
    return FrameTransform((p1[0], p1[1]), rot, 1.0 / rho), dist / rho


def canonicalize(inst: IntervalInstance) -> Tuple[List[IntervalInstance], FrameTransform]:
    """Canonical sub-instances and the transform back to ``inst``'s frame.

    Each sub-instance has ``p1 = (0, 0)``, ``p2 = (d, 0)`` and ``rho = 1``.
    Rotating an interval can make it straddle heading 0; such an interval
    is cut at 0 and every combination of pieces becomes its own
    sub-instance, so there are between one and four.
    """
    tf, d = frame_for(inst.p1, inst.p2, inst.rho)
    pieces = []
    for iv in (inst.theta1, inst.theta2):
        k, a0, b0, a1, b1 = K.split_interval(iv.lo, iv.hi, tf.rotation)
        ivs = [AngleInterval(a0, b0)]
        if k == 2:
            ivs.append(AngleInterval(a1, b1))
        pieces.append(ivs)
    subs = [IntervalInstance((0.0, 0.0), a, (d, 0.0), b, 1.0)
            for a in pieces[0] for b in pieces[1]]
    return subs, tf
