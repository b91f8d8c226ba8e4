"""Path words, segments and solved paths."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from . import _kernels as K
from .geometry import Pose

LEGAL_WORDS: FrozenSet[str] = frozenset(K.WORDS)


class Case(str, Enum):
    """Which heading constraints a candidate treats as active.

    The value reads ``<departure>/<arrival>``: ``min``/``max`` pin the
    heading to that interval endpoint, ``free`` leaves it inside the
    interval and ``fixed`` is a prescribed departure heading.
    """

    CLASSIC = "classic"
    FREE_FREE = "free/free"
    MAX_MAX = "max/max"
    MAX_MIN = "max/min"
    MIN_MIN = "min/min"
    MIN_MAX = "min/max"
    MAX_FREE = "max/free"
    MIN_FREE = "min/free"
    FREE_MAX = "free/max"
    FREE_MIN = "free/min"
    FIXED_FREE = "fixed/free"
    FIXED_MAX = "fixed/max"
    FIXED_MIN = "fixed/min"

    @property
    def departure(self) -> Optional[str]:
        return None if self is Case.CLASSIC else self.value.split("/")[0]

    @property
    def arrival(self) -> Optional[str]:
        return None if self is Case.CLASSIC else self.value.split("/")[1]


# kernel case codes index this tuple
CASES: Tuple[Case, ...] = tuple(Case)

CASE_WORDS: Dict[Case, FrozenSet[str]] = {
    Case.CLASSIC: frozenset({"LSL", "RSR", "LSR", "RSL", "LRL", "RLR"}),
    Case.FREE_FREE: frozenset({"S", "L", "R", "LR", "RL"}),
    Case.MAX_MAX: frozenset({"LSR"}),
    Case.MAX_MIN: frozenset({"LSL", "LRL"}),
    Case.MIN_MIN: frozenset({"RSL"}),
    Case.MIN_MAX: frozenset({"RSR", "RLR"}),
    Case.MAX_FREE: frozenset({"LS", "LR"}),
    Case.MIN_FREE: frozenset({"RS", "RL"}),
    Case.FREE_MAX: frozenset({"SR", "LR"}),
    Case.FREE_MIN: frozenset({"SL", "RL"}),
    Case.FIXED_FREE: frozenset({"LS", "RS", "LR", "RL"}),
    Case.FIXED_MAX: frozenset({"LSR", "RSR", "RLR"}),
    Case.FIXED_MIN: frozenset({"RSL", "LSL", "LRL"}),
}


def major_arc_slots(case: Case, word: str) -> Tuple[int, ...]:
    """Segment indices whose turn must exceed half a circle for this case."""
    if word in ("LRL", "RLR"):
        return (1,)
    if case is Case.FREE_FREE:
        return {"L": (0,), "R": (0,), "LR": (0, 1), "RL": (0, 1)}.get(word, ())
    if word in ("LR", "RL"):
        return (0,) if case in (Case.FREE_MAX, Case.FREE_MIN) else (1,)
    return ()


def is_legal_word(word: str) -> bool:
    return word in LEGAL_WORDS


@dataclass(frozen=True)
class Segment:
    kind: str  # "L", "R" or "S"
    magnitude: float  # turn angle for arcs, length for straights

    @property
    def turn(self) -> int:
        return {"L": 1, "R": -1, "S": 0}[self.kind]

    def length(self, rho: float) -> float:
        return self.magnitude if self.kind == "S" else rho * self.magnitude


@dataclass(frozen=True)
class SolvedPath:
    word: str
    segments: Tuple[Segment, ...]
    depart: float
    arrive: float
    length: float
    case: Case
    rho: float = 1.0

    @property
    def display_word(self) -> str:
        """Word with zero segments dropped and repeated turns merged ("LSL", s=0 -> "L")."""
        out = ""
        for seg in self.segments:
            if seg.magnitude > 1e-12 and not out.endswith(seg.kind):
                out += seg.kind
        return out

    @property
    def magnitudes(self) -> Tuple[float, ...]:
        return tuple(s.magnitude for s in self.segments)

    def segment_length_sum(self) -> float:
        return math.fsum(s.length(self.rho) for s in self.segments)

    def end_pose(self, start_point) -> Pose:
        *_, last = walk(self, Pose(start_point[0], start_point[1], self.depart))
        return last


def walk(path: SolvedPath, start: Pose) -> Iterator[Pose]:
    """Start pose followed by the pose at the end of each segment."""
    x, y, h = start.x, start.y, start.theta
    yield start
    for seg in path.segments:
        x, y, h = advance(x, y, h, seg, path.rho, seg.magnitude)
        yield Pose(x, y, h)


def advance(x: float, y: float, h: float, seg: Segment, rho: float, amount: float):
    """Move ``amount`` (turn angle or length) along ``seg`` from (x, y, h)."""
    if seg.kind == "S":
        return x + amount * math.cos(h), y + amount * math.sin(h), h
    t = seg.turn
    cx, cy = x - t * rho * math.sin(h), y + t * rho * math.cos(h)
    h2 = h + t * amount
    return cx + t * rho * math.sin(h2), cy - t * rho * math.cos(h2), h2


def inflexion_points(path: SolvedPath, start: Pose) -> List[Pose]:
    """Poses at the junctions between consecutive segments."""
    return list(walk(path, start))[1:-1]


def path_from_row(row, rho: float) -> SolvedPath:
    """Build a path from an original-frame kernel row."""
    code = int(row[K.C_WORD])
    word = K.WORDS[code]
    segs = tuple(Segment(kind, float(row[K.C_M0 + i])) for i, kind in enumerate(word))
    return SolvedPath(
        word=word,
        segments=segs,
        depart=float(row[K.C_DEP]),
        arrive=float(row[K.C_ARR]),
        length=float(row[K.C_LEN]),
        case=CASES[int(row[K.C_CASE])],
        rho=rho,
    )
