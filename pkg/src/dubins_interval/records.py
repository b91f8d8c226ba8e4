"""JSON instance/solution records and path sampling."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import IO, Iterable, List, Optional, Sequence, Tuple, Union

from .geometry import TWO_PI, AngleInterval, IntervalInstance, Pose
from .paths import Case, Segment, SolvedPath, advance

ANGLE_UNITS = ("radians", "degrees")


class ParseError(ValueError):
    """Input is not well-formed JSON in the expected layout."""

    def __init__(self, message: str, line: int = 0, offset: int = 0):
        super().__init__(f"line {line}, offset {offset}: {message}")
        self.line = line
        self.offset = offset


class RecordValidationError(ValueError):
    """A syntactically valid record describes an impossible instance."""

    def __init__(self, record_id: str, field: str, message: str):
        super().__init__(f"record {record_id}: {field}: {message}")
        self.record_id = record_id
        self.field = field


@dataclass(frozen=True)
class InstanceRecord:
    p1: Tuple[float, float]
    p2: Tuple[float, float]
    theta2: Tuple[float, float]
    rho: float
    theta1: Optional[Tuple[float, float]] = None
    fixed_departure: Optional[float] = None
    id: Optional[str] = None
    angle_unit: str = "radians"

    @property
    def label(self) -> str:
        return self.id if self.id is not None else "<no id>"

    @property
    def is_fixed(self) -> bool:
        return self.fixed_departure is not None

    def to_instance(self) -> IntervalInstance:
        if self.is_fixed:
            t1 = AngleInterval(self.fixed_departure, self.fixed_departure)
        else:
            t1 = AngleInterval(*self.theta1)
        return IntervalInstance(self.p1, t1, self.p2, AngleInterval(*self.theta2), self.rho)

    def to_dict(self) -> dict:
        d = {}
        if self.id is not None:
            d["id"] = self.id
        d["p1"] = list(self.p1)
        if self.is_fixed:
            d["fixed_departure"] = self.fixed_departure
        else:
            d["theta1"] = list(self.theta1)
        d["p2"] = list(self.p2)
        d["theta2"] = list(self.theta2)
        d["rho"] = self.rho
        d["angle_unit"] = self.angle_unit
        return d


def _pair(obj: dict, key: str, rid: str) -> Tuple[float, float]:
    val = obj.get(key)
    if (not isinstance(val, (list, tuple)) or len(val) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in val)):
        raise RecordValidationError(rid, key, "expected a pair of numbers")
    a, b = float(val[0]), float(val[1])
    if not (math.isfinite(a) and math.isfinite(b)):
        raise RecordValidationError(rid, key, "values must be finite")
    return a, b


def _interval(obj: dict, key: str, rid: str, scale: float) -> Tuple[float, float]:
    lo, hi = _pair(obj, key, rid)
    lo, hi = lo * scale, hi * scale
    if lo > hi:
        raise RecordValidationError(rid, key, "lo > hi (split wrapping intervals into two records)")
    if lo < 0 or hi > TWO_PI:
        raise RecordValidationError(rid, key, "angles must lie in [0, 2*pi]")
    return lo, hi


def record_from_dict(obj, default_unit: str = "radians", index: int = 0) -> InstanceRecord:
    """Validate one decoded JSON object; angles come back in radians."""
    if not isinstance(obj, dict):
        raise RecordValidationError(f"#{index}", "record", "expected a JSON object")
    rid = obj.get("id")
    if rid is not None and not isinstance(rid, str):
        raise RecordValidationError(f"#{index}", "id", "must be a string")
    label = rid if rid is not None else f"#{index}"
    unit = obj.get("angle_unit", default_unit)
    if unit not in ANGLE_UNITS:
        raise RecordValidationError(label, "angle_unit", f"must be one of {ANGLE_UNITS}")
    scale = math.pi / 180.0 if unit == "degrees" else 1.0

    rho = obj.get("rho")
    if not isinstance(rho, (int, float)) or isinstance(rho, bool) or not math.isfinite(rho):
        raise RecordValidationError(label, "rho", "must be a number")
    if rho <= 0:
        raise RecordValidationError(label, "rho", "rho must be positive")

    has_fixed = "fixed_departure" in obj and obj["fixed_departure"] is not None
    has_t1 = "theta1" in obj and obj["theta1"] is not None
    if has_fixed == has_t1:
        raise RecordValidationError(label, "theta1", "give exactly one of theta1 and fixed_departure")
    fixed = theta1 = None
    if has_fixed:
        v = obj["fixed_departure"]
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
            raise RecordValidationError(label, "fixed_departure", "must be a finite number")
        fixed = (v * scale) % TWO_PI
        fixed = 0.0 if fixed >= TWO_PI else fixed
    else:
        theta1 = _interval(obj, "theta1", label, scale)

    return InstanceRecord(
        id=rid,
        p1=_pair(obj, "p1", label),
        theta1=theta1,
        fixed_departure=fixed,
        p2=_pair(obj, "p2", label),
        theta2=_interval(obj, "theta2", label, scale),
        rho=float(rho),
        angle_unit="radians",
    )


def _decode(text: str, fmt: str) -> List[object]:
    if fmt == "auto":
        fmt = "json-array" if text.lstrip().startswith("[") else "json-lines"
    if fmt == "json-array":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        if not isinstance(data, list):
            raise ParseError("expected a JSON array", 1, 1)
        return data
    if fmt != "json-lines":
        raise ValueError(f"unknown format {fmt!r}")
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            out.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, lineno, exc.colno) from None
    return out


def _read_text(source: Union[str, bytes, IO]) -> str:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc.reason}", 1, exc.start + 1) from None
    return source


def parse_objects(source: Union[str, bytes, IO], fmt: str = "auto") -> List[object]:
    return _decode(_read_text(source), fmt)


def parse_instances(source: Union[str, bytes, IO], fmt: str = "auto",
                    default_unit: str = "radians") -> List[InstanceRecord]:
    """Read and validate instance records from JSON lines or a JSON array."""
    records = [record_from_dict(obj, default_unit, i)
               for i, obj in enumerate(parse_objects(source, fmt))]
    seen = set()
    for rec in records:
        if rec.id is not None:
            if rec.id in seen:
                raise RecordValidationError(rec.id, "id", "duplicate id")
            seen.add(rec.id)
    return records


def serialize_instances(records: Iterable[InstanceRecord]) -> str:
    return "".join(json.dumps(r.to_dict()) + "\n" for r in records)


@dataclass(frozen=True)
class SolutionRecord:
    instance: InstanceRecord
    case_label: str
    word: str
    display_word: str
    segments: Tuple[float, ...]
    depart: float
    arrive: float
    length: float
    wall_time: Optional[float] = None

    @property
    def id(self) -> Optional[str]:
        return self.instance.id

    @classmethod
    def from_path(cls, rec: InstanceRecord, path: SolvedPath,
                  wall_time: Optional[float] = None) -> "SolutionRecord":
        return cls(rec, path.case.value, path.word, path.display_word, path.magnitudes,
                   path.depart, path.arrive, path.length, wall_time)

    def to_path(self) -> SolvedPath:
        segs = tuple(Segment(k, m) for k, m in zip(self.word, self.segments))
        return SolvedPath(self.word, segs, self.depart, self.arrive, self.length,
                          Case(self.case_label), self.instance.rho)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "case_label": self.case_label,
            "word": self.word,
            "display_word": self.display_word,
            "segments": list(self.segments),
            "depart": self.depart,
            "arrive": self.arrive,
            "length": self.length,
            "wall_time": self.wall_time,
            "instance": self.instance.to_dict(),
        }

    @classmethod
    def from_dict(cls, obj: dict, index: int = 0) -> "SolutionRecord":
        try:
            inst = record_from_dict(obj["instance"], index=index)
            segs = tuple(float(m) for m in obj["segments"])
            word = str(obj["word"])
            Case(obj["case_label"])
            if len(segs) != len(word):
                raise ValueError("segments do not match word")
            return cls(inst, obj["case_label"], word, str(obj.get("display_word", "")), segs,
                       float(obj["depart"]), float(obj["arrive"]), float(obj["length"]),
                       obj.get("wall_time"))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, RecordValidationError):
                raise
            raise ParseError(f"record {index}: not a solution record ({exc})", index + 1, 1) from None


def dumps_solutions(records: Iterable[SolutionRecord]) -> str:
    return "".join(json.dumps(r.to_dict()) + "\n" for r in records)


def parse_solutions(source: Union[str, bytes, IO], fmt: str = "auto") -> List[SolutionRecord]:
    out = []
    for i, obj in enumerate(parse_objects(source, fmt)):
        if not isinstance(obj, dict):
            raise ParseError(f"record {i}: expected a JSON object", i + 1, 1)
        out.append(SolutionRecord.from_dict(obj, i))
    return out


def sample_polyline(path: SolvedPath, start: Pose, rho: float,
                    max_step: float) -> List[Tuple[float, float]]:
    """Points along the path from ``start``, consecutive points at most ``max_step`` apart.

    All points lie on the path itself; each segment is cut into equal
    pieces no longer than ``max_step``.
    """
    if not max_step > 0:
        raise ValueError("max_step must be positive")
    x, y, h = start.x, start.y, path.depart
    pts = [(x, y)]
    for seg in path.segments:
        seg_len = seg.length(rho)
        if seg_len <= 0:
            continue
        pieces = max(1, math.ceil(seg_len / max_step - 1e-12))
        for i in range(1, pieces + 1):
            pts.append(advance(x, y, h, seg, rho, seg.magnitude * i / pieces)[:2])
        x, y, h = advance(x, y, h, seg, rho, seg.magnitude)
    return pts


def polyline_length(points: Sequence[Tuple[float, float]]) -> float:
    return math.fsum(math.hypot(b[0] - a[0], b[1] - a[1]) for a, b in zip(points, points[1:]))
