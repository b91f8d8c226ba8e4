import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from dubins_interval import AngleInterval, Case, IntervalInstance, Pose, Segment, SolvedPath, solve_interval
from dubins_interval.records import (
    InstanceRecord,
    ParseError,
    RecordValidationError,
    SolutionRecord,
    dumps_solutions,
    parse_instances,
    parse_solutions,
    polyline_length,
    sample_polyline,
    serialize_instances,
)

PI = math.pi


def line(**kw):
    base = {"id": "a", "p1": [0, 0], "theta1": [0, 1], "p2": [3, 4], "theta2": [0, 1], "rho": 1}
    base.update(kw)
    return json.dumps(base)


def test_degrees_are_converted():
    recs = parse_instances(line(theta1=[0, 90], theta2=[0, 90], angle_unit="degrees"))
    assert recs[0].theta1 == pytest.approx((0, PI / 2))
    assert recs[0].angle_unit == "radians"
    recs = parse_instances(line(theta1=[0, 90], theta2=[0, 90]), default_unit="degrees")
    assert recs[0].theta2 == pytest.approx((0, PI / 2))


@pytest.mark.parametrize("kw, field, msg", [
    ({"rho": 0}, "rho", "rho must be positive"),
    ({"rho": -2}, "rho", "rho must be positive"),
    ({"theta1": [2, 1]}, "theta1", "lo > hi"),
    ({"theta2": [0, 7]}, "theta2", "[0, 2*pi]"),
    ({"p1": [0]}, "p1", "pair"),
    ({"fixed_departure": 0.5}, "theta1", "exactly one"),
    ({"angle_unit": "grad"}, "angle_unit", "must be one of"),
])
def test_invalid_records(kw, field, msg):
    with pytest.raises(RecordValidationError) as info:
        parse_instances(line(**kw))
    assert info.value.field == field and msg in str(info.value)


def test_fixed_departure_record():
    obj = json.loads(line())
    del obj["theta1"]
    obj["fixed_departure"] = -PI / 2
    rec = parse_instances(json.dumps(obj))[0]
    assert rec.is_fixed and rec.fixed_departure == pytest.approx(3 * PI / 2)
    assert rec.to_instance().theta1.width == 0


def test_duplicate_ids_rejected():
    with pytest.raises(RecordValidationError, match="duplicate"):
        parse_instances(line() + "\n" + line())


def test_parse_error_has_line_number():
    with pytest.raises(ParseError) as info:
        parse_instances(line() + "\n\n{not json\n")
    assert info.value.line == 3


def test_json_array_and_blank_lines():
    arr = "[" + line(id="x") + ", " + line(id="y") + "]"
    assert [r.id for r in parse_instances(arr)] == ["x", "y"]
    assert [r.id for r in parse_instances(arr, "json-array")] == ["x", "y"]
    assert len(parse_instances("\n" + line() + "\n\n")) == 1
    with pytest.raises(ParseError):
        parse_instances('{"a": 1}', "json-array")


def test_instance_round_trip():
    recs = parse_instances(line(id="x") + "\n" + line(id="y", theta2=[1, 2]))
    assert parse_instances(serialize_instances(recs)) == recs


finite = st.floats(min_value=-100, max_value=100, allow_nan=False)
angle = st.floats(min_value=0, max_value=2 * PI)


@settings(max_examples=60, deadline=None)
@given(finite, finite, finite, finite, angle, angle, angle, angle, st.floats(min_value=0.1, max_value=5))
def test_solution_round_trip(x1, y1, x2, y2, a, b, c, e, rho):
    rec = InstanceRecord((x1, y1), (x2, y2), tuple(sorted((c, e))), rho, theta1=tuple(sorted((a, b))), id="r")
    path = solve_interval(rec.to_instance())
    sol = SolutionRecord.from_path(rec, path)
    back = parse_solutions(dumps_solutions([sol]))[0]
    assert back == sol
    assert back.to_path() == path


def test_solution_parse_errors():
    with pytest.raises(ParseError):
        parse_solutions('{"id": "a"}')
    with pytest.raises(ParseError):
        parse_solutions("[1]")


def test_sample_straight():
    path = SolvedPath("S", (Segment("S", 10.0),), 0.0, 0.0, 10.0, Case.FREE_FREE)
    pts = sample_polyline(path, Pose(0, 0, 0), 1.0, 1.0)
    assert len(pts) == 11
    assert pts[-1] == pytest.approx((10.0, 0.0))


def test_sample_half_circle_ends_on_target():
    path = SolvedPath("L", (Segment("L", PI),), 0.0, PI, PI, Case.FREE_FREE)
    pts = sample_polyline(path, Pose(0, 0, 0), 1.0, 0.1)
    assert pts[-1][0] == pytest.approx(0.0, abs=1e-12)
    assert pts[-1][1] == pytest.approx(2.0, abs=1e-12)
    assert all(math.hypot(x, y - 1) == pytest.approx(1.0) for x, y in pts)


def test_polyline_length_converges_from_below():
    inst = IntervalInstance((0, 0), AngleInterval(1, 2), (1, 1), AngleInterval(4, 5), 1.3)
    path = solve_interval(inst)
    prev = 0.0
    for step in (0.5, 0.1, 0.01, 0.001):
        total = polyline_length(sample_polyline(path, Pose(0, 0, path.depart), 1.3, step))
        assert prev - 1e-12 <= total <= path.length + 1e-12
        prev = total
    assert prev == pytest.approx(path.length, rel=1e-6)


def test_sample_rejects_bad_step():
    path = SolvedPath("S", (Segment("S", 1.0),), 0.0, 0.0, 1.0, Case.FREE_FREE)
    with pytest.raises(ValueError):
        sample_polyline(path, Pose(0, 0, 0), 1.0, 0.0)
