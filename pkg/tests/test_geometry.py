import math

import pytest
from hypothesis import given, settings, strategies as st

from dubins_interval import (
    AngleInterval,
    IntervalInstance,
    InvalidArgumentError,
    Pose,
    canonicalize,
    interval_contains,
    normalize_angle,
    split_wrapping,
)
from dubins_interval.geometry import FrameTransform, angle_gap

PI = math.pi
angles = st.floats(min_value=-1e4, max_value=1e4, allow_nan=False, allow_infinity=False)
coords = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


@pytest.mark.parametrize("theta, expected", [(5 * PI / 2, PI / 2), (-PI / 2, 3 * PI / 2), (2 * PI, 0.0)])
def test_normalize_examples(theta, expected):
    assert normalize_angle(theta) == pytest.approx(expected, abs=1e-15)


def test_normalize_tiny_negative_stays_below_two_pi():
    assert normalize_angle(-1e-20) == 0.0


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_normalize_rejects_non_finite(bad):
    with pytest.raises(InvalidArgumentError):
        normalize_angle(bad)


@given(angles)
def test_normalize_range_and_idempotent(theta):
    r = normalize_angle(theta)
    assert 0 <= r < 2 * PI
    assert normalize_angle(r) == r
    assert angle_gap(r, theta) < 1e-9


@pytest.mark.parametrize("theta, iv, expected", [
    (PI / 4, (0, PI / 2), True),
    (PI / 2, (0, PI / 2), True),
    (PI, (0, PI / 2), False),
])
def test_interval_contains_examples(theta, iv, expected):
    assert interval_contains(theta, AngleInterval(*iv), 0.0) is expected


def test_interval_contains_tolerance_and_zero_identity():
    iv = AngleInterval(1.0, 2.0)
    assert not interval_contains(2.0 + 1e-8, iv, 1e-9)
    assert interval_contains(2.0 + 1e-10, iv, 1e-9)
    # heading 0 is the same direction as 2*pi
    assert interval_contains(0.0, AngleInterval(3 * PI / 2, 2 * PI), 0.0)
    assert interval_contains(2 * PI - 1e-12, AngleInterval(0.0, 1.0), 1e-9)
    assert not interval_contains(PI, AngleInterval(3 * PI / 2, 2 * PI), 1e-9)


@pytest.mark.parametrize("lo, hi", [(-0.1, 1.0), (1.0, 0.5), (0.0, 7.0), (math.nan, 1.0)])
def test_angle_interval_rejects_bad_bounds(lo, hi):
    with pytest.raises(InvalidArgumentError):
        AngleInterval(lo, hi)


def test_zero_width_interval_allowed():
    iv = AngleInterval(1.0, 1.0)
    assert iv.width == 0 and iv.contains(1.0)


def test_split_wrapping():
    assert split_wrapping(1.0, 2.0) == [AngleInterval(1.0, 2.0)]
    parts = split_wrapping(3 * PI / 2, PI / 2 + 2 * PI)
    assert parts == [AngleInterval(3 * PI / 2, 2 * PI), AngleInterval(0.0, PI / 2)]


def test_pose_normalizes_heading():
    assert Pose(0, 0, -PI / 2).theta == pytest.approx(3 * PI / 2)
    assert Pose(1, 2, 3).reversed().theta == pytest.approx(3 + PI)


def test_instance_rejects_bad_rho():
    with pytest.raises(InvalidArgumentError, match="rho must be positive"):
        IntervalInstance((0, 0), AngleInterval.full(), (1, 0), AngleInterval.full(), 0.0)


def test_canonicalize_rotated_scaled_example():
    inst = IntervalInstance((3, 4), AngleInterval(0, PI), (3, 6), AngleInterval(0, PI), 2.0)
    subs, tf = canonicalize(inst)
    assert tf.rotation == pytest.approx(PI / 2)
    assert tf.scale == pytest.approx(0.5)
    assert tf.translation == (3.0, 4.0)
    # [0, pi] shifted by -pi/2 straddles 0, so both intervals split in two
    assert len(subs) == 4
    for sub in subs:
        assert sub.p1 == (0.0, 0.0) and sub.rho == 1.0
        assert sub.p2 == pytest.approx((1.0, 0.0))
    firsts = {(round(s.theta1.lo, 12), round(s.theta1.hi, 12)) for s in subs}
    assert firsts == {(round(3 * PI / 2, 12), round(2 * PI, 12)), (0.0, round(PI / 2, 12))}


def test_canonicalize_identity():
    inst = IntervalInstance((0, 0), AngleInterval(0.2, 1.0), (4, 0), AngleInterval(1.0, 3.0), 1.0)
    subs, tf = canonicalize(inst)
    assert subs == [inst]
    assert tf == FrameTransform((0.0, 0.0), 0.0, 1.0)


def test_canonicalize_pure_scaling():
    inst = IntervalInstance((0, 0), AngleInterval.full(), (5, 0), AngleInterval.full(), 5.0)
    subs, tf = canonicalize(inst)
    assert len(subs) == 1 and subs[0].p2 == (1.0, 0.0)
    assert tf.scale == pytest.approx(0.2)


def test_canonicalize_full_interval_never_splits():
    inst = IntervalInstance((0, 0), AngleInterval.full(), (0, 5), AngleInterval.full(), 1.0)
    subs, _ = canonicalize(inst)
    assert len(subs) == 1 and subs[0].theta1 == AngleInterval.full()


@settings(max_examples=200)
@given(coords, coords, st.floats(min_value=-PI, max_value=PI), st.floats(min_value=1e-3, max_value=1e3),
       coords, coords)
def test_frame_round_trip(tx, ty, rot, scale, px, py):
    tf = FrameTransform((tx, ty), rot, scale)
    back = tf.point_from_canonical(tf.point_to_canonical((px, py)))
    mag = max(1.0, abs(px), abs(py), abs(tx), abs(ty))
    assert back[0] == pytest.approx(px, abs=1e-12 * mag)
    assert back[1] == pytest.approx(py, abs=1e-12 * mag)
    h = normalize_angle(rot * 0.37)
    assert angle_gap(tf.heading_from_canonical(tf.heading_to_canonical(h)), h) < 1e-12


@settings(max_examples=200)
@given(coords, coords, coords, coords, st.floats(min_value=0.01, max_value=100))
def test_canonical_frame_places_targets(x1, y1, x2, y2, rho):
    inst = IntervalInstance((x1, y1), AngleInterval.full(), (x2, y2), AngleInterval.full(), rho)
    subs, tf = canonicalize(inst)
    q1 = tf.point_to_canonical(inst.p1)
    q2 = tf.point_to_canonical(inst.p2)
    d = inst.distance / rho
    tol = 1e-9 * max(1.0, d)
    assert math.hypot(*q1) <= tol
    assert abs(q2[0] - d) <= tol and abs(q2[1]) <= tol
    assert subs[0].p2[0] == pytest.approx(d)
