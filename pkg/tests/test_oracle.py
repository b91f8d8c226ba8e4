import math

import numpy as np
import pytest

from _gen import random_instances
from dubins_interval import (
    AngleInterval,
    IntervalInstance,
    InvalidArgumentError,
    Pose,
    oracle_grid,
    oracle_grid_nested,
    solve_classic,
    solve_interval,
)
from dubins_interval.oracle import grid_headings

PI = math.pi


def test_zero_width_oracle_is_classic():
    inst = IntervalInstance((1, 2), AngleInterval.point(0.4), (-3, 5), AngleInterval.point(2.2), 1.5)
    res = oracle_grid(inst, 16)
    ref = solve_classic(Pose(1, 2, 0.4), Pose(-3, 5, 2.2), 1.5).length
    assert res.length == pytest.approx(ref, abs=1e-12)
    assert (res.argmin_depart, res.argmin_arrive) == (0.4, 2.2)


def test_straight_instance_small_grid():
    inst = IntervalInstance((0, 0), AngleInterval(0, PI / 2), (10, 0), AngleInterval(0, PI / 2), 1.0)
    res = oracle_grid(inst, 4)
    assert res.length == pytest.approx(10.0, abs=1e-12)
    assert res.argmin_depart == 0.0 and res.argmin_arrive == 0.0
    assert res.samples_per_axis == 4  # the requested N; the inclusive grid holds N + 1 points


def test_grid_headings_include_endpoints_and_nest():
    iv = AngleInterval(0.3, 2.9)
    g4, g8 = grid_headings(iv, 4), grid_headings(iv, 8)
    assert g4[0] == 0.3 and g4[-1] == 2.9 and len(g4) == 5
    assert np.array_equal(g8[::2], g4)


@pytest.mark.parametrize("n", [0, 3, 12, -4])
def test_rejects_non_power_of_two(n):
    inst = IntervalInstance((0, 0), AngleInterval.full(), (1, 0), AngleInterval.full(), 1.0)
    with pytest.raises(InvalidArgumentError):
        oracle_grid(inst, n)


def test_nested_grids_monotone_and_bound_solver():
    for inst in random_instances(12, 40, near_fraction=0.5):
        nested = oracle_grid_nested(inst, [8, 16, 32, 64])
        lengths = [nested[n].length for n in (8, 16, 32, 64)]
        assert all(b <= a for a, b in zip(lengths, lengths[1:]))
        assert solve_interval(inst).length <= lengths[-1] + 1e-9


def test_nested_matches_standalone():
    for inst in random_instances(13, 10):
        nested = oracle_grid_nested(inst, [4, 32])
        for n in (4, 32):
            assert nested[n] == oracle_grid(inst, n)
