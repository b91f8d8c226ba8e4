"""Random instance generators and independent reference computations for tests."""
import math

import numpy as np
from scipy.optimize import least_squares

from dubins_interval import AngleInterval, IntervalInstance, solve_interval, split_wrapping

TWO_PI = 2 * math.pi


def random_interval(rng, mode="mixed"):
    if mode == "mixed":
        mode = rng.choice(["wide", "narrow", "point", "full"], p=[0.55, 0.3, 0.05, 0.1])
    if mode == "point":
        return AngleInterval.point(rng.uniform(0, TWO_PI))
    if mode == "full":
        return AngleInterval.full()
    if mode == "narrow":
        lo = rng.uniform(0, TWO_PI - 0.5)
        return AngleInterval(lo, lo + rng.uniform(0.01, 0.5))
    lo, hi = sorted(rng.uniform(0, TWO_PI, 2))
    return AngleInterval(lo, hi)


def random_instance(rng, mode="mixed", near=False):
    p1 = rng.uniform(-10, 10, 2)
    p2 = p1 + rng.uniform(-3, 3, 2) if near else rng.uniform(-10, 10, 2)
    return IntervalInstance(tuple(p1), random_interval(rng, mode), tuple(p2),
                            random_interval(rng, mode), float(rng.uniform(0.5, 3.0)))


def random_instances(seed, n, near_fraction=0.3, mode="mixed"):
    rng = np.random.default_rng(seed)
    return [random_instance(rng, mode, near=rng.uniform() < near_fraction) for _ in range(n)]


def sample_in(rng, iv):
    return iv.lo if iv.width == 0 else float(rng.uniform(iv.lo, iv.hi))


# --- solving intervals that may wrap after a transformation ------------------

def sweep(lo, width):
    """Intervals covering the counter-clockwise sweep of ``width`` from ``lo``."""
    if width >= TWO_PI:
        return [AngleInterval.full()]
    if width == 0:
        return [AngleInterval.point(lo)]
    return split_wrapping(lo, lo + width)


def solve_sweeps(p1, sweep1, p2, sweep2, rho):
    """Optimal length when each heading set is a (possibly wrapping) sweep ``(lo, width)``."""
    return min(
        solve_interval(IntervalInstance(p1, a, p2, b, rho)).length
        for a in sweep(*sweep1) for b in sweep(*sweep2)
    )


def rotate(p, phi):
    c, s = math.cos(phi), math.sin(phi)
    return (c * p[0] - s * p[1], s * p[0] + c * p[1])


# --- independent reference for classical paths ---------------------------------

KIND = {"L": 1, "R": -1, "S": 0}


def _end(x, y, h, kinds, mags):
    """Closed-form kinematics, written independently of the package."""
    for k, m in zip(kinds, mags):
        if k == 0:
            x, y = x + m * math.cos(h), y + m * math.sin(h)
        else:
            # dtheta/ds = k, dx/ds = cos(theta), dy/ds = sin(theta)
            h2 = h + k * m
            x, y = x + (math.sin(h2) - math.sin(h)) / k, y - (math.cos(h2) - math.cos(h)) / k
            h = h2
    return x, y, h


def shooting_classic(start, end, words=("LSL", "RSR", "LSR", "RSL", "LRL", "RLR")):
    """Shortest classical path by multi-start least squares over segment magnitudes.

    Works with unit radius: pass scaled coordinates.  Returns the best
    length found and its word; every accepted solution closes to 1e-10.
    """
    (x0, y0, h0), (x1, y1, h1) = start, end
    best = (math.inf, None)
    arcs = np.linspace(0.0, TWO_PI, 5)[:-1]
    dist = math.hypot(x1 - x0, y1 - y0)
    for word in words:
        kinds = [KIND[c] for c in word]
        upper = [TWO_PI if k else 50.0 for k in kinds]
        mids = arcs if kinds[1] else (0.0, 0.5 * dist + 0.5, dist + 2.0)

        def res(m):
            x, y, h = _end(x0, y0, h0, kinds, m)
            return [x - x1, y - y1, math.cos(h) - math.cos(h1), math.sin(h) - math.sin(h1)]

        for a in arcs:
            for b in mids:
                for c in arcs:
                    sol = least_squares(res, [a, b, c], bounds=([0, 0, 0], upper),
                                        xtol=1e-15, ftol=1e-15, gtol=1e-15)
                    if max(abs(r) for r in res(sol.x)) < 1e-10:
                        total = float(sum(sol.x))
                        if total < best[0]:
                            best = (total, word)
    return best
