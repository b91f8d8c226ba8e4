"""Compiled geometry kernels shared by the scalar API and the batch solver.

All constructions work with a unit turning radius.  The interval
generators additionally assume the canonical frame: first target at the
origin, second target at ``(d, 0)``.

Candidate rows are written into a float buffer with the column layout
given by the ``C_*`` constants; path lengths in a row are in canonical
units (arc angle and straight length coincide when the radius is one).
"""
import math

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - pure Python fallback

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi

# arcs within this of a full turn are a rounding artefact of a zero arc
ARC_SNAP = 1e-10
# slack on square-root / inverse-trig arguments near their domain edge
EDGE = 1e-12
# candidates shorter by less than this do not displace the incumbent
TIE = 1e-12
# canonical closure tolerance, scaled by max(1, d)
CLOSE_TOL = 1e-9
# pinned headings within this of an interval endpoint are snapped onto it
PIN_SNAP = 1e-12

# word codes; index into WORDS
W_S, W_L, W_R, W_LR, W_RL, W_LS, W_RS, W_SL, W_SR = 0, 1, 2, 3, 4, 5, 6, 7, 8
W_LSL, W_RSR, W_LSR, W_RSL, W_LRL, W_RLR = 9, 10, 11, 12, 13, 14
WORDS = ("S", "L", "R", "LR", "RL", "LS", "RS", "SL", "SR",
         "LSL", "RSR", "LSR", "RSL", "LRL", "RLR")
CLASSIC_WORDS = (W_LSL, W_RSR, W_LSR, W_RSL, W_LRL, W_RLR)
# tie-break order for equal lengths: fewer segments first, then alphabetical
_RANKED = sorted(WORDS, key=lambda w: (len(w), w))
WORD_RANK = np.array([_RANKED.index(w) for w in WORDS], dtype=np.int64)

# per-word segment kinds: +1 left turn, -1 right turn, 0 straight, 9 unused
KINDS = np.array([
    [0, 9, 9], [1, 9, 9], [-1, 9, 9], [1, -1, 9], [-1, 1, 9],
    [1, 0, 9], [-1, 0, 9], [0, 1, 9], [0, -1, 9],
    [1, 0, 1], [-1, 0, -1], [1, 0, -1], [-1, 0, 1], [1, -1, 1], [-1, 1, -1],
], dtype=np.int64)

# case codes; index into paths.Case
K_CLASSIC = 0
K_FREE_FREE, K_MAX_MAX, K_MAX_MIN, K_MIN_MIN, K_MIN_MAX = 1, 2, 3, 4, 5
K_MAX_FREE, K_MIN_FREE, K_FREE_MAX, K_FREE_MIN = 6, 7, 8, 9
K_FIXED_FREE, K_FIXED_MAX, K_FIXED_MIN = 10, 11, 12

# generator selection bits
G_FREE_FREE = 1
G_PINNED_PINNED = 2
G_PINNED_FREE = 4
G_FREE_PINNED = 8
G_FREE_PINNED_DIRECT = 16
G_INTERVAL = G_FREE_FREE | G_PINNED_PINNED | G_PINNED_FREE | G_FREE_PINNED

C_CASE, C_WORD, C_M0, C_M1, C_M2, C_DEP, C_ARR, C_LEN = range(8)
NCOL = 8
MAX_ROWS = 40


@njit(cache=True)
def wrap(x):
    r = x % TWO_PI
    if r >= TWO_PI:
        r = 0.0
    return r


@njit(cache=True)
def arc(x):
    r = x % TWO_PI
    if r > TWO_PI - ARC_SNAP:
        r = 0.0
    return r


@njit(cache=True)
def angle_gap(a, b):
    """Unsigned angular distance between two headings, in [0, pi]."""
    g = (a - b) % TWO_PI
    return min(g, TWO_PI - g)


@njit(cache=True)
def in_interval(th, lo, hi, tol):
    # 0 and 2*pi name the same heading
    if lo - tol <= th <= hi + tol:
        return True
    if th + TWO_PI <= hi + tol:
        return True
    if th - TWO_PI >= lo - tol:
        return True
    return False


@njit(cache=True)
def _safe_sqrt(x):
    if x < 0.0:
        return 0.0
    return math.sqrt(x)


@njit(cache=True)
def _clamp_unit(x):
    if x > 1.0:
        return 1.0
    if x < -1.0:
        return -1.0
    return x


# ---------------------------------------------------------------------------
# classical three-segment words, start (0, 0, a) -> end (d, 0, b)
# ---------------------------------------------------------------------------

@njit(cache=True)
def word_csc(code, d, sa, ca, sb, cb, a, b):
    if code == W_LSL:
        vx = d - sb + sa
        vy = cb - ca
        dd = math.hypot(vx, vy)
        phi = a if dd < EDGE else math.atan2(vy, vx)
        return True, arc(phi - a), dd, arc(b - phi)
    if code == W_RSR:
        vx = d + sb - sa
        vy = ca - cb
        dd = math.hypot(vx, vy)
        phi = a if dd < EDGE else math.atan2(vy, vx)
        return True, arc(a - phi), dd, arc(phi - b)
    if code == W_LSR:
        vx = d + sb + sa
        vy = -cb - ca
        d2 = vx * vx + vy * vy - 4.0
        if d2 < -EDGE:
            return False, 0.0, 0.0, 0.0
        s = _safe_sqrt(d2)
        phi = math.atan2(vy, vx) + math.atan2(2.0, s)
        return True, arc(phi - a), s, arc(phi - b)
    # RSL
    vx = d - sb - sa
    vy = cb + ca
    d2 = vx * vx + vy * vy - 4.0
    if d2 < -EDGE:
        return False, 0.0, 0.0, 0.0
    s = _safe_sqrt(d2)
    phi = math.atan2(vy, vx) - math.atan2(2.0, s)
    return True, arc(a - phi), s, arc(b - phi)


@njit(cache=True)
def word_ccc(code, d, sa, ca, sb, cb, a, b, major_only, guard):
    """LRL / RLR; keeps the shorter root, optionally only middle arcs > pi."""
    t = 1.0 if code == W_LRL else -1.0
    c1x = -t * sa
    c1y = t * ca
    c3x = d - t * sb
    c3y = t * cb
    vx = c3x - c1x
    vy = c3y - c1y
    dd = math.hypot(vx, vy)
    if dd > 4.0 + EDGE:
        return False, 0.0, 0.0, 0.0
    gamma = math.acos(_clamp_unit(0.25 * dd))
    base = math.atan2(vy, vx)
    found = False
    best = np.inf
    r0 = 0.0
    r1 = 0.0
    r2 = 0.0
    for sgn in (1.0, -1.0):
        ang = base + sgn * gamma
        cmx = c1x + 2.0 * math.cos(ang)
        cmy = c1y + 2.0 * math.sin(ang)
        h1 = ang + t * HALF_PI
        h2 = math.atan2(c3y - cmy, c3x - cmx) - t * HALF_PI
        m0 = arc(t * (h1 - a))
        m1 = arc(t * (h1 - h2))
        m2 = arc(t * (b - h2))
        if major_only and not m1 > math.pi + guard:
            continue
        total = m0 + m1 + m2
        if total < best - TIE:
            best = total
            r0, r1, r2 = m0, m1, m2
            found = True
    return found, r0, r1, r2


@njit(cache=True)
def word_path(code, d, a, b, major_only, guard):
    sa = math.sin(a)
    ca = math.cos(a)
    sb = math.sin(b)
    cb = math.cos(b)
    if code == W_LRL or code == W_RLR:
        return word_ccc(code, d, sa, ca, sb, cb, a, b, major_only, guard)
    return word_csc(code, d, sa, ca, sb, cb, a, b)


@njit(cache=True)
def classic_sc(d, a, b, sa, ca, sb, cb, guard):
    """Shortest classical path; ties resolve to the earlier word in CLASSIC_WORDS."""
    best = np.inf
    bc = -1
    b0 = 0.0
    b1 = 0.0
    b2 = 0.0
    for code in CLASSIC_WORDS:
        if code == W_LRL or code == W_RLR:
            ok, m0, m1, m2 = word_ccc(code, d, sa, ca, sb, cb, a, b, True, guard)
        else:
            ok, m0, m1, m2 = word_csc(code, d, sa, ca, sb, cb, a, b)
        if ok:
            total = m0 + m1 + m2
            if total < best - TIE:
                best = total
                bc = code
                b0, b1, b2 = m0, m1, m2
    return bc, b0, b1, b2, best


@njit(cache=True)
def classic(d, a, b, guard):
    return classic_sc(d, a, b, math.sin(a), math.cos(a), math.sin(b), math.cos(b), guard)


@njit(cache=True)
def classic_grid(d, alphas, betas, guard, out):
    """Classical lengths for every (alpha, beta) pair of the two heading axes."""
    na = alphas.shape[0]
    nb = betas.shape[0]
    sb = np.sin(betas)
    cb = np.cos(betas)
    for i in range(na):
        a = alphas[i]
        sa = math.sin(a)
        ca = math.cos(a)
        for j in range(nb):
            out[i, j] = classic_sc(d, a, betas[j], sa, ca, sb[j], cb[j], guard)[4]


# ---------------------------------------------------------------------------
# forward integration
# ---------------------------------------------------------------------------

@njit(cache=True)
def integrate(x, y, h, code, m0, m1, m2):
    for k in range(3):
        kind = KINDS[code, k]
        if kind == 9:
            break
        m = m0 if k == 0 else (m1 if k == 1 else m2)
        if kind == 0:
            x += m * math.cos(h)
            y += m * math.sin(h)
        else:
            cx = x - kind * math.sin(h)
            cy = y + kind * math.cos(h)
            h += kind * m
            x = cx + kind * math.sin(h)
            y = cy - kind * math.cos(h)
    return x, y, h


@njit(cache=True)
def closes(code, m0, m1, m2, dep, arr, d):
    x, y, h = integrate(0.0, 0.0, dep, code, m0, m1, m2)
    tol = CLOSE_TOL * max(1.0, d)
    return math.hypot(x - d, y) <= tol and angle_gap(h, arr) <= tol


# ---------------------------------------------------------------------------
# two-segment constructions with one free end heading
# ---------------------------------------------------------------------------

@njit(cache=True)
def cs_to_point(x0, y0, th, tx, ty, turn):
    """Turn from pose (x0, y0, th), then a straight line into (tx, ty)."""
    cx = x0 - turn * math.sin(th)
    cy = y0 + turn * math.cos(th)
    qx = tx - cx
    qy = ty - cy
    d2 = qx * qx + qy * qy - 1.0
    if d2 < -EDGE:
        return False, 0.0, 0.0, 0.0
    s = _safe_sqrt(d2)
    phi = math.atan2(qy, qx) + turn * math.atan2(1.0, s)
    return True, arc(turn * (phi - th)), s, wrap(phi)


@njit(cache=True)
def cc_to_point(x0, y0, th, tx, ty, turn, root):
    """Turn from pose, then the opposite turn ending on (tx, ty).

    The second circle touches the first and passes through the target;
    ``root`` (+1 / -1) picks one of the two such circles.
    """
    c1x = x0 - turn * math.sin(th)
    c1y = y0 + turn * math.cos(th)
    qx = tx - c1x
    qy = ty - c1y
    dd = math.hypot(qx, qy)
    if dd < 1.0 - EDGE or dd > 3.0 + EDGE or dd == 0.0:
        return False, 0.0, 0.0, 0.0
    along = (3.0 + dd * dd) / (2.0 * dd)
    h = _safe_sqrt(4.0 - along * along)
    ux = qx / dd
    uy = qy / dd
    c2x = c1x + along * ux - root * h * uy
    c2y = c1y + along * uy + root * h * ux
    hj = math.atan2(c2y - c1y, c2x - c1x) + turn * HALF_PI
    arrive = math.atan2(ty - c2y, tx - c2x) - turn * HALF_PI
    return True, arc(turn * (hj - th)), arc(turn * (hj - arrive)), wrap(arrive)


@njit(cache=True)
def sc_to_pose(x0, y0, tx, ty, beta, turn):
    """Straight line from (x0, y0), then a turn ending on pose (tx, ty, beta)."""
    cx = tx - turn * math.sin(beta)
    cy = ty + turn * math.cos(beta)
    qx = cx - x0
    qy = cy - y0
    d2 = qx * qx + qy * qy - 1.0
    if d2 < -EDGE:
        return False, 0.0, 0.0, 0.0
    s = _safe_sqrt(d2)
    phi = math.atan2(qy, qx) - turn * math.atan2(1.0, s)
    return True, s, arc(turn * (beta - phi)), wrap(phi)


@njit(cache=True)
def cc_to_pose(x0, y0, tx, ty, beta, turn, root):
    """Turn through (x0, y0), then the opposite turn ``-turn`` ending on the pose."""
    c2x = tx + turn * math.sin(beta)
    c2y = ty - turn * math.cos(beta)
    qx = c2x - x0
    qy = c2y - y0
    dd = math.hypot(qx, qy)
    if dd < 1.0 - EDGE or dd > 3.0 + EDGE or dd == 0.0:
        return False, 0.0, 0.0, 0.0
    along = (dd * dd - 3.0) / (2.0 * dd)
    h = _safe_sqrt(1.0 - along * along)
    ux = qx / dd
    uy = qy / dd
    c1x = x0 + along * ux - root * h * uy
    c1y = y0 + along * uy + root * h * ux
    depart = math.atan2(y0 - c1y, x0 - c1x) + turn * HALF_PI
    hj = math.atan2(c2y - c1y, c2x - c1x) + turn * HALF_PI
    return True, arc(turn * (hj - depart)), arc(turn * (hj - beta)), wrap(depart)


# ---------------------------------------------------------------------------
# candidate generators (canonical frame, non-wrapping intervals)
# ---------------------------------------------------------------------------

@njit(cache=True)
def push(buf, n, d, case, code, m0, m1, m2, dep, arr):
    if n >= buf.shape[0]:
        return n
    if not closes(code, m0, m1, m2, dep, arr, d):
        return n
    buf[n, C_CASE] = case
    buf[n, C_WORD] = code
    buf[n, C_M0] = m0
    buf[n, C_M1] = m1
    buf[n, C_M2] = m2
    buf[n, C_DEP] = dep
    buf[n, C_ARR] = arr
    buf[n, C_LEN] = m0 + m1 + m2
    return n + 1


@njit(cache=True)
def gen_free_free(d, lo1, hi1, lo2, hi2, tol, guard, buf, n):
    if d <= 0.0:
        return n
    if in_interval(0.0, lo1, hi1, tol) and in_interval(0.0, lo2, hi2, tol):
        n = push(buf, n, d, K_FREE_FREE, W_S, d, 0.0, 0.0, 0.0, 0.0)
    if d <= 2.0 + EDGE:
        # single major arcs on the two circles through both targets
        h = _safe_sqrt(1.0 - 0.25 * d * d)
        for sgn in (1.0, -1.0):
            cx = 0.5 * d
            cy = sgn * h
            a1 = math.atan2(-cy, -cx)
            a2 = math.atan2(-cy, d - cx)
            sweep = arc(a2 - a1)
            if sweep > math.pi + guard:
                dep = wrap(a1 + HALF_PI)
                arr = wrap(a2 + HALF_PI)
                if in_interval(dep, lo1, hi1, tol) and in_interval(arr, lo2, hi2, tol):
                    n = push(buf, n, d, K_FREE_FREE, W_L, sweep, 0.0, 0.0, dep, arr)
            sweep = arc(a1 - a2)
            if sweep > math.pi + guard:
                dep = wrap(a1 - HALF_PI)
                arr = wrap(a2 - HALF_PI)
                if in_interval(dep, lo1, hi1, tol) and in_interval(arr, lo2, hi2, tol):
                    n = push(buf, n, d, K_FREE_FREE, W_R, sweep, 0.0, 0.0, dep, arr)
    if d <= 4.0:
        # equal major arcs meeting at the midpoint; chord d/2 = 2 sin(sweep/2)
        sweep = TWO_PI - 2.0 * math.asin(min(1.0, 0.25 * d))
        if sweep > math.pi + guard:
            for code, th in ((W_LR, wrap(-0.5 * sweep)), (W_RL, wrap(0.5 * sweep))):
                if in_interval(th, lo1, hi1, tol) and in_interval(th, lo2, hi2, tol):
                    n = push(buf, n, d, K_FREE_FREE, code, sweep, sweep, 0.0, th, th)
    return n


@njit(cache=True)
def _push_word(buf, n, d, case, code, a, b, guard):
    ok, m0, m1, m2 = word_path(code, d, a, b, True, guard)
    if ok:
        n = push(buf, n, d, case, code, m0, m1, m2, a, b)
    return n


@njit(cache=True)
def gen_pinned_pinned(d, lo1, hi1, lo2, hi2, fixed, guard, buf, n):
    if fixed:
        for code in (W_LSR, W_RSR, W_RLR):
            n = _push_word(buf, n, d, K_FIXED_MAX, code, lo1, hi2, guard)
        for code in (W_RSL, W_LSL, W_LRL):
            n = _push_word(buf, n, d, K_FIXED_MIN, code, lo1, lo2, guard)
        return n
    n = _push_word(buf, n, d, K_MAX_MAX, W_LSR, hi1, hi2, guard)
    n = _push_word(buf, n, d, K_MAX_MIN, W_LSL, hi1, lo2, guard)
    n = _push_word(buf, n, d, K_MAX_MIN, W_LRL, hi1, lo2, guard)
    n = _push_word(buf, n, d, K_MIN_MIN, W_RSL, lo1, lo2, guard)
    n = _push_word(buf, n, d, K_MIN_MAX, W_RSR, lo1, hi2, guard)
    n = _push_word(buf, n, d, K_MIN_MAX, W_RLR, lo1, hi2, guard)
    return n


@njit(cache=True)
def _pinned_start(d, th, turn, case, lo2, hi2, tol, guard, buf, n):
    ok, sweep, s, arr = cs_to_point(0.0, 0.0, th, d, 0.0, turn)
    if ok and in_interval(arr, lo2, hi2, tol):
        n = push(buf, n, d, case, W_LS if turn > 0 else W_RS, sweep, s, 0.0, th, arr)
    for root in (1.0, -1.0):
        ok, p1, p2, arr = cc_to_point(0.0, 0.0, th, d, 0.0, turn, root)
        if ok and p2 > math.pi + guard and in_interval(arr, lo2, hi2, tol):
            n = push(buf, n, d, case, W_LR if turn > 0 else W_RL, p1, p2, 0.0, th, arr)
    return n


@njit(cache=True)
def gen_pinned_free(d, lo1, hi1, lo2, hi2, fixed, tol, guard, buf, n):
    if fixed:
        n = _pinned_start(d, lo1, 1.0, K_FIXED_FREE, lo2, hi2, tol, guard, buf, n)
        n = _pinned_start(d, lo1, -1.0, K_FIXED_FREE, lo2, hi2, tol, guard, buf, n)
        return n
    n = _pinned_start(d, hi1, 1.0, K_MAX_FREE, lo2, hi2, tol, guard, buf, n)
    n = _pinned_start(d, lo1, -1.0, K_MIN_FREE, lo2, hi2, tol, guard, buf, n)
    return n


@njit(cache=True)
def _pinned_end_reversed(d, th, turn, case, lo1, hi1, tol, guard, buf, n):
    # solve the time-reversed problem from (d, 0, th + pi) back to the origin;
    # the reversed path starts with the mirror turn of the forward final arc
    rturn = -turn
    rth = wrap(th + math.pi)
    ok, sweep, s, rarr = cs_to_point(d, 0.0, rth, 0.0, 0.0, rturn)
    if ok:
        dep = wrap(rarr + math.pi)
        if in_interval(dep, lo1, hi1, tol):
            n = push(buf, n, d, case, W_SR if turn < 0 else W_SL, s, sweep, 0.0, dep, th)
    for root in (1.0, -1.0):
        ok, p1, p2, rarr = cc_to_point(d, 0.0, rth, 0.0, 0.0, rturn, root)
        if ok and p2 > math.pi + guard:
            dep = wrap(rarr + math.pi)
            if in_interval(dep, lo1, hi1, tol):
                n = push(buf, n, d, case, W_LR if turn < 0 else W_RL, p2, p1, 0.0, dep, th)
    return n


@njit(cache=True)
def gen_free_pinned(d, lo1, hi1, lo2, hi2, tol, guard, buf, n):
    n = _pinned_end_reversed(d, hi2, -1.0, K_FREE_MAX, lo1, hi1, tol, guard, buf, n)
    n = _pinned_end_reversed(d, lo2, 1.0, K_FREE_MIN, lo1, hi1, tol, guard, buf, n)
    return n


@njit(cache=True)
def _pinned_end_direct(d, th, turn, case, lo1, hi1, tol, guard, buf, n):
    ok, s, sweep, dep = sc_to_pose(0.0, 0.0, d, 0.0, th, turn)
    if ok and in_interval(dep, lo1, hi1, tol):
        n = push(buf, n, d, case, W_SR if turn < 0 else W_SL, s, sweep, 0.0, dep, th)
    for root in (1.0, -1.0):
        ok, p1, p2, dep = cc_to_pose(0.0, 0.0, d, 0.0, th, -turn, root)
        if ok and p1 > math.pi + guard and in_interval(dep, lo1, hi1, tol):
            n = push(buf, n, d, case, W_LR if turn < 0 else W_RL, p1, p2, 0.0, dep, th)
    return n


@njit(cache=True)
def gen_free_pinned_direct(d, lo1, hi1, lo2, hi2, tol, guard, buf, n):
    n = _pinned_end_direct(d, hi2, -1.0, K_FREE_MAX, lo1, hi1, tol, guard, buf, n)
    n = _pinned_end_direct(d, lo2, 1.0, K_FREE_MIN, lo1, hi1, tol, guard, buf, n)
    return n


@njit(cache=True)
def generate(d, lo1, hi1, lo2, hi2, mask, fixed, tol, guard, buf):
    n = 0
    if mask & G_FREE_FREE and not fixed:
        n = gen_free_free(d, lo1, hi1, lo2, hi2, tol, guard, buf, n)
    if mask & G_PINNED_PINNED:
        n = gen_pinned_pinned(d, lo1, hi1, lo2, hi2, fixed, guard, buf, n)
    if mask & G_PINNED_FREE:
        n = gen_pinned_free(d, lo1, hi1, lo2, hi2, fixed, tol, guard, buf, n)
    if mask & G_FREE_PINNED and not fixed:
        n = gen_free_pinned(d, lo1, hi1, lo2, hi2, tol, guard, buf, n)
    if mask & G_FREE_PINNED_DIRECT and not fixed:
        n = gen_free_pinned_direct(d, lo1, hi1, lo2, hi2, tol, guard, buf, n)
    return n


# ---------------------------------------------------------------------------
# frame handling and whole-instance solve
# ---------------------------------------------------------------------------

@njit(cache=True)
def split_interval(lo, hi, rot):
    """Shift [lo, hi] by -rot; returns (count, a0, b0, a1, b1) of non-wrapping pieces."""
    width = hi - lo
    if width >= TWO_PI - EDGE:
        return 1, 0.0, TWO_PI, 0.0, 0.0
    a = wrap(lo - rot)
    b = a + width
    if b <= TWO_PI:
        return 1, a, b, 0.0, 0.0
    return 2, a, TWO_PI, 0.0, b - TWO_PI


@njit(cache=True)
def _snap_pin(th, lo, hi):
    if angle_gap(th, lo) <= PIN_SNAP:
        return lo
    if angle_gap(th, hi) <= PIN_SNAP:
        return hi
    return th


@njit(cache=True)
def map_row(row, rot, rho, lo1, hi1, lo2, hi2, out):
    """Canonical candidate row -> original frame (straights and length scaled by rho)."""
    code = int(row[C_WORD])
    out[C_CASE] = row[C_CASE]
    out[C_WORD] = row[C_WORD]
    total = 0.0
    for k in range(3):
        m = row[C_M0 + k]
        kind = KINDS[code, k]
        if kind == 0:
            m = m * rho
            total += m
        elif kind != 9:
            total += m * rho
        out[C_M0 + k] = m
    out[C_DEP] = _snap_pin(wrap(row[C_DEP] + rot), lo1, hi1)
    out[C_ARR] = _snap_pin(wrap(row[C_ARR] + rot), lo2, hi2)
    out[C_LEN] = total


@njit(cache=True)
def _common_heading(lo1, hi1, lo2, hi2, tol):
    lo = max(lo1, lo2)
    if lo <= min(hi1, hi2) + tol:
        return True, lo
    if (hi1 >= TWO_PI - tol and lo2 <= tol) or (hi2 >= TWO_PI - tol and lo1 <= tol):
        return True, 0.0
    return False, 0.0


@njit(cache=True)
def solve_one(x1, y1, lo1, hi1, x2, y2, lo2, hi2, rho, fixed, tol, guard, buf, out):
    """Optimal path for one instance; writes an original-frame row into ``out``.

    Returns False only if no candidate survived, which indicates a bug.
    """
    dx = x2 - x1
    dy = y2 - y1
    dist = math.hypot(dx, dy)
    if dist == 0.0:
        ok, th = _common_heading(lo1, hi1, lo2, hi2, tol)
        if ok:
            out[C_CASE] = K_FIXED_FREE if fixed else K_FREE_FREE
            out[C_WORD] = W_LS if fixed else W_S
            out[C_M0] = 0.0
            out[C_M1] = 0.0
            out[C_M2] = 0.0
            out[C_DEP] = lo1 if fixed else th
            out[C_ARR] = th
            out[C_LEN] = 0.0
            return True
    rot = math.atan2(dy, dx) if dist > 0.0 else 0.0
    d = dist / rho
    k1, a10, b10, a11, b11 = split_interval(lo1, hi1, rot)
    k2, a20, b20, a21, b21 = split_interval(lo2, hi2, rot)
    if fixed:
        k1 = 1
        a10 = wrap(lo1 - rot)
        b10 = a10
    best = np.inf
    best_rank = len(WORDS)
    found = False
    mask = G_INTERVAL
    for i in range(k1):
        la = a10 if i == 0 else a11
        ha = b10 if i == 0 else b11
        for j in range(k2):
            lb = a20 if j == 0 else a21
            hb = b20 if j == 0 else b21
            n = generate(d, la, ha, lb, hb, mask, fixed, tol, guard, buf)
            for r in range(n):
                length = buf[r, C_LEN]
                rank = WORD_RANK[int(buf[r, C_WORD])]
                if length < best - TIE or (length <= best + TIE and rank < best_rank):
                    best = min(best, length)
                    best_rank = rank
                    map_row(buf[r], rot, rho, lo1, hi1, lo2, hi2, out)
                    found = True
    if fixed and found:
        out[C_DEP] = lo1
    return found


@njit(cache=True)
def solve_batch(x1, y1, lo1, hi1, x2, y2, lo2, hi2, rho, fixed, tol, guard, out):
    buf = np.empty((MAX_ROWS, NCOL))
    ok = np.empty(x1.shape[0], dtype=np.bool_)
    for i in range(x1.shape[0]):
        ok[i] = solve_one(x1[i], y1[i], lo1[i], hi1[i], x2[i], y2[i], lo2[i], hi2[i],
                          rho[i], fixed, tol, guard, buf, out[i])
    return ok
