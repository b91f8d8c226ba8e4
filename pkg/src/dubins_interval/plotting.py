"""SVG figures of solved instances.

Each instance is drawn as two target markers, a wedge ("fan") at each
target spanning its heading interval, and the sampled optimal path.
Artists carry stable ids (``target1-3``, ``fan2-3``, ``path-3`` for
instance 3) so the SVG can be inspected programmatically.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import matplotlib

from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure
from matplotlib.patches import Wedge

from .geometry import IntervalInstance, Pose
from .paths import SolvedPath
from .records import sample_polyline

STYLE = {
    "path_color": "#1f4e79",
    "path_width": 1.6,
    "target_color": "#b22222",
    "target_size": 18,
    "fan1_color": "#2e8b57",
    "fan2_color": "#d2691e",
    "fan_alpha": 0.25,
}

# rcParams that make matplotlib's SVG byte-stable between runs
_STABLE_RC = {
    "svg.hashsalt": "dubins-interval",
    "svg.fonttype": "none",
    "path.simplify": False,
}


@dataclass(frozen=True)
class SvgOptions:
    step: float = 0.05  # max sampling step, in path units
    scale: Optional[float] = None  # path units per pixel; None auto-fits
    margin: float = 0.08  # fraction of the extent added on every side
    fan_radius: Optional[float] = None  # defaults to 0.6 * rho
    width_in: float = 6.0  # figure width when auto-fitting
    dpi: int = 72


def _fan(ax, centre, interval, radius, colour, gid):
    lo, hi = math.degrees(interval.lo), math.degrees(interval.hi)
    if interval.width == 0:
        x, y = centre
        ax.plot([x, x + radius * math.cos(interval.lo)], [y, y + radius * math.sin(interval.lo)],
                color=colour, lw=1.0, gid=gid)
        return
    ax.add_patch(Wedge(centre, radius, lo, hi, facecolor=colour, alpha=STYLE["fan_alpha"],
                       edgecolor=colour, lw=0.6, gid=gid))


def render_svg(instances: Sequence[IntervalInstance], solutions: Sequence[SolvedPath],
               options: SvgOptions = SvgOptions()) -> str:
    """One SVG document with every instance and its path; deterministic output."""
    if len(instances) != len(solutions):
        raise ValueError("need exactly one solution per instance")

    polylines = []
    xs, ys = [], []
    for inst, path in zip(instances, solutions):
        pts = sample_polyline(path, Pose(inst.p1[0], inst.p1[1], path.depart), inst.rho, options.step)
        polylines.append(pts)
        r = options.fan_radius if options.fan_radius is not None else 0.6 * inst.rho
        for px, py in pts:
            xs.append(px)
            ys.append(py)
        for cx, cy in (inst.p1, inst.p2):
            xs += [cx - r, cx + r]
            ys += [cy - r, cy + r]

    if xs:
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0, x1, y0, y1 = 0.0, 1.0, 0.0, 1.0
    w = max(x1 - x0, 1e-9)
    h = max(y1 - y0, 1e-9)
    pad = options.margin * max(w, h)
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    w, h = x1 - x0, y1 - y0

    if options.scale is not None:
        fig_w = w / options.scale / options.dpi
        fig_h = h / options.scale / options.dpi
    else:
        fig_w = options.width_in
        fig_h = options.width_in * h / w

    fig = Figure(figsize=(fig_w, fig_h), dpi=options.dpi)
    FigureCanvasSVG(fig)
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal", adjustable="box")
    ax.set_axis_off()

    for i, (inst, pts) in enumerate(zip(instances, polylines)):
        r = options.fan_radius if options.fan_radius is not None else 0.6 * inst.rho
        _fan(ax, inst.p1, inst.theta1, r, STYLE["fan1_color"], f"fan1-{i}")
        _fan(ax, inst.p2, inst.theta2, r, STYLE["fan2_color"], f"fan2-{i}")
        ax.plot([p[0] for p in pts], [p[1] for p in pts], color=STYLE["path_color"],
                lw=STYLE["path_width"], gid=f"path-{i}")
        for k, (cx, cy) in enumerate((inst.p1, inst.p2), 1):
            ax.scatter([cx], [cy], s=STYLE["target_size"], color=STYLE["target_color"],
                       zorder=3, gid=f"target{k}-{i}")

    buf = io.StringIO()
    with matplotlib.rc_context(_STABLE_RC):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def write_svg(path, instances, solutions, options: SvgOptions = SvgOptions()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(instances, solutions, options))
