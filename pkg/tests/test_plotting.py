import math
import re
import xml.etree.ElementTree as ET

import pytest

from dubins_interval import AngleInterval, IntervalInstance, solve_interval
from dubins_interval.plotting import SvgOptions, render_svg, write_svg

SVG = "{http://www.w3.org/2000/svg}"


def by_gid(doc, gid):
    root = ET.fromstring(doc)
    return [el for el in root.iter() if el.get("id") == gid]


def straight():
    inst = IntervalInstance((0, 0), AngleInterval(0, math.pi / 2), (10, 0), AngleInterval(0, math.pi / 2), 1.0)
    return inst, solve_interval(inst)


def test_straight_path_drawn():
    inst, path = straight()
    doc = render_svg([inst], [path])
    groups = by_gid(doc, "path-0")
    assert len(groups) == 1
    d = groups[0].find(f"{SVG}path").get("d")
    assert len(re.findall(r"[ML]", d)) >= 2
    for gid in ("fan1-0", "fan2-0", "target1-0", "target2-0"):
        assert len(by_gid(doc, gid)) == 1


def test_empty_document_is_valid_svg():
    root = ET.fromstring(render_svg([], []))
    assert root.tag == f"{SVG}svg"


def test_output_is_deterministic(tmp_path):
    inst, path = straight()
    other = IntervalInstance((2, 3), AngleInterval.point(1.0), (2, 4), AngleInterval.full(), 0.7)
    args = ([inst, other], [path, solve_interval(other)])
    assert render_svg(*args) == render_svg(*args)
    write_svg(tmp_path / "a.svg", *args)
    write_svg(tmp_path / "b.svg", *args)
    assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()


def test_fixed_scale_sets_size():
    inst, path = straight()
    doc = render_svg([inst], [path], SvgOptions(scale=0.05, margin=0.0))
    root = ET.fromstring(doc)
    width = float(root.get("width").rstrip("pt"))
    # extent is 10 + 2 * 0.6 fan radius = 11.2 units at 0.05 units per pixel
    assert width == pytest.approx(11.2 / 0.05, rel=1e-3)


def test_mismatched_lengths():
    inst, path = straight()
    with pytest.raises(ValueError):
        render_svg([inst], [])
