import xml.etree.ElementTree as ET

import numpy as np
import pytest

from ldgc import compute_ldgc, fit_affine, signed_curvature
from ldgc.engine import interior_points
from ldgc.errors import EmptyData
from ldgc.svg import nice_ticks, render_curvature_profile_svg, render_curve_svg, render_ldgc_svg

NS = {"svg": "http://www.w3.org/2000/svg"}


def series(svg_text):
    root = ET.fromstring(svg_text.split("\n", 1)[1])
    found = {}
    for el in root.iter():
        cls = el.get("class", "")
        if cls.startswith("series"):
            found.setdefault(cls.split()[1], []).append(el)
    return root, found


def polyline_xy(el):
    return np.array([[float(v) for v in p.split(",")] for p in el.get("points").split()])


def test_circle_ldgc_single_marker(arc):
    r = compute_ldgc(arc)
    _, found = series(render_ldgc_svg(r.points, None))
    assert list(found) == ["markers"]
    assert len(found["markers"][0]) == 1


def test_clothoid_ldgc_descends(clothoid):
    r = compute_ldgc(clothoid)
    fit = fit_affine(interior_points(r.points))
    root, found = series(render_ldgc_svg(r.points, fit))
    assert root.tag == "{http://www.w3.org/2000/svg}svg" and root.get("version") == "1.1"
    assert len(found["markers"][0]) == len(r.points)
    line = polyline_xy(found["fit"][0])
    # screen y grows downward: a descending line has increasing pixel y
    assert line[1, 1] > line[0, 1]


def test_involute_ldgc_ascends(involute):
    from ldgc import AnalysisConfig
    r = compute_ldgc(involute, AnalysisConfig(weighting="arclengthWeighted"))
    _, found = series(render_ldgc_svg(r.points, fit_affine(interior_points(r.points))))
    line = polyline_xy(found["fit"][0])
    assert line[1, 1] < line[0, 1]


def test_curve_and_profile(paper_bezier):
    ts = np.linspace(paper_bezier.domain.alpha, paper_bezier.domain.beta, 64)
    _, found = series(render_curve_svg(paper_bezier, ts))
    assert len(polyline_xy(found["line"][0])) == 64
    _, found = series(render_curvature_profile_svg(ts, signed_curvature(paper_bezier, ts)))
    assert len(found["line"]) == 1


def test_points_inside_canvas(clothoid):
    svg = render_curve_svg(clothoid, 200)
    _, found = series(svg)
    xy = polyline_xy(found["line"][0])
    assert xy[:, 0].min() >= 0 and xy[:, 0].max() <= 480
    assert xy[:, 1].min() >= 0 and xy[:, 1].max() <= 360


def test_empty():
    with pytest.raises(EmptyData):
        render_ldgc_svg([])
    with pytest.raises(EmptyData):
        render_curvature_profile_svg([], [])


def test_nice_ticks():
    assert nice_ticks(0.0, 1.0) == pytest.approx([0.0, 0.2, 0.4, 0.6, 0.8, 1.0])
    ticks = nice_ticks(-3.7, -1.2)
    assert ticks[0] >= -3.7 and ticks[-1] <= -1.2 and len(ticks) >= 3
