import json

import numpy as np
import pytest

from ldgc import AnalysisConfig, aesthetic_report, compute_ldgc
from ldgc.errors import ParseError, ValidationError
from ldgc.serialization import (
    REPORT_KEYS,
    analysis_config,
    build_curve,
    nudge_domain,
    parse_curve_spec,
    read_histogram_csv,
    write_histogram_csv,
    write_report_json,
)
from ldgc.geometry import ClothoidCurve, CubicBezierCurve

from conftest import SPECS


class TestParse:
    def test_figure1_clothoid(self):
        spec = parse_curve_spec('{"kind":"clothoid","params":{"B":1},"domain":[0.01,1.5]}')
        curve = build_curve(spec)
        assert isinstance(curve, ClothoidCurve)
        assert curve.B == 1.0 and (curve.domain.alpha, curve.domain.beta) == (0.01, 1.5)

    def test_paper_bezier(self):
        spec = parse_curve_spec(
            '{"kind":"bezier3","params":{"points":[[0,1],[1,1],[2,1],[3,1.5]]},"domain":[0,1]}')
        curve = build_curve(spec)
        assert isinstance(curve, CubicBezierCurve)
        assert curve.points.tolist() == [[0, 1], [1, 1], [2, 1], [3, 1.5]]

    def test_missing_radius(self):
        with pytest.raises(ValidationError) as err:
            parse_curve_spec('{"kind":"circle"}')
        assert err.value.field == "params.radius"

    def test_unknown_field_path(self):
        with pytest.raises(ValidationError) as err:
            parse_curve_spec('{"kind":"circle","params":{"radius":1,"colour":"red"},"domain":[0,1]}')
        assert err.value.field == "params.colour"
        with pytest.raises(ValidationError) as err:
            parse_curve_spec('{"kind":"involute","params":{},"domain":[1,2],"analysis":{"bins":3}}')
        assert err.value.field == "analysis.bins"

    def test_syntax_error_line(self):
        with pytest.raises(ParseError) as err:
            parse_curve_spec('{\n"kind": "circle",\n"params": {,}\n}')
        assert err.value.line == 3

    @pytest.mark.parametrize("doc, field", [
        ('{"kind":"spiral","params":{},"domain":[0,1]}', "kind"),
        ('{"kind":"clothoid","params":{"B":-1},"domain":[0,1]}', "params.B"),
        ('{"kind":"clothoid","params":{"B":1},"domain":[1,0]}', "domain"),
        ('{"kind":"clothoid","params":{"B":1},"domain":[-1,1]}', "domain[0]"),
        ('{"kind":"clothoid","params":{"B":1}}', "domain"),
        ('{"kind":"bezier3","params":{"points":[[0,0],[1,1]]},"domain":[0,1]}', "params.points"),
        ('{"kind":"bezier3","params":{"points":[[0,0],[1,1],[2,"a"],[3,3]]},"domain":[0,1]}',
         "params.points[2][1]"),
        ('{"kind":"bezier3","params":{"points":[[1,1],[1,1],[1,1],[1,1]]},"domain":[0,1]}', "params.points"),
        ('{"kind":"involute","params":{},"domain":[1,2],"analysis":{"weighting":"x"}}', "analysis.weighting"),
        ('{"kind":"involute","params":{},"domain":[1,2],"analysis":{"segments":2.5}}', "analysis.segments"),
        ('{"kind":"involute","params":{},"domain":[1,2],"analysis":{"logBase":1}}', "analysis.logBase"),
        ('[1, 2]', "$"),
    ])
    def test_validation(self, doc, field):
        with pytest.raises(ValidationError) as err:
            parse_curve_spec(doc)
        assert err.value.field == field

    def test_repo_specs_parse(self):
        kinds = {parse_curve_spec(p.read_text()).kind for p in SPECS.glob("*.json")}
        assert kinds == {"clothoid", "involute", "bezier3", "circle"}


class TestConfigMerge:
    def test_overrides_win(self):
        spec = parse_curve_spec(
            '{"kind":"involute","params":{},"domain":[1,2],"analysis":{"segments":500,"classes":20}}')
        cfg = analysis_config(spec, classes=10)
        assert (cfg.segments, cfg.class_count) == (500, 10)

    def test_inconsistent(self):
        spec = parse_curve_spec('{"kind":"involute","params":{},"domain":[1,2],"analysis":{"segments":5}}')
        with pytest.raises(ValidationError):
            analysis_config(spec)


class TestNudge:
    def test_clothoid_start(self):
        curve, notes = nudge_domain(ClothoidCurve(1.0, (0.0, 1.5)))
        assert curve.domain.alpha == 1e-6 and len(notes) == 1

    def test_bezier_flat_start(self):
        curve, notes = nudge_domain(CubicBezierCurve([[0, 1], [1, 1], [2, 1], [3, 1.5]]))
        assert (curve.domain.alpha, curve.domain.beta) == (1e-6, 1.0)

    def test_untouched(self):
        c = ClothoidCurve(1.0, (0.01, 1.5))
        assert nudge_domain(c) == (c, [])


class TestCsv:
    def test_circle_one_row(self, arc):
        r = compute_ldgc(arc)
        lines = write_histogram_csv(r.histogram, r.partition).splitlines()
        assert lines[0] == "class_index,beta_mid,count,length,log_length"
        assert len(lines) == 2

    def test_hundred_rows(self, paper_bezier):
        r = compute_ldgc(paper_bezier)
        table = read_histogram_csv(write_histogram_csv(r.histogram, r.partition))
        assert table["count"].size == 100 and table["count"].sum() == 10000
        empty = table["count"] == 0
        assert empty.any() and np.all(np.isnan(table["log_length"][empty]))

    def test_round_trip(self, involute):
        r = compute_ldgc(involute, AnalysisConfig(weighting="arclengthWeighted"))
        table = read_histogram_csv(write_histogram_csv(r.histogram, r.partition))
        assert np.allclose(table["length"], r.histogram.lengths, rtol=1e-9, atol=0)
        assert np.allclose(table["beta_mid"], r.partition.midpoints, rtol=1e-9, atol=1e-15)
        nz = table["count"] > 0
        assert np.allclose(table["log_length"][nz], r.histogram.log_lengths[nz], rtol=1e-9)


class TestReportJson:
    def test_circle_null_slope(self, arc):
        doc = json.loads(write_report_json(aesthetic_report(arc)))
        assert doc["constantCurvature"] is True and doc["slope"] is None
        assert doc["pointCount"] == 1

    def test_clothoid_slope(self, clothoid):
        report = aesthetic_report(clothoid)
        doc = json.loads(write_report_json(report))
        assert doc["slope"] == pytest.approx(-1.0, abs=0.05)
        assert doc["slope"] == report.slope
        assert doc["fullFit"]["pointCount"] == report.point_count

    def test_fixed_keys(self, paper_bezier):
        doc = json.loads(write_report_json(aesthetic_report(paper_bezier)))
        assert tuple(doc) == REPORT_KEYS
