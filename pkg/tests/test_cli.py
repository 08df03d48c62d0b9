import json
import xml.etree.ElementTree as ET

import pytest
from click.testing import CliRunner

from ldgc.cli import main

from conftest import SPECS

FIGURE_SPECS = ["figure1_clothoid.json", "figure2_involute.json", "figure3_bezier.json"]
OUTPUTS = {"report.json", "histogram.csv", "curve.svg", "curvature_profile.svg", "ldgc.svg"}


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, [str(a) for a in args])


def test_analyze_clothoid(runner, tmp_path):
    res = run(runner, "analyze", SPECS / "figure1_clothoid.json", "-o", tmp_path)
    assert res.exit_code == 0, res.output
    assert {p.name for p in tmp_path.iterdir()} == OUTPUTS
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["slope"] == pytest.approx(-1.0, abs=0.05)
    for name in ("curve.svg", "curvature_profile.svg", "ldgc.svg"):
        ET.fromstring((tmp_path / name).read_text().split("\n", 1)[1])


def test_analyze_straight_line(runner, tmp_path):
    spec = tmp_path / "line.json"
    spec.write_text('{"kind":"bezier3","params":{"points":[[0,0],[1,1],[2,2],[3,3]]},"domain":[0,1]}')
    res = run(runner, "analyze", spec, "-o", tmp_path / "out")
    assert res.exit_code == 3
    assert "CurvatureVanishes" in res.output
    assert "t=" in res.output


def test_classes_override(runner, tmp_path):
    res = run(runner, "analyze", SPECS / "figure2_involute.json", "-o", tmp_path, "--classes", 10, "--no-svg")
    assert res.exit_code == 0
    assert len((tmp_path / "histogram.csv").read_text().splitlines()) == 11
    assert not (tmp_path / "ldgc.svg").exists()


def test_validation_error_exit(runner, tmp_path):
    spec = tmp_path / "bad.json"
    spec.write_text('{"kind":"circle"}')
    res = run(runner, "analyze", spec, "-o", tmp_path)
    assert res.exit_code == 2
    assert "params.radius" in res.output


def test_parse_error_exit(runner, tmp_path):
    spec = tmp_path / "bad.json"
    spec.write_text("{not json")
    assert run(runner, "analyze", spec).exit_code == 2


def test_missing_spec(runner, tmp_path):
    assert run(runner, "analyze", tmp_path / "nope.json").exit_code == 2


def test_unwritable_output(runner, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    res = run(runner, "analyze", SPECS / "circle_arc.json", "-o", blocker / "sub")
    assert res.exit_code == 4


def test_nudge_warning(runner, tmp_path):
    res = run(runner, "analyze", SPECS / "figure3_bezier.json", "-o", tmp_path, "--no-svg")
    assert res.exit_code == 0
    assert "warning: t_start moved" in res.output


def test_byte_identical_reruns(runner, tmp_path):
    for out in ("a", "b"):
        assert run(runner, "analyze", SPECS / "figure3_bezier.json", "-o", tmp_path / out,
                   "--weighting", "arclengthWeighted").exit_code == 0
    for name in ("report.json", "histogram.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_compare_clothoid(runner, tmp_path):
    assert run(runner, "compare", SPECS / "figure1_clothoid.json", "-o", tmp_path).exit_code == 0
    doc = json.loads((tmp_path / "compare.json").read_text())
    assert doc["distance"] <= 1e-9
    assert doc["ldgcSlope"] == pytest.approx(doc["lddcSlope"], abs=1e-9)
    assert doc["ldgcSeconds"] > 0 and doc["lddcSeconds"] > 0


def test_compare_circle(runner, tmp_path):
    assert run(runner, "compare", SPECS / "circle_arc.json", "-o", tmp_path).exit_code == 0
    doc = json.loads((tmp_path / "compare.json").read_text())
    assert doc["distance"] == 0.0 and doc["classCount"] == 1
    assert doc["ldgcSlope"] is None and doc["lddcSlope"] is None


def test_bench_small(runner, tmp_path):
    res = run(runner, "bench", SPECS / "figure3_bezier.json", "-o", tmp_path,
              "--segments", 100, "--repetitions", 5, "--seed", 3)
    assert res.exit_code == 0, res.output
    doc = json.loads((tmp_path / "bench.json").read_text())
    assert len(doc["ldgc"]["seconds"]) == 5 and len(doc["lddc"]["seconds"]) == 5
    assert doc["speedup"] > 0 and doc["segments"] == 100


def test_bench_needs_three_repetitions(runner, tmp_path):
    res = run(runner, "bench", SPECS / "figure3_bezier.json", "-o", tmp_path, "--repetitions", 2)
    assert res.exit_code == 2
