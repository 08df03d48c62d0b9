from pathlib import Path

import numpy as np
import pytest

from ldgc import (
    PAPER_BEZIER_POINTS,
    CircleInvoluteCurve,
    CircularArcCurve,
    ClothoidCurve,
    CubicBezierCurve,
)

ROOT = Path(__file__).resolve().parents[1]
SPECS = ROOT / "specs"
FIXTURES = Path(__file__).resolve().parent / "fixtures"

# The paper's curves, with start parameters moved off points where the
# curvature vanishes (t = 0 for the clothoid and the Bezier).
FIGURE_CURVES = {
    "clothoid": lambda: ClothoidCurve(1.0, (0.01, 1.5)),
    "involute": lambda: CircleInvoluteCurve((0.5, 2 * np.pi)),
    "bezier3": lambda: CubicBezierCurve(PAPER_BEZIER_POINTS, (1e-6, 1.0)),
}


@pytest.fixture
def clothoid():
    return FIGURE_CURVES["clothoid"]()


@pytest.fixture
def involute():
    return FIGURE_CURVES["involute"]()


@pytest.fixture
def paper_bezier():
    return FIGURE_CURVES["bezier3"]()


@pytest.fixture
def arc():
    return CircularArcCurve(2.0, (0.0, 1.0))


@pytest.fixture(params=sorted(FIGURE_CURVES) + ["circle"])
def any_curve(request):
    if request.param == "circle":
        return CircularArcCurve(2.0, (0.0, 1.0))
    return FIGURE_CURVES[request.param]()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[0].lstrip("#"))):
        terminalreporter.write_line(line)
