"""Curve-spec parsing plus CSV/JSON writers for histograms and reports.

A curve spec is a JSON object::

    {"kind": "bezier3",
     "params": {"points": [[0, 1], [1, 1], [2, 1], [3, 1.5]]},
     "domain": [0, 1],
     "analysis": {"segments": 10000, "classes": 100,
                  "weighting": "paperFaithful", "logBase": 10}}

``analysis`` is optional, as is a free-text ``name``.
"""
import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .engine import AnalysisConfig, Weighting
from .errors import ParseError, ValidationError
from .geometry import (
    CURVATURE_FLOOR,
    SPEED_FLOOR,
    CircleInvoluteCurve,
    CircularArcCurve,
    ClothoidCurve,
    CubicBezierCurve,
)

NUDGE = 1e-6

_PARAMS = {
    "clothoid": {"B"},
    "involute": set(),
    "bezier3": {"points"},
    "circle": {"radius"},
}
_ANALYSIS = {"segments", "classes", "weighting", "logBase"}


@dataclass
class CurveSpec:
    kind: str
    params: dict
    domain: tuple
    analysis: dict = field(default_factory=dict)
    name: str = ""


def _number(value, path, positive=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ValidationError(path, "must be a finite number")
    if positive and not value > 0:
        raise ValidationError(path, "must be positive")
    return float(value)


def _integer(value, path, minimum):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(path, "must be an integer")
    if value < minimum:
        raise ValidationError(path, f"must be at least {minimum}")
    return value


def _check_keys(obj, allowed, path):
    for key in obj:
        if key not in allowed:
            where = f"{path}.{key}" if path else key
            raise ValidationError(where, "unknown field")


def parse_curve_spec(text):
    """Parse and validate a curve spec document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise ValidationError("$", "spec must be a JSON object")
    _check_keys(doc, {"kind", "params", "domain", "analysis", "name"}, "")

    kind = doc.get("kind")
    if kind not in _PARAMS:
        raise ValidationError("kind", f"must be one of {sorted(_PARAMS)}")

    params = doc.get("params", {})
    if not isinstance(params, dict):
        raise ValidationError("params", "must be an object")
    _check_keys(params, _PARAMS[kind], "params")
    for key in sorted(_PARAMS[kind]):
        if key not in params:
            raise ValidationError(f"params.{key}", "required")
    clean = {}
    if kind == "clothoid":
        clean["B"] = _number(params["B"], "params.B", positive=True)
    elif kind == "circle":
        clean["radius"] = _number(params["radius"], "params.radius", positive=True)
    elif kind == "bezier3":
        pts = params["points"]
        if not isinstance(pts, list) or len(pts) != 4:
            raise ValidationError("params.points", "must list four control points")
        clean["points"] = []
        for i, p in enumerate(pts):
            if not isinstance(p, list) or len(p) != 2:
                raise ValidationError(f"params.points[{i}]", "must be an [x, y] pair")
            clean["points"].append([_number(v, f"params.points[{i}][{k}]") for k, v in enumerate(p)])
        if all(p == clean["points"][0] for p in clean["points"]):
            raise ValidationError("params.points", "control points must not all coincide")

    if "domain" not in doc:
        raise ValidationError("domain", "required")
    dom = doc["domain"]
    if not isinstance(dom, list) or len(dom) != 2:
        raise ValidationError("domain", "must be a [t0, t1] pair")
    t0, t1 = _number(dom[0], "domain[0]"), _number(dom[1], "domain[1]")
    if not t0 < t1:
        raise ValidationError("domain", "need t0 < t1")
    if kind in ("clothoid", "involute") and t0 < 0:
        raise ValidationError("domain[0]", "must be nonnegative for this kind")

    analysis = doc.get("analysis", {})
    if not isinstance(analysis, dict):
        raise ValidationError("analysis", "must be an object")
    _check_keys(analysis, _ANALYSIS, "analysis")
    if "segments" in analysis:
        _integer(analysis["segments"], "analysis.segments", 1)
    if "classes" in analysis:
        _integer(analysis["classes"], "analysis.classes", 2)
    if "weighting" in analysis and analysis["weighting"] not in {w.value for w in Weighting}:
        raise ValidationError("analysis.weighting", f"must be one of {[w.value for w in Weighting]}")
    if "logBase" in analysis:
        if _number(analysis["logBase"], "analysis.logBase") <= 1:
            raise ValidationError("analysis.logBase", "must exceed 1")

    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ValidationError("name", "must be a string")
    return CurveSpec(kind, clean, (t0, t1), dict(analysis), name)


def build_curve(spec):
    t0, t1 = spec.domain
    p = spec.params
    if spec.kind == "clothoid":
        return ClothoidCurve(p["B"], (t0, t1))
    if spec.kind == "involute":
        return CircleInvoluteCurve((t0, t1))
    if spec.kind == "bezier3":
        return CubicBezierCurve(p["points"], (t0, t1))
    return CircularArcCurve(p["radius"], (t0, t1))


def _endpoint_ok(curve, t):
    dx, dy, ddx, ddy = (float(v) for v in curve.derivatives(t))
    speed = math.hypot(dx, dy)
    if speed < SPEED_FLOOR:
        return False
    return abs(dx * ddy - dy * ddx) / speed ** 3 >= CURVATURE_FLOOR


def nudge_domain(curve, eps=NUDGE):
    """Move endpoints where speed or curvature vanish inward by ``eps``.

    Clothoids and involutes started at ``t = 0`` (and the cubic Bezier
    whose curvature is zero at an end) cannot be sampled there. Returns the
    possibly-rebuilt curve and a list of warning strings.
    """
    a, b = curve.domain.alpha, curve.domain.beta
    notes = []
    if not _endpoint_ok(curve, a) and a + eps < b:
        notes.append(f"t_start moved from {a!r} to {a + eps!r}: speed or curvature vanishes there")
        a = a + eps
    if not _endpoint_ok(curve, b) and b - eps > a:
        notes.append(f"t_end moved from {b!r} to {b - eps!r}: speed or curvature vanishes there")
        b = b - eps
    if notes:
        curve = curve.with_domain(a, b)
    return curve, notes


def analysis_config(spec, segments=None, classes=None, weighting=None, log_base=None):
    """Merge spec-level analysis settings with explicit overrides."""
    a = spec.analysis
    n = segments if segments is not None else a.get("segments", 10000)
    k = classes if classes is not None else a.get("classes", 100)
    try:
        return AnalysisConfig(
            segments=n,
            class_count=k,
            log_base=log_base if log_base is not None else a.get("logBase", 10.0),
            weighting=weighting if weighting is not None else a.get("weighting", "paperFaithful"),
        )
    except ValueError as exc:
        raise ValidationError("analysis", str(exc)) from None


CSV_HEADER = ["class_index", "beta_mid", "count", "length", "log_length"]


def _g(x):
    return f"{x:.12g}"


def write_histogram_csv(histogram, partition):
    """One row per class; ``log_length`` is blank for empty classes."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for j in range(partition.class_count):
        lg = histogram.log_lengths[j]
        w.writerow([
            j,
            _g(partition.midpoints[j]),
            int(histogram.counts[j]),
            _g(histogram.lengths[j]),
            "" if np.isnan(lg) else _g(lg),
        ])
    return buf.getvalue()


def read_histogram_csv(text):
    """Inverse of :func:`write_histogram_csv`; returns a dict of column arrays."""
    rows = list(csv.DictReader(io.StringIO(text)))
    return {
        "class_index": np.array([int(r["class_index"]) for r in rows]),
        "beta_mid": np.array([float(r["beta_mid"]) for r in rows]),
        "count": np.array([int(r["count"]) for r in rows]),
        "length": np.array([float(r["length"]) for r in rows]),
        "log_length": np.array([float(r["log_length"]) if r["log_length"] else np.nan for r in rows]),
    }


# Report keys in emission order.
REPORT_KEYS = (
    "slope", "intercept", "rSquared", "maxAbsResidual", "fitScope", "fullFit",
    "gradientMin", "gradientMax", "curvatureMonotone", "constantCurvature",
    "inflectionAt", "pointCount", "L", "N", "classCount", "weighting", "logBase",
)


def _fit_dict(fit):
    if fit is None:
        return None
    return {
        "slope": fit.slope,
        "intercept": fit.intercept,
        "rSquared": fit.r_squared,
        "maxAbsResidual": fit.max_abs_residual,
        "pointCount": fit.point_count,
    }


def report_to_dict(report):
    r = report
    values = (
        r.slope, r.intercept, r.r_squared, r.max_abs_residual, r.fit_scope, _fit_dict(r.full_fit),
        r.gradient_min, r.gradient_max, r.curvature_monotone, r.constant_curvature,
        r.inflection_at, r.point_count, r.total_length, r.segments, r.class_count,
        r.weighting, r.log_base,
    )
    return dict(zip(REPORT_KEYS, values))


def write_report_json(report):
    """Serialise an :class:`~ldgc.engine.AestheticReport`; absent values become null."""
    return json.dumps(report_to_dict(report), indent=2) + "\n"
