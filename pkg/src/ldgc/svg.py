"""Minimal SVG line/scatter plots for curves, curvature profiles and LDGCs.

Axes are linear. For the LDGC both plotted quantities are already
logarithms, so the chart reads as a log-log diagram.
"""
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyData

SVG_NS = "http://www.w3.org/2000/svg"


def nice_ticks(lo, hi, target=5):
    """Round tick positions covering ``[lo, hi]``."""
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / target
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw), default=10 * mag)
    first = math.ceil(lo / step - 1e-9) * step
    ticks = []
    k = 0
    while first + k * step <= hi + 1e-9 * step:
        ticks.append(first + k * step)
        k += 1
    return ticks


def _padded(lo, hi):
    if hi - lo <= 1e-12 * max(1.0, abs(lo), abs(hi)):
        pad = max(abs(lo), 1.0) * 0.05
        return lo - pad, hi + pad
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


@dataclass
class Series:
    kind: str  # "line", "markers" or "fit"
    x: np.ndarray
    y: np.ndarray
    label: str = ""


@dataclass
class PlotDocument:
    title: str
    x_label: str
    y_label: str
    width: int = 480
    height: int = 360
    margin: tuple = (60, 20, 40, 50)  # left, right, top, bottom
    equal_aspect: bool = False
    series: list = field(default_factory=list)

    def add(self, kind, x, y, label=""):
        x = np.asarray(x, dtype=float).ravel()
        y = np.asarray(y, dtype=float).ravel()
        if x.size == 0 or x.size != y.size:
            raise EmptyData(f"series {label!r} is empty or ragged")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise ValueError(f"series {label!r} holds non-finite values")
        self.series.append(Series(kind, x, y, label))

    def _ranges(self):
        xs = np.concatenate([s.x for s in self.series])
        ys = np.concatenate([s.y for s in self.series])
        x0, x1 = _padded(xs.min(), xs.max())
        y0, y1 = _padded(ys.min(), ys.max())
        if self.equal_aspect:
            left, right, top, bottom = self.margin
            pw, ph = self.width - left - right, self.height - top - bottom
            scale = max((x1 - x0) / pw, (y1 - y0) / ph)
            cx, cy = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
            x0, x1 = cx - 0.5 * scale * pw, cx + 0.5 * scale * pw
            y0, y1 = cy - 0.5 * scale * ph, cy + 0.5 * scale * ph
        return x0, x1, y0, y1

    def to_svg(self):
        if not self.series:
            raise EmptyData("plot has no data")
        x0, x1, y0, y1 = self._ranges()
        left, right, top, bottom = self.margin
        pw, ph = self.width - left - right, self.height - top - bottom

        def px(x):
            return left + (x - x0) / (x1 - x0) * pw

        def py(y):
            return top + (y1 - y) / (y1 - y0) * ph

        ET.register_namespace("", SVG_NS)
        root = ET.Element(f"{{{SVG_NS}}}svg", {
            "version": "1.1",
            "width": str(self.width),
            "height": str(self.height),
            "viewBox": f"0 0 {self.width} {self.height}",
        })
        ET.SubElement(root, f"{{{SVG_NS}}}title").text = self.title
        ET.SubElement(root, f"{{{SVG_NS}}}rect", {
            "x": "0", "y": "0", "width": str(self.width), "height": str(self.height), "fill": "white"})

        axes = ET.SubElement(root, f"{{{SVG_NS}}}g", {"class": "axes", "stroke": "black", "font-size": "10"})
        ET.SubElement(axes, f"{{{SVG_NS}}}rect", {
            "x": f"{left}", "y": f"{top}", "width": f"{pw}", "height": f"{ph}", "fill": "none"})
        for t in nice_ticks(x0, x1):
            X = px(t)
            ET.SubElement(axes, f"{{{SVG_NS}}}line", {
                "x1": f"{X:.2f}", "y1": f"{top + ph}", "x2": f"{X:.2f}", "y2": f"{top + ph + 4}"})
            lab = ET.SubElement(axes, f"{{{SVG_NS}}}text", {
                "class": "tick-label", "x": f"{X:.2f}", "y": f"{top + ph + 16}",
                "text-anchor": "middle", "stroke": "none"})
            lab.text = f"{t:.4g}"
        for t in nice_ticks(y0, y1):
            Y = py(t)
            ET.SubElement(axes, f"{{{SVG_NS}}}line", {
                "x1": f"{left - 4}", "y1": f"{Y:.2f}", "x2": f"{left}", "y2": f"{Y:.2f}"})
            lab = ET.SubElement(axes, f"{{{SVG_NS}}}text", {
                "class": "tick-label", "x": f"{left - 6}", "y": f"{Y + 3:.2f}",
                "text-anchor": "end", "stroke": "none"})
            lab.text = f"{t:.4g}"
        for text, x, y, extra in (
            (self.title, self.width / 2, top - 14, {}),
            (self.x_label, left + pw / 2, self.height - 10, {}),
            (self.y_label, 14, top + ph / 2, {"transform": f"rotate(-90 14 {top + ph / 2})"}),
        ):
            el = ET.SubElement(root, f"{{{SVG_NS}}}text", {
                "x": f"{x:.2f}", "y": f"{y:.2f}", "text-anchor": "middle", "font-size": "12", **extra})
            el.text = text

        for s in self.series:
            pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(s.x, s.y))
            if s.kind == "markers":
                g = ET.SubElement(root, f"{{{SVG_NS}}}g", {
                    "class": "series markers", "fill": "steelblue", "data-label": s.label})
                for a, b in zip(s.x, s.y):
                    ET.SubElement(g, f"{{{SVG_NS}}}circle", {
                        "cx": f"{px(a):.2f}", "cy": f"{py(b):.2f}", "r": "2.5"})
            else:
                colour, dash = ("crimson", "5,3") if s.kind == "fit" else ("black", "none")
                ET.SubElement(root, f"{{{SVG_NS}}}polyline", {
                    "class": f"series {s.kind}", "data-label": s.label, "points": pts,
                    "fill": "none", "stroke": colour, "stroke-dasharray": dash, "stroke-width": "1.2"})
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def render_curve_svg(curve, samples=512, title="curve"):
    """Plot the curve itself with equal axis scaling."""
    if np.ndim(samples) == 0:
        if samples < 2:
            raise EmptyData("need at least two samples")
        ts = np.linspace(curve.domain.alpha, curve.domain.beta, int(samples))
    else:
        ts = np.asarray(samples, dtype=float)
    x, y = curve.position(ts)
    doc = PlotDocument(title, "x", "y", equal_aspect=True)
    doc.add("line", x, y, "curve")
    return doc.to_svg()


def render_curvature_profile_svg(ts, kappas, title="curvature profile"):
    """Signed curvature against the curve parameter."""
    ts = np.asarray(ts, dtype=float)
    if ts.size == 0:
        raise EmptyData("curvature profile has no samples")
    doc = PlotDocument(title, "t", "signed curvature")
    doc.add("line", ts, kappas, "curvature")
    return doc.to_svg()


def render_ldgc_svg(points, fit=None, title="LDGC"):
    """Graph points as markers; the fitted line, if given, is drawn across them."""
    arr = np.asarray(points, dtype=float).reshape(-1, 2)
    if arr.shape[0] == 0:
        raise EmptyData("LDGC has no points")
    doc = PlotDocument(title, "log(rho / L) class midpoint", "log(s / L)")
    doc.add("markers", arr[:, 0], arr[:, 1], "ldgc")
    if fit is not None and arr.shape[0] >= 2:
        xs = np.array([arr[:, 0].min(), arr[:, 0].max()])
        doc.add("fit", xs, fit.slope * xs + fit.intercept, "least-squares fit")
    return doc.to_svg()
