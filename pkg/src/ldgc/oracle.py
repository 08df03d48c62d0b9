"""Reference values used to validate the LDGC pipeline.

Nothing here reuses the engine's sampling or binning code: the dense
histogram integrates arc length with Gauss-Legendre rules on a fine grid
and bins by direct arithmetic on the class width.
"""
import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import PartitionMismatch, UnknownFamily
from .geometry import radius_of_curvature

_SLOPES = {"clothoid": -1.0, "involute": 2.0, "circleInvolute": 2.0, "circle": None}


@dataclass
class OracleHistogram:
    lengths: np.ndarray
    total_length: float
    sample_density: int
    midpoints: np.ndarray


def _micro_lengths(curve, t, nodes=5):
    x, w = np.polynomial.legendre.leggauss(nodes)
    half = 0.5 * np.diff(t)
    centre = 0.5 * (t[:-1] + t[1:])
    out = np.zeros(half.size)
    for xi, wi in zip(x, w):
        dx, dy, _, _ = curve.derivatives(centre + half * xi)
        out += wi * np.hypot(dx, dy)
    return out * half


def fine_histogram_oracle(curve, partition, M=1_000_000, log_base=10.0, chunk=250_000):
    """True arc length per class, from ``M`` micro-segments on a uniform grid.

    Each micro-segment carries its 5-point Gauss-Legendre arc length and is
    classed by the mean of its end radii of curvature, normalised by the
    oracle's own total length.
    """
    if M < 1:
        raise ValueError("M must be positive")
    d = curve.domain
    t = np.linspace(d.alpha, d.beta, M + 1)
    seg = np.empty(M)
    rho = np.empty(M + 1)
    for start in range(0, M, chunk):
        stop = min(start + chunk, M)
        seg[start:stop] = _micro_lengths(curve, t[start:stop + 1])
        rho[start:stop + 1] = radius_of_curvature(curve, t[start:stop + 1])
    total = float(np.sum(seg))
    beta = np.log(0.5 * (rho[:-1] + rho[1:]) / total) / np.log(log_base)

    k = partition.class_count
    if partition.degenerate or k == 1:
        cls = np.zeros(M, dtype=np.intp)
    else:
        width = (partition.max_beta - partition.min_beta) / k
        cls = np.floor((beta - partition.min_beta) / width).astype(np.intp)
        np.clip(cls, 0, k - 1, out=cls)
    lengths = np.zeros(k)
    np.add.at(lengths, cls, seg)
    return OracleHistogram(lengths, total, M, np.asarray(partition.midpoints, dtype=float).copy())


def expected_slope(family):
    """Analytic log-log slope of the arc-length distribution for a curve family.

    Returns None for the circle, whose graph is a single point.
    """
    try:
        return _SLOPES[family]
    except KeyError:
        raise UnknownFamily(f"no analytic slope for family {family!r}") from None


def _unpack(h):
    # LdgcResult carries histogram + partition; histograms carry lengths directly
    if hasattr(h, "histogram"):
        return h.histogram.lengths, h.histogram.total_length, h.partition
    return h.lengths, h.total_length, None


def histogram_distance(h1, h2):
    """Relative L1 distance ``sum_j |s_j - s'_j| / L`` between two histograms.

    Inputs may be engine results, engine histograms or oracle histograms.
    When both carry a partition the partitions must agree.
    """
    l1, total, p1 = _unpack(h1)
    l2, _, p2 = _unpack(h2)
    if l1.shape != l2.shape:
        raise PartitionMismatch(f"class counts differ: {l1.size} vs {l2.size}")
    if p1 is not None and p2 is not None and not p1.matches(p2):
        raise PartitionMismatch("histograms were binned on different partitions")
    return float(np.abs(l1 - l2).sum() / total)


def oracle_to_csv(oracle):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["class_index", "beta_mid", "length"])
    for j, (b, s) in enumerate(zip(oracle.midpoints, oracle.lengths)):
        w.writerow([j, f"{b:.17g}", f"{s:.17g}"])
    return buf.getvalue()


def oracle_from_csv(text, total_length=None, sample_density=0):
    rows = list(csv.DictReader(io.StringIO(text)))
    mids = np.array([float(r["beta_mid"]) for r in rows])
    lengths = np.array([float(r["length"]) for r in rows])
    total = float(lengths.sum()) if total_length is None else total_length
    return OracleHistogram(lengths, total, sample_density, mids)
