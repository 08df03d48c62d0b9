"""Logarithmic distribution graph of curvature (LDGC) and the LDDC baseline.

Pipeline for a curve on ``[alpha, beta]`` split into ``N`` pieces:

1. breakpoints ``t_i`` on a uniform parameter grid (LDGC) or at equal arc
   length (LDDC);
2. per segment, the mean of the end radii of curvature ``rho_bar_i`` and
   ``beta_i = log(rho_bar_i / L)`` with ``L`` the total length;
3. ``class_count`` equal-width classes spanning ``[min beta, max beta]``;
4. class counts;
5. class lengths ``s_j = count_j * L / N``;
6. ``log(s_j / L)`` per nonempty class;
7. the graph is the set of (class midpoint, log length) points.
"""
import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional

import numpy as np

from .errors import CurvatureVanishes, DegenerateAbscissa, TooFewPoints
from .geometry import (
    CurveDomain,
    arc_length,
    arclength_inverse_many,
    radius_of_curvature,
    segment_arc_lengths,
    signed_curvature,
)
from .quadrature import DEFAULT_QUADRATURE, QuadratureConfig

DEGENERATE_SPREAD = 1e-12


class Weighting(str, enum.Enum):
    PAPER_FAITHFUL = "paperFaithful"
    ARCLENGTH_WEIGHTED = "arclengthWeighted"


@dataclass(frozen=True)
class AnalysisConfig:
    segments: int = 10000
    class_count: int = 100
    log_base: float = 10.0
    weighting: Weighting = Weighting.PAPER_FAITHFUL
    quadrature: QuadratureConfig = DEFAULT_QUADRATURE

    def __post_init__(self):
        object.__setattr__(self, "weighting", Weighting(self.weighting))
        if self.class_count < 2:
            raise ValueError("class_count must be at least 2")
        if self.segments < self.class_count:
            raise ValueError("segments must be at least class_count")
        if not self.log_base > 1:
            raise ValueError("log_base must exceed 1")


def _log(x, base):
    return np.log(x) / np.log(base)


class SegmentSample(NamedTuple):
    index: int
    t_left: float
    t_right: float
    rho_bar: float
    beta: float


@dataclass
class SegmentSamples:
    """Columnar store of per-segment samples; indexing yields :class:`SegmentSample`."""

    t_left: np.ndarray
    t_right: np.ndarray
    rho_bar: np.ndarray
    beta: np.ndarray

    def __len__(self):
        return self.beta.size

    def __getitem__(self, i):
        i = range(len(self))[i]
        return SegmentSample(i, float(self.t_left[i]), float(self.t_right[i]),
                             float(self.rho_bar[i]), float(self.beta[i]))

    def __iter__(self):
        return (self[i] for i in range(len(self)))


@dataclass
class ClassPartition:
    min_beta: float
    max_beta: float
    delta_c: float
    edges: np.ndarray
    midpoints: np.ndarray
    degenerate: bool = False

    @property
    def class_count(self):
        return self.midpoints.size

    def matches(self, other, rtol=1e-9):
        if self.class_count != other.class_count or self.degenerate != other.degenerate:
            return False
        scale = max(abs(self.max_beta - self.min_beta), abs(self.min_beta), 1.0)
        return bool(np.all(np.abs(self.edges - other.edges) <= rtol * scale))


@dataclass
class LdgcHistogram:
    counts: np.ndarray
    lengths: np.ndarray
    log_lengths: np.ndarray  # NaN where the class is empty
    total_length: float
    segments: int

    @property
    def nonempty(self):
        return self.counts > 0


class LdgcPoint(NamedTuple):
    beta_mid: float
    log_length: float


@dataclass
class LdgcResult:
    curve: object
    config: AnalysisConfig
    breakpoints: np.ndarray
    samples: SegmentSamples
    partition: ClassPartition
    histogram: LdgcHistogram
    points: list = field(default_factory=list)

    @property
    def point_array(self):
        return np.array(self.points, dtype=float).reshape(-1, 2)


def uniform_partition(domain, segments):
    """Uniform parameter grid ``alpha + (i-1)(beta-alpha)/N``, ``i = 1..N+1``."""
    if segments < 1:
        raise ValueError("need at least one segment")
    if not isinstance(domain, CurveDomain):
        domain = CurveDomain(*domain)
    t = domain.alpha + np.arange(segments + 1) * (domain.width / segments)
    t[-1] = domain.beta
    return t


def segment_samples(curve, breakpoints, total_length, log_base=10.0):
    bp = np.asarray(breakpoints, dtype=float)
    rho = radius_of_curvature(curve, bp)
    rho_bar = 0.5 * (rho[:-1] + rho[1:])
    return SegmentSamples(bp[:-1].copy(), bp[1:].copy(), rho_bar, _log(rho_bar / total_length, log_base))


def build_class_partition(betas, class_count=100):
    betas = np.asarray(betas, dtype=float)
    if betas.size == 0 or not np.all(np.isfinite(betas)):
        raise ValueError("betas must be a nonempty finite array")
    lo, hi = float(betas.min()), float(betas.max())
    if hi - lo < DEGENERATE_SPREAD:
        return ClassPartition(lo, hi, 0.0, np.array([lo, hi]), np.array([0.5 * (lo + hi)]), True)
    delta = (hi - lo) / class_count
    edges = lo + delta * np.arange(class_count + 1)
    edges[-1] = hi
    return ClassPartition(lo, hi, delta, edges, 0.5 * (edges[:-1] + edges[1:]), False)


def class_indices(betas, partition):
    """Class of each beta: half-open classes, the last one closed at the top.

    Values outside the partition range (possible when binning onto a
    partition built from other samples) are clamped to the end classes.
    """
    betas = np.asarray(betas, dtype=float)
    if partition.degenerate:
        return np.zeros(betas.shape, dtype=np.intp)
    idx = np.searchsorted(partition.edges, betas, side="right") - 1
    return np.clip(idx, 0, partition.class_count - 1)


def assign_classes(samples, partition):
    betas = samples.beta if isinstance(samples, SegmentSamples) else samples
    idx = class_indices(betas, partition)
    return np.bincount(idx.ravel(), minlength=partition.class_count)


def class_lengths(counts, total_length, segments, segment_lengths=None, indices=None):
    """Length carried by each class.

    By default every segment carries ``L/N``. Passing the true
    ``segment_lengths`` together with each segment's class ``indices`` sums
    actual arc lengths per class instead.
    """
    counts = np.asarray(counts)
    if counts.sum() != segments:
        raise ValueError(f"counts sum to {counts.sum()}, expected {segments}")
    if segment_lengths is None:
        return counts * (total_length / segments)
    return np.bincount(indices, weights=segment_lengths, minlength=counts.size)


def log_lengths(lengths, total_length, log_base=10.0):
    if not total_length > 0:
        raise ValueError("total length must be positive")
    lengths = np.asarray(lengths, dtype=float)
    out = np.full(lengths.shape, np.nan)
    pos = lengths > 0
    out[pos] = _log(lengths[pos] / total_length, log_base)
    return out


def _histogram_and_points(curve, config, breakpoints, total_length, partition, segment_lengths):
    samples = segment_samples(curve, breakpoints, total_length, config.log_base)
    if partition is None:
        partition = build_class_partition(samples.beta, config.class_count)
    idx = class_indices(samples.beta, partition)
    counts = np.bincount(idx, minlength=partition.class_count)
    n = len(samples)
    lengths = class_lengths(counts, total_length, n, segment_lengths, idx)
    logs = log_lengths(lengths, total_length, config.log_base)
    hist = LdgcHistogram(counts, lengths, logs, total_length, n)
    nonempty = np.flatnonzero(lengths > 0)
    points = [LdgcPoint(float(partition.midpoints[j]), float(logs[j])) for j in nonempty]
    return LdgcResult(curve, config, np.asarray(breakpoints), samples, partition, hist, points)


def compute_ldgc(curve, config=AnalysisConfig(), partition=None):
    """Run the LDGC pipeline on a uniform parameter grid.

    ``partition`` optionally fixes the class partition (for comparing runs
    on a common set of classes); by default it is built from the samples.
    """
    q = config.quadrature
    total = arc_length(curve, curve.domain.alpha, curve.domain.beta, q)
    bp = uniform_partition(curve.domain, config.segments)
    seg_lengths = None
    if config.weighting is Weighting.ARCLENGTH_WEIGHTED:
        seg_lengths = segment_arc_lengths(curve, bp, q)
    return _histogram_and_points(curve, config, bp, total, partition, seg_lengths)


class LddcPartition:
    """Equal-arc-length breakpoints and the curve points on them."""

    def __init__(self, curve, breakpoints, total_length, quadrature=DEFAULT_QUADRATURE):
        self.curve = curve
        self.breakpoints = breakpoints
        self.total_length = total_length
        self._quadrature = quadrature

    @cached_property
    def constitutional_points(self):
        x, y = self.curve.position(self.breakpoints, self._quadrature)
        return np.column_stack([x, y])


def equal_arclength_partition(curve, segments, quadrature=DEFAULT_QUADRATURE):
    """Split the curve into ``segments`` pieces of equal arc length.

    Every interior breakpoint is a root of ``arc_length(alpha, t) = i L / N``.
    """
    if segments < 1:
        raise ValueError("need at least one segment")
    d = curve.domain
    total = arc_length(curve, d.alpha, d.beta, quadrature)
    targets = np.arange(1, segments) * (total / segments)
    tol = 0.25 * max(1e-10, 1e-10 * total)
    inner = arclength_inverse_many(curve, d.alpha, targets, quadrature, tol=tol)
    bp = np.concatenate([[d.alpha], inner, [d.beta]])
    return LddcPartition(curve, bp, total, quadrature)


def compute_lddc(curve, config=AnalysisConfig(), partition=None):
    """Baseline: same classing as LDGC, on equal-arc-length segments.

    Segments are equal in length by construction, so each carries exactly
    ``L/N`` and the weighting option has no effect.
    """
    lddc = equal_arclength_partition(curve, config.segments, config.quadrature)
    return _histogram_and_points(curve, config, lddc.breakpoints, lddc.total_length, partition, None)


@dataclass
class GradientProfile:
    beta_mids: np.ndarray
    slopes: np.ndarray

    def __len__(self):
        return self.slopes.size


def _as_xy(points):
    arr = np.asarray(points, dtype=float).reshape(-1, 2)
    return arr[:, 0], arr[:, 1]


def gradient_profile(points):
    """Slopes between consecutive graph points, keyed by the pair midpoint."""
    x, y = _as_xy(points)
    if x.size < 2:
        raise TooFewPoints("a gradient needs at least two points")
    return GradientProfile(0.5 * (x[1:] + x[:-1]), np.diff(y) / np.diff(x))


class AffineFit(NamedTuple):
    slope: float
    intercept: float
    r_squared: float
    max_abs_residual: float
    point_count: int


def fit_affine(points):
    """Ordinary least-squares line through the graph points."""
    x, y = _as_xy(points)
    if x.size < 2:
        raise TooFewPoints("a line fit needs at least two points")
    xc = x - x.mean()
    sxx = float(xc @ xc)
    if sxx == 0.0 or np.ptp(x) == 0.0:
        raise DegenerateAbscissa("all abscissae coincide")
    slope = float(xc @ (y - y.mean())) / sxx
    intercept = float(y.mean() - slope * x.mean())
    resid = y - (slope * x + intercept)
    ss_res = float(resid @ resid)
    yc = y - y.mean()
    ss_tot = float(yc @ yc)
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return AffineFit(slope, intercept, min(max(r2, 0.0), 1.0), float(np.abs(resid).max()), int(x.size))


class MonotonicityCheck(NamedTuple):
    monotone: bool
    constant: bool


def _locate_zero(curve, a, b, ka):
    for _ in range(200):
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        km = signed_curvature(curve, m)
        if km == 0.0:
            return m
        if (km > 0) == (ka > 0):
            a, ka = m, km
        else:
            b = m
    return 0.5 * (a + b)


def check_monotone_curvature(curve, probe_count=1024, slack=1e-10):
    """Whether ``|kappa|`` is monotone (and whether it is constant) along the curve.

    A sign change of the signed curvature between probes is an inflection;
    its location is bisected and reported through :class:`CurvatureVanishes`.
    """
    t = np.linspace(curve.domain.alpha, curve.domain.beta, probe_count)
    kappa = signed_curvature(curve, t)
    flip = np.flatnonzero(np.sign(kappa[:-1]) * np.sign(kappa[1:]) < 0)
    if flip.size:
        k = flip[0]
        raise CurvatureVanishes(_locate_zero(curve, t[k], t[k + 1], kappa[k]))
    radius_of_curvature(curve, t)  # raises on |kappa| < 1e-12
    mag = np.abs(kappa)
    d = np.diff(mag)
    monotone = bool(np.all(d >= -slack) or np.all(d <= slack))
    constant = bool(np.abs(d).sum() <= slack * mag.mean())
    return MonotonicityCheck(monotone, constant)


@dataclass
class AestheticReport:
    slope: Optional[float]
    intercept: Optional[float]
    r_squared: Optional[float]
    max_abs_residual: Optional[float]
    fit_scope: Optional[str]
    full_fit: Optional[AffineFit]
    gradient_min: Optional[float]
    gradient_max: Optional[float]
    curvature_monotone: bool
    constant_curvature: bool
    inflection_at: Optional[float]
    point_count: int
    total_length: float
    segments: int
    class_count: int
    weighting: str
    log_base: float


def interior_points(points):
    """Drop the first and last nonempty class, which the data cover only partially."""
    return list(points)[1:-1]


def headline_fit(points):
    """Least-squares fit over interior classes, or all classes when too few.

    Returns ``(fit, scope)``; ``(None, None)`` when fewer than two points.
    """
    if len(points) < 2:
        return None, None
    inner = interior_points(points)
    if len(inner) >= 2:
        return fit_affine(inner), "interior"
    return fit_affine(points), "all"


def aesthetic_report(curve, config=AnalysisConfig(), result=None):
    """Slope and linearity of the graph plus curvature-monotonicity flags.

    The headline fit uses interior classes when at least two remain and all
    classes otherwise; ``full_fit`` always covers every nonempty class.
    """
    if result is None:
        result = compute_ldgc(curve, config)
    pts = result.points
    inflection = None
    try:
        mono = check_monotone_curvature(curve)
    except CurvatureVanishes as exc:
        mono = MonotonicityCheck(False, False)
        inflection = exc.t

    full = None
    gmin = gmax = None
    head, scope = headline_fit(pts)
    if head is not None:
        full = fit_affine(pts)
        g = gradient_profile(pts).slopes
        gmin, gmax = float(g.min()), float(g.max())

    return AestheticReport(
        slope=head.slope if head else None,
        intercept=head.intercept if head else None,
        r_squared=head.r_squared if head else None,
        max_abs_residual=head.max_abs_residual if head else None,
        fit_scope=scope,
        full_fit=full,
        gradient_min=gmin,
        gradient_max=gmax,
        curvature_monotone=mono.monotone,
        constant_curvature=mono.constant or result.partition.degenerate,
        inflection_at=inflection,
        point_count=len(pts),
        total_length=float(result.histogram.total_length),
        segments=int(result.histogram.segments),
        class_count=int(result.partition.class_count),
        weighting=result.config.weighting.value,
        log_base=float(result.config.log_base),
    )

