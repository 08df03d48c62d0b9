"""Logarithmic distribution graph of curvature (LDGC) for plane curves."""
from .engine import (
    AestheticReport,
    AffineFit,
    AnalysisConfig,
    ClassPartition,
    LdgcHistogram,
    LdgcPoint,
    LdgcResult,
    LddcPartition,
    Weighting,
    aesthetic_report,
    assign_classes,
    build_class_partition,
    check_monotone_curvature,
    class_lengths,
    compute_ldgc,
    compute_lddc,
    equal_arclength_partition,
    fit_affine,
    gradient_profile,
    log_lengths,
    segment_samples,
    uniform_partition,
)
from .geometry import (
    CircleInvoluteCurve,
    CircularArcCurve,
    ClothoidCurve,
    CubicBezierCurve,
    CurveDomain,
    ScaledCurve,
    arc_length,
    arclength_inverse,
    evaluate_jet,
    fresnel_cos,
    fresnel_sin,
    radius_of_curvature,
    signed_curvature,
)
from .oracle import expected_slope, fine_histogram_oracle, histogram_distance
from .quadrature import QuadratureConfig

__version__ = "0.1.0"

PAPER_BEZIER_POINTS = [[0.0, 1.0], [1.0, 1.0], [2.0, 1.0], [3.0, 1.5]]
