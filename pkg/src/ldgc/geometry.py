"""Plane parametric curves and their differential geometry.

Every curve exposes vectorised ``derivatives(t)`` (first and second
derivative components) and ``position(t)``. Curvature and arc length are
computed from the derivatives only, so curves whose position needs a
quadrature (the clothoid) are cheap to analyse.
"""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    CurvatureVanishes,
    OutOfDomain,
    TargetOutOfRange,
    VanishingSpeed,
)
from .quadrature import DEFAULT_QUADRATURE, adaptive_simpson, adaptive_simpson_many

ENDPOINT_SLACK = 1e-12
SPEED_FLOOR = 1e-12
CURVATURE_FLOOR = 1e-12


class PlanePoint(NamedTuple):
    x: float
    y: float


class CurveJet(NamedTuple):
    position: PlanePoint
    d1: PlanePoint
    d2: PlanePoint


@dataclass(frozen=True)
class CurveDomain:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and np.isfinite(self.beta)):
            raise ValueError("domain bounds must be finite")
        if not self.alpha < self.beta:
            raise ValueError(f"need alpha < beta, got [{self.alpha}, {self.beta}]")

    @property
    def width(self):
        return self.beta - self.alpha

    def check(self, t):
        """Return ``t`` clipped onto the domain; raise if it is clearly outside."""
        arr = np.asarray(t, dtype=float)
        bad = (arr < self.alpha - ENDPOINT_SLACK) | (arr > self.beta + ENDPOINT_SLACK) | ~np.isfinite(arr)
        if np.any(bad):
            raise OutOfDomain(float(np.atleast_1d(arr)[np.argmax(np.atleast_1d(bad))]), self)
        return np.clip(arr, self.alpha, self.beta)


class ParametricCurve:
    """A plane curve ``C(t) = (x(t), y(t))`` on a closed parameter interval."""

    family = "generic"

    def __init__(self, domain):
        if not isinstance(domain, CurveDomain):
            domain = CurveDomain(*map(float, domain))
        self.domain = domain

    def derivatives(self, t):
        """Return ``(dx, dy, ddx, ddy)`` at ``t`` (broadcasts over arrays)."""
        raise NotImplementedError

    def position(self, t, quadrature=DEFAULT_QUADRATURE):
        """Return ``(x, y)`` at ``t`` (broadcasts over arrays)."""
        raise NotImplementedError

    def speed(self, t):
        dx, dy, _, _ = self.derivatives(t)
        return np.hypot(dx, dy)

    def with_domain(self, alpha, beta):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}(domain=[{self.domain.alpha}, {self.domain.beta}])"


class ClothoidCurve(ParametricCurve):
    """Clothoid ``pi*B*(FC(t), FS(t))`` with radius of curvature ``B/t``."""

    family = "clothoid"

    def __init__(self, B=1.0, domain=(0.0, 1.5)):
        super().__init__(domain)
        if not B > 0:
            raise ValueError("clothoid scale B must be positive")
        if self.domain.alpha < 0:
            raise ValueError("clothoid parameter must be nonnegative")
        self.B = float(B)

    def derivatives(self, t):
        t = np.asarray(t, dtype=float)
        k = np.pi * self.B
        phase = 0.5 * np.pi * t * t
        c, s = np.cos(phase), np.sin(phase)
        w = np.pi * t
        return k * c, k * s, -k * w * s, k * w * c

    def position(self, t, quadrature=DEFAULT_QUADRATURE):
        fc, fs = fresnel_integrals(t, quadrature)
        k = np.pi * self.B
        return k * fc, k * fs

    def with_domain(self, alpha, beta):
        return ClothoidCurve(self.B, (alpha, beta))

    def __repr__(self):
        return f"ClothoidCurve(B={self.B}, domain=[{self.domain.alpha}, {self.domain.beta}])"


class CircleInvoluteCurve(ParametricCurve):
    """Involute of the unit circle; ``t`` is the winding angle and ``rho = t``."""

    family = "involute"

    def __init__(self, domain=(0.5, 2 * np.pi)):
        super().__init__(domain)

    def derivatives(self, t):
        t = np.asarray(t, dtype=float)
        c, s = np.cos(t), np.sin(t)
        return t * c, t * s, c - t * s, s + t * c

    def position(self, t, quadrature=DEFAULT_QUADRATURE):
        t = np.asarray(t, dtype=float)
        c, s = np.cos(t), np.sin(t)
        return c + t * s, s - t * c

    def with_domain(self, alpha, beta):
        return CircleInvoluteCurve((alpha, beta))


class CubicBezierCurve(ParametricCurve):
    family = "bezier3"

    def __init__(self, points, domain=(0.0, 1.0)):
        super().__init__(domain)
        pts = np.asarray(points, dtype=float)
        if pts.shape != (4, 2):
            raise ValueError("a cubic Bezier needs exactly four 2D control points")
        if not np.all(np.isfinite(pts)):
            raise ValueError("control points must be finite")
        if np.all(pts == pts[0]):
            raise ValueError("control points must not all coincide")
        self.points = pts

    def _combine(self, weights, pts):
        x = sum(w * p[0] for w, p in zip(weights, pts))
        y = sum(w * p[1] for w, p in zip(weights, pts))
        return x, y

    def derivatives(self, t):
        t = np.asarray(t, dtype=float)
        p = self.points
        u = 1.0 - t
        d = 3.0 * np.diff(p, axis=0)
        dx, dy = self._combine((u * u, 2.0 * u * t, t * t), d)
        dd = 2.0 * np.diff(d, axis=0)
        ddx, ddy = self._combine((u, t), dd)
        return dx, dy, ddx, ddy

    def position(self, t, quadrature=DEFAULT_QUADRATURE):
        t = np.asarray(t, dtype=float)
        u = 1.0 - t
        return self._combine((u ** 3, 3 * t * u * u, 3 * t * t * u, t ** 3), self.points)

    def with_domain(self, alpha, beta):
        return CubicBezierCurve(self.points, (alpha, beta))

    def transformed(self, angle=0.0, shift=(0.0, 0.0), scale=1.0):
        """Image of the curve under scaling, rotation about the origin, then translation."""
        c, s = np.cos(angle), np.sin(angle)
        rot = np.array([[c, -s], [s, c]])
        pts = scale * self.points @ rot.T + np.asarray(shift, dtype=float)
        return CubicBezierCurve(pts, (self.domain.alpha, self.domain.beta))

    def __repr__(self):
        return f"CubicBezierCurve(points={self.points.tolist()}, domain=[{self.domain.alpha}, {self.domain.beta}])"


class CircularArcCurve(ParametricCurve):
    """Counterclockwise arc of a circle centred at the origin, parametrised by angle."""

    family = "circle"

    def __init__(self, radius=1.0, domain=(0.0, 1.0)):
        super().__init__(domain)
        if not radius > 0:
            raise ValueError("radius must be positive")
        self.radius = float(radius)

    def derivatives(self, t):
        t = np.asarray(t, dtype=float)
        r = self.radius
        c, s = np.cos(t), np.sin(t)
        return -r * s, r * c, -r * c, -r * s

    def position(self, t, quadrature=DEFAULT_QUADRATURE):
        t = np.asarray(t, dtype=float)
        return self.radius * np.cos(t), self.radius * np.sin(t)

    def with_domain(self, alpha, beta):
        return CircularArcCurve(self.radius, (alpha, beta))

    def __repr__(self):
        return f"CircularArcCurve(radius={self.radius}, domain=[{self.domain.alpha}, {self.domain.beta}])"


class ScaledCurve(ParametricCurve):
    """Uniform scaling ``k * C(t)`` of another curve."""

    def __init__(self, base, factor):
        super().__init__(base.domain)
        if not factor > 0:
            raise ValueError("scale factor must be positive")
        self.base = base
        self.factor = float(factor)
        self.family = base.family

    def derivatives(self, t):
        return tuple(self.factor * v for v in self.base.derivatives(t))

    def position(self, t, quadrature=DEFAULT_QUADRATURE):
        x, y = self.base.position(t, quadrature)
        return self.factor * x, self.factor * y

    def with_domain(self, alpha, beta):
        return ScaledCurve(self.base.with_domain(alpha, beta), self.factor)


def fresnel_integrals(t, quadrature=DEFAULT_QUADRATURE):
    """Vectorised ``(FC(t), FS(t))`` by adaptive Simpson quadrature.

    The sorted parameters are integrated piecewise from 0 and accumulated, so
    a dense grid costs little more than its largest value.
    """
    t = np.asarray(t, dtype=float)
    flat = t.ravel()
    if np.any(flat < 0) or not np.all(np.isfinite(flat)):
        raise ValueError("Fresnel integrals are evaluated for finite t >= 0 only")
    order = np.argsort(flat, kind="stable")
    ts = flat[order]
    starts = np.concatenate([[0.0], ts[:-1]])
    tol = quadrature.abs_tolerance / max(ts.size, 1)
    out = []
    for fn in (np.cos, np.sin):
        pieces = adaptive_simpson_many(
            lambda u, fn=fn: fn(0.5 * np.pi * u * u), starts, ts, tol, quadrature.max_depth
        )
        vals = np.empty_like(flat)
        vals[order] = np.cumsum(pieces)
        out.append(vals.reshape(t.shape))
    return out[0], out[1]


def fresnel_cos(t, quadrature=DEFAULT_QUADRATURE):
    """``FC(t)``, the integral of ``cos(pi u^2 / 2)`` over ``[0, t]``."""
    if not (np.isfinite(t) and t >= 0):
        raise ValueError("fresnel_cos needs finite t >= 0")
    return adaptive_simpson(
        lambda u: np.cos(0.5 * np.pi * u * u), 0.0, t, quadrature.abs_tolerance, quadrature.max_depth
    )


def fresnel_sin(t, quadrature=DEFAULT_QUADRATURE):
    """``FS(t)``, the integral of ``sin(pi u^2 / 2)`` over ``[0, t]``."""
    if not (np.isfinite(t) and t >= 0):
        raise ValueError("fresnel_sin needs finite t >= 0")
    return adaptive_simpson(
        lambda u: np.sin(0.5 * np.pi * u * u), 0.0, t, quadrature.abs_tolerance, quadrature.max_depth
    )


def evaluate_jet(curve, t, quadrature=DEFAULT_QUADRATURE):
    t = float(curve.domain.check(t))
    x, y = curve.position(t, quadrature)
    dx, dy, ddx, ddy = curve.derivatives(t)
    return CurveJet(
        PlanePoint(float(x), float(y)),
        PlanePoint(float(dx), float(dy)),
        PlanePoint(float(ddx), float(ddy)),
    )


def _first_bad(t, mask):
    return float(np.atleast_1d(t)[np.argmax(np.atleast_1d(mask))])


def signed_curvature(curve, t):
    """Signed curvature, positive when the curve turns counterclockwise.

    Accepts a scalar or an array of parameters. Raises
    :class:`VanishingSpeed` at the first parameter where the speed drops
    below ``1e-12``.
    """
    scalar = np.ndim(t) == 0
    t = curve.domain.check(t)
    dx, dy, ddx, ddy = curve.derivatives(t)
    speed2 = dx * dx + dy * dy
    low = speed2 < SPEED_FLOOR ** 2
    if np.any(low):
        raise VanishingSpeed(_first_bad(t, low))
    kappa = (dx * ddy - dy * ddx) / speed2 ** 1.5
    return float(kappa) if scalar else kappa


def radius_of_curvature(curve, t):
    """``1/|kappa|``; raises :class:`CurvatureVanishes` where ``|kappa| < 1e-12``."""
    scalar = np.ndim(t) == 0
    t = curve.domain.check(t)
    kappa = np.abs(signed_curvature(curve, t))
    flat = kappa < CURVATURE_FLOOR
    if np.any(flat):
        raise CurvatureVanishes(_first_bad(t, flat))
    rho = 1.0 / kappa
    return float(rho) if scalar else rho


def arc_length(curve, a, b, quadrature=DEFAULT_QUADRATURE):
    a = float(curve.domain.check(a))
    b = float(curve.domain.check(b))
    if a > b:
        raise ValueError(f"need a <= b, got a={a}, b={b}")
    if a == b:
        return 0.0
    return adaptive_simpson(curve.speed, a, b, quadrature.abs_tolerance, quadrature.max_depth)


def segment_arc_lengths(curve, breakpoints, quadrature=DEFAULT_QUADRATURE):
    """Arc length of every segment between consecutive breakpoints.

    The absolute tolerance is shared out across segments so that the sum
    stays within ``quadrature.abs_tolerance`` of the total.
    """
    bp = curve.domain.check(np.asarray(breakpoints, dtype=float))
    n = bp.size - 1
    return adaptive_simpson_many(
        curve.speed, bp[:-1], bp[1:], quadrature.abs_tolerance / max(n, 1), quadrature.max_depth
    )


def _cumulative_lengths(curve, a, ts, quadrature, tol):
    """Arc length from ``a`` to every entry of ``ts`` (ts >= a, any order)."""
    order = np.argsort(ts, kind="stable")
    sorted_ts = ts[order]
    starts = np.concatenate([[a], sorted_ts[:-1]])
    pieces = adaptive_simpson_many(curve.speed, starts, sorted_ts, tol / ts.size, quadrature.max_depth)
    out = np.empty_like(ts)
    out[order] = np.cumsum(pieces)
    return out


def arclength_inverse_many(curve, a, targets, quadrature=DEFAULT_QUADRATURE, tol=None, max_iter=200):
    """Solve ``arc_length(curve, a, t) = target`` for every target at once.

    Each root is kept inside a bisection bracket; Newton steps (the
    derivative of arc length is the speed) are taken when they land inside
    the bracket, otherwise the bracket is halved. Convergence is therefore
    guaranteed because arc length is monotone in ``t``.
    """
    a = float(curve.domain.check(a))
    beta = curve.domain.beta
    targets = np.asarray(targets, dtype=float)
    if targets.size == 0:
        return targets.copy()
    available = arc_length(curve, a, beta, quadrature)
    if tol is None:
        tol = max(1e-10, 1e-10 * available)
    if np.any(targets < 0):
        raise ValueError("target lengths must be nonnegative")
    if np.any(targets > available + tol):
        raise TargetOutOfRange(float(targets.max()), available)

    lo = np.full(targets.shape, a)
    hi = np.full(targets.shape, beta)
    t = a + (beta - a) * np.clip(targets / available, 0.0, 1.0) if available > 0 else lo.copy()
    for _ in range(max_iter):
        s = _cumulative_lengths(curve, a, t, quadrature, tol * 0.01)
        resid = s - targets
        done = np.abs(resid) <= tol
        if done.all():
            return t
        lo = np.where(resid < 0, t, lo)
        hi = np.where(resid > 0, t, hi)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = t - resid / curve.speed(t)
        inside = np.isfinite(newton) & (newton > lo) & (newton < hi)
        step = np.where(inside, newton, 0.5 * (lo + hi))
        t = np.where(done, t, step)
    return t


def arclength_inverse(curve, a, target_length, quadrature=DEFAULT_QUADRATURE):
    """Parameter ``t*`` with ``arc_length(curve, a, t*) == target_length``."""
    if target_length == 0:
        return float(curve.domain.check(a))
    return float(arclength_inverse_many(curve, a, [target_length], quadrature)[0])
