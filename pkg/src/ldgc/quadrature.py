"""Adaptive Simpson quadrature with absolute-error control.

The integrator is vectorised over a batch of independent intervals: every
refinement level evaluates the integrand once, on all unfinished
subintervals at the same time. Integrands must therefore accept and return
numpy arrays.
"""
from dataclasses import dataclass

import numpy as np

from .errors import QuadratureNonConvergence


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tolerance: float = 1e-10
    max_depth: int = 40

    def __post_init__(self):
        if not self.abs_tolerance > 0:
            raise ValueError("abs_tolerance must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")


DEFAULT_QUADRATURE = QuadratureConfig()


def adaptive_simpson_many(f, a, b, tol=1e-10, max_depth=40):
    """Integrate ``f`` over each interval ``[a[k], b[k]]``.

    Each integral is controlled to absolute error ``tol`` (scalar or one
    value per interval) using the classical recursive rule: a panel is
    accepted when the two half-panel Simpson estimates differ from the
    whole-panel estimate by at most ``15 * tol``, the tolerance being
    halved at every split. Accepted panels get the Richardson correction.

    Raises :class:`QuadratureNonConvergence` when a panel would need to be
    split beyond ``max_depth`` levels.
    """
    a = np.atleast_1d(np.asarray(a, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    a, b = np.broadcast_arrays(a, b)
    n = a.size
    a = a.ravel()
    b = b.ravel()
    tol = np.broadcast_to(np.asarray(tol, dtype=float), (n,)).astype(float)

    owner = np.arange(n)
    lo, hi = a.copy(), b.copy()
    mid = 0.5 * (lo + hi)
    f_lo = np.asarray(f(lo), dtype=float)
    f_mid = np.asarray(f(mid), dtype=float)
    f_hi = np.asarray(f(hi), dtype=float)
    whole = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi)

    total = np.zeros(n)
    depth = 0
    while owner.size:
        q1 = 0.5 * (lo + mid)
        q3 = 0.5 * (mid + hi)
        f_q1 = np.asarray(f(q1), dtype=float)
        f_q3 = np.asarray(f(q3), dtype=float)
        left = (mid - lo) / 6.0 * (f_lo + 4.0 * f_q1 + f_mid)
        right = (hi - mid) / 6.0 * (f_mid + 4.0 * f_q3 + f_hi)
        delta = left + right - whole
        done = np.abs(delta) <= 15.0 * tol
        # panels that can no longer be halved in floating point are accepted
        done |= (q1 <= lo) | (q1 >= mid) | (q3 <= mid) | (q3 >= hi)
        done |= lo == hi
        if done.any():
            total += np.bincount(
                owner[done], weights=(left + right + delta / 15.0)[done], minlength=n
            )
        keep = ~done
        if not keep.any():
            break
        depth += 1
        if depth > max_depth:
            k = int(owner[keep][0])
            raise QuadratureNonConvergence(float(a[k]), float(b[k]), max_depth)

        # children: [lo, mid] with midpoint q1 and [mid, hi] with midpoint q3
        owner = np.concatenate([owner[keep], owner[keep]])
        new_lo = np.concatenate([lo[keep], mid[keep]])
        new_hi = np.concatenate([mid[keep], hi[keep]])
        f_lo, f_mid, f_hi = (
            np.concatenate([f_lo[keep], f_mid[keep]]),
            np.concatenate([f_q1[keep], f_q3[keep]]),
            np.concatenate([f_mid[keep], f_hi[keep]]),
        )
        mid = np.concatenate([q1[keep], q3[keep]])
        whole = np.concatenate([left[keep], right[keep]])
        tol = np.concatenate([tol[keep], tol[keep]]) * 0.5
        lo, hi = new_lo, new_hi
    return total


def adaptive_simpson(f, a, b, tol=1e-10, max_depth=40):
    """Scalar convenience wrapper around :func:`adaptive_simpson_many`."""
    return float(adaptive_simpson_many(f, a, b, tol, max_depth)[0])
