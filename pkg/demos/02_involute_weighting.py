"""
Circle involute: parameter counting versus arc length
=====================================================

For the unit-circle involute the radius of curvature equals the winding
angle ``t`` and the speed is ``t``. Counting uniform-``t`` segments weights
each curvature class by ``dt``, while the true length in a class grows like
``t dt``. The two weightings therefore give slopes +1 and +2.
"""
import numpy as np

from ldgc import AnalysisConfig, CircleInvoluteCurve, aesthetic_report, compute_lddc, fit_affine
from ldgc.engine import interior_points

curve = CircleInvoluteCurve(domain=(0.5, 2 * np.pi))

for weighting in ("paperFaithful", "arclengthWeighted"):
    r = aesthetic_report(curve, AnalysisConfig(weighting=weighting))
    print(f"{weighting:>18}: slope {r.slope:+.4f}  R^2 {r.r_squared:.5f}")

# %%
# Equal-arc-length segmentation recovers the arc-length answer directly.
lddc = compute_lddc(curve)
print(f"{'LDDC baseline':>18}: slope {fit_affine(interior_points(lddc.points)).slope:+.4f}")
