"""
The cubic Bezier example
========================

Control points (0,1), (1,1), (2,1), (3,1.5). Here ``x = 3t`` and
``y = 1 + t^3/2``, so the curvature is zero at ``t = 0`` and the start
parameter is moved to ``1e-6``. The curvature is also not monotone: it
peaks where ``t^4 = 0.8``.
"""
from ldgc import PAPER_BEZIER_POINTS, AnalysisConfig, CubicBezierCurve, aesthetic_report, check_monotone_curvature
from ldgc.serialization import nudge_domain, write_report_json

curve, notes = nudge_domain(CubicBezierCurve(PAPER_BEZIER_POINTS, (0.0, 1.0)))
for note in notes:
    print("note:", note)

print("monotone on [1e-6, 1]:  ", check_monotone_curvature(curve))
print("monotone on [1e-6, 0.9]:", check_monotone_curvature(curve.with_domain(1e-6, 0.9)))

# %%
# The report carries slope and linearity only; no beauty verdict is made.
print(write_report_json(aesthetic_report(curve, AnalysisConfig())))
