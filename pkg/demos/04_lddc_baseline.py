"""
LDGC against the equal-arc-length baseline
==========================================

The baseline solves one arc-length root problem per breakpoint. Both
histograms are binned on the same classes and compared with a dense
reference histogram built from a million micro-segments.
"""
from ldgc import PAPER_BEZIER_POINTS, AnalysisConfig, CubicBezierCurve, compute_ldgc
from ldgc.cli import bench_runs, compare_runs
from ldgc.oracle import fine_histogram_oracle, histogram_distance

curve = CubicBezierCurve(PAPER_BEZIER_POINTS, (1e-6, 1.0))
config = AnalysisConfig()

summary = compare_runs(curve, config)
print(f"LDDC vs LDGC distance:           {summary['distance']:.4f}")
print(f"paper-faithful vs weighted gap:  {summary['weightingGap']:.4f}")

# %%
ldgc = compute_ldgc(curve, config)
weighted = compute_ldgc(curve, AnalysisConfig(weighting="arclengthWeighted"), ldgc.partition)
oracle = fine_histogram_oracle(curve, ldgc.partition)
print(f"paper-faithful LDGC vs reference: {histogram_distance(ldgc, oracle):.4f}")
print(f"weighted LDGC vs reference:       {histogram_distance(weighted, oracle):.4f}")

# %%
bench = bench_runs(curve, config, repetitions=7)
print(f"median LDGC {bench['ldgc']['median'] * 1e3:.2f} ms, "
      f"median LDDC {bench['lddc']['median'] * 1e3:.2f} ms, speedup {bench['speedup']:.1f}x")
