"""Command line: ``ldgc analyze | compare | bench SPEC``.

Exit codes: 0 success, 2 input error, 3 numeric error, 4 I/O error.
"""
import functools
import json
import logging
import random
import statistics
import sys
import time
from pathlib import Path

import click
import numpy as np

from .engine import (
    AnalysisConfig,
    Weighting,
    aesthetic_report,
    compute_ldgc,
    compute_lddc,
    headline_fit,
)
from .errors import InputError, NumericError
from .geometry import signed_curvature
from .oracle import histogram_distance
from .serialization import (
    analysis_config,
    build_curve,
    nudge_domain,
    parse_curve_spec,
    write_histogram_csv,
    write_report_json,
)
from .svg import render_curvature_profile_svg, render_curve_svg, render_ldgc_svg

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4
PROFILE_SAMPLES = 512

log = logging.getLogger("ldgc")


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            fn(*args, **kwargs)
        except InputError as exc:
            click.echo(f"input error: {exc}", err=True)
            sys.exit(EXIT_INPUT)
        except NumericError as exc:
            click.echo(f"numeric error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(EXIT_NUMERIC)
        except OSError as exc:
            click.echo(f"i/o error: {exc}", err=True)
            sys.exit(EXIT_IO)
        sys.exit(EXIT_OK)
    return wrapper


def _load(spec_path, segments, classes, weighting, log_base):
    try:
        text = Path(spec_path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{spec_path} is not UTF-8: {exc}") from None
    spec = parse_curve_spec(text)
    try:
        curve = build_curve(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    curve, notes = nudge_domain(curve)
    for note in notes:
        click.echo(f"warning: {note}", err=True)
    return spec, curve, analysis_config(spec, segments, classes, weighting, log_base)


def _write(out_dir, name, text):
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / name).write_text(text, encoding="utf-8")


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    value = fn(*args, **kwargs)
    return value, time.perf_counter() - start


def _override_options(fn):
    options = [
        click.argument("spec_path", type=click.Path(exists=True, dir_okay=False)),
        click.option("-o", "--out-dir", type=click.Path(file_okay=False), default=".",
                     show_default=True, help="Directory for output files."),
        click.option("--segments", type=click.IntRange(min=1), default=None,
                     help="Number of segments N (default 10000)."),
        click.option("--classes", type=click.IntRange(min=2), default=None,
                     help="Number of curvature classes (default 100)."),
        click.option("--weighting", type=click.Choice([w.value for w in Weighting]), default=None,
                     help="How segments contribute length to their class."),
        click.option("--log-base", type=float, default=None, help="Logarithm base (default 10)."),
    ]
    for opt in reversed(options):
        fn = opt(fn)
    return fn


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose):
    """Logarithmic distribution graphs of curvature for plane curves."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")


@main.command()
@_override_options
@click.option("--no-svg", is_flag=True, help="Skip the three SVG plots.")
@_guarded
def analyze(spec_path, out_dir, segments, classes, weighting, log_base, no_svg):
    """Compute the LDGC of a curve and write report, histogram and plots."""
    spec, curve, config = _load(spec_path, segments, classes, weighting, log_base)
    result = compute_ldgc(curve, config)
    report = aesthetic_report(curve, config, result)
    out = Path(out_dir)
    _write(out, "report.json", write_report_json(report))
    _write(out, "histogram.csv", write_histogram_csv(result.histogram, result.partition))
    if not no_svg:
        name = spec.name or spec.kind
        ts = np.linspace(curve.domain.alpha, curve.domain.beta, PROFILE_SAMPLES)
        fit, _ = headline_fit(result.points)
        _write(out, "curve.svg", render_curve_svg(curve, ts, title=name))
        _write(out, "curvature_profile.svg",
               render_curvature_profile_svg(ts, signed_curvature(curve, ts), title=f"{name}: curvature profile"))
        _write(out, "ldgc.svg", render_ldgc_svg(result.points, fit, title=f"{name}: LDGC"))
    log.info("slope=%s r2=%s points=%d", report.slope, report.r_squared, report.point_count)


def compare_runs(curve, config):
    """LDGC and LDDC at equal N, binned on the LDGC class partition."""
    ldgc, t_ldgc = _timed(compute_ldgc, curve, config)
    lddc, t_lddc = _timed(compute_lddc, curve, config, ldgc.partition)
    other = Weighting.ARCLENGTH_WEIGHTED if config.weighting is Weighting.PAPER_FAITHFUL else Weighting.PAPER_FAITHFUL
    alt = compute_ldgc(curve, AnalysisConfig(config.segments, config.class_count, config.log_base,
                                             other, config.quadrature), ldgc.partition)
    fit_g, _ = headline_fit(ldgc.points)
    fit_d, _ = headline_fit(lddc.points)
    return {
        "segments": config.segments,
        "classCount": int(ldgc.partition.class_count),
        "weighting": config.weighting.value,
        "distance": histogram_distance(lddc, ldgc),
        "weightingGap": histogram_distance(ldgc, alt),
        "ldgcSlope": fit_g.slope if fit_g else None,
        "lddcSlope": fit_d.slope if fit_d else None,
        "ldgcSeconds": t_ldgc,
        "lddcSeconds": t_lddc,
    }


@main.command()
@_override_options
@_guarded
def compare(spec_path, out_dir, segments, classes, weighting, log_base):
    """Run LDGC and the equal-arc-length LDDC baseline and compare them."""
    _, curve, config = _load(spec_path, segments, classes, weighting, log_base)
    summary = compare_runs(curve, config)
    _write(Path(out_dir), "compare.json", json.dumps(summary, indent=2) + "\n")
    click.echo(f"distance={summary['distance']:.3g} ldgc={summary['ldgcSeconds']:.4f}s "
               f"lddc={summary['lddcSeconds']:.4f}s")


def bench_runs(curve, config, repetitions=5, seed=0):
    """Time both full pipelines ``repetitions`` times, in a seeded random interleaving."""
    order = ["ldgc", "lddc"] * repetitions
    random.Random(seed).shuffle(order)
    runs = {"ldgc": lambda: compute_ldgc(curve, config), "lddc": lambda: compute_lddc(curve, config)}
    times = {"ldgc": [], "lddc": []}
    for which in order:
        _, dt = _timed(runs[which])
        times[which].append(dt)
    med = {k: statistics.median(v) for k, v in times.items()}
    return {
        "segments": config.segments,
        "repetitions": repetitions,
        "seed": seed,
        "ldgc": {"seconds": times["ldgc"], "median": med["ldgc"]},
        "lddc": {"seconds": times["lddc"], "median": med["lddc"]},
        "speedup": med["lddc"] / med["ldgc"] if med["ldgc"] > 0 else None,
    }


@main.command()
@_override_options
@click.option("--repetitions", type=int, default=5, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for the run interleaving.")
@_guarded
def bench(spec_path, out_dir, segments, classes, weighting, log_base, repetitions, seed):
    """Median wall time of the LDGC and LDDC pipelines."""
    if repetitions < 3:
        raise InputError("--repetitions must be at least 3")
    _, curve, config = _load(spec_path, segments, classes, weighting, log_base)
    summary = bench_runs(curve, config, repetitions, seed)
    _write(Path(out_dir), "bench.json", json.dumps(summary, indent=2) + "\n")
    click.echo(f"ldgc median {summary['ldgc']['median']:.4f}s, lddc median "
               f"{summary['lddc']['median']:.4f}s, speedup {summary['speedup']:.2f}x")


if __name__ == "__main__":
    main()
