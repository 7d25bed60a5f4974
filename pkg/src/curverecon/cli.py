"""Command-line surface: reconstruct curves, classify closedness, certify bounds.

Exit codes: 0 success, 2 unparseable curvature spec or bad usage, 3 solver
failure, 4 certified bound violated (a regression tripwire for CI).
"""

import argparse
import json
import sys

from . import affine, euclidean, series
from .curvatures import EvaluationDomainError, SpecParseError, parse_spec_cli
from .curveio import (
    CsvFormatError,
    PlotSpec,
    bound_report_json,
    closure_report_json,
    emit_svg,
    write_curve_csv,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SOLVER = 3
EXIT_BOUND = 4


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="curverecon",
        description="Reconstruct planar curves from prescribed Euclidean or equi-affine curvature.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    rec = sub.add_parser("reconstruct", help="integrate a curvature spec into a curve")
    rec.add_argument("mode", choices=["euclid", "affine", "series"])
    rec.add_argument("--curvature", required=True, metavar="SPEC",
                     help="e.g. const:2, sinusoid:1,1,1/3, kn:5/3, mun:2/5, monomial:1,1, table:f.csv")
    rec.add_argument("--domain", required=True, metavar="A:B", help="parameter interval")
    rec.add_argument("--samples", type=int, default=None, metavar="N")
    rec.add_argument("--iterations", type=int, default=None, metavar="N",
                     help="fixed iteration count (affine mode)")
    rec.add_argument("--tol", type=float, default=None, metavar="EPS",
                     help="certified tail tolerance (affine) or term tolerance (series)")
    rec.add_argument("--out", default=None, metavar="PATH", help="curve CSV output")
    rec.add_argument("--svg", default=None, metavar="PATH", help="plot output")

    cla = sub.add_parser("classify", help="closedness prediction for a periodic curvature")
    cla.add_argument("--curvature", required=True, metavar="SPEC")
    cla.add_argument("--period", type=float, required=True, metavar="L")

    cmp_ = sub.add_parser("compare", help="certify the distance bound for two curvatures")
    cmp_.add_argument("mode", choices=["euclid", "affine"])
    cmp_.add_argument("spec1", metavar="SPEC1")
    cmp_.add_argument("spec2", metavar="SPEC2")
    cmp_.add_argument("--domain", required=True, metavar="A:B")
    cmp_.add_argument("--norm", choices=["linf", "l1"], default="linf")
    return p


class _UsageError(ValueError):
    pass


def _parse_domain(text: str):
    parts = text.split(":")
    if len(parts) != 2:
        raise _UsageError(f"domain must be '<a>:<b>', got {text!r}")
    try:
        a, b = float(parts[0]), float(parts[1])
    except ValueError:
        raise _UsageError(f"domain bounds must be numbers, got {text!r}") from None
    if not b > a:
        raise _UsageError(f"domain needs b > a, got {text!r}")
    return a, b


def _shifted(spec, offset: float):
    if offset == 0.0:
        return spec
    return lambda t: spec(offset + t)


def _emit_curve(curve, args, label: str):
    if args.out:
        write_curve_csv(curve, args.out)
    if args.svg:
        emit_svg(PlotSpec(curves=((curve, label),)), args.svg)


def _cmd_reconstruct(args) -> int:
    spec = parse_spec_cli(args.curvature)
    a, b = _parse_domain(args.domain)
    length = b - a
    if args.samples is not None and args.samples < 16:
        raise _UsageError("--samples must be at least 16")

    if args.mode == "euclid":
        curve = euclidean.reconstruct(spec, length, n=args.samples, start=a)
        summary = {
            "mode": "euclid",
            "length": length,
            "endpoint_gap": curve.endpoint_gap,
            "samples": len(curve),
        }
    elif args.mode == "affine":
        kwargs = {}
        if args.iterations is not None:
            kwargs["iterations"] = args.iterations
        if args.tol is not None:
            kwargs["tol"] = args.tol
        curve, result = affine.picard(_shifted(spec, a), length, n_grid=args.samples, **kwargs)
        summary = {
            "mode": "affine",
            "length": length,
            "endpoint_gap": curve.endpoint_gap,
            "samples": len(curve),
            "iterations": result.iterations,
            "c": result.c,
            "tail_bound": result.tail_bound,
        }
    else:
        from .curvatures import MonomialCurvature

        if not isinstance(spec, MonomialCurvature):
            raise _UsageError("series mode needs a 'monomial:<c>,<k>' curvature")
        if a != 0.0:
            raise _UsageError("series mode integrates from 0; use a domain '0:<b>'")
        ms = series.MonomialSeries(float(spec.c), spec.k, term_tol=args.tol or 1e-14)
        n = args.samples or 4097
        curve = series.curve(ms, length, n)
        summary = {
            "mode": "series",
            "length": length,
            "endpoint_gap": curve.endpoint_gap,
            "samples": len(curve),
            "terms": series.truncation_count(ms, length),
        }
    _emit_curve(curve, args, args.curvature)
    print(json.dumps(summary))
    return EXIT_OK


def _cmd_classify(args) -> int:
    spec = parse_spec_cli(args.curvature)
    report = euclidean.classify_closure(spec, period=args.period)
    print(closure_report_json(report))
    return EXIT_OK


def _cmd_compare(args) -> int:
    s1 = parse_spec_cli(args.spec1)
    s2 = parse_spec_cli(args.spec2)
    a, b = _parse_domain(args.domain)
    length = b - a
    if args.mode == "euclid":
        report = euclidean.bound_check(_shifted(s1, a), _shifted(s2, a), length, norm=args.norm)
    else:
        report = affine.bound_check(_shifted(s1, a), _shifted(s2, a), length)
    print(bound_report_json(report))
    return EXIT_OK if report.satisfied else EXIT_BOUND


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "reconstruct":
            return _cmd_reconstruct(args)
        if args.command == "classify":
            return _cmd_classify(args)
        return _cmd_compare(args)
    except (SpecParseError, CsvFormatError, _UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (
        affine.PicardConvergenceError,
        series.SeriesTruncationError,
        EvaluationDomainError,
        ValueError,
    ) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
