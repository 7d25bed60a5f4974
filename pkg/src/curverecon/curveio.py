"""CSV persistence, JSON reports, and deterministic SVG plots.

CSV schemas: curves are ``s,x,y`` (``t,x,y`` accepted on read), sampled
functions are ``t,value`` or ``s,kappa``.  Floats round-trip at 17
significant digits.  SVG output is a pure function of its input, so
repeated runs are byte-identical.
"""

import csv
import json
from dataclasses import dataclass, field

import numpy as np

from .geometry import BoundReport, SampledCurve

__all__ = [
    "CsvFormatError",
    "PlotSpec",
    "bound_report_json",
    "closure_report_json",
    "emit_svg",
    "picard_result_json",
    "read_curve_csv",
    "read_table_csv",
    "write_curve_csv",
    "write_table_csv",
]


class CsvFormatError(ValueError):
    """Malformed CSV; message carries the file and line number."""


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_float(text: str, path, line_no: int) -> float:
    try:
        return float(text)
    except ValueError:
        raise CsvFormatError(f"{path}:{line_no}: cannot parse number {text!r}") from None


def _read_rows(path, expected_headers):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvFormatError(f"{path}:1: empty file") from None
        header = [h.strip() for h in header]
        for expect in expected_headers:
            if header == expect:
                break
        else:
            wanted = " or ".join(",".join(e) for e in expected_headers)
            missing = [c for c in expected_headers[0] if c not in header]
            what = f"missing column(s) {missing}" if missing else f"got {','.join(header)!r}"
            raise CsvFormatError(f"{path}:1: expected header {wanted!r}; {what}")
        rows = []
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise CsvFormatError(f"{path}:{line_no}: expected {len(header)} fields, got {len(row)}")
            rows.append([_parse_float(cell, path, line_no) for cell in row])
    if len(rows) < 2:
        raise CsvFormatError(f"{path}: need at least 2 data rows")
    return np.asarray(rows)


def _check_monotone(col, path):
    steps = np.diff(col)
    if np.any(steps <= 0):
        bad = int(np.argmax(steps <= 0))
        raise CsvFormatError(f"{path}:{bad + 3}: parameter column not strictly increasing")


def read_curve_csv(path) -> SampledCurve:
    data = _read_rows(path, [["s", "x", "y"], ["t", "x", "y"]])
    _check_monotone(data[:, 0], path)
    return SampledCurve(data[:, 0], data[:, 1:3])


def write_curve_csv(curve: SampledCurve, path) -> None:
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write("s,x,y\n")
        for s, (x, y) in zip(curve.params, curve.points):
            fh.write(f"{_fmt(s)},{_fmt(x)},{_fmt(y)}\n")


def read_table_csv(path):
    """Sampled function from a ``t,value`` (or ``s,kappa``) CSV."""
    data = _read_rows(path, [["t", "value"], ["s", "kappa"]])
    _check_monotone(data[:, 0], path)
    return data[:, 0], data[:, 1]


def write_table_csv(grid, values, path, header=("t", "value")) -> None:
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write(f"{header[0]},{header[1]}\n")
        for t, v in zip(grid, values):
            fh.write(f"{_fmt(t)},{_fmt(v)}\n")


_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b"]


@dataclass(frozen=True)
class PlotSpec:
    """Curves to draw with equal-aspect scaling (geometry is never sheared)."""

    curves: tuple
    width: int = 640
    height: int = 480
    margin: int = 40
    stroke_width: float = 1.5
    legend: bool = field(default=True)


def _svg_coords(points, scale, x0, y0, xmin, ymax):
    xs = x0 + (points[:, 0] - xmin) * scale
    ys = y0 + (ymax - points[:, 1]) * scale
    return " ".join(f"{x:.3f},{y:.3f}" for x, y in zip(xs, ys))


def emit_svg(spec: PlotSpec, path) -> None:
    """Write an SVG 1.1 plot; identical input produces identical bytes."""
    if not spec.curves:
        raise ValueError("nothing to plot")
    curves = [(c, "") if isinstance(c, SampledCurve) else (c[0], c[1]) for c in spec.curves]
    pts = np.concatenate([c.points for c, _ in curves])
    xmin, ymin = pts.min(axis=0)
    xmax, ymax = pts.max(axis=0)
    dx, dy = xmax - xmin, ymax - ymin
    if dx == 0.0 and dy == 0.0:
        raise ValueError("zero-area bounding box")
    # pad a flat direction so the scale stays finite
    if dx == 0.0:
        xmin -= 0.05 * dy
        dx = 0.1 * dy
    if dy == 0.0:
        ymin -= 0.05 * dx
        dy = 0.1 * dx
    xmax, ymax = xmin + dx, ymin + dy

    avail_w = spec.width - 2 * spec.margin
    avail_h = spec.height - 2 * spec.margin
    scale = min(avail_w / dx, avail_h / dy)
    x0 = spec.margin + (avail_w - dx * scale) / 2.0
    y0 = spec.margin + (avail_h - dy * scale) / 2.0

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect x="0" y="0" width="{spec.width}" height="{spec.height}" fill="#ffffff"/>',
    ]
    for i, (curve, _) in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        coords = _svg_coords(curve.points, scale, x0, y0, xmin, ymax)
        lines.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="{spec.stroke_width}" points="{coords}"/>'
        )
    labels = [label for _, label in curves if label]
    if labels and spec.legend:
        lines.append('<g id="legend" font-family="monospace" font-size="12">')
        row = 0
        for i, (_, label) in enumerate(curves):
            if not label:
                continue
            color = _PALETTE[i % len(_PALETTE)]
            y = spec.margin + 14 * row
            lines.append(f'<line x1="{spec.margin}" y1="{y}" x2="{spec.margin + 18}" y2="{y}" '
                         f'stroke="{color}" stroke-width="2"/>')
            lines.append(f'<text x="{spec.margin + 24}" y="{y + 4}" fill="#333333">{label}</text>')
            row += 1
        lines.append("</g>")
    lines.append("</svg>")
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def bound_report_json(report: BoundReport) -> str:
    c_hat = None if report.c_hat is None else float(report.c_hat)
    return json.dumps(
        {
            "mode": report.mode,
            "norm": report.norm,
            "delta": float(report.delta),
            "L": float(report.length),
            "c_hat": c_hat,
            "bound_stated": float(report.bound_stated),
            "bound": float(report.bound),
            "measured": float(report.measured),
            "satisfied": bool(report.satisfied),
            "stated_bound_held": bool(report.stated_bound_held),
        }
    )


def closure_report_json(report) -> str:
    return json.dumps(
        {
            "ratio": report.ratio_string,
            "closed": bool(report.predicted_closed),
            "turning": None if report.turning_number is None else int(report.turning_number),
            "symmetry": None if report.symmetry_index is None else int(report.symmetry_index),
            "minimal_period": None if report.minimal_period is None else float(report.minimal_period),
        }
    )


def picard_result_json(result) -> str:
    return json.dumps(
        {
            "iterations": int(result.iterations),
            "c": float(result.c),
            "tail_bound": float(result.tail_bound),
            "grid_size": result.grid_size,
        }
    )
