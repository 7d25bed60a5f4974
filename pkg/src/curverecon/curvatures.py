"""Curvature-function specifications: a small grammar, exact parameters, evaluation.

Grammar (one line, case-sensitive)::

    const:<c> | sinusoid:<a>,<b>,<c> | kn:<p>/<q> | mun:<p>/<q>
    | monomial:<c>,<k> | table:<path.csv>[,periodic]

Numbers are decimal or ``<int>/<int>`` (reduced).  Integers parse as exact
rationals; decimals as floats.  The ``kn``/``mun`` families require an exact
rational parameter so closedness arithmetic stays exact.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, pi

import numpy as np

__all__ = [
    "SpecParseError",
    "EvaluationDomainError",
    "CurvatureSpec",
    "ConstantCurvature",
    "SinusoidCurvature",
    "SinePlusBump",
    "BumpPlusOneSquared",
    "MonomialCurvature",
    "TableCurvature",
    "bump",
    "parse_spec",
    "eval_spec",
    "spec_to_string",
]

TWO_PI = 2.0 * pi

Number = Fraction | float


class SpecParseError(ValueError):
    """Malformed curvature-spec text; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class EvaluationDomainError(ValueError):
    """Evaluation outside a table's grid without the periodic flag."""


def bump(s):
    """Smooth bump: 0 for s <= 0, 1 at s = 1, 0 for s >= 2, C-infinity throughout.

    The two open pieces are evaluated as logistic sigmoids of the exponent
    difference, which keeps the values exact 0/1 once the exponent leaves
    double range instead of overflowing.
    """
    arr = np.atleast_1d(np.asarray(s, dtype=float))
    out = np.zeros_like(arr)
    left = (arr > 0.0) & (arr < 1.0)
    if left.any():
        u = arr[left]
        g = 1.0 / u - 1.0 / (1.0 - u)  # e^{1/(1-s)} / (e^{1/s} + e^{1/(1-s)})
        out[left] = 1.0 / (1.0 + np.exp(np.clip(g, -700.0, 700.0)))
    right = (arr > 1.0) & (arr < 2.0)
    if right.any():
        u = arr[right]
        g = 1.0 / (2.0 - u) - 1.0 / (u - 1.0)
        out[right] = 1.0 / (1.0 + np.exp(np.clip(g, -700.0, 700.0)))
    out[arr == 1.0] = 1.0
    if np.ndim(s) == 0:
        return float(out[0])
    return out.reshape(np.shape(s))


class CurvatureSpec:
    """Base class: callable curvature function with optional exact structure."""

    period: float | None = None

    def __call__(self, t):
        raise NotImplementedError

    def to_string(self) -> str:
        raise NotImplementedError

    def closure_ratio_exact(self, period: float) -> Fraction | None:
        """Exact (1/2pi) * integral over one period, when the kind supports it."""
        return None

    def mean_analytic(self, period: float) -> float | None:
        """Mean value over [0, period] when known in closed form."""
        return None

    def __repr__(self):
        return f"{type(self).__name__}({self.to_string()!r})"


def _num_to_float(x: Number) -> float:
    return float(x)


def _fmt_number(x: Number) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return repr(float(x))


def _is_natural_period(period: float, natural: float) -> bool:
    return abs(period - natural) <= 1e-8 * natural


@dataclass(frozen=True)
class ConstantCurvature(CurvatureSpec):
    value: Number

    period = None

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        v = np.full_like(t, _num_to_float(self.value))
        return v if v.ndim else float(v)

    def to_string(self):
        return f"const:{_fmt_number(self.value)}"

    def mean_analytic(self, period):
        return _num_to_float(self.value)


@dataclass(frozen=True)
class SinusoidCurvature(CurvatureSpec):
    """a*sin(t) + b*cos(t) + c, natural period 2*pi."""

    a: Number
    b: Number
    c: Number

    period = TWO_PI

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        v = _num_to_float(self.a) * np.sin(t) + _num_to_float(self.b) * np.cos(t) + _num_to_float(self.c)
        return v if v.ndim else float(v)

    def to_string(self):
        return f"sinusoid:{_fmt_number(self.a)},{_fmt_number(self.b)},{_fmt_number(self.c)}"

    def closure_ratio_exact(self, period):
        if isinstance(self.c, Fraction) and _is_natural_period(period, TWO_PI):
            return self.c
        return None

    def mean_analytic(self, period):
        if _is_natural_period(period, TWO_PI):
            return _num_to_float(self.c)
        return None


@dataclass(frozen=True)
class SinePlusBump(CurvatureSpec):
    """sin(t) plus a (2*pi/r)-scaled bump on [0, 2], extended 2*pi-periodically.

    The bump integrates to exactly 1, so the mean over one period is exactly
    1/r, which makes the closedness ratio exact rational arithmetic.
    """

    r: Fraction

    period = TWO_PI

    def __post_init__(self):
        if self.r == 0:
            raise ValueError("kn ratio must be nonzero")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        v = np.asarray(np.sin(t) + (TWO_PI / float(self.r)) * bump(np.mod(t, TWO_PI)))
        return v if v.ndim else float(v)

    def to_string(self):
        return f"kn:{_fmt_number(self.r)}"

    def closure_ratio_exact(self, period):
        if _is_natural_period(period, TWO_PI):
            return Fraction(self.r.denominator, self.r.numerator)
        return None

    def mean_analytic(self, period):
        if _is_natural_period(period, TWO_PI):
            return 1.0 / float(self.r)
        return None


@dataclass(frozen=True)
class BumpPlusOneSquared(CurvatureSpec):
    """(r*pi)^2 * (bump(t) + 1)^2 on [0, 2], extended 2-periodically."""

    r: Fraction

    period = 2.0

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        v = np.asarray((float(self.r) * pi) ** 2 * (bump(np.mod(t, 2.0)) + 1.0) ** 2)
        return v if v.ndim else float(v)

    def to_string(self):
        return f"mun:{_fmt_number(self.r)}"


@dataclass(frozen=True)
class MonomialCurvature(CurvatureSpec):
    """c * t**k with integer k >= 0."""

    c: Number
    k: int

    period = None

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("monomial exponent must be a non-negative integer")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        v = _num_to_float(self.c) * t**self.k
        return v if v.ndim else float(v)

    def to_string(self):
        return f"monomial:{_fmt_number(self.c)},{self.k}"


@dataclass(frozen=True, eq=False)
class TableCurvature(CurvatureSpec):
    """Tabulated curvature with linear (default) or cubic interpolation."""

    grid: np.ndarray
    values: np.ndarray
    periodic: bool = False
    interpolation: str = "linear"
    source_path: str | None = None
    _spline: object = field(default=None, repr=False)

    def __post_init__(self):
        g = np.asarray(self.grid, dtype=float).reshape(-1)
        v = np.asarray(self.values, dtype=float).reshape(-1)
        if g.size != v.size or g.size < 2:
            raise ValueError("table needs matching grid/value columns with >= 2 rows")
        if np.any(np.diff(g) <= 0):
            raise ValueError("table grid must be strictly increasing")
        if self.interpolation not in ("linear", "cubic"):
            raise ValueError(f"unknown interpolation {self.interpolation!r}")
        object.__setattr__(self, "grid", g)
        object.__setattr__(self, "values", v)
        if self.interpolation == "cubic":
            from scipy.interpolate import CubicSpline

            object.__setattr__(self, "_spline", CubicSpline(g, v))

    @property
    def period(self):  # type: ignore[override]
        return float(self.grid[-1] - self.grid[0]) if self.periodic else None

    def __eq__(self, other):
        return (
            isinstance(other, TableCurvature)
            and np.array_equal(self.grid, other.grid)
            and np.array_equal(self.values, other.values)
            and self.periodic == other.periodic
            and self.interpolation == other.interpolation
        )

    def mean_analytic(self, period):
        span = float(self.grid[-1] - self.grid[0])
        if self.interpolation == "linear" and abs(period - span) <= 1e-9 * span:
            # trapezoid is exact for a linearly interpolated table
            return float(np.trapezoid(self.values, self.grid)) / span
        return None

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        lo, hi = self.grid[0], self.grid[-1]
        if self.periodic:
            u = np.mod(t - lo, hi - lo) + lo
        else:
            if np.any(t < lo - 1e-12) or np.any(t > hi + 1e-12):
                raise EvaluationDomainError(
                    f"value outside table range [{lo}, {hi}] and table is not periodic"
                )
            u = np.clip(t, lo, hi)
        v = np.interp(u, self.grid, self.values) if self._spline is None else self._spline(u)
        v = np.asarray(v, dtype=float)
        return v if v.ndim else float(v)

    def to_string(self):
        path = self.source_path if self.source_path else "<memory>"
        return f"table:{path},periodic" if self.periodic else f"table:{path}"


_DECIMAL_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")
_RATIONAL_RE = re.compile(r"^([+-]?\d+)/(\d+)$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def _parse_number(text: str, offset: int, rational_only: bool = False) -> Number:
    m = _RATIONAL_RE.match(text)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if q == 0:
            raise SpecParseError("zero denominator", offset)
        if gcd(abs(p), q) != 1:
            raise SpecParseError(f"rational {text!r} is not reduced", offset)
        return Fraction(p, q)
    if _INT_RE.match(text):
        return Fraction(int(text))
    if _DECIMAL_RE.match(text):
        if rational_only:
            raise SpecParseError(
                f"{text!r}: this kind requires an exact rational (<int> or <int>/<int>)", offset
            )
        return float(text)
    raise SpecParseError(f"cannot parse number {text!r}", offset)


def _split_args(body: str, base_offset: int):
    parts = []
    pos = 0
    for piece in body.split(","):
        parts.append((piece, base_offset + pos))
        pos += len(piece) + 1
    return parts


def parse_spec(text: str) -> CurvatureSpec:
    """Parse one line of the spec grammar into a curvature object."""
    if ":" not in text:
        raise SpecParseError("expected '<kind>:<args>'", 0)
    kind, body = text.split(":", 1)
    body_off = len(kind) + 1
    if kind == "const":
        return ConstantCurvature(_parse_number(body, body_off))
    if kind == "sinusoid":
        args = _split_args(body, body_off)
        if len(args) != 3:
            raise SpecParseError("sinusoid takes exactly 3 numbers", body_off)
        a, b, c = (_parse_number(s, o) for s, o in args)
        return SinusoidCurvature(a, b, c)
    if kind == "kn" or kind == "mun":
        r = _parse_number(body, body_off, rational_only=True)
        if kind == "kn":
            if r == 0:
                raise SpecParseError("kn ratio must be nonzero", body_off)
            return SinePlusBump(r)
        return BumpPlusOneSquared(r)
    if kind == "monomial":
        args = _split_args(body, body_off)
        if len(args) != 2:
            raise SpecParseError("monomial takes '<c>,<k>'", body_off)
        c = _parse_number(*args[0])
        k_text, k_off = args[1]
        if not re.match(r"^\d+$", k_text):
            raise SpecParseError(f"monomial exponent must be a non-negative integer, got {k_text!r}", k_off)
        return MonomialCurvature(c, int(k_text))
    if kind == "table":
        periodic = False
        path = body
        if body.endswith(",periodic"):
            periodic = True
            path = body[: -len(",periodic")]
        if not path:
            raise SpecParseError("table needs a CSV path", body_off)
        from .curveio import read_table_csv

        grid, values = read_table_csv(path)
        return TableCurvature(grid, values, periodic=periodic, source_path=path)
    raise SpecParseError(f"unknown kind {kind!r}", 0)


def parse_spec_cli(text: str) -> CurvatureSpec:
    """Like :func:`parse_spec` but also accepts the shorthand ``sin``."""
    if text == "sin":
        return SinusoidCurvature(Fraction(1), Fraction(0), Fraction(0))
    return parse_spec(text)


def eval_spec(spec: CurvatureSpec, t):
    return spec(t)


def spec_to_string(spec: CurvatureSpec) -> str:
    return spec.to_string()
