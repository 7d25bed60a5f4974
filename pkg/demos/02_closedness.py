#!/usr/bin/env python3
"""Predict from the curvature alone whether the reconstructed curve closes.

For a periodic curvature with period ell, the mean turning per period
decides everything: when (1/2pi) * integral over one period reduces to xi/m
with m > 1, the curve closes after m periods with turning number xi, and m
counts its rotational symmetries.
"""

import math

from curverecon import euclidean, parse_spec

PI = math.pi

CASES = [
    ("sinusoid:1,1,1/3", 2 * PI),  # mean 1/3: closes with 3-fold symmetry
    ("sinusoid:1,1,1", 2 * PI),    # mean 1: the criterion does not apply
    ("kn:10", 2 * PI),             # 10-fold symmetry, one net turn
    ("kn:5/3", 2 * PI),            # 5-fold symmetry, 3 net turns
    ("kn:-5/3", 2 * PI),           # orientation flipped: -3 net turns
    ("const:0", 1.0),              # straight line
]

for text, period in CASES:
    spec = parse_spec(text)
    rep = euclidean.classify_closure(spec, period=period)
    print(f"{text:18s} ratio={rep.ratio_string or 'irrational':>7s} closed={rep.predicted_closed} "
          f"turning={rep.turning_number} symmetry={rep.symmetry_index}")

# verify one prediction by actually reconstructing over the minimal period
spec = parse_spec("kn:5/3")
rep = euclidean.classify_closure(spec, period=2 * PI)
curve = euclidean.reconstruct(spec, rep.minimal_period, 20481)
print(f"\nkn:5/3 over its minimal period {rep.minimal_period / PI:.0f}*pi:")
print(f"  endpoint gap    : {curve.endpoint_gap:.3e}")
print(f"  turning number  : {euclidean.turning_number(curve)}")
