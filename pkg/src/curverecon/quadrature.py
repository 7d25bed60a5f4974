"""Cumulative quadrature on uniform grids.

Both reconstruction paths integrate twice (curvature -> tangent -> curve),
so the running integral must be available at every grid node, not just the
endpoint.  Composite Simpson gives the values at even nodes; odd nodes get
the integral of the local quadratic over the leading half of the pair.
"""

import numpy as np


def odd_sample_count(n: int) -> int:
    """Smallest odd count >= n (Simpson pairs need an even interval count)."""
    if n < 3:
        raise ValueError("need at least 3 samples")
    return n if n % 2 == 1 else n + 1


def cumulative_simpson(y: np.ndarray, dx: float) -> np.ndarray:
    """Running integral of uniformly sampled ``y`` along axis 0.

    ``y`` may be scalar- or array-valued per node (shape ``(n, ...)``).
    Requires an odd node count; exact for cubics at even nodes, for
    quadratics at odd nodes, O(h^4) accurate overall.
    """
    y = np.asarray(y, dtype=float)
    n = y.shape[0]
    if n < 3 or n % 2 == 0:
        raise ValueError(f"cumulative Simpson needs an odd sample count >= 3, got {n}")
    if dx <= 0:
        raise ValueError("dx must be positive")

    out = np.empty_like(y)
    out[0] = 0.0
    y0, y1, y2 = y[0:-2:2], y[1:-1:2], y[2::2]
    even = np.cumsum((y0 + 4.0 * y1 + y2) * (dx / 3.0), axis=0)
    out[2::2] = even
    # integral over the first half of each pair: quadratic through the 3 nodes
    half = (5.0 * y0 + 8.0 * y1 - y2) * (dx / 12.0)
    out[1] = half[0]
    out[3::2] = even[:-1] + half[1:]
    return out
