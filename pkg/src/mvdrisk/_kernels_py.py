"""Pure-Python (numpy) implementations of the numerical kernels.

Mirrors the compiled extension in ``_kernels.pyx``; the active implementation
is chosen in ``_backend``.  All functions operate on plain floats and
contiguous float64 arrays so the two backends stay call-compatible.
"""

from __future__ import annotations

import math

import numpy as np

_INV_SQRT_2PI = 0.3989422804014327
_SQRT1_2 = 0.7071067811865476

# Boundary snap, in strip units. Grid nodes that land within this distance of
# an interval bound are treated as exactly on it, which keeps half-open
# membership stable under float noise like 60*0.01 != 0.6.
_SNAP = 1e-9


def _phi(z: float) -> float:
    if z == math.inf:
        return 1.0
    if z == -math.inf:
        return 0.0
    return 0.5 * (1.0 + math.erf(z * _SQRT1_2))


def _snap_ceil(x: float) -> int:
    return int(math.ceil(x - _SNAP))


def normal_mass(mean: float, sd: float, lo: float, scale: float,
                a: float, b: float) -> float:
    """Mass of scale * N(mean, sd) restricted to [lo, inf), over [a, b)."""
    a = max(a, lo)
    if b <= a:
        return 0.0
    za = (a - mean) / sd
    zb = math.inf if b == math.inf else (b - mean) / sd
    return scale * (_phi(zb) - _phi(za))


def normal_shortfall(lvr: float, mean: float, sd: float, lo: float,
                     scale: float, step: float) -> float:
    """Midpoint-rectangle integral of ((lvr-M-1)/lvr) * density over [lo, lvr-1].

    The density is scale * N(mean, sd) restricted to [lo, inf). Strips are
    uniform with width <= step; the last strip is never cut short because the
    width is distributed evenly.
    """
    upper = lvr - 1.0
    if upper <= lo:
        return 0.0
    n = max(1, _snap_ceil((upper - lo) / step))
    h = (upper - lo) / n
    mids = lo + (np.arange(n) + 0.5) * h
    z = (mids - mean) / sd
    dens = np.exp(-0.5 * z * z)
    s = float(np.dot(upper - mids, dens))
    return s * scale * h * _INV_SQRT_2PI / (sd * lvr)


def tabulated_mass(origin: float, step: float, masses: np.ndarray,
                   a: float, b: float) -> float:
    """Sum of strip masses whose representative node origin + i*step is in [a, b)."""
    n = len(masses)
    i_lo = 0 if a == -math.inf else _snap_ceil((a - origin) / step)
    i_hi = n if b == math.inf else _snap_ceil((b - origin) / step)
    i_lo = min(max(i_lo, 0), n)
    i_hi = min(max(i_hi, 0), n)
    if i_hi <= i_lo:
        return 0.0
    return float(np.sum(masses[i_lo:i_hi]))


def tabulated_shortfall(lvr: float, origin: float, step: float,
                        masses: np.ndarray) -> float:
    """Discrete shortfall sum over strips with node strictly below lvr - 1."""
    upper = lvr - 1.0
    n = len(masses)
    k = min(max(_snap_ceil((upper - origin) / step), 0), n)
    if k == 0:
        return 0.0
    nodes = origin + np.arange(k) * step
    return float(np.dot(upper - nodes, masses[:k])) / lvr


def solve_el_masses(el: np.ndarray, p_a: float, step: float) -> np.ndarray:
    """Forward-substitute strip masses from EL values on the grid k*step.

    Strip i spans [-1 + i*step, -1 + (i+1)*step) with representative node at
    its lower edge, so at lvr = k*step exactly strips 0..k-1 participate and
    the newest strip is the single unknown of a linear equation.
    """
    K = len(el)
    masses = np.zeros(K)
    nodes = -1.0 + np.arange(K) * step
    for k in range(1, K + 1):
        lvr = k * step
        upper = lvr - 1.0
        w_new = upper - nodes[k - 1]
        assert w_new > 0.0
        s = float(np.dot(upper - nodes[:k - 1], masses[:k - 1]))
        masses[k - 1] = (el[k - 1] * lvr / p_a - s) / w_new
    return masses


def loss_aggregate(draws: np.ndarray, lvr: float) -> tuple[float, float, int]:
    """Aggregate losses max(0, (lvr - M - 1)/lvr) over defaulted-trial draws.

    Returns (sum of losses, sum of squared losses, count of positive losses).
    """
    short = (lvr - 1.0) - draws
    losses = short[short > 0.0] / lvr
    total = float(np.sum(losses))
    total_sq = float(np.dot(losses, losses))
    return total, total_sq, int(losses.size)
