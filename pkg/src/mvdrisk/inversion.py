"""Recover the implied discrete MVD distribution from a target EL curve.

The forward map evaluates the discrete analogue of the shortfall integral on
strips of width step starting at -1.  On the matching LVR grid {step, 2*step,
..., max_lvr} each successive gridpoint brings exactly one new strip into the
sum, so the system is triangular: stepping through the grid and solving the
single linear equation for the newest strip mass inverts the curve exactly,
with no iterative search.  Nothing is smoothed or clipped; a curve that
cannot be realized by a probability distribution simply comes back with
negative strip masses, which is the point of the diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .distributions import TabulatedMvd
from .el_curves import ElCurve, eval_el
from .errors import DegenerateInversionError, GridMismatchError, InvalidLvrError


@dataclass(frozen=True)
class InversionConfig:
    """Strip width, arrears PD and upper LVR bound of the inversion grid."""

    step: float = 0.01
    p_a: float = 0.10
    max_lvr: float = 1.80

    def __post_init__(self):
        if not (self.step > 0.0):
            raise DegenerateInversionError(f"step must be > 0, got {self.step}")
        if not (0.0 < self.p_a <= 1.0):
            raise DegenerateInversionError(
                f"p_a must be in (0, 1], got {self.p_a}; an EL curve carries no"
                " information about the decline distribution when p_a is 0"
            )
        k = round(self.max_lvr / self.step)
        if k < 1 or abs(k * self.step - self.max_lvr) > 1e-9 * self.step:
            raise DegenerateInversionError(
                f"max_lvr={self.max_lvr} must be a positive whole multiple of"
                f" step={self.step}"
            )

    def n_strips(self) -> int:
        return round(self.max_lvr / self.step)

    def lvr_grid(self) -> np.ndarray:
        return (np.arange(self.n_strips()) + 1) * self.step


def _check_alignment(pm: TabulatedMvd, lvr: float) -> None:
    # lvr - 1 must land on a strip boundary of pm's grid
    offset = (lvr - 1.0 - pm.grid_origin) / pm.step
    if abs(offset - round(offset)) > 1e-6:
        raise GridMismatchError(
            f"lvr={lvr} does not align with the strip grid"
            f" (origin {pm.grid_origin}, step {pm.step})"
        )


def forward_discrete(pm: TabulatedMvd, p_a: float, lvr: float) -> float:
    """Discrete EL at a grid-aligned LVR: p_a * sum over strips below lvr - 1.

    Each strip with representative node M < lvr - 1 contributes
    ((lvr - M - 1)/lvr) * mass.  EL at lvr = 0 is defined as 0.
    """
    if lvr < 0.0:
        raise InvalidLvrError(f"lvr must be >= 0, got {lvr}")
    if lvr == 0.0:
        return 0.0
    _check_alignment(pm, lvr)
    return p_a * kernels.tabulated_shortfall(lvr, pm.grid_origin, pm.step, pm.masses)


def invert_el_to_pm(curve: ElCurve, cfg: InversionConfig) -> TabulatedMvd:
    """Solve for strip masses reproducing the curve on cfg's LVR grid.

    The result spans [-1, max_lvr - 1) and satisfies
    forward_discrete(result, cfg.p_a, k*step) == eval_el(curve, k*step) for
    every k, exactly up to float round-off.  Masses may be negative.
    """
    el = np.ascontiguousarray(eval_el(curve, cfg.lvr_grid()), dtype=float)
    masses = kernels.solve_el_masses(el, cfg.p_a, cfg.step)
    return TabulatedMvd(-1.0, cfg.step, masses)


def implied_pd_curve(pm: TabulatedMvd, p_a: float, lvr_grid) -> np.ndarray:
    """p_a times the cumulative signed mass below lvr - 1, per gridpoint.

    For an implied distribution this is the liquidation PD the curve demands;
    values above 1 are the standard diagnostic that the target curve is not
    realizable by any probability distribution at that gearing.
    """
    grid = np.atleast_1d(np.asarray(lvr_grid, dtype=float))
    for lvr in grid:
        if lvr <= 0.0:
            raise InvalidLvrError(f"lvr must be > 0, got {lvr}")
        _check_alignment(pm, lvr)
    cum = np.concatenate(([0.0], np.cumsum(pm.masses)))
    counts = np.ceil((grid - 1.0 - pm.grid_origin) / pm.step - 1e-9).astype(int)
    counts = np.clip(counts, 0, pm.masses.size)
    return p_a * cum[counts]
