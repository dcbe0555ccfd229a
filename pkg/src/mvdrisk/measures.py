"""Loan-level risk measures under two default definitions.

A loan defaults in the arrears sense with a fixed probability ``p_a``
independent of gearing.  It defaults in the liquidation sense when the sale
proceeds fall short of the balance, i.e. when the realized decline M is below
lvr - 1.  Both definitions price the same expected loss:

    el(lvr) = p_a * integral_{-1}^{lvr-1} ((lvr - M - 1)/lvr) P(M) dM

The arrears decomposition reads the integral as an LGD against the constant
PD p_a; the liquidation decomposition divides the same EL by the probability
of a shortfall.  Continuous integrals use a midpoint rectangle rule on
uniform strips.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .distributions import (
    DiracMvd,
    MvdDistribution,
    TabulatedMvd,
    _GaussianMvd,
)
from .errors import InvalidLvrError

_QUADRATURE_METHODS = ("midpoint-rectangle",)


@dataclass(frozen=True)
class LoanContext:
    """Arrears default probability and the single-valued LGD floor."""

    p_a: float
    lgd_min: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.p_a <= 1.0):
            raise ValueError(f"p_a must be in [0, 1], got {self.p_a}")
        if not (0.0 <= self.lgd_min <= 1.0):
            raise ValueError(f"lgd_min must be in [0, 1], got {self.lgd_min}")


@dataclass(frozen=True)
class QuadratureConfig:
    """Strip width and rule for the continuous shortfall integrals."""

    step: float = 1e-4
    method: str = "midpoint-rectangle"

    def __post_init__(self):
        if not (self.step > 0.0):
            raise ValueError(f"quadrature step must be > 0, got {self.step}")
        if self.method not in _QUADRATURE_METHODS:
            raise ValueError(f"unknown quadrature method: {self.method!r}")


DEFAULT_QUADRATURE = QuadratureConfig()


@dataclass(frozen=True, eq=False)
class RiskCurve:
    """The four measures evaluated on an LVR grid, stored column-wise."""

    lvr: np.ndarray
    el: np.ndarray
    lgd_a: np.ndarray
    pd_l: np.ndarray
    lgd_l: np.ndarray


def _check_lvr(lvr: float, allow_zero: bool) -> None:
    if lvr < 0.0 or (lvr == 0.0 and not allow_zero):
        bound = ">= 0" if allow_zero else "> 0"
        raise InvalidLvrError(f"lvr must be {bound}, got {lvr}")


def lgd_single(lvr: float, m: float, lgd_min: float = 0.0) -> float:
    """Loss severity for a known decline m: max[lgd_min, (lvr - m - 1)/lvr].

    This is the single-valued calculation used by rating-agency recipes; the
    floor applies here and nowhere else.  The result is capped at 1.
    """
    _check_lvr(lvr, allow_zero=False)
    if not (m >= -1.0):
        raise ValueError(f"decline m must be >= -1, got {m}")
    return min(1.0, max(lgd_min, (lvr - m - 1.0) / lvr))


def lgd_arrears(lvr: float, dist: MvdDistribution,
                quad: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Expected shortfall fraction given an arrears default.

    integral_{-1}^{lvr-1} ((lvr - M - 1)/lvr) P(M) dM, zero when the region
    is empty.  Point masses are evaluated in closed form, tabulated masses as
    a discrete sum, normal laws by quadrature.
    """
    _check_lvr(lvr, allow_zero=True)
    if lvr == 0.0:
        return 0.0
    if isinstance(dist, DiracMvd):
        if dist.m >= lvr - 1.0:
            return 0.0
        return (lvr - dist.m - 1.0) / lvr
    if isinstance(dist, TabulatedMvd):
        return kernels.tabulated_shortfall(lvr, dist.grid_origin, dist.step, dist.masses)
    if isinstance(dist, _GaussianMvd):
        mean, sd, lo, scale = dist._params()
        return kernels.normal_shortfall(lvr, mean, sd, lo, scale, quad.step)
    raise TypeError(f"unsupported distribution type: {type(dist).__name__}")


def expected_loss(lvr: float, dist: MvdDistribution, ctx: LoanContext,
                  quad: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """p_a times the arrears LGD; defined as 0 at lvr = 0."""
    _check_lvr(lvr, allow_zero=True)
    if lvr == 0.0:
        return 0.0
    return ctx.p_a * lgd_arrears(lvr, dist, quad)


def pd_liquidation(lvr: float, dist: MvdDistribution, ctx: LoanContext) -> float:
    """Probability of a liquidation shortfall: p_a * P(M < lvr - 1).

    The inequality is strict, so a point mass sitting exactly at lvr - 1
    does not count as a loss.
    """
    _check_lvr(lvr, allow_zero=False)
    return ctx.p_a * dist.mass_between(-1.0, lvr - 1.0)


def lgd_liquidation(lvr: float, dist: MvdDistribution,
                    quad: QuadratureConfig = DEFAULT_QUADRATURE,
                    denominator_eps: float = 1e-12) -> float:
    """Loss severity conditional on a liquidation shortfall.

    The ratio of the shortfall integral to the shortfall probability.  When
    the probability is below ``denominator_eps`` the measure is shown as 0
    by convention rather than left undefined.
    """
    _check_lvr(lvr, allow_zero=False)
    denom = dist.mass_between(-1.0, lvr - 1.0)
    if denom <= denominator_eps:
        return 0.0
    return lgd_arrears(lvr, dist, quad) / denom


def risk_curve(lvr_grid, dist: MvdDistribution, ctx: LoanContext,
               quad: QuadratureConfig = DEFAULT_QUADRATURE,
               denominator_eps: float = 1e-12) -> RiskCurve:
    """All four measures on a strictly increasing grid of positive LVRs."""
    grid = np.atleast_1d(np.asarray(lvr_grid, dtype=float))
    if grid.ndim != 1:
        raise InvalidLvrError("lvr grid must be one-dimensional")
    for value in grid:
        if not value > 0.0:
            raise InvalidLvrError(f"lvr grid values must be > 0, offending lvr={value}")
    if grid.size > 1 and not np.all(np.diff(grid) > 0.0):
        bad = grid[1:][np.diff(grid) <= 0.0][0]
        raise InvalidLvrError(f"lvr grid must be strictly increasing, offending lvr={bad}")

    n = grid.size
    el = np.empty(n)
    lgd_a = np.empty(n)
    pd_l = np.empty(n)
    lgd_l = np.empty(n)
    for i, lvr in enumerate(grid):
        try:
            severity = lgd_arrears(lvr, dist, quad)
            shortfall_mass = dist.mass_between(-1.0, lvr - 1.0)
        except Exception as exc:
            raise type(exc)(f"at lvr={lvr}: {exc}") from exc
        lgd_a[i] = severity
        el[i] = ctx.p_a * severity
        pd_l[i] = ctx.p_a * shortfall_mass
        lgd_l[i] = severity / shortfall_mass if shortfall_mass > denominator_eps else 0.0
    return RiskCurve(lvr=grid, el=el, lgd_a=lgd_a, pd_l=pd_l, lgd_l=lgd_l)
