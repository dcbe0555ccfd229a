"""Market-value-decline (MVD) distributions on the support [-1, inf).

An MVD is the proportional change in a security property's value between
assessment and liquidation; -1 means a total loss of value.  Three variants
are provided: a point mass (single assumed decline), a normal law hard
truncated at -1 without renormalization (the mass below -1 is simply absent),
and a tabulated strip distribution whose masses may be signed, as produced by
EL-curve inversion.

Tabulated strips are half-open intervals [node, node + step) represented by
their lower grid node; all discrete operations use that node consistently so
forward sums and inversions agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .errors import (
    ConfigError,
    DegenerateTruncationError,
    GridMismatchError,
    InvalidIntervalError,
)

SUPPORT_FLOOR = -1.0


class MvdDistribution:
    """Common interface: probability mass queries over [a, b)."""

    def mass_between(self, a: float, b: float) -> float:
        """Mass on the half-open interval [a, b); b may be math.inf."""
        if a > b:
            raise InvalidIntervalError(f"interval bounds out of order: a={a} > b={b}")
        return self._mass_in(a, b)

    def _mass_in(self, a: float, b: float) -> float:
        raise NotImplementedError


@dataclass(frozen=True)
class DiracMvd(MvdDistribution):
    """Unit point mass at a single assumed decline m."""

    m: float

    def __post_init__(self):
        if not (self.m >= SUPPORT_FLOOR):
            raise ValueError(f"point mass location must be >= -1, got {self.m}")

    def _mass_in(self, a: float, b: float) -> float:
        return 1.0 if a <= self.m < b else 0.0


class _GaussianMvd(MvdDistribution):
    """Shared mass logic for the normal-law variants."""

    def _params(self) -> tuple[float, float, float, float]:
        """(mean, sd, support lower bound, density scale factor)."""
        raise NotImplementedError

    def _mass_in(self, a: float, b: float) -> float:
        mean, sd, lo, scale = self._params()
        return kernels.normal_mass(mean, sd, lo, scale, a, b)


@dataclass(frozen=True)
class NormalMvd(_GaussianMvd):
    """Normal MVD law, hard truncated at -1 with no renormalization.

    The total mass is 1 minus the (tiny, for realistic deviations) tail below
    -1; that tail is treated as nonexistent rather than redistributed.
    """

    std_dev: float
    mean: float = 0.0

    def __post_init__(self):
        if not (self.std_dev > 0.0):
            raise ValueError(f"std_dev must be > 0, got {self.std_dev}")

    def _params(self):
        return self.mean, self.std_dev, SUPPORT_FLOOR, 1.0


@dataclass(frozen=True)
class TruncatedNormalMvd(_GaussianMvd):
    """Normal law cut off below ``floor`` and renormalized to total mass 1."""

    std_dev: float
    mean: float
    floor: float
    _scale: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not (self.std_dev > 0.0):
            raise ValueError(f"std_dev must be > 0, got {self.std_dev}")
        if not (self.floor >= SUPPORT_FLOOR):
            raise ValueError(f"floor must be >= -1, got {self.floor}")
        surviving = kernels.normal_mass(
            self.mean, self.std_dev, self.floor, 1.0, self.floor, math.inf
        )
        if not (surviving > 0.0):
            raise DegenerateTruncationError(
                f"no mass survives truncation at floor={self.floor}"
            )
        object.__setattr__(self, "_scale", 1.0 / surviving)

    def _params(self):
        return self.mean, self.std_dev, self.floor, self._scale


@dataclass(frozen=True, eq=False)
class TabulatedMvd(MvdDistribution):
    """Signed strip masses on a uniform grid starting at ``grid_origin``.

    ``masses[i]`` is the mass of the strip [grid_origin + i*step,
    grid_origin + (i+1)*step), represented by its lower node.
    """

    grid_origin: float
    step: float
    masses: np.ndarray

    def __post_init__(self):
        if not (self.step > 0.0):
            raise ValueError(f"step must be > 0, got {self.step}")
        if self.grid_origin < SUPPORT_FLOOR - 1e-12:
            raise ValueError(f"grid_origin must be >= -1, got {self.grid_origin}")
        arr = np.ascontiguousarray(self.masses, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("masses must be a non-empty 1-d array")
        if not np.all(np.isfinite(arr)):
            raise ValueError("masses must be finite")
        object.__setattr__(self, "masses", arr)

    def nodes(self) -> np.ndarray:
        """Representative node of each strip."""
        return self.grid_origin + np.arange(self.masses.size) * self.step

    def _mass_in(self, a: float, b: float) -> float:
        return kernels.tabulated_mass(self.grid_origin, self.step, self.masses, a, b)


def mass_between(dist: MvdDistribution, a: float, b: float) -> float:
    """Probability mass of ``dist`` on [a, b)."""
    return dist.mass_between(a, b)


def total_mass(dist: MvdDistribution) -> float:
    return dist.mass_between(-math.inf, math.inf)


def truncate_renormalize(dist: MvdDistribution, floor: float) -> MvdDistribution:
    """Drop all mass below ``floor`` and rescale the remainder to total mass 1.

    Raises DegenerateTruncationError when nothing survives.
    """
    if not (floor >= SUPPORT_FLOOR):
        raise ValueError(f"floor must be >= -1, got {floor}")
    if isinstance(dist, DiracMvd):
        if dist.m < floor:
            raise DegenerateTruncationError(
                f"point mass at {dist.m} lies below floor={floor}"
            )
        return dist
    if isinstance(dist, TruncatedNormalMvd):
        return TruncatedNormalMvd(dist.std_dev, dist.mean, max(floor, dist.floor))
    if isinstance(dist, NormalMvd):
        return TruncatedNormalMvd(dist.std_dev, dist.mean, floor)
    if isinstance(dist, TabulatedMvd):
        n = dist.masses.size
        i0 = int(math.ceil((floor - dist.grid_origin) / dist.step - 1e-9))
        i0 = min(max(i0, 0), n)
        surviving = float(np.sum(dist.masses[i0:]))
        if i0 >= n or not (surviving > 0.0):
            raise DegenerateTruncationError(
                f"no positive mass survives truncation at floor={floor}"
            )
        return TabulatedMvd(
            dist.grid_origin + i0 * dist.step, dist.step, dist.masses[i0:] / surviving
        )
    raise TypeError(f"unsupported distribution type: {type(dist).__name__}")


def discretize(dist: MvdDistribution, step: float, lo: float = SUPPORT_FLOOR,
               hi: float = 1.0) -> TabulatedMvd:
    """Bin a distribution into uniform strips of width ``step`` on [lo, hi).

    Each strip's mass is the exact mass_between of its bounds, so aligned
    interval queries on the result reproduce the continuous answers.
    """
    if not (step > 0.0):
        raise ValueError(f"step must be > 0, got {step}")
    span = hi - lo
    n = int(round(span / step))
    if n < 1 or abs(n * step - span) > 1e-9 * step:
        raise GridMismatchError(
            f"[{lo}, {hi}) is not a whole number of strips of width {step}"
        )
    masses = np.empty(n)
    for i in range(n):
        a = lo + i * step
        masses[i] = dist.mass_between(a, a + step)
    return TabulatedMvd(lo, step, masses)


def _require_number(obj: dict, key: str, where: str) -> float:
    if key not in obj:
        raise ConfigError(f"{where}.{key} is required")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key} must be a number, got {value!r}")
    return float(value)


def from_config(obj: object, where: str = "distribution") -> MvdDistribution:
    """Build a distribution from its JSON dict form.

    Accepted shapes:
      {"type": "dirac", "m": -0.45}
      {"type": "normal", "mean": 0.0, "std_dev": 0.20}
      {"type": "tabulated", "grid_origin": -1.0, "step": 0.01, "masses": [...]}
    """
    if not isinstance(obj, dict):
        raise ConfigError(f"{where} must be an object, got {obj!r}")
    kind = obj.get("type")
    try:
        if kind == "dirac":
            return DiracMvd(_require_number(obj, "m", where))
        if kind == "normal":
            mean = _require_number(obj, "mean", where) if "mean" in obj else 0.0
            return NormalMvd(_require_number(obj, "std_dev", where), mean)
        if kind == "tabulated":
            masses = obj.get("masses")
            if not isinstance(masses, list) or not masses:
                raise ConfigError(f"{where}.masses must be a non-empty array")
            return TabulatedMvd(
                _require_number(obj, "grid_origin", where),
                _require_number(obj, "step", where),
                np.asarray(masses, dtype=float),
            )
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from exc
    raise ConfigError(
        f"{where}.type must be 'dirac', 'normal' or 'tabulated', got {kind!r}"
    )


def to_config(dist: MvdDistribution) -> dict:
    """JSON dict form of a distribution; inverse of from_config."""
    if isinstance(dist, DiracMvd):
        return {"type": "dirac", "m": dist.m}
    if isinstance(dist, NormalMvd):
        return {"type": "normal", "mean": dist.mean, "std_dev": dist.std_dev}
    if isinstance(dist, TabulatedMvd):
        return {
            "type": "tabulated",
            "grid_origin": dist.grid_origin,
            "step": dist.step,
            "masses": [float(x) for x in dist.masses],
        }
    raise TypeError(f"{type(dist).__name__} has no JSON form")
