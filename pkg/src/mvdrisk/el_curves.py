"""Target expected-loss curves as functions of LVR.

The parametric family replicates the shape of published rating-agency base
curves: a power-law PD factor times the single-valued LGD for an assumed
decline, with the product capped:

    el(lvr) = min[cap, pd_scale * lvr**pd_exponent * max(0, (lvr + mvd - 1)/lvr)]

Tabulated curves interpolate linearly between their knots and refuse to
extrapolate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, CurveRangeError, InvalidLvrError


@dataclass(frozen=True)
class ParametricElCurve:
    """Power-law PD times buffered LGD, capped."""

    pd_scale: float
    pd_exponent: float
    mvd: float
    cap: float = 1.0

    def __post_init__(self):
        if not (self.pd_scale >= 0.0):
            raise ValueError(f"pd_scale must be >= 0, got {self.pd_scale}")
        if not (self.pd_exponent >= 0.0):
            raise ValueError(f"pd_exponent must be >= 0, got {self.pd_exponent}")
        if not (0.0 <= self.mvd <= 1.0):
            raise ValueError(f"mvd must be in [0, 1], got {self.mvd}")
        if not (0.0 < self.cap <= 1.0):
            raise ValueError(f"cap must be in (0, 1], got {self.cap}")

    def _values(self, lvr: np.ndarray) -> np.ndarray:
        lgd = np.maximum(0.0, (lvr + self.mvd - 1.0) / lvr)
        with np.errstate(over="ignore"):
            raw = self.pd_scale * np.power(lvr, self.pd_exponent) * lgd
        return np.minimum(self.cap, raw)


@dataclass(frozen=True, eq=False)
class TabulatedElCurve:
    """EL at strictly increasing LVR knots, linearly interpolated."""

    lvr: np.ndarray
    el: np.ndarray

    def __post_init__(self):
        lvr = np.ascontiguousarray(self.lvr, dtype=float)
        el = np.ascontiguousarray(self.el, dtype=float)
        if lvr.ndim != 1 or lvr.size != el.size or lvr.size == 0:
            raise ValueError("lvr and el must be non-empty arrays of equal length")
        if not (np.all(np.isfinite(lvr)) and np.all(np.isfinite(el))):
            raise ValueError("curve values must be finite")
        if lvr.size > 1 and not np.all(np.diff(lvr) > 0.0):
            raise ValueError("lvr knots must be strictly increasing")
        object.__setattr__(self, "lvr", lvr)
        object.__setattr__(self, "el", el)

    def _values(self, lvr: np.ndarray) -> np.ndarray:
        lo, hi = self.lvr[0], self.lvr[-1]
        tol = 1e-12 * max(1.0, abs(hi))
        if np.any(lvr < lo - tol) or np.any(lvr > hi + tol):
            bad = lvr[(lvr < lo - tol) | (lvr > hi + tol)][0]
            raise CurveRangeError(
                f"lvr={bad} outside tabulated range [{lo}, {hi}]; extrapolation refused"
            )
        return np.interp(np.clip(lvr, lo, hi), self.lvr, self.el)


ElCurve = ParametricElCurve | TabulatedElCurve


def eval_el(curve: ElCurve, lvr) -> float | np.ndarray:
    """Evaluate a curve at positive scalar or array LVR."""
    arr = np.asarray(lvr, dtype=float)
    flat = np.atleast_1d(arr)
    if np.any(flat <= 0.0):
        bad = float(flat[flat <= 0.0][0])
        raise InvalidLvrError(f"lvr must be > 0, got {bad}")
    values = curve._values(flat)
    return float(values[0]) if arr.ndim == 0 else values


def curve_from_config(obj: object, where: str = "el_curve") -> ElCurve:
    """Build a curve from its JSON dict form.

    Accepted shapes:
      {"type": "parametric", "pd_scale": 0.015, "pd_exponent": 20,
       "mvd": 0.40, "cap": 1.0}
      {"type": "tabulated", "lvr": [...], "el": [...]}
    """
    if not isinstance(obj, dict):
        raise ConfigError(f"{where} must be an object, got {obj!r}")
    kind = obj.get("type")
    try:
        if kind == "parametric":
            fields = {}
            for key, default in (("pd_scale", None), ("pd_exponent", None),
                                 ("mvd", None), ("cap", 1.0)):
                if key in obj:
                    value = obj[key]
                    if isinstance(value, bool) or not isinstance(value, (int, float)):
                        raise ConfigError(f"{where}.{key} must be a number, got {value!r}")
                    fields[key] = float(value)
                elif default is not None:
                    fields[key] = default
                else:
                    raise ConfigError(f"{where}.{key} is required")
            return ParametricElCurve(**fields)
        if kind == "tabulated":
            lvr, el = obj.get("lvr"), obj.get("el")
            if not isinstance(lvr, list) or not isinstance(el, list):
                raise ConfigError(f"{where}.lvr and {where}.el must be arrays")
            return TabulatedElCurve(np.asarray(lvr, dtype=float),
                                    np.asarray(el, dtype=float))
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from exc
    raise ConfigError(
        f"{where}.type must be 'parametric' or 'tabulated', got {kind!r}"
    )
