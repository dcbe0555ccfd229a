"""Exception types shared across the package."""


class MvdRiskError(Exception):
    """Base class for all errors raised by this package."""


class InvalidLvrError(MvdRiskError):
    """An LVR argument is outside the domain of the requested measure."""


class InvalidIntervalError(MvdRiskError):
    """A mass query interval has its bounds out of order."""


class DegenerateTruncationError(MvdRiskError):
    """Truncation removed all probability mass, nothing left to renormalize."""


class GridMismatchError(MvdRiskError):
    """An LVR or strip grid does not line up with the expected lattice."""


class CurveRangeError(MvdRiskError):
    """A tabulated curve was evaluated outside its supported range."""


class DegenerateInversionError(MvdRiskError):
    """The inversion problem has no usable solution (e.g. zero arrears PD)."""


class SamplingError(MvdRiskError):
    """The requested distribution variant cannot be sampled."""


class ConfigError(MvdRiskError):
    """A scenario config is missing or malformed; message names the field."""
