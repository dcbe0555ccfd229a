"""Credit-risk measures for asset-backed loans driven by market-value declines.

The package models the loss on a loan secured by an asset whose market value
may decline between origination and workout.  Given a distribution of the
relative decline M on [-1, inf), it computes expected loss and the
probability/severity split under two default definitions (payment arrears
versus liquidation shortfall), inverts a target expected-loss curve into the
implied discrete decline distribution, and cross-checks the closed forms with
a seeded Monte Carlo estimator.

Numerical kernels run on a compiled extension when available and fall back to
a pure NumPy implementation; see :func:`active_backend`.
"""

from ._backend import active_backend
from .distributions import (
    SUPPORT_FLOOR,
    DiracMvd,
    MvdDistribution,
    NormalMvd,
    TabulatedMvd,
    TruncatedNormalMvd,
    discretize,
    from_config,
    mass_between,
    to_config,
    total_mass,
    truncate_renormalize,
)
from .el_curves import (
    ElCurve,
    ParametricElCurve,
    TabulatedElCurve,
    curve_from_config,
    eval_el,
)
from .errors import (
    ConfigError,
    CurveRangeError,
    DegenerateInversionError,
    DegenerateTruncationError,
    GridMismatchError,
    InvalidIntervalError,
    InvalidLvrError,
    MvdRiskError,
    SamplingError,
)
from .inversion import (
    InversionConfig,
    forward_discrete,
    implied_pd_curve,
    invert_el_to_pm,
)
from .measures import (
    DEFAULT_QUADRATURE,
    LoanContext,
    QuadratureConfig,
    RiskCurve,
    expected_loss,
    lgd_arrears,
    lgd_liquidation,
    lgd_single,
    pd_liquidation,
    risk_curve,
)
from .simulation import GENERATOR, SimulationConfig, SimulationResult, simulate

__version__ = "1.0.0"

__all__ = [
    "SUPPORT_FLOOR",
    "MvdDistribution",
    "DiracMvd",
    "NormalMvd",
    "TruncatedNormalMvd",
    "TabulatedMvd",
    "mass_between",
    "total_mass",
    "truncate_renormalize",
    "discretize",
    "from_config",
    "to_config",
    "ElCurve",
    "ParametricElCurve",
    "TabulatedElCurve",
    "eval_el",
    "curve_from_config",
    "MvdRiskError",
    "InvalidLvrError",
    "InvalidIntervalError",
    "DegenerateTruncationError",
    "GridMismatchError",
    "CurveRangeError",
    "DegenerateInversionError",
    "SamplingError",
    "ConfigError",
    "InversionConfig",
    "forward_discrete",
    "invert_el_to_pm",
    "implied_pd_curve",
    "LoanContext",
    "QuadratureConfig",
    "DEFAULT_QUADRATURE",
    "RiskCurve",
    "lgd_single",
    "lgd_arrears",
    "expected_loss",
    "pd_liquidation",
    "lgd_liquidation",
    "risk_curve",
    "GENERATOR",
    "SimulationConfig",
    "SimulationResult",
    "simulate",
    "active_backend",
    "__version__",
]
