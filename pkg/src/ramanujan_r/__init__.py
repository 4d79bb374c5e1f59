"""The Ramanujan R-function R(x) = -2 gamma - psi(x) - psi(1-x): series, coefficients, bounds."""

from ._kernels import BACKEND
from .analysis import (
    CMProbeReport,
    Crossings,
    DeltaEstimate,
    F_eval,
    H3_eval,
    H_eval,
    RootBracket,
    RootResult,
    cm_probe,
    crossings,
    delta_estimate,
    find_root,
    find_x2,
    h8_eval,
    h9_eval,
)
from .bounds import (
    DELTA_HI,
    DELTA_LO,
    BoundPair,
    all_bounds,
    bound_additive,
    bound_center_poly,
    bound_envelope,
    bound_multiplicative,
    bound_origin_poly,
    bound_sine_poly,
)
from .coefficients import CoefficientTable, build_table, coeff, default_table, identity_residuals
from .constants import REGISTRY, PaperConstants, paper_constants
from .dirichlet import beta_fn, dirichlet_derivative, eta, lambda_fn, phi, zeta
from .errors import BracketError, ConvergenceError, DomainError, InvariantError, ParameterError
from .polygamma import B_fn, H1, ReflectionPoint, psi
from .ramanujan import (
    EvalMethod,
    RFunctionValue,
    R_derivative,
    R_eval,
    R_values,
    f_derivative,
    f_eval,
    f_values,
    fn_ratio,
    gn_ratio,
)
from .series import SeriesValue
from .tables import GridSpec, emit_table
from .verify import VerifyConfig, VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
