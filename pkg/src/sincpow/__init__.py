"""sincpow: certified evaluation and sharpened bounds for the sinc-power integral

    I(p) = (1/pi) * integral over R of (sin^2 t / t^2)^p dt,  p >= 1.

Exact rational values at integer exponents via centered cardinal
B-splines, certified quadrature with rigorous tail enclosures at real
exponents, and a pointwise certificate for the bound chain

    I(p) <= C(p) sqrt(3/pi)/sqrt(p) <= 1/sqrt(p) <= sqrt(2)/sqrt(p).
"""

from .bspline import (
    bspline_recursive,
    bspline_value,
    format_rational,
    gaussian_center_approx,
    integral_exact,
    parse_rational,
)
from .kernel import integrand, integrand_grid, log_gamma, log_sinc, log_sinc_grid, wallis
from .quadrature import (
    IntegralEstimate,
    QuadratureConfig,
    ToleranceUnreachable,
    integral_numeric,
    integral_truncated,
    tail_bound_crude,
    tail_enclosure,
)
from .selfcheck import CheckResult, run_checks
from .theorem import (
    BracketFailure,
    Certificate,
    OracleMismatch,
    TheoremConstants,
    asymptotic_ratio,
    ball_bound,
    central_gaussian_bound,
    certify,
    correction_factor,
    crossover_gap,
    default_constants,
    majorant_gap,
    solve_p0,
)

__version__ = "0.1.0"

__all__ = [
    "IntegralEstimate",
    "QuadratureConfig",
    "ToleranceUnreachable",
    "BracketFailure",
    "Certificate",
    "OracleMismatch",
    "TheoremConstants",
    "CheckResult",
    "asymptotic_ratio",
    "ball_bound",
    "bspline_recursive",
    "bspline_value",
    "central_gaussian_bound",
    "certify",
    "correction_factor",
    "crossover_gap",
    "default_constants",
    "format_rational",
    "gaussian_center_approx",
    "integral_exact",
    "integral_numeric",
    "integral_truncated",
    "integrand",
    "integrand_grid",
    "log_gamma",
    "log_sinc",
    "log_sinc_grid",
    "majorant_gap",
    "parse_rational",
    "run_checks",
    "solve_p0",
    "tail_bound_crude",
    "tail_enclosure",
    "wallis",
    "__version__",
]
