"""The sharpened bound chain for the sinc-power integral.

For every p >= 1 the package certifies

    I(p)  <=  C(p) sqrt(3/pi) / sqrt(p)  <=  1 / sqrt(p)  <=  sqrt(2) / sqrt(p),

where the right-hand member is Ball's classical bound and the correction
factor is piecewise:

    C(p) = sqrt(pi/3)                                        1 <= p <= p0,
    C(p) = 1 + (sqrt(5)/6)^(2p-1) sqrt(p) / (sqrt(3 pi) (p - 1/2)),  p > p0.

The second branch comes from splitting the integral at 6/sqrt(5): on the
inside the pointwise majorant (sin t / t)^2 <= exp(-t^2/3) holds (checked
here by majorant_gap), and the Gaussian integrates to sqrt(3/pi)/sqrt(p);
outside, the crude t^(-2p) tail bound applies.  That branch decays to 1
as p grows but blows up toward p = 1, so below the crossover p0 it is
replaced by the plateau sqrt(pi/3), the exact value needed at p = 1
where I(1) = 1 makes the first inequality an equality.  p0 ~ 1.8414 is
the root of

    (sqrt(5)/6)^(2p-1) sqrt(p) / (p - 1/2)  =  (1 - sqrt(3/pi)) pi,

found by bisection; the left side is strictly decreasing past 1 so the
root is simple and the two branches cross downward through the plateau.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bspline import integral_exact
from .kernel import log_sinc
from .quadrature import IntegralEstimate, QuadratureConfig, integral_numeric

__all__ = [
    "TheoremConstants",
    "Certificate",
    "BracketFailure",
    "OracleMismatch",
    "default_constants",
    "ball_bound",
    "central_gaussian_bound",
    "majorant_gap",
    "correction_factor",
    "crossover_gap",
    "solve_p0",
    "certify",
    "asymptotic_ratio",
    "ratio_from_estimate",
]


class BracketFailure(RuntimeError):
    """Raised when the crossover root is not bracketed as expected."""


class OracleMismatch(RuntimeError):
    """Raised when a numeric value escapes its exact rational sandwich."""


@dataclass(frozen=True)
class TheoremConstants:
    """Frozen derived constants; build via default_constants().

    sqrt_3_over_pi and sqrt_pi_over_3 are each correctly rounded, and
    in IEEE double their product happens to round to exactly 1.0, so
    the plateau branch of the improved bound reproduces 1/sqrt(p)
    bit-for-bit.  central_radius = 6/sqrt(5) is where the Gaussian
    majorant stops holding; rhs_p0 is the constant the crossover
    equation equates against; p0 is its root.
    """

    sqrt_3_over_pi: float
    sqrt_pi_over_3: float
    central_radius: float
    rhs_p0: float
    p0: float


@dataclass(frozen=True)
class Certificate:
    """One certified point of the bound chain.

    margin1 = improved_bound - (integral.value + integral.error_bound),
    margin2 = unit_bound - improved_bound,
    margin3 = ball_bound - unit_bound; verdict is "pass" iff all three
    are nonnegative.
    """

    p: float
    integral: IntegralEstimate
    c_of_p: float
    improved_bound: float
    unit_bound: float
    ball_bound: float
    margin1: float
    margin2: float
    margin3: float
    verdict: str


def _check_p(p: float, who: str) -> float:
    p = float(p)
    if not (math.isfinite(p) and p >= 1.0):
        raise ValueError(f"{who} requires finite p >= 1, got {p!r}")
    return p


def crossover_gap(p: float) -> float:
    """Left side minus right side of the crossover equation.

    Strictly decreasing on [1, 3]; positive at 1, negative at 3, zero
    at the crossover p0.  Self-contained so solve_p0 can run before any
    constants object exists.
    """
    p = _check_p(p, "crossover_gap")
    lhs = (math.sqrt(5.0) / 6.0) ** (2.0 * p - 1.0) * math.sqrt(p) / (p - 0.5)
    rhs = (1.0 - math.sqrt(3.0 / math.pi)) * math.pi
    return lhs - rhs


def solve_p0(tol: float = 1e-10) -> float:
    """Bisect the crossover equation on [1, 3] to width tol."""
    if not (math.isfinite(tol) and tol > 0.0):
        raise ValueError(f"solve_p0 requires tol > 0, got {tol!r}")
    lo, hi = 1.0, 3.0
    g_lo, g_hi = crossover_gap(lo), crossover_gap(hi)
    if not (g_lo > 0.0 > g_hi):
        raise BracketFailure(
            f"crossover equation not bracketed on [1, 3]: gap({lo})={g_lo:g}, gap({hi})={g_hi:g}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        g_mid = crossover_gap(mid)
        if g_mid == 0.0:
            return mid
        if g_mid > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@lru_cache(maxsize=1)
def default_constants() -> TheoremConstants:
    """The constants of the chain, with p0 solved once to 1e-12."""
    s3p = math.sqrt(3.0 / math.pi)
    return TheoremConstants(
        sqrt_3_over_pi=s3p,
        sqrt_pi_over_3=math.sqrt(math.pi / 3.0),
        central_radius=6.0 / math.sqrt(5.0),
        rhs_p0=(1.0 - s3p) * math.pi,
        p0=solve_p0(1e-12),
    )


def ball_bound(p: float) -> float:
    """Ball's bound sqrt(2)/sqrt(p)."""
    p = _check_p(p, "ball_bound")
    return math.sqrt(2.0) / math.sqrt(p)


def central_gaussian_bound(p: float, consts: TheoremConstants | None = None) -> float:
    """sqrt(3/pi)/sqrt(p): the Gaussian majorant integrated over the whole line.

    Dominates the central part (2/pi) integral_0^{6/sqrt(5)} of the
    integrand for every p >= 1, since the majorant holds pointwise
    there and only mass is dropped by extending the Gaussian to
    infinity.
    """
    p = _check_p(p, "central_gaussian_bound")
    c = consts if consts is not None else default_constants()
    return c.sqrt_3_over_pi / math.sqrt(p)


def majorant_gap(t: float, consts: TheoremConstants | None = None) -> float:
    """exp(-t^2/3) - (sin t / t)^2 on the central interval |t| <= 6/sqrt(5).

    Computed as a difference of expm1 terms so the shared constant 1
    never enters the subtraction: the result is exactly 0.0 at t = 0
    and strictly positive elsewhere on the interval, instead of
    drowning in 1e-16 cancellation noise where both sides are close
    to 1.
    """
    c = consts if consts is not None else default_constants()
    if not (math.isfinite(t) and abs(t) <= c.central_radius):
        raise ValueError(f"majorant_gap requires |t| <= 6/sqrt(5) ~ {c.central_radius:.6f}, got {t!r}")
    # + 0.0 normalizes the -0.0 that expm1(-0.0) - expm1(0.0) produces at t = 0
    return math.expm1(-t * t / 3.0) - math.expm1(2.0 * log_sinc(t)) + 0.0


def correction_factor(p: float, consts: TheoremConstants | None = None) -> float:
    """The piecewise factor C(p): plateau sqrt(pi/3) up to p0, then decay to 1.

    Continuous at p0 by construction of the crossover equation, strictly
    decreasing past p0, and always in [1, sqrt(pi/3)].
    """
    p = _check_p(p, "correction_factor")
    c = consts if consts is not None else default_constants()
    if p <= c.p0:
        return c.sqrt_pi_over_3
    excess = (math.sqrt(5.0) / 6.0) ** (2.0 * p - 1.0) * math.sqrt(p) / (p - 0.5)
    return 1.0 + excess / math.sqrt(3.0 * math.pi)


def _estimate(p: float, config: QuadratureConfig | None = None) -> IntegralEstimate:
    # Integer exponents take the exact rational route; the only error
    # is the final rounding of the rational to a double, bounded by one
    # ulp of the value.
    if p.is_integer():
        exact = integral_exact(int(p))
        value = float(exact)
        conversion = math.ulp(value) if Fraction(value) != exact else 0.0
        return IntegralEstimate(
            value=value,
            error_bound=conversion,
            central_part=value,
            tail_low=0.0,
            tail_high=0.0,
            panels_used=0,
            truncation_radius=math.inf,
        )
    return integral_numeric(p, config)


def certify(
    p: float,
    config: QuadratureConfig | None = None,
    consts: TheoremConstants | None = None,
) -> Certificate:
    """Evaluate I(p) and check the full bound chain at one exponent.

    Integer p uses the exact rational value; non-integer p uses the
    certified quadrature and is additionally forced into the exact
    monotonicity sandwich I(ceil p) <= value <= I(floor p), widened by
    the error bound, with the comparison done in exact rational
    arithmetic.  A violation raises OracleMismatch since it means the
    error accounting itself is broken.
    """
    p = _check_p(p, "certify")
    c = consts if consts is not None else default_constants()
    est = _estimate(p, config)

    if not p.is_integer():
        val = Fraction(est.value)
        err = Fraction(est.error_bound)
        upper = integral_exact(math.floor(p))
        lower = integral_exact(math.ceil(p))
        if val - err > upper or val + err < lower:
            raise OracleMismatch(
                f"estimate {est.value!r} +- {est.error_bound!r} at p={p!r} escapes the "
                f"exact sandwich [I({math.ceil(p)}), I({math.floor(p)})]"
            )

    c_of_p = correction_factor(p, c)
    improved = c_of_p * c.sqrt_3_over_pi / math.sqrt(p)
    unit = 1.0 / math.sqrt(p)
    ball = ball_bound(p)
    margin1 = improved - (est.value + est.error_bound)
    margin2 = unit - improved
    margin3 = ball - unit
    verdict = "pass" if (margin1 >= 0.0 and margin2 >= 0.0 and margin3 >= 0.0) else "fail"
    return Certificate(
        p=p,
        integral=est,
        c_of_p=c_of_p,
        improved_bound=improved,
        unit_bound=unit,
        ball_bound=ball,
        margin1=margin1,
        margin2=margin2,
        margin3=margin3,
        verdict=verdict,
    )


def ratio_from_estimate(
    est: IntegralEstimate, p: float, consts: TheoremConstants | None = None
) -> float:
    """I(p) sqrt(p) / sqrt(3/pi) from an existing estimate."""
    c = consts if consts is not None else default_constants()
    return est.value * math.sqrt(p) / c.sqrt_3_over_pi


def asymptotic_ratio(p: float, config: QuadratureConfig | None = None) -> float:
    """The normalized ratio r(p) = I(p) sqrt(p) / sqrt(3/pi); r -> 1 as p -> inf."""
    p = _check_p(p, "asymptotic_ratio")
    return ratio_from_estimate(_estimate(p, config), p)
