"""Named runtime checks of every documented invariant.

Each check is deterministic (fixed sample grids, no randomness) so the
report is byte-identical between runs.  The suite is what `sincpow
check` prints; the pytest suite covers the same ground plus
property-based fuzzing, but this module makes the invariants checkable
in any installed environment without test dependencies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bspline import (
    bspline_recursive,
    bspline_value,
    gaussian_center_approx,
    integral_exact,
)
from .kernel import SMALL_T, integrand, log_gamma, log_sinc, log_sinc_grid, wallis
from .quadrature import (
    QuadratureConfig,
    integral_numeric,
    integral_truncated,
    tail_bound_crude,
    tail_enclosure,
)
from .theorem import (
    certify,
    correction_factor,
    crossover_gap,
    default_constants,
    ratio_from_estimate,
    solve_p0,
)

__all__ = ["CheckResult", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, passed: bool, detail: str) -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail=detail)


def _chain_grid() -> list[float]:
    grid = [round(1.0 + 0.01 * i, 10) for i in range(401)]
    grid += [float(n) for n in range(6, 21)]
    grid += [50.0, 100.0]
    return grid


def _check_exact_value_table() -> CheckResult:
    expected = [Fraction(1), Fraction(2, 3), Fraction(11, 20), Fraction(151, 315)]
    got = [integral_exact(n) for n in range(1, 5)]
    ok = got == expected
    return _result(
        "exact-value-table",
        ok,
        "I(1..4) = " + ", ".join(f"{q.numerator}/{q.denominator}" for q in got),
    )


def _check_plancherel() -> CheckResult:
    bad = [n for n in range(1, 16) if bspline_value(2 * n, 0) != integral_exact(n)]
    return _result(
        "plancherel-center-value",
        not bad,
        "B_{2n}(0) == I(n) exactly for n = 1..15" if not bad else f"mismatch at n in {bad}",
    )


def _rational_grid(n: int) -> list[Fraction]:
    lo = -Fraction(n, 2) - 1
    return [lo + Fraction(k, 8) for k in range(8 * (n + 2) + 1)]


def _check_closed_vs_recursion() -> CheckResult:
    for n in range(1, 9):
        for x in _rational_grid(n):
            if bspline_value(n, x) != bspline_recursive(n, x):
                return _result(
                    "closed-form-vs-recursion", False, f"routes differ at n={n}, x={x}"
                )
    return _result(
        "closed-form-vs-recursion", True, "exact agreement for n = 1..8 on the eighths grid"
    )


def _check_spline_symmetry() -> CheckResult:
    for n in range(1, 9):
        for x in _rational_grid(n):
            if bspline_value(n, x) != bspline_value(n, -x):
                return _result("spline-symmetry", False, f"asymmetry at n={n}, x={x}")
    return _result("spline-symmetry", True, "B_n(x) == B_n(-x) exactly for n = 1..8")


def _check_spline_support() -> CheckResult:
    for n in range(1, 9):
        half = Fraction(n, 2)
        for x in _rational_grid(n):
            v = bspline_value(n, x)
            if abs(x) > half and v != 0:
                return _result("spline-support", False, f"nonzero outside support: n={n}, x={x}")
            if abs(x) < half and v <= 0:
                return _result("spline-support", False, f"nonpositive inside support: n={n}, x={x}")
    return _result(
        "spline-support", True, "zero outside [-n/2, n/2], strictly positive inside, n = 1..8"
    )


def _check_partition_of_unity() -> CheckResult:
    for n in range(1, 9):
        for j in range(8):
            x = Fraction(j, 8)
            total = sum(bspline_value(n, x - k) for k in range(-n, n + 1))
            if total != 1:
                return _result("partition-of-unity", False, f"sum {total} at n={n}, x={x}")
    return _result(
        "partition-of-unity", True, "integer translates sum to 1 exactly, n = 1..8"
    )


def _check_gaussian_center_trend() -> CheckResult:
    # |B_{2n}(0) / gaussian_center_approx(2n) - 1| must fall monotonically:
    # the local CLT error at the center decays like 1/n.
    deviations = [
        abs(float(integral_exact(n)) / gaussian_center_approx(2 * n) - 1.0)
        for n in range(5, 51)
    ]
    ok = all(a > b for a, b in zip(deviations, deviations[1:]))
    return _result(
        "gaussian-center-trend",
        ok,
        f"center deviation falls from {deviations[0]:.3e} (n=5) to {deviations[-1]:.3e} (n=50)",
    )


def _check_kernel_pointwise() -> CheckResult:
    checks = [
        log_sinc(0.0) == 0.0,
        abs(log_sinc(math.pi / 2) - math.log(2.0 / math.pi)) < 1e-15,
        integrand(0.0, 3.0) == 1.0,
        abs(integrand(math.pi / 2, 1.0) - (2.0 / math.pi) ** 2) < 1e-15,
        integrand(math.pi, 3.0) < 1e-60,
    ]
    ts = [k / 16.0 for k in range(1, 161)]
    for t in ts:
        f = integrand(t, 2.0)
        checks.append(0.0 <= f < 1.0)
        checks.append(integrand(-t, 2.0) == f)
        checks.append(log_sinc(-t) == log_sinc(t))
        if 0.0 < f < 1.0:
            checks.append(integrand(t, 3.0) < f)
    ok = all(checks)
    return _result(
        "kernel-pointwise",
        ok,
        "values, evenness, [0,1) bounds and p-monotonicity on the 1/16 grid",
    )


def _check_kernel_series_seam() -> CheckResult:
    # The two branches must agree where they meet; compare the series
    # against the direct log on a band straddling the switch point.
    worst = 0.0
    for k in range(-40, 41):
        t = SMALL_T + k / 1000.0
        direct = math.log(abs(math.sin(t)) / t)
        u = t * t
        acc = 0.0
        for c in (
            174611.0 / 15313294652906250.0,
            43867.0 / 350813659321125.0,
            3617.0 / 2605132530000.0,
            2.0 / 127702575.0,
            691.0 / 3831077250.0,
            1.0 / 467775.0,
            1.0 / 37800.0,
            1.0 / 2835.0,
            1.0 / 180.0,
            1.0 / 6.0,
        ):
            acc = c + u * acc
        series = -u * acc
        rel = abs(series - direct) / abs(direct)
        worst = max(worst, rel)
    ok = worst < 1e-13
    return _result(
        "kernel-series-seam",
        ok,
        f"series vs direct log within {worst:.3e} relative across |t - {SMALL_T}| <= 0.04",
    )


def _check_wallis_log_gamma() -> CheckResult:
    # The contract promises 1e-13 relative accuracy, not bit equality:
    # the lgamma route leaves a few ulps even at the classical values.
    checks = [
        abs(wallis(0.0) - 1.0) < 1e-13,
        abs(wallis(1.0) - 0.5) < 1e-13,
        abs(wallis(2.0) - 0.375) < 1e-13,
        log_gamma(1.0) == 0.0,
        log_gamma(2.0) == 0.0,
        abs(log_gamma(0.5) - 0.5 * math.log(math.pi)) < 1e-15,
    ]
    # Recurrence W(p) = W(p-1) (p - 1/2)/p, from Gamma(x+1) = x Gamma(x)
    # applied to both Gamma factors; a nontrivial consistency relation.
    for k in range(2, 41):
        p = 0.5 * k
        lhs = wallis(p)
        rhs = wallis(p - 1.0) * (p - 0.5) / p
        checks.append(abs(lhs - rhs) <= 1e-13 * lhs)
    ok = all(checks)
    return _result("wallis-and-log-gamma", ok, "classical values and the descent recurrence")


def _check_quadrature_vs_exact(cfg: QuadratureConfig) -> CheckResult:
    worst_excess = -math.inf
    worst_bound = 0.0
    for n in range(1, 21):
        # integral_numeric has no integer shortcut, so this is a real
        # quadrature-vs-exact comparison at every n.
        est = integral_numeric(float(n), cfg)
        true = float(integral_exact(n))
        excess = abs(est.value - true) - est.error_bound
        worst_excess = max(worst_excess, excess)
        worst_bound = max(worst_bound, est.error_bound)
    ok = worst_excess <= 0.0 and worst_bound <= 1e-8
    return _result(
        "quadrature-vs-exact",
        ok,
        f"n = 1..20: |numeric - exact| - bound <= {worst_excess:.3e}, "
        f"largest bound {worst_bound:.3e}",
    )


def _check_quadrature_monotone(cfg: QuadratureConfig) -> CheckResult:
    grid = [round(1.0 + 0.1 * i, 10) for i in range(91)]
    estimates = [integral_numeric(p, cfg) for p in grid]
    for (p_a, a), (p_b, b) in zip(zip(grid, estimates), zip(grid[1:], estimates[1:])):
        if a.value - b.value <= a.error_bound + b.error_bound:
            return _result(
                "quadrature-monotone",
                False,
                f"I({p_a}) - I({p_b}) not beyond the summed error bounds",
            )
    return _result(
        "quadrature-monotone",
        True,
        "I strictly decreasing beyond error bounds on p = 1.0(0.1)10.0",
    )


def _check_noninteger_sandwich(cfg: QuadratureConfig) -> CheckResult:
    for p in (1.25, 1.5, 2.5, 3.7):
        est = integral_numeric(p, cfg)
        val, err = Fraction(est.value), Fraction(est.error_bound)
        upper = integral_exact(math.floor(p))
        lower = integral_exact(math.ceil(p))
        if val - err > upper or val + err < lower:
            return _result(
                "noninteger-sandwich", False, f"I({p}) escapes [I({math.ceil(p)}), I({math.floor(p)})]"
            )
    return _result(
        "noninteger-sandwich",
        True,
        "I(1.25), I(1.5), I(2.5), I(3.7) inside their exact integer sandwiches",
    )


def _check_estimate_below_unity(cfg: QuadratureConfig) -> CheckResult:
    for p in (1.0, 1.003, 1.01, 1.1, 1.5, 2.7, 6.0):
        est = integral_numeric(p, cfg)
        if est.value - est.error_bound > 1.0:
            return _result("estimate-below-unity", False, f"I({p}) certified above 1")
    return _result(
        "estimate-below-unity", True, "value - error_bound <= 1 at sample p down to 1.0"
    )


def _check_tail_crude_value() -> CheckResult:
    got = tail_bound_crude(6.0 / math.sqrt(5.0), 1.0)
    want = math.sqrt(5.0) / (3.0 * math.pi)
    ok = abs(got - want) <= 1e-12 * want
    return _result(
        "tail-crude-value",
        ok,
        f"tail_bound_crude(6/sqrt5, 1) = {got:.15g} vs sqrt(5)/(3 pi) = {want:.15g}",
    )


def _check_tail_enclosure_brackets(cfg: QuadratureConfig) -> CheckResult:
    for p in (1, 2, 5):
        for K in (1, 3, 10):
            low, high = tail_enclosure(K, float(p))
            central, cerr = integral_truncated(float(p), K * math.pi, cfg)
            true_tail = float(integral_exact(p)) - central
            if not (low - cerr - 1e-14 <= true_tail <= high + cerr + 1e-14):
                return _result(
                    "tail-enclosure-brackets",
                    False,
                    f"tail at p={p}, K={K} is {true_tail:.6e}, outside [{low:.6e}, {high:.6e}]",
                )
    return _result(
        "tail-enclosure-brackets",
        True,
        "enclosure contains the exact-minus-central tail for p in {1,2,5}, K in {1,3,10}",
    )


def _check_tail_high_below_crude() -> CheckResult:
    for p in (1.0, 1.5, 2.0, 3.7, 10.0, 50.0):
        for K in (1, 2, 5, 20, 1000):
            _, high = tail_enclosure(K, p)
            if high > tail_bound_crude(K * math.pi, p):
                return _result(
                    "tail-high-below-crude", False, f"high exceeds crude bound at p={p}, K={K}"
                )
    return _result(
        "tail-high-below-crude", True, "enclosure high never exceeds the crude bound"
    )


def _check_central_gaussian(cfg: QuadratureConfig) -> CheckResult:
    consts = default_constants()
    parts = []
    for p in (1.0, 2.0, 5.0):
        central, cerr = integral_truncated(p, consts.central_radius, cfg)
        bound = consts.sqrt_3_over_pi / math.sqrt(p)
        if central + cerr > bound:
            return _result(
                "central-gaussian-bound",
                False,
                f"central part {central:.9f} exceeds {bound:.9f} at p={p}",
            )
        parts.append(f"p={p:g}: {central:.6f} <= {bound:.6f}")
    return _result("central-gaussian-bound", True, "; ".join(parts))


def _check_majorant_grid() -> CheckResult:
    consts = default_constants()
    t = np.linspace(0.0, consts.central_radius, 100000)
    # + 0.0 turns the -0.0 at t = 0 into +0.0, as in majorant_gap
    gap = np.expm1(-t * t / 3.0) - np.expm1(2.0 * log_sinc_grid(t)) + 0.0
    mn = float(np.min(gap))
    argmin = int(np.argmin(gap))
    ok = mn >= -1e-15 and argmin == 0 and gap[0] == 0.0 and float(np.min(gap[1:])) > 0.0
    return _result(
        "majorant-grid",
        ok,
        f"gap minimum {mn:.3e} attained at t = {t[argmin]:.3g} on the 1e5-point grid",
    )


def _check_correction_factor() -> CheckResult:
    consts = default_constants()
    p0 = consts.p0
    plateau = consts.sqrt_pi_over_3

    def second(p: float) -> float:
        excess = (math.sqrt(5.0) / 6.0) ** (2.0 * p - 1.0) * math.sqrt(p) / (p - 0.5)
        return 1.0 + excess / math.sqrt(3.0 * math.pi)

    checks = [
        abs(second(p0) - plateau) <= 1e-9,
        second(p0 - 0.01) > plateau,
        second(p0 + 0.01) < plateau,
        correction_factor(30.0) - 1.0 <= 1e-12,
    ]
    grid = [p0 + 0.01 * k for k in range(1, 200)] + [4.0, 6.0, 10.0, 20.0]
    values = [correction_factor(p) for p in grid]
    checks.append(all(a > b for a, b in zip(values, values[1:])))
    checks.append(all(1.0 <= v <= plateau for v in values))
    checks.append(all(correction_factor(p) == plateau for p in (1.0, 1.3, p0)))
    ok = all(checks)
    return _result(
        "correction-factor-shape",
        ok,
        "plateau through p0, continuous crossover, strict decay to 1 afterward",
    )


def _check_crossover_root() -> CheckResult:
    p0 = solve_p0(1e-10)
    ok = (
        1.84135 <= p0 <= 1.84145
        and crossover_gap(p0 - 0.001) > 0.0
        and crossover_gap(p0 + 0.001) < 0.0
    )
    return _result(
        "crossover-root", ok, f"p0 = {p0:.12g} with sign change confirmed around it"
    )


def _check_chain_grid(cfg: QuadratureConfig) -> CheckResult:
    failures = 0
    min_margin1 = math.inf
    for p in _chain_grid():
        cert = certify(p, cfg)
        if cert.verdict != "pass":
            failures += 1
        if p > 1.0:
            min_margin1 = min(min_margin1, cert.margin1)
    ok = failures == 0 and min_margin1 > 0.0
    return _result(
        "chain-grid",
        ok,
        f"{failures} failures on the 418-point grid; "
        f"smallest strict margin1 past p=1 is {min_margin1:.3e}",
    )


def _check_ratio_trend(cfg: QuadratureConfig) -> CheckResult:
    consts = default_constants()
    grid = _chain_grid()
    ratios = [
        ratio_from_estimate(integral_numeric(p, cfg), p, consts)
        if not float(p).is_integer()
        else float(integral_exact(int(p))) * math.sqrt(p) / consts.sqrt_3_over_pi
        for p in grid
    ]
    in_band = all(0.95 <= r <= 1.03 for r in ratios)
    r100 = float(integral_exact(100)) * math.sqrt(100.0) / consts.sqrt_3_over_pi
    integer_ratios = [
        float(integral_exact(n)) * math.sqrt(float(n)) / consts.sqrt_3_over_pi
        for n in range(2, 51)
    ]
    increasing = all(a < b for a, b in zip(integer_ratios, integer_ratios[1:]))
    ok = in_band and abs(r100 - 1.0) <= 5e-3 and increasing
    return _result(
        "ratio-trend",
        ok,
        f"r within [0.95, 1.03] on the grid, |r(100) - 1| = {abs(r100 - 1.0):.3e}, "
        "r increasing on integers 2..50",
    )


def run_checks(config: QuadratureConfig | None = None) -> list[CheckResult]:
    """Run every invariant check; deterministic order and content."""
    cfg = config if config is not None else QuadratureConfig()
    return [
        _check_exact_value_table(),
        _check_plancherel(),
        _check_closed_vs_recursion(),
        _check_spline_symmetry(),
        _check_spline_support(),
        _check_partition_of_unity(),
        _check_gaussian_center_trend(),
        _check_kernel_pointwise(),
        _check_kernel_series_seam(),
        _check_wallis_log_gamma(),
        _check_quadrature_vs_exact(cfg),
        _check_quadrature_monotone(cfg),
        _check_noninteger_sandwich(cfg),
        _check_estimate_below_unity(cfg),
        _check_tail_crude_value(),
        _check_tail_enclosure_brackets(cfg),
        _check_tail_high_below_crude(),
        _check_central_gaussian(cfg),
        _check_majorant_grid(),
        _check_correction_factor(),
        _check_crossover_root(),
        _check_chain_grid(cfg),
        _check_ratio_trend(cfg),
    ]
