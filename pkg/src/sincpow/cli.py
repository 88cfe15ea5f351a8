"""Command line front end.

Subcommands:
  eval     certified numeric value of I(p) at one exponent
  exact    exact rational I(n) at an integer exponent
  bspline  exact rational value of the centered B-spline
  certify  bound-chain table over a p grid; exit 1 if any point fails
  scan     same table, no gating (always exit 0 on success)
  p0       the crossover exponent and the equation residual there
  check    run every documented invariant check

Output is byte-deterministic: identical invocations produce identical
bytes.  Floats render with 15 significant digits, the crossover with
12.  Exit codes: 0 success, 1 certification or check failure, 2 usage
or validation error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from .bspline import bspline_value, format_rational, integral_exact, parse_rational
from .quadrature import QuadratureConfig, ToleranceUnreachable, integral_numeric
from .selfcheck import run_checks
from .theorem import (
    BracketFailure,
    OracleMismatch,
    certify,
    crossover_gap,
    default_constants,
    ratio_from_estimate,
    solve_p0,
)

SCAN_HEADER = "p,integral,error_bound,c_factor,improved_bound,unit_bound,ball_bound,ratio,verdict"
EVAL_HEADER = "p,value,error_bound,truncation_radius,panels_used"


def _g15(x: float) -> str:
    return "%.15g" % x


def _fixed15(x: float) -> str:
    # Trailing zeros kept: exact decimals print as decimals, not as
    # truncated significand ("0.550000000000000" rather than "0.55").
    return "%#.15g" % x


def _g12(x: float) -> str:
    # '#' keeps trailing zeros so exactly 12 significant digits show.
    return "%#.12g" % x


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _config(args: argparse.Namespace) -> QuadratureConfig:
    tol = getattr(args, "tol", None)
    if tol is None:
        return QuadratureConfig()
    return QuadratureConfig(abs_tol=tol)


def _grid(p_from: float, p_to: float, step: float) -> list[float]:
    if not (math.isfinite(p_from) and p_from >= 1.0):
        raise ValueError(f"--p-from must be >= 1, got {p_from!r}")
    if not (math.isfinite(p_to) and p_to >= p_from):
        raise ValueError(f"--p-to must be >= --p-from, got {p_to!r}")
    if not (math.isfinite(step) and step > 0.0):
        raise ValueError(f"--step must be positive, got {step!r}")
    count = int(math.floor((p_to - p_from) / step + 1e-9)) + 1
    return [round(p_from + i * step, 12) for i in range(count)]


def _cmd_eval(args: argparse.Namespace) -> int:
    cfg = _config(args)
    est = integral_numeric(args.p, cfg)
    if args.format == "json":
        text = (
            '{"p": %s, "value": %s, "error_bound": %s, "truncation_radius": %s, "panels_used": %d}\n'
            % (_g15(args.p), _g15(est.value), _g15(est.error_bound),
               _g15(est.truncation_radius), est.panels_used)
        )
    else:
        row = ",".join(
            [_g15(args.p), _g15(est.value), _g15(est.error_bound),
             _g15(est.truncation_radius), str(est.panels_used)]
        )
        text = EVAL_HEADER + "\n" + row + "\n"
    _emit(text, args.out)
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    value = integral_exact(args.n)
    rational = format_rational(value)
    decimal = _fixed15(float(value))
    if args.format == "json":
        text = '{"n": %d, "rational": "%s", "decimal": %s}\n' % (args.n, rational, decimal)
    else:
        text = "n,rational,decimal\n" + "%d,%s,%s\n" % (args.n, rational, decimal)
    _emit(text, args.out)
    return 0


def _cmd_bspline(args: argparse.Namespace) -> int:
    x = parse_rational(args.x)
    value = bspline_value(args.n, x)
    rational = format_rational(value)
    decimal = _fixed15(float(value))
    x_str = format_rational(Fraction(x))
    if args.format == "json":
        text = '{"n": %d, "x": "%s", "rational": "%s", "decimal": %s}\n' % (
            args.n, x_str, rational, decimal,
        )
    else:
        text = "n,x,rational,decimal\n" + '%d,%s,%s,%s\n' % (args.n, x_str, rational, decimal)
    _emit(text, args.out)
    return 0


def _scan_rows(args: argparse.Namespace) -> tuple[list[str], bool, str]:
    cfg = _config(args)
    consts = default_constants()
    rows = []
    any_fail = False
    for p in _grid(args.p_from, args.p_to, args.step):
        cert = certify(p, cfg, consts)
        ratio = ratio_from_estimate(cert.integral, p, consts)
        if cert.verdict != "pass":
            any_fail = True
        if args.format == "json":
            rows.append(
                '{"p": %s, "integral": %s, "error_bound": %s, "c_factor": %s, '
                '"improved_bound": %s, "unit_bound": %s, "ball_bound": %s, '
                '"ratio": %s, "verdict": "%s"}'
                % (_g15(p), _g15(cert.integral.value), _g15(cert.integral.error_bound),
                   _g15(cert.c_of_p), _g15(cert.improved_bound), _g15(cert.unit_bound),
                   _g15(cert.ball_bound), _g15(ratio), cert.verdict)
            )
        else:
            rows.append(
                ",".join(
                    [_g15(p), _g15(cert.integral.value), _g15(cert.integral.error_bound),
                     _g15(cert.c_of_p), _g15(cert.improved_bound), _g15(cert.unit_bound),
                     _g15(cert.ball_bound), _g15(ratio), cert.verdict]
                )
            )
    if args.format == "json":
        text = "[\n" + ",\n".join("  " + r for r in rows) + "\n]\n"
    else:
        text = SCAN_HEADER + "\n" + "\n".join(rows) + "\n"
    return rows, any_fail, text


def _cmd_certify(args: argparse.Namespace) -> int:
    _, any_fail, text = _scan_rows(args)
    _emit(text, args.out)
    return 1 if any_fail else 0


def _cmd_scan(args: argparse.Namespace) -> int:
    _, _, text = _scan_rows(args)
    _emit(text, args.out)
    return 0


def _cmd_p0(args: argparse.Namespace) -> int:
    root = solve_p0(args.tol)
    residual = crossover_gap(root)
    if args.format == "json":
        text = '{"p0": %s, "residual": %s}\n' % (_g12(root), _g15(residual))
    else:
        text = "p0,residual\n" + "%s,%s\n" % (_g12(root), _g15(residual))
    _emit(text, args.out)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    results = run_checks()
    lines = [
        ("pass " if r.passed else "fail ") + r.name + ": " + r.detail for r in results
    ]
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results)} checks: {len(results) - failed} passed, {failed} failed")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if failed == 0 else 1


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default=None, metavar="PATH",
                     help="write to a file instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sincpow",
        description="Certified evaluation and sharpened bounds for the sinc-power integral.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("eval", help="certified numeric I(p)")
    sub.add_argument("--p", type=float, required=True)
    sub.add_argument("--tol", type=float, default=None, help="absolute tolerance")
    _add_output_flags(sub)
    sub.set_defaults(handler=_cmd_eval)

    sub = subs.add_parser("exact", help="exact rational I(n)")
    sub.add_argument("--n", type=int, required=True)
    _add_output_flags(sub)
    sub.set_defaults(handler=_cmd_exact)

    sub = subs.add_parser("bspline", help="exact B-spline value")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--x", type=str, required=True, help='rational like "1/2", "0.25", "-3"')
    _add_output_flags(sub)
    sub.set_defaults(handler=_cmd_bspline)

    for name, handler in (("certify", _cmd_certify), ("scan", _cmd_scan)):
        sub = subs.add_parser(
            name,
            help="bound-chain table over a p grid"
            + (" with pass/fail gating" if name == "certify" else ""),
        )
        sub.add_argument("--p-from", dest="p_from", type=float, default=1.0)
        sub.add_argument("--p-to", dest="p_to", type=float, default=5.0)
        sub.add_argument("--step", type=float, default=0.01)
        sub.add_argument("--tol", type=float, default=None, help="absolute tolerance")
        _add_output_flags(sub)
        sub.set_defaults(handler=handler)

    # Default bisection width 1e-12 keeps all 12 printed digits honest.
    sub = subs.add_parser("p0", help="the crossover exponent")
    sub.add_argument("--tol", type=float, default=1e-12, help="bisection width")
    _add_output_flags(sub)
    sub.set_defaults(handler=_cmd_p0)

    sub = subs.add_parser("check", help="run all invariant checks")
    sub.add_argument("--out", default=None, metavar="PATH")
    sub.set_defaults(handler=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ToleranceUnreachable, BracketFailure, OracleMismatch) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


def main_entry() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    main_entry()
