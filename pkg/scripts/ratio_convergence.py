#!/usr/bin/env python3
"""Watch I(n) sqrt(n) approach sqrt(3/pi) through exact values.

For each integer exponent the table lists the normalized ratio
r(n) = I(n) sqrt(pi n / 3), the defect 1 - r(n), and n (1 - r(n)).
The last column settling near a constant (~3/40) is the numerical
signature of a first-order 1/n correction to the Gaussian limit.

    python scripts/ratio_convergence.py --max-n 60
"""

import argparse
import math

from sincpow.bspline import integral_exact


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=60)
    args = parser.parse_args()
    if args.max_n < 1:
        parser.error("--max-n must be >= 1")

    print(f"{'n':>4}  {'r(n)':>18}  {'1 - r(n)':>12}  {'n (1 - r(n))':>12}")
    for n in range(1, args.max_n + 1):
        r = float(integral_exact(n)) * math.sqrt(math.pi * n / 3.0)
        defect = 1.0 - r
        print(f"{n:>4}  {r:>18.15f}  {defect:>12.3e}  {n * defect:>12.6f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
