#!/usr/bin/env python3
"""Print the exact-vs-asymptotic convergence table for the avoidance counts.

The exact terms come from the holonomic recurrence; the estimate is the
leading-order singularity-analysis formula.  The ratio column should
drift toward 1 like 1 + O(1/n).
"""

import argparse

from skewdyck.asymptotics import convergence_report
from skewdyck.holonomic import extend


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=1600)
    parser.add_argument("--start", type=int, default=50)
    args = parser.parse_args()

    ns = []
    n = args.start
    while n <= args.max_n:
        ns.append(n)
        n *= 2
    coeffs = extend([1, 1, 2, 6], max(ns))
    print(f"{'n':>6}  {'digits(s_n)':>11}  {'estimate':>14}  {'ratio':>12}")
    for n, s, est, ratio in convergence_report(ns, coeffs):
        est_s = f"{est:.6e}" if est is not None else "overflow"
        print(f"{n:>6}  {len(str(s)):>11}  {est_s:>14}  {ratio:>12.9f}")


if __name__ == "__main__":
    main()
