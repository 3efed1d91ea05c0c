#!/usr/bin/env python3
"""Run every cross-verification check and report one line per check.

Equivalent to `skewdyck verify`; exposed as a script for quick
experiment-style runs with a custom brute-force depth.
"""

import argparse
import sys

from skewdyck.verify import run_all


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--oracle-depth", type=int, default=16,
                        help="maximum brute-force word length (<= 24)")
    args = parser.parse_args()

    failed = 0
    for result in run_all(oracle_depth=args.oracle_depth):
        status = "PASS" if result.ok else "FAIL"
        detail = f"  ({result.detail})" if result.detail else ""
        print(f"{status} {result.name}{detail}")
        if not result.ok:
            failed += 1
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
