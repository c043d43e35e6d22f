"""Run every identity suite on the default parameter grid and report timings.

    python3 scripts/run_all_suites.py --nmax 10
"""

import argparse
import sys
import time

from degwhitney.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=10)
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    args = ap.parse_args()
    failed = 0
    total = time.perf_counter()
    for key in args.suites:
        start = time.perf_counter()
        result = run_suite(key, args.nmax)
        failed += not result.passed
        print(f"{result.line()}  [{time.perf_counter() - start:.2f}s]")
    print(f"{len(args.suites) - failed}/{len(args.suites)} suites passed in {time.perf_counter() - total:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
