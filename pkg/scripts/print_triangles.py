"""Print the first rows of the W and V triangles for one (m, r), optionally at a numeric L.

    python3 scripts/print_triangles.py --m 2 --r 1 --nmax 5 --lambda 1/2
"""

import argparse
from fractions import Fraction

from degwhitney.triangles import TriangleParams, get_triangle


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=1)
    ap.add_argument("--r", type=Fraction, default=Fraction(0))
    ap.add_argument("--nmax", type=int, default=5)
    ap.add_argument("--lambda", dest="lam", type=Fraction, default=None)
    args = ap.parse_args()
    for family in ("whitney-second", "whitney-first"):
        tri = get_triangle(TriangleParams(family, args.m, args.r))
        print(f"{family}  m={args.m} r={args.r}" + (f" L={args.lam}" if args.lam is not None else ""))
        for n, row in enumerate(tri.rows(args.nmax)):
            cells = [str(p if args.lam is None else p.evaluate(args.lam)) for p in row]
            print(f"  n={n}: " + " | ".join(cells))
        print()


if __name__ == "__main__":
    main()
