"""Compare the Dobinski-type series against exact Dowling values over a grid of points.

    python3 scripts/dobinski_convergence.py --nmax 8
"""

import argparse
from fractions import Fraction

from degwhitney.dowling import dobinski_eval, dowling_poly
from degwhitney.triangles import TriangleParams


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args()
    # large values lose absolute accuracy to double rounding, so report both errors
    print("m r  L     x    worst abs err   worst rel err")
    for m in (1, 2, 3):
        for r in (0, 1, 2):
            p = TriangleParams("whitney-second", m, r)
            for lam in (Fraction(0), Fraction(1, 2), Fraction(1)):
                for x in (0.5, 1.0, 2.0, 5.0):
                    errs = []
                    for n in range(args.nmax + 1):
                        exact = float(dowling_poly(p, n).at(Fraction(x), lam))
                        err = abs(dobinski_eval(p, n, x, float(lam), args.tol) - exact)
                        errs.append((err, err / max(abs(exact), 1.0)))
                    print(f"{m} {r}  {str(lam):4}  {x:<4} {max(e[0] for e in errs):.3e}       {max(e[1] for e in errs):.3e}")


if __name__ == "__main__":
    main()
