"""Degenerate r-Dowling polynomials, their Dobinski-type series, and the W/V inversion pair."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import LAMBDA, LambdaPoly, as_rational
from .factorial import binomial, factorial, falling_factorial_at
from .triangles import V, W, ZERO, TriangleParams


@dataclass(frozen=True)
class DowlingPoly:
    """D(n, x) = sum_k W(n, k) x^k."""

    params: TriangleParams
    n: int
    coeffs: tuple[LambdaPoly, ...]

    def __call__(self, x) -> LambdaPoly:
        x = as_rational(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at(self, x, lam) -> Fraction:
        return self(x).evaluate(lam)


def dowling_poly(params: TriangleParams, n: int) -> DowlingPoly:
    if n < 0:
        raise ValueError("n must be non-negative")
    return DowlingPoly(params, n, tuple(W(params.m, params.r, n, k) for k in range(n + 1)))


def dowling_number(params: TriangleParams, n: int) -> LambdaPoly:
    return dowling_poly(params, n)(1)


def _ffact_float(a: float, n: int, lam: float) -> float:
    out = 1.0
    for j in range(n):
        out *= a - j * lam
    return out


def dobinski_eval(params: TriangleParams, n: int, x: float, lambda_value: float, tol: float = 1e-9) -> float:
    """e^{-x/m} sum_k (x/m)^k (m k + r)_{n,L} / k!, in double precision.

    Summation stops once the tail is provably below ``tol``: the k-th term is
    at most z^k/k! * (m k + c)^n with z = x/m and c = |r| + n|L|, and the
    ratio of consecutive bounds, z/(k+1) * ((m(k+1) + c)/(m k + c))^n, is
    decreasing in k, so past the first index where it drops below one the
    tail is dominated by a geometric series.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    if x < 0:
        raise ValueError("x must be non-negative")
    m, r = params.m, float(params.r)
    lam = float(lambda_value)
    if x == 0:
        return W(m, params.r, n, 0).to_float(lam)
    z = x / m
    c = abs(r) + n * abs(lam)

    def bound(k: int) -> float:
        return math.exp(k * math.log(z) - math.lgamma(k + 1)) * (m * k + c) ** n

    terms = []
    weight = 1.0  # z^k / k!
    k = 0
    below = 0
    while True:
        terms.append(weight * _ffact_float(m * k + r, n, lam))
        nxt = k + 1
        ratio = z / (nxt + 1) * ((m * (nxt + 1) + c) / (m * nxt + c)) ** n
        if ratio < 1:
            tail = bound(nxt) / (1 - ratio)
            if tail * math.exp(-z) < tol / 10:
                below += 1
                if below >= 3:
                    break
            else:
                below = 0
        k = nxt
        weight *= z / k
    return math.exp(-z) * math.fsum(terms)


def forward_difference(f, k: int, x):
    """k-th forward difference of ``f`` at ``x``: sum_j C(k, j) (-1)^(k-j) f(x + j)."""
    total = None
    for j in range(k + 1):
        term = f(x + j) * binomial(k, j)
        if (k - j) % 2:
            term = -term
        total = term if total is None else total + term
    return total


def difference_formula(params: TriangleParams, n: int, k: int) -> LambdaPoly:
    """(m^(n-k) / k!) * Delta^k of y -> (y)_{n, L/m} at y = r/m."""
    if not 0 <= k <= n:
        raise ValueError("requires 0 <= k <= n")
    m = params.m
    step = LAMBDA * Fraction(1, m)
    diff = forward_difference(lambda y: falling_factorial_at(y, n, step), k, params.r / m)
    return diff * (Fraction(m) ** (n - k) / factorial(k))


def transform(params: TriangleParams, seq, direction: str = "W") -> list[LambdaPoly]:
    """Apply the lower-triangular W or V matrix: out_n = sum_l M(n, l) seq_l."""
    seq = [s if isinstance(s, LambdaPoly) else LambdaPoly.const(as_rational(s)) for s in seq]
    if direction == "W":
        M = W
    elif direction == "V":
        M = V
    else:
        raise ValueError("direction must be 'V' or 'W'")
    m, r = params.m, params.r
    out = []
    for n in range(len(seq)):
        acc = ZERO
        for l in range(n + 1):
            if seq[l]:
                acc = acc + M(m, r, n, l) * seq[l]
        out.append(acc)
    return out
