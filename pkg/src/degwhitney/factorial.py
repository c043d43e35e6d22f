"""Generalized factorials, binomials and classical Stirling numbers."""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import lru_cache

from .exact import LAMBDA, LambdaPoly, XPoly, as_rational


class FactorialKind(enum.Enum):
    FALLING_DEGENERATE = "falling-degenerate"
    RISING_DEGENERATE = "rising-degenerate"
    FALLING_ORDINARY = "falling-ordinary"
    RISING_ORDINARY = "rising-ordinary"

    @property
    def step(self) -> LambdaPoly:
        """Per-factor shift d, so the product is x(x - d)(x - 2d)..."""
        return {
            FactorialKind.FALLING_DEGENERATE: LAMBDA,
            FactorialKind.RISING_DEGENERATE: -LAMBDA,
            FactorialKind.FALLING_ORDINARY: LambdaPoly.one(),
            FactorialKind.RISING_ORDINARY: -LambdaPoly.one(),
        }[self]


def _as_lpoly(value) -> LambdaPoly:
    if isinstance(value, LambdaPoly):
        return value
    return LambdaPoly.const(as_rational(value))


def falling_factorial_poly(n: int, kind: FactorialKind = FactorialKind.FALLING_DEGENERATE) -> XPoly:
    """prod_{j<n} (x - j*step) as a polynomial in x; degree exactly n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return shifted_falling_factorial_poly(n, 1, 0, kind.step)


def shifted_falling_factorial_poly(n: int, scale, shift, step) -> XPoly:
    """prod_{j<n} (scale*x + shift - j*step); ``step`` may be any LambdaPoly.

    With ``step = L`` this is (scale*x + shift)_{n,L}.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    scale, shift, step = _as_lpoly(scale), _as_lpoly(shift), _as_lpoly(step)
    result = XPoly.one()
    for j in range(n):
        result = result * XPoly.linear(shift - step * j, scale)
    return result


def falling_factorial_at(a, n: int, step=LAMBDA) -> LambdaPoly:
    """prod_{j<n} (a - j*step), exact in lambda.

    ``a`` and ``step`` may be rationals or LambdaPolys, so (r)_{n,L},
    (-r)_{n,mL} and the rising <1>_{n,L} (``step=-L``) all go through here.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    a, step = _as_lpoly(a), _as_lpoly(step)
    result = LambdaPoly.one()
    for j in range(n):
        result = result * (a - step * j)
    return result


def rising_factorial_at(a, n: int, step=LAMBDA) -> LambdaPoly:
    return falling_factorial_at(a, n, -_as_lpoly(step))


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return _stirling2(n - 1, k - 1) + k * _stirling2(n - 1, k)


@lru_cache(maxsize=None)
def _stirling1(n: int, k: int) -> int:
    # signed: (x)_n = sum_k s(n, k) x^k
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return _stirling1(n - 1, k - 1) - (n - 1) * _stirling1(n - 1, k)


def classical_stirling(n: int, k: int, kind: str = "second") -> int:
    """Classical Stirling numbers; the first kind is signed."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if kind == "second":
        return _stirling2(n, k)
    if kind == "first":
        return _stirling1(n, k)
    raise ValueError(f"kind must be 'first' or 'second', not {kind!r}")


def factorial(n: int) -> int:
    return math.factorial(n)


def falling_factorial_int(s: int, k: int) -> Fraction:
    """Ordinary (s)_k for an integer s."""
    out = Fraction(1)
    for j in range(k):
        out *= s - j
    return out
