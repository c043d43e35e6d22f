"""Truncated power series in t over LambdaPoly, and the exponential generating functions."""

from __future__ import annotations

from fractions import Fraction

from .exact import LambdaPoly, as_rational
from .factorial import factorial, falling_factorial_at


class Series:
    """sum_{i<=order} coeffs[i] t^i; results of binary operations keep the smaller order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [c if isinstance(c, LambdaPoly) else LambdaPoly.const(as_rational(c)) for c in coeffs]
        cs = cs[: order + 1]
        cs += [LambdaPoly.zero()] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        return cls([c], order)

    def __getitem__(self, i: int) -> LambdaPoly:
        return self.coeffs[i] if 0 <= i <= self.order else LambdaPoly.zero()

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def _lift(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction, LambdaPoly)) and not isinstance(other, bool):
            return Series.constant(other, self.order)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        return Series([self[i] + other[i] for i in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LambdaPoly)) and not isinstance(other, bool):
            return Series([c * other for c in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        out = [LambdaPoly.zero()] * (order + 1)
        for i in range(order + 1):
            if not self[i]:
                continue
            for j in range(order + 1 - i):
                out[i + j] = out[i + j] + self[i] * other[j]
        return Series(out, order)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Series.constant(1, self.order)
        for _ in range(e):
            out = out * self
        return out

    def exp(self) -> "Series":
        """Classical exp(g) for g with zero constant term: sum_j g^j / j!."""
        if self[0]:
            raise ValueError("exp composition needs a zero constant term")
        out = Series.constant(1, self.order)
        power = Series.constant(1, self.order)
        for j in range(1, self.order + 1):
            power = power * self
            out = out + power * Fraction(1, factorial(j))
        return out

    def egf_coefficients(self) -> list[LambdaPoly]:
        """n! * [t^n] for n = 0..order."""
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]

    def __repr__(self):
        return f"Series({[str(c) for c in self.coeffs]}, order={self.order})"


def degenerate_exp(x, order: int) -> Series:
    """e_L^x(t) = sum_k (x)_{k,L} t^k / k!."""
    x = as_rational(x)
    return Series([falling_factorial_at(x, k) * Fraction(1, factorial(k)) for k in range(order + 1)], order)


def whitney_egf(m: int, r, k: int, order: int) -> Series:
    """(1 / (m^k k!)) e_L^r(t) (e_L^m(t) - 1)^k; n! [t^n] is W(n, k)."""
    if order < k:
        raise ValueError("order must be at least k")
    base = (degenerate_exp(m, order) - 1) ** k
    return degenerate_exp(r, order) * base * Fraction(1, Fraction(m) ** k * factorial(k))


def dowling_egf(m: int, r, x, order: int) -> Series:
    """e_L^r(t) exp((x/m)(e_L^m(t) - 1)); n! [t^n] is D(n, x)."""
    x = as_rational(x)
    inner = (degenerate_exp(m, order) - 1) * (x / m)
    return degenerate_exp(r, order) * inner.exp()
