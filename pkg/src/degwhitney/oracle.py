"""Connection coefficients between triangular polynomial bases.

This is the definitional route: a number triangle is read off by expanding
one family of polynomials in x in another family, by back substitution.
Nothing here consults :mod:`degwhitney.triangles`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact import LAMBDA, LambdaPoly, XPoly, as_rational
from .factorial import shifted_falling_factorial_poly


class BasisError(ValueError):
    """A basis element is not of exact degree n with a constant leading coefficient."""


@dataclass(frozen=True)
class PolyBasis:
    generator: Callable[[int], XPoly]
    name: str = "basis"

    def __call__(self, n: int) -> XPoly:
        return self.generator(n)


def connection_coefficients(target: XPoly, basis: PolyBasis) -> list[LambdaPoly]:
    """Coefficients c_0..c_n with ``target == sum c_k * basis(k)``."""
    n = target.degree
    if n < 0:
        return []
    rest = target
    coeffs = [LambdaPoly.zero()] * (n + 1)
    for k in range(n, -1, -1):
        b = basis(k)
        if b.degree != k:
            raise BasisError(f"{basis.name}({k}) has degree {b.degree}, expected {k}")
        if not b.lead.is_constant():
            raise BasisError(f"{basis.name}({k}) has a non-constant leading coefficient {b.lead}")
        c = rest.coeff(k) / b.lead
        coeffs[k] = c
        if c:
            rest = rest - b * c
    if rest:
        raise BasisError(f"residual {rest} left after expanding in {basis.name}")
    return coeffs


def synthesize(coeffs, basis: PolyBasis) -> XPoly:
    out = XPoly.zero()
    for k, c in enumerate(coeffs):
        out = out + basis(k) * c
    return out


# --- the bases ----------------------------------------------------------------

def _ff(n, scale, shift, step):
    return shifted_falling_factorial_poly(n, scale, shift, step)


def power_basis() -> PolyBasis:
    return PolyBasis(lambda n: XPoly.x() ** n, "x^n")


def falling_basis(scale: int = 1) -> PolyBasis:
    """scale^n (x)_n."""
    s = Fraction(scale)
    return PolyBasis(lambda n: _ff(n, 1, 0, 1) * s ** n, f"{scale}^n (x)_n")


def degenerate_falling_basis(scale=1, shift=0) -> PolyBasis:
    """(scale*x + shift)_{n,L}."""
    return PolyBasis(lambda n: _ff(n, scale, shift, LAMBDA), f"({scale}x+{shift})_(n,L)")


def degenerate_rising_basis() -> PolyBasis:
    """<x>_{n,L}."""
    return PolyBasis(lambda n: _ff(n, 1, 0, -LAMBDA), "<x>_(n,L)")


def rising_shifted(n: int, shift) -> XPoly:
    """Ordinary <x + shift>_n."""
    return _ff(n, 1, shift, -1)


# --- triangle rows by definition -------------------------------------------

def oracle_whitney(m: int, r, n: int, kind: str = "second") -> list[LambdaPoly]:
    """Row n of W (second) or V (first) from the defining expansions.

    second: (m x + r)_{n,L} = sum_k W(n, k) m^k (x)_k
    first:  m^n (x)_n      = sum_k V(n, k) (m x + r)_{k,L}
    """
    r = as_rational(r)
    if kind == "second":
        return connection_coefficients(_ff(n, m, r, LAMBDA), falling_basis(m))
    if kind == "first":
        target = _ff(n, 1, 0, 1) * Fraction(m) ** n
        return connection_coefficients(target, degenerate_falling_basis(m, r))
    raise ValueError(f"kind must be 'first' or 'second', not {kind!r}")


def oracle_stirling(n: int, kind: str = "second") -> list[LambdaPoly]:
    """Degenerate Stirling rows: (x)_n in (x)_{k,L} (first), (x)_{n,L} in (x)_k (second)."""
    if kind == "second":
        return connection_coefficients(_ff(n, 1, 0, LAMBDA), falling_basis(1))
    if kind == "first":
        return connection_coefficients(_ff(n, 1, 0, 1), degenerate_falling_basis(1, 0))
    raise ValueError(f"kind must be 'first' or 'second', not {kind!r}")


def oracle_unsigned_stirling1(n: int) -> list[LambdaPoly]:
    """<x>_n expanded in <x>_{k,L}."""
    return connection_coefficients(rising_shifted(n, 0), degenerate_rising_basis())


def oracle_r_stirling(n: int, r, kind: str = "brace") -> list[LambdaPoly]:
    """Row n of the r-Stirling triangle, entries indexed (n+r, k+r).

    bracket: <x + r>_n    = sum_k [n+r, k+r]_{r,L} <x>_{k,L}
    brace:   (x + r)_{n,L} = sum_k {n+r, k+r}_{r,L} (x)_k
    """
    r = as_rational(r)
    if kind == "bracket":
        return connection_coefficients(rising_shifted(n, r), degenerate_rising_basis())
    if kind == "brace":
        return connection_coefficients(_ff(n, 1, r, LAMBDA), falling_basis(1))
    raise ValueError(f"kind must be 'bracket' or 'brace', not {kind!r}")


def oracle_classical_whitney(m: int, r, n: int) -> list[LambdaPoly]:
    """Non-degenerate r-Whitney row: (m x + r)^n in m^k (x)_k."""
    target = XPoly.linear(as_rational(r), m) ** n
    return connection_coefficients(target, falling_basis(m))


def oracle_classical_stirling2(n: int) -> list[LambdaPoly]:
    return connection_coefficients(XPoly.x() ** n, falling_basis(1))
