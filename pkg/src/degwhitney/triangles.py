"""Memoized triangles of degenerate Whitney and Stirling numbers.

Every family is computed from one of two three-term recurrences, in the
degeneracy parameter L:

    W(n+1, k) = W(n, k-1) + (m*k + r - n*L) * W(n, k)      (second kind)
    V(n+1, k) = V(n, k-1) + (k*L - r - m*n) * V(n, k)      (first kind)

The Stirling families are the specializations m=1 (r-Stirling) and
m=1, r=0 (degenerate Stirling), with the sign (-1)^(n-k) for the unsigned
first-kind variants.  The closed forms and shift sums in this module are
independent routes to the same numbers and are used for cross-checking.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import LAMBDA, LambdaPoly, as_rational, format_rational
from .factorial import binomial, factorial, falling_factorial_at, rising_factorial_at

FAMILIES = (
    "whitney-first",
    "whitney-second",
    "stirling1-deg",
    "stirling2-deg",
    "rstirling-bracket",
    "rstirling-brace",
    "unsigned-stirling1-deg",
)

# family -> (base recurrence, forces m=1, forces r=0, sign (-1)^(n-k))
_FAMILY_SHAPE = {
    "whitney-first": ("V", False, False, False),
    "whitney-second": ("W", False, False, False),
    "stirling1-deg": ("V", True, True, False),
    "stirling2-deg": ("W", True, True, False),
    "rstirling-bracket": ("V", True, False, True),
    "rstirling-brace": ("W", True, False, False),
    "unsigned-stirling1-deg": ("V", True, True, True),
}

ZERO = LambdaPoly.zero()
ONE = LambdaPoly.one()


@dataclass(frozen=True)
class TriangleParams:
    family: str = "whitney-second"
    m: int = 1
    r: Fraction = Fraction(0)

    def __post_init__(self):
        if self.family not in _FAMILY_SHAPE:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")
        r = as_rational(self.r)
        if r < 0:
            raise ValueError(f"r must be non-negative, got {format_rational(r)}")
        object.__setattr__(self, "r", r)
        _, force_m, force_r, _ = _FAMILY_SHAPE[self.family]
        if force_m and self.m != 1:
            raise ValueError(f"family {self.family} requires m=1")
        if force_r and r != 0:
            raise ValueError(f"family {self.family} requires r=0")

    @property
    def base(self) -> str:
        return _FAMILY_SHAPE[self.family][0]

    @property
    def signed(self) -> bool:
        return _FAMILY_SHAPE[self.family][3]

    def with_r(self, r) -> "TriangleParams":
        return TriangleParams(self.family, self.m, as_rational(r))


class Triangle:
    """Row-major memo of one number family for fixed (m, r).

    Rows are filled on demand; row n+1 depends only on row n.  Filling is
    serialized by a lock, reads of already computed rows are lock free.
    """

    def __init__(self, params: TriangleParams):
        self.params = params
        self._rows: list[tuple[LambdaPoly, ...]] = [(ONE,)]
        self._lock = threading.Lock()
        m, r = params.m, params.r
        if params.base == "W":
            # coefficient of W(n, k) in W(n+1, k)
            self._weight = lambda n, k: LambdaPoly.linear(m * k + r, -n)
        else:
            self._weight = lambda n, k: LambdaPoly.linear(-r - m * n, k)

    def _next_row(self, prev: tuple[LambdaPoly, ...]) -> tuple[LambdaPoly, ...]:
        n = len(prev) - 1
        row = []
        for k in range(n + 2):
            v = prev[k - 1] if k >= 1 else ZERO
            if k <= n:
                v = v + self._weight(n, k) * prev[k]
            row.append(v)
        return tuple(row)

    def _base_row(self, n: int) -> tuple[LambdaPoly, ...]:
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    self._rows.append(self._next_row(self._rows[-1]))
        return self._rows[n]

    def entry(self, n: int, k: int) -> LambdaPoly:
        if n < 0 or k < 0 or k > n:
            return ZERO
        v = self._base_row(n)[k]
        if self.params.signed and (n - k) % 2:
            v = -v
        return v

    def row(self, n: int) -> list[LambdaPoly]:
        return [self.entry(n, k) for k in range(n + 1)]

    def rows(self, nmax: int) -> list[list[LambdaPoly]]:
        return [self.row(n) for n in range(nmax + 1)]

    def matrix(self, size: int) -> list[list[LambdaPoly]]:
        """Square lower-triangular ``size x size`` matrix of entries."""
        return [[self.entry(n, k) for k in range(size)] for n in range(size)]


@lru_cache(maxsize=256)
def get_triangle(params: TriangleParams) -> Triangle:
    return Triangle(params)


def _params(family, m, r) -> TriangleParams:
    return TriangleParams(family, m, as_rational(r))


def W(m: int, r, n: int, k: int) -> LambdaPoly:
    """Degenerate r-Whitney number of the second kind."""
    return get_triangle(_params("whitney-second", m, r)).entry(n, k)


def V(m: int, r, n: int, k: int) -> LambdaPoly:
    """Degenerate r-Whitney number of the first kind."""
    return get_triangle(_params("whitney-first", m, r)).entry(n, k)


def whitney_second(params: TriangleParams, n: int, k: int) -> LambdaPoly:
    return W(params.m, params.r, n, k)


def whitney_first(params: TriangleParams, n: int, k: int) -> LambdaPoly:
    return V(params.m, params.r, n, k)


def stirling_degenerate(n: int, k: int, kind: str = "second") -> LambdaPoly:
    """S_{1,L}(n, k) or S_{2,L}(n, k)."""
    if kind == "second":
        return W(1, 0, n, k)
    if kind == "first":
        return V(1, 0, n, k)
    raise ValueError(f"kind must be 'first' or 'second', not {kind!r}")


def r_stirling(n: int, k: int, r, kind: str = "brace") -> LambdaPoly:
    """Degenerate r-Stirling number indexed as (n+r, k+r).

    ``brace`` is the second kind, ``bracket`` the unsigned first kind.
    """
    if kind == "brace":
        return W(1, r, n, k)
    if kind == "bracket":
        v = V(1, r, n, k)
        return -v if (n - k) % 2 else v
    raise ValueError(f"kind must be 'bracket' or 'brace', not {kind!r}")


def unsigned_stirling1_degenerate(n: int, k: int) -> LambdaPoly:
    v = V(1, 0, n, k)
    return -v if (n - k) % 2 else v


def entry(params: TriangleParams, n: int, k: int) -> LambdaPoly:
    return get_triangle(params).entry(n, k)


# ---------------------------------------------------------------------------
# Independent routes (closed forms, shift sums)


def shift_r(params: TriangleParams, n: int, k: int, direction: str = "up") -> LambdaPoly:
    """Entry (n, k) of the (r+1)-triangle computed from the r-triangle.

    First kind:  V^{(r+1)}(n, k) = sum_j C(j, k) (-1)^(j-k) <1>_{j-k,L} V^{(r)}(n, j)
    Second kind: W^{(r+1)}(n, k) = sum_l C(n, l) (1)_{n-l,L} W^{(r)}(l, k)
    """
    if direction != "up":
        raise ValueError("only the upward shift r -> r+1 is supported")
    m, r = params.m, params.r
    if n < 0 or k < 0 or k > n:
        return ZERO
    total = ZERO
    if params.base == "V":
        for j in range(k, n + 1):
            term = rising_factorial_at(1, j - k) * V(m, r, n, j) * binomial(j, k)
            total = total + (term if (j - k) % 2 == 0 else -term)
    else:
        for l in range(k, n + 1):
            total = total + falling_factorial_at(1, n - l) * W(m, r, l, k) * binomial(n, l)
    return total


def explicit_whitney_second(params: TriangleParams, n: int, k: int) -> LambdaPoly:
    """Finite-difference closed form

        W(n, k) = 1/(m^k k!) * sum_j C(k, j) (-1)^(k-j) (m*j + r)_{n,L}
    """
    m, r = params.m, params.r
    if n < 0 or k < 0 or k > n:
        return ZERO
    total = ZERO
    for j in range(k + 1):
        term = falling_factorial_at(m * j + r, n) * binomial(k, j)
        total = total + (term if (k - j) % 2 == 0 else -term)
    return total / (Fraction(m) ** k * factorial(k))


def zero_r_whitney_from_stirling(m: int, n: int, k: int, kind: str) -> LambdaPoly:
    """m^(n-k) * S_{i,L/m}(n, k): the r = 0 Whitney numbers."""
    s = stirling_degenerate(n, k, kind).substitute(Fraction(1, m))
    return s * Fraction(m) ** (n - k) if n >= k else ZERO


def whitney_first_scaled_from_stirling(m: int, r, n: int, k: int) -> LambdaPoly:
    """V^{(r)} with L replaced by m*L, as a sum over degenerate Stirling numbers:

        sum_{i=k}^{n} C(i, k) m^(n-i) S_{1,L}(n, i) (-r)_{i-k, mL}
    """
    r = as_rational(r)
    total = ZERO
    for i in range(k, n + 1):
        term = stirling_degenerate(n, i, "first") * falling_factorial_at(-r, i - k, LAMBDA * m)
        total = total + term * (binomial(i, k) * Fraction(m) ** (n - i))
    return total


def whitney_second_from_stirling(m: int, r, n: int, k: int) -> LambdaPoly:
    """sum_{i=k}^{n} C(n, i) (r)_{n-i,L} m^(i-k) S_{2,L/m}(i, k)."""
    total = ZERO
    for i in range(k, n + 1):
        s = stirling_degenerate(i, k, "second").substitute(Fraction(1, m))
        total = total + falling_factorial_at(r, n - i) * s * (binomial(n, i) * Fraction(m) ** (i - k))
    return total


def r_stirling_from_stirling(n: int, k: int, r, kind: str) -> LambdaPoly:
    """r-Stirling numbers from the plain degenerate ones.

    bracket: sum_i (-1)^(i-k) (-r)_{i-k,L} [n, i]_L C(i, k)
    brace:   sum_i C(n, i) (r)_{n-i,L} S_{2,L}(i, k)
    """
    r = as_rational(r)
    total = ZERO
    for i in range(k, n + 1):
        if kind == "bracket":
            term = falling_factorial_at(-r, i - k) * unsigned_stirling1_degenerate(n, i) * binomial(i, k)
            total = total + (term if (i - k) % 2 == 0 else -term)
        elif kind == "brace":
            total = total + falling_factorial_at(r, n - i) * stirling_degenerate(i, k, "second") * binomial(n, i)
        else:
            raise ValueError(f"kind must be 'bracket' or 'brace', not {kind!r}")
    return total


def r_stirling_shift(n: int, l: int, r, kind: str) -> LambdaPoly:
    """(r+1)-Stirling number (n+r+1, l+r+1) from r-Stirling numbers.

    bracket: sum_{k=l}^{n} C(k, l) <1>_{k-l,L} [n+r, k+r]_r
    brace:   sum_{j=l}^{n} C(n, j) {j+r, l+r}_r (1)_{n-j,L}
    """
    total = ZERO
    for j in range(l, n + 1):
        if kind == "bracket":
            total = total + rising_factorial_at(1, j - l) * r_stirling(n, j, r, "bracket") * binomial(j, l)
        elif kind == "brace":
            total = total + falling_factorial_at(1, n - j) * r_stirling(j, l, r, "brace") * binomial(n, j)
        else:
            raise ValueError(f"kind must be 'bracket' or 'brace', not {kind!r}")
    return total


def recurrence16_rhs(m: int, r, n: int, k: int) -> LambdaPoly:
    """sum_{l=k-1}^{n} C(n, l) (m)_{n-l,L} W(l, k-1)."""
    total = ZERO
    for l in range(max(k - 1, 0), n + 1):
        total = total + falling_factorial_at(m, n - l) * W(m, r, l, k - 1) * binomial(n, l)
    return total


def recurrence16_check(params: TriangleParams, n: int, k: int) -> bool:
    """Check W(n+1, k) - (r - n L) W(n, k) against the (m)_{n-l,L} convolution."""
    if not n >= k >= 1:
        raise ValueError("requires n >= k >= 1")
    m, r = params.m, params.r
    lhs = W(m, r, n + 1, k) - LambdaPoly.linear(r, -n) * W(m, r, n, k)
    return lhs == recurrence16_rhs(m, r, n, k)


def v_column_zero(m: int, r, n: int) -> Fraction:
    """(-1)^n prod_{j<n} (m*j + r); independent of L."""
    r = as_rational(r)
    out = Fraction(1)
    for j in range(n):
        out *= -(m * j + r)
    return out


def v_column_zero_from_stirling(m: int, r, n: int) -> LambdaPoly:
    """sum_i S_{1,L/m}(n, i) m^(n-i) (-r)_{i,L}."""
    r = as_rational(r)
    total = ZERO
    for i in range(n + 1):
        s = stirling_degenerate(n, i, "first").substitute(Fraction(1, m))
        total = total + s * falling_factorial_at(-r, i) * Fraction(m) ** (n - i)
    return total
