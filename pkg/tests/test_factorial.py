import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from degwhitney.exact import LAMBDA, LambdaPoly, XPoly
from degwhitney.factorial import (
    FactorialKind, binomial, classical_stirling, falling_factorial_at, falling_factorial_poly,
    shifted_falling_factorial_poly,
)

L = LAMBDA
x = XPoly.x()


def set_partitions(elements):
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def brute_stirling2(n, k):
    return sum(1 for p in set_partitions(list(range(n))) if len(p) == k)


def brute_stirling1_unsigned(n, k):
    # permutations of n with k cycles
    count = 0
    for perm in itertools.permutations(range(n)):
        seen, cycles = set(), 0
        for i in range(n):
            if i not in seen:
                cycles += 1
                j = i
                while j not in seen:
                    seen.add(j)
                    j = perm[j]
        count += cycles == k
    return count


@pytest.mark.parametrize("kind", list(FactorialKind))
def test_empty_product(kind):
    assert falling_factorial_poly(0, kind) == XPoly.one()


def test_small_degenerate_falling():
    assert falling_factorial_poly(2) == XPoly([0, -L, 1])
    assert falling_factorial_poly(3).map_coeffs(lambda c: c.substitute(0)) == x ** 3


def test_falling_factorial_at():
    assert falling_factorial_at(1, 3, L) == LambdaPoly([1, -3, 2])
    assert falling_factorial_at(-2, 0) == LambdaPoly.one()
    assert falling_factorial_at(1, 2, -L) == LambdaPoly([1, 1])


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (7, 0, 1), (3, 5, 0), (3, -1, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_stirling2_4_2_from_partitions():
    assert brute_stirling2(4, 2) == 7
    assert classical_stirling(4, 2) == 7


@pytest.mark.parametrize("n", range(7))
def test_classical_stirling_against_enumeration(n):
    for k in range(n + 1):
        assert classical_stirling(n, k, "second") == brute_stirling2(n, k)
        assert abs(classical_stirling(n, k, "first")) == brute_stirling1_unsigned(n, k)
        assert classical_stirling(n, k, "first") * (-1) ** (n - k) >= 0
    assert classical_stirling(n, n) == 1
    if n:
        assert classical_stirling(n, 0) == 0


@pytest.mark.parametrize("n", range(13))
def test_lambda_zero_gives_power(n):
    assert falling_factorial_poly(n).map_coeffs(lambda c: c.substitute(0)) == x ** n


@pytest.mark.parametrize("n", range(13))
def test_one_more_factor(n):
    assert falling_factorial_poly(n) * XPoly([-n * L, 1]) == falling_factorial_poly(n + 1)
    assert falling_factorial_poly(n).degree == n


@pytest.mark.parametrize("n", range(11))
def test_vandermonde(n):
    # both sides have degree n in y, so agreement at n+1 values of y with x symbolic
    # is the identity in two indeterminates; the extra L-dependent point is a bonus
    for y in [Fraction(j) for j in range(n + 1)] + [L + Fraction(1, 3)]:
        lhs = shifted_falling_factorial_poly(n, 1, y, L)
        rhs = sum((falling_factorial_poly(k) * (falling_factorial_at(y, n - k) * binomial(n, k))
                   for k in range(n + 1)), XPoly.zero())
        assert lhs == rhs


@given(st.integers(0, 10))
def test_rising_reflection(n):
    rising = falling_factorial_poly(n, FactorialKind.RISING_DEGENERATE)
    reflected = shifted_falling_factorial_poly(n, -1, 0, L) * (-1) ** n
    assert rising == reflected


def test_ordinary_kinds_fix_step():
    assert falling_factorial_poly(3, FactorialKind.FALLING_ORDINARY) == x * (x - 1) * (x - 2)
    assert falling_factorial_poly(3, FactorialKind.RISING_ORDINARY) == x * (x + 1) * (x + 2)
    deg = falling_factorial_poly(3, FactorialKind.FALLING_DEGENERATE)
    assert deg.map_coeffs(lambda c: LambdaPoly.const(c.evaluate(1))) == x * (x - 1) * (x - 2)
