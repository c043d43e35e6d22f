from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from degwhitney import oracle
from degwhitney.exact import LAMBDA, LambdaPoly, XPoly
from degwhitney.factorial import shifted_falling_factorial_poly

from conftest import lambda_polys

L = LAMBDA


def test_expand_linear_in_scaled_falling_basis():
    target = shifted_falling_factorial_poly(1, 2, 3, L)
    assert oracle.connection_coefficients(target, oracle.falling_basis(2)) == [3, 1]


@pytest.mark.parametrize("j", range(6))
def test_basis_element_is_unit_vector(j):
    basis = oracle.degenerate_falling_basis(2, 1)
    coeffs = oracle.connection_coefficients(basis(j), basis)
    assert coeffs == [1 if i == j else 0 for i in range(j + 1)]


def test_degenerate_square_in_falling_basis():
    target = shifted_falling_factorial_poly(2, 1, 0, L)
    assert oracle.connection_coefficients(target, oracle.falling_basis(1)) == [0, 1 - L, 1]


def test_zero_target():
    assert oracle.connection_coefficients(XPoly.zero(), oracle.power_basis()) == []


def test_non_triangular_basis_rejected():
    bad = oracle.PolyBasis(lambda n: XPoly.x() ** (n + 1), "shifted powers")
    with pytest.raises(oracle.BasisError):
        oracle.connection_coefficients(XPoly.x() ** 2, bad)
    symbolic_lead = oracle.PolyBasis(lambda n: XPoly.x() ** n * (1 + L), "L-led")
    with pytest.raises(oracle.BasisError):
        oracle.connection_coefficients(XPoly.x(), symbolic_lead)


def test_oracle_whitney_examples():
    assert oracle.oracle_whitney(2, 1, 0, "second") == [1]
    assert oracle.oracle_whitney(2, 1, 2, "first")[0] == 3
    assert oracle.oracle_whitney(1, 0, 2, "second") == [0, 1 - L, 1]


def test_oracle_r_stirling_examples():
    assert oracle.oracle_r_stirling(1, 2, "brace") == [2, 1]
    assert oracle.oracle_r_stirling(0, 3, "bracket") == [1]
    assert oracle.oracle_r_stirling(2, 0, "brace") == [0, 1 - L, 1]


@given(st.lists(lambda_polys, min_size=1, max_size=7), st.integers(1, 3), st.integers(0, 2))
def test_synthesis_roundtrip(coeffs, m, r):
    # make the top coefficient nonzero so the synthesized degree is len-1
    coeffs = coeffs[:-1] + [coeffs[-1] + 7] if not (coeffs[-1] + 7) == 0 else coeffs[:-1] + [LambdaPoly.one()]
    basis = oracle.degenerate_falling_basis(m, r)
    assert oracle.connection_coefficients(oracle.synthesize(coeffs, basis), basis) == coeffs


@pytest.mark.parametrize("m, r", [(m, r) for m in (1, 2, 3) for r in (0, 1, 2)])
def test_oracle_orthogonality(m, r):
    size = 11
    Wm = [oracle.oracle_whitney(m, r, n, "second") + [0] * (size - n - 1) for n in range(size)]
    Vm = [oracle.oracle_whitney(m, r, n, "first") + [0] * (size - n - 1) for n in range(size)]
    for A, B in ((Wm, Vm), (Vm, Wm)):
        for i in range(size):
            for j in range(size):
                s = sum((LambdaPoly.const(0) + A[i][k] * B[k][j] for k in range(size)), LambdaPoly.zero())
                assert s == (1 if i == j else 0)


def test_classical_stirling2_row():
    assert oracle.oracle_classical_stirling2(4) == [0, 1, 7, 6, 1]
