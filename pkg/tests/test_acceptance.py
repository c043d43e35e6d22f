"""Acceptance criteria, one test (and one summary line) per criterion.

Run alone with ``pytest tests/test_acceptance.py -v``; the PASS/FAIL lines
appear in the "acceptance criteria" section of the terminal summary.
"""

import math
import random
import time
from fractions import Fraction

from degwhitney import boson as B
from degwhitney import oracle
from degwhitney import triangles as T
from degwhitney import verify
from degwhitney.dowling import dobinski_eval, dowling_poly, transform
from degwhitney.exact import LambdaPoly
from degwhitney.factorial import falling_factorial_at, falling_factorial_int
from degwhitney.series import dowling_egf, whitney_egf

from test_boson import ACCEPT, REJECT

MS, RS = (1, 2, 3), (0, 1, 2)
GRID = [(m, r) for m in MS for r in RS]


def _clear_caches():
    T.get_triangle.cache_clear()


def test_c1_triple_path_agreement(record_criterion):
    _clear_caches()
    start = time.perf_counter()
    bad = []
    for m, r in GRID:
        second = T.Triangle(T.TriangleParams("whitney-second", m, r))
        first = T.Triangle(T.TriangleParams("whitney-first", m, r))
        p = T.TriangleParams("whitney-second", m, r)
        for n in range(11):
            w_oracle = oracle.oracle_whitney(m, r, n, "second")
            v_oracle = oracle.oracle_whitney(m, r, n, "first")
            closed = [T.explicit_whitney_second(p, n, k) for k in range(n + 1)]
            if not (second.row(n) == closed == w_oracle):
                bad.append(("W", m, r, n))
            if first.row(n) != v_oracle:
                bad.append(("V", m, r, n))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10
    record_criterion("1 triple-path W/V agreement n<=10", ok, f"{elapsed:.2f}s, mismatches={bad[:3]}")
    assert not bad
    assert elapsed < 10


def test_c2_boson_path(record_criterion):
    bad = []
    for m in (1, 2):
        for r in (0, 1):
            for n in range(9):
                nf = B.normal_order(B.scaled_number_ffact(m, r, n))
                if nf.off_diagonal():
                    bad.append(("off-diagonal", m, r, n))
                if B.whitney_from_normal_ordering(m, r, n) != [T.W(m, r, n, k) for k in range(n + 1)]:
                    bad.append(("row", m, r, n))
    record_criterion("2 boson normal ordering = W rows n<=8", not bad, f"mismatches={bad[:3]}")
    assert not bad


def test_c3_theorem_suites(record_criterion):
    results = [verify.run_suite(k, 10) for k in ("1", "2", "3", "4", "5", "8", "9", "10", "11", "16")]
    failed = [r for r in results if not r.passed]
    checks = sum(r.checks for r in results)
    detail = f"{checks} checks" + (f", first failure {failed[0].suite}: {failed[0].counterexample}" if failed else "")
    record_criterion("3 identity suites 1-5, 8-11, 16 exact n<=10", not failed, detail)
    assert not failed, [r.line() for r in failed]


def test_c4_orthogonality_and_inversion(record_criterion):
    ortho = verify.run_suite("12", 10)
    rng = random.Random(7)
    roundtrips = 0
    for t in range(100):
        m, r = GRID[t % len(GRID)]
        p = T.TriangleParams("whitney-second", m, r)
        f = verify.random_sequence(rng, rng.randint(1, 12))
        if transform(p, transform(p, f, "W"), "V") == f and transform(p, transform(p, f, "V"), "W") == f:
            roundtrips += 1
    ok = ortho.passed and roundtrips == 100
    record_criterion("4 orthogonality n<=10 and 100 sequence round trips", ok,
                     f"{ortho.checks} products, {roundtrips}/100 round trips")
    assert ortho.passed, ortho.counterexample
    assert roundtrips == 100


def test_c5_boundary_columns(record_criterion):
    bad = []
    for m, r in GRID:
        for n in range(13):
            if T.W(m, r, n, 0) != falling_factorial_at(r, n):
                bad.append(("W", m, r, n))
            product = Fraction((-1) ** n) * math.prod(m * k + r for k in range(n))
            if T.V(m, r, n, 0) != product:
                bad.append(("V", m, r, n))
            if T.v_column_zero_from_stirling(m, r, n) != product:
                bad.append(("stirling sum", m, r, n))
    record_criterion("5 first columns W(n,0), V(n,0) and Stirling sum n<=12", not bad, f"mismatches={bad[:3]}")
    assert not bad


def test_c6_generating_functions(record_criterion):
    bad = []
    for m, r in GRID:
        for k in range(11):
            if whitney_egf(m, r, k, 10).egf_coefficients() != [T.W(m, r, n, k) for n in range(11)]:
                bad.append(("W", m, r, k))
        p = T.TriangleParams("whitney-second", m, r)
        for x in (0, 1, 2):
            if dowling_egf(m, r, x, 10).egf_coefficients() != [dowling_poly(p, n)(x) for n in range(11)]:
                bad.append(("D", m, r, x))
    record_criterion("6 EGF coefficients = W and D(n,x)", not bad, f"mismatches={bad[:3]}")
    assert not bad


def test_c7_dobinski(record_criterion):
    cases = [(m, r, n, x, lam) for m in (1, 2) for r in RS for n in range(9)
             for x in (0.5, 1.0, 2.0) for lam in (Fraction(0), Fraction(1, 2), Fraction(1))]
    exact = {c: float(dowling_poly(T.TriangleParams("whitney-second", c[0], c[1]), c[2]).at(Fraction(c[3]), c[4]))
             for c in cases}
    start = time.perf_counter()
    approx = {c: dobinski_eval(T.TriangleParams("whitney-second", c[0], c[1]), c[2], c[3], float(c[4]), 1e-9)
              for c in cases}
    elapsed = time.perf_counter() - start
    worst = max(abs(approx[c] - exact[c]) for c in cases)
    ok = worst <= 1e-9 and elapsed < 1
    record_criterion("7 Dobinski series within 1e-9", ok, f"{len(cases)} points, max err {worst:.2e}, {elapsed:.3f}s")
    assert worst <= 1e-9
    assert elapsed < 1


def _brute_classical_whitney(m, r, n):
    """Coefficients c_k with (m x + r)^n = sum_k c_k m^k (x)_k, by forward substitution at x = 0..n."""
    coeffs = []
    for j in range(n + 1):
        known = sum(coeffs[k] * m ** k * falling_factorial_int(j, k) for k in range(j))
        coeffs.append(Fraction((m * j + r) ** n - known, m ** j * falling_factorial_int(j, j)))
    return coeffs


def test_c8_classical_limit(record_criterion):
    bad = []
    for m, r in GRID:
        for n in range(11):
            if [T.W(m, r, n, k).substitute(0) for k in range(n + 1)] != _brute_classical_whitney(m, r, n):
                bad.append((m, r, n))
    s242 = T.stirling_degenerate(4, 2, "second").substitute(0)
    ok = not bad and s242 == 7
    record_criterion("8 L=0 limit = classical r-Whitney; S2(4,2)=7", ok, f"S2(4,2)={s242}, mismatches={bad[:3]}")
    assert not bad
    assert s242 == 7


def test_c9_boson_identities_and_parser(record_criterion):
    comm_ok = all(
        B.normal_order(f"a^{n}*ad - ad*a^{n}") == B.NormalForm.monomial(0, n - 1, n)
        and B.normal_order(f"a*ad^{n} - ad^{n}*a") == B.NormalForm.monomial(n - 1, 0, n)
        for n in range(1, 9))
    diag_ok = all(
        B.normal_order(B.scaled_number_ffact(m, r, n)).number_state_value(s) == falling_factorial_at(m * s + r, n)
        for m, r in ((1, 0), (1, 1), (2, 0), (2, 1)) for n in range(9) for s in range(9))
    parsed = 0
    for source, normal in ACCEPT:
        parsed += str(B.normal_order(source)) == normal
    for source, offset in REJECT:
        try:
            B.parse(source)
        except B.ParseError as exc:
            parsed += exc.offset == offset
    corpus = len(ACCEPT) + len(REJECT)
    ok = comm_ok and diag_ok and corpus >= 30 and parsed == corpus
    record_criterion("9 commutators, number-state diagonal, parser corpus", ok,
                     f"commutators={comm_ok}, diagonal={diag_ok}, corpus {parsed}/{corpus}")
    assert comm_ok and diag_ok
    assert corpus >= 30 and parsed == corpus
