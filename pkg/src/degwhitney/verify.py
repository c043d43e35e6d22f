"""Identity suites, addressed by theorem number.

Each suite yields ``(label, lhs, rhs)`` triples; the runner compares them in
order and stops at the first mismatch, which becomes the reported
counterexample.  THEOREM_MAP.md in the repository root lists every suite id,
the identity it checks and the test that exercises it.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from . import boson, oracle
from . import triangles as T
from .dowling import difference_formula, dobinski_eval, dowling_poly, transform
from .exact import LAMBDA, LambdaPoly
from .factorial import classical_stirling, falling_factorial_at
from .series import dowling_egf, whitney_egf

DEFAULT_MS = (1, 2, 3)
DEFAULT_RS = (0, 1, 2)
STIRLING_RS = (0, 1, 2, 3)

Check = tuple  # (label, lhs, rhs)


@dataclass
class SuiteResult:
    suite: str
    title: str
    passed: bool
    checks: int
    counterexample: Optional[str] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.suite:>8}  {self.title} ({self.checks} checks)"
        if self.counterexample:
            text += f"\n    first counterexample: {self.counterexample}"
        return text


@dataclass(frozen=True)
class Suite:
    key: str
    title: str
    run: Callable[..., Iterator[Check]]
    uses_stirling_r: bool = False


def _ps(m, r, kind="whitney-second"):
    return T.TriangleParams(kind, m, r)


# --- suites -----------------------------------------------------------------

def s_zero_r(nmax, ms, rs):
    for m in ms:
        for n in range(nmax + 1):
            for k in range(n + 1):
                yield (f"V^(0) m={m} n={n} k={k}", T.V(m, 0, n, k), T.zero_r_whitney_from_stirling(m, n, k, "first"))
                yield (f"W^(0) m={m} n={n} k={k}", T.W(m, 0, n, k), T.zero_r_whitney_from_stirling(m, n, k, "second"))


def s_m_one(nmax, ms, rs):
    for r in rs:
        for n in range(nmax + 1):
            bracket = oracle.oracle_r_stirling(n, r, "bracket")
            brace = oracle.oracle_r_stirling(n, r, "brace")
            for k in range(n + 1):
                sign = -1 if (n - k) % 2 else 1
                yield (f"V_1 r={r} n={n} k={k}", T.V(1, r, n, k), bracket[k] * sign)
                yield (f"W_1 r={r} n={n} k={k}", T.W(1, r, n, k), brace[k])


def s_first_from_stirling(nmax, ms, rs):
    for m in ms:
        for r in rs:
            for n in range(nmax + 1):
                for k in range(n + 1):
                    yield (f"m={m} r={r} n={n} k={k}", T.V(m, r, n, k).substitute(m),
                           T.whitney_first_scaled_from_stirling(m, r, n, k))


def s_second_from_stirling(nmax, ms, rs):
    for m in ms:
        for r in rs:
            for n in range(nmax + 1):
                for k in range(n + 1):
                    yield (f"m={m} r={r} n={n} k={k}", T.W(m, r, n, k), T.whitney_second_from_stirling(m, r, n, k))


def s_r_stirling_from_stirling(nmax, ms, rs):
    for r in rs:
        for n in range(nmax + 1):
            for kind in ("bracket", "brace"):
                row = oracle.oracle_r_stirling(n, r, kind)
                for k in range(n + 1):
                    yield (f"{kind} r={r} n={n} k={k}", row[k], T.r_stirling_from_stirling(n, k, r, kind))


def _recurrence_rows(rows, weight):
    for n in range(len(rows) - 1):
        for k in range(n + 2):
            prev = rows[n][k - 1] if k >= 1 else T.ZERO
            cur = rows[n][k] if k <= n else T.ZERO
            yield n, k, rows[n + 1][k], prev + weight(n, k) * cur


def s_first_recurrence(nmax, ms, rs):
    for m in ms:
        for r in rs:
            rows = [oracle.oracle_whitney(m, r, n, "first") for n in range(nmax + 1)]
            for n, k, lhs, rhs in _recurrence_rows(rows, lambda n, k: LambdaPoly.linear(-r - m * n, k)):
                yield (f"m={m} r={r} n={n} k={k}", lhs, rhs)
            for n in range(nmax + 1):
                yield (f"row m={m} r={r} n={n}", T.get_triangle(_ps(m, r, "whitney-first")).row(n), rows[n])


def s_second_recurrence(nmax, ms, rs):
    for m in ms:
        for r in rs:
            rows = [oracle.oracle_whitney(m, r, n, "second") for n in range(nmax + 1)]
            for n, k, lhs, rhs in _recurrence_rows(rows, lambda n, k: LambdaPoly.linear(m * k + r, -n)):
                yield (f"m={m} r={r} n={n} k={k}", lhs, rhs)
            for n in range(nmax + 1):
                yield (f"row m={m} r={r} n={n}", T.get_triangle(_ps(m, r)).row(n), rows[n])


def s_r_stirling_recurrence(nmax, ms, rs):
    for r in rs:
        brackets = [oracle.oracle_r_stirling(n, r, "bracket") for n in range(nmax + 1)]
        braces = [oracle.oracle_r_stirling(n, r, "brace") for n in range(nmax + 1)]
        for n, k, lhs, rhs in _recurrence_rows(brackets, lambda n, k: LambdaPoly.linear(r + n, -k)):
            yield (f"bracket r={r} n={n} k={k}", lhs, rhs)
        for n, k, lhs, rhs in _recurrence_rows(braces, lambda n, k: LambdaPoly.linear(r + k, -n)):
            yield (f"brace r={r} n={n} k={k}", lhs, rhs)


def s_first_shift(nmax, ms, rs):
    for m in ms:
        for r in rs:
            p = _ps(m, r, "whitney-first")
            for n in range(nmax + 1):
                row = oracle.oracle_whitney(m, r + 1, n, "first")
                for k in range(n + 1):
                    yield (f"m={m} r={r}->{r + 1} n={n} k={k}", T.shift_r(p, n, k), row[k])


def s_second_shift(nmax, ms, rs):
    for m in ms:
        for r in rs:
            p = _ps(m, r)
            for n in range(nmax + 1):
                row = oracle.oracle_whitney(m, r + 1, n, "second")
                for k in range(n + 1):
                    yield (f"m={m} r={r}->{r + 1} n={n} k={k}", T.shift_r(p, n, k), row[k])


def s_r_stirling_shift(nmax, ms, rs):
    for r in rs:
        for n in range(nmax + 1):
            for kind in ("bracket", "brace"):
                row = oracle.oracle_r_stirling(n, r + 1, kind)
                for l in range(n + 1):
                    yield (f"{kind} r={r}->{r + 1} n={n} l={l}", T.r_stirling_shift(n, l, r, kind), row[l])


def _identity_row(n, j):
    return T.ONE if n == j else T.ZERO


def s_orthogonality(nmax, ms, rs):
    for m in ms:
        for r in rs:
            for n in range(nmax + 1):
                for j in range(n + 1):
                    wv = sum((T.W(m, r, n, k) * T.V(m, r, k, j) for k in range(j, n + 1)), T.ZERO)
                    vw = sum((T.V(m, r, n, k) * T.W(m, r, k, j) for k in range(j, n + 1)), T.ZERO)
                    yield (f"sum W V m={m} r={r} n={n} j={j}", wv, _identity_row(n, j))
                    yield (f"sum V W m={m} r={r} n={n} j={j}", vw, _identity_row(n, j))


def random_sequence(rng: random.Random, length: int) -> list[LambdaPoly]:
    return [LambdaPoly.const(Fraction(rng.randint(-50, 50), rng.randint(1, 20))) for _ in range(length)]


def s_inversion(nmax, ms, rs, trials=100, seed=20240613):
    rng = random.Random(seed)
    grid = [(m, r) for m in ms for r in rs]
    for t in range(trials):
        m, r = grid[t % len(grid)]
        length = rng.randint(0, max(nmax, 0) + 2)
        f = random_sequence(rng, length)
        p = _ps(m, r)
        g = transform(p, f, "W")
        yield (f"trial {t} m={m} r={r} len={length} V(W f)", transform(p, g, "V"), f)
        yield (f"trial {t} m={m} r={r} len={length} W(V f)", transform(p, transform(p, f, "V"), "W"), f)


DOBINSKI_XS = (0.5, 1.0, 2.0)
DOBINSKI_LAMBDAS = (Fraction(0), Fraction(1, 2), Fraction(1))
DOBINSKI_TOL = 1e-9


def dobinski_allowance(exact: float, tol: float = DOBINSKI_TOL) -> float:
    # truncation tolerance plus double rounding of a value of this size
    return tol + 1e-12 + 16 * sys.float_info.epsilon * abs(exact)


def s_dobinski(nmax, ms, rs):
    for m in ms:
        for r in rs:
            p = _ps(m, r)
            for n in range(nmax + 1):
                poly = dowling_poly(p, n)
                for x in DOBINSKI_XS:
                    for lam in DOBINSKI_LAMBDAS:
                        exact = float(poly.at(Fraction(x), lam))
                        approx = dobinski_eval(p, n, x, float(lam), DOBINSKI_TOL)
                        ok = abs(approx - exact) <= dobinski_allowance(exact)
                        yield (f"m={m} r={r} n={n} x={x} L={lam}: series={approx!r} exact={exact!r}", ok, True)


def s_explicit(nmax, ms, rs):
    for m in ms:
        for r in rs:
            p = _ps(m, r)
            for n in range(nmax + 1):
                row = oracle.oracle_whitney(m, r, n, "second")
                for k in range(n + 1):
                    w = T.W(m, r, n, k)
                    yield (f"closed form m={m} r={r} n={n} k={k}", T.explicit_whitney_second(p, n, k), w)
                    yield (f"oracle m={m} r={r} n={n} k={k}", row[k], w)
                    yield (f"difference m={m} r={r} n={n} k={k}", difference_formula(p, n, k), w)


def s_recurrence16(nmax, ms, rs):
    for m in ms:
        for r in rs:
            p = _ps(m, r)
            for n in range(1, nmax + 1):
                for k in range(1, n + 1):
                    yield (f"m={m} r={r} n={n} k={k}", T.recurrence16_check(p, n, k), True)


def s_boundary(nmax, ms, rs):
    for m in ms:
        for r in rs:
            for n in range(nmax + 1):
                yield (f"W(n,0) m={m} r={r} n={n}", T.W(m, r, n, 0), falling_factorial_at(r, n))
                v0 = LambdaPoly.const(T.v_column_zero(m, r, n))
                yield (f"V(n,0) m={m} r={r} n={n}", T.V(m, r, n, 0), v0)
                yield (f"Stirling sum for V(n,0) m={m} r={r} n={n}", T.v_column_zero_from_stirling(m, r, n), v0)


def s_egf(nmax, ms, rs):
    for m in ms:
        for r in rs:
            for k in range(nmax + 1):
                coeffs = whitney_egf(m, r, k, nmax).egf_coefficients()
                for n in range(nmax + 1):
                    yield (f"W egf m={m} r={r} n={n} k={k}", coeffs[n], T.W(m, r, n, k))
            p = _ps(m, r)
            for x in (0, 1, 2):
                coeffs = dowling_egf(m, r, x, nmax).egf_coefficients()
                for n in range(nmax + 1):
                    yield (f"D egf m={m} r={r} n={n} x={x}", coeffs[n], dowling_poly(p, n)(x))


def s_classical_limit(nmax, ms, rs):
    for m in ms:
        for r in rs:
            for n in range(nmax + 1):
                row = oracle.oracle_classical_whitney(m, r, n)
                for k in range(n + 1):
                    yield (f"m={m} r={r} n={n} k={k}", T.W(m, r, n, k).substitute(0), row[k])
    for n in range(nmax + 1):
        for k in range(n + 1):
            for kind in ("first", "second"):
                yield (f"S_{kind} n={n} k={k}", T.stirling_degenerate(n, k, kind).substitute(0),
                       LambdaPoly.const(classical_stirling(n, k, kind)))


def s_boson(nmax, ms, rs):
    ms = [m for m in ms if m <= 2] or [1]
    rs = [r for r in rs if r <= 1] or [0]
    nmax = min(nmax, 8)
    for m in ms:
        for r in rs:
            for n in range(nmax + 1):
                yield (f"normal-ordered row m={m} r={r} n={n}",
                       boson.whitney_from_normal_ordering(m, r, n), T.get_triangle(_ps(m, r)).row(n))
    if nmax >= 1:
        for name, ok in boson.verify_inversion_identities(nmax, ms, rs).items():
            yield (name, ok, True)


SUITES: dict[str, Suite] = {
    s.key: s
    for s in [
        Suite("1", "r = 0 reduces to scaled degenerate Stirling numbers", s_zero_r),
        Suite("2", "m = 1 reduces to degenerate r-Stirling numbers", s_m_one, True),
        Suite("3", "first kind at m*L from degenerate Stirling numbers", s_first_from_stirling),
        Suite("4", "second kind from degenerate Stirling numbers", s_second_from_stirling),
        Suite("5", "r-Stirling numbers from degenerate Stirling numbers", s_r_stirling_from_stirling, True),
        Suite("6", "first-kind three-term recurrence", s_first_recurrence),
        Suite("7", "second-kind three-term recurrence", s_second_recurrence),
        Suite("8", "r-Stirling three-term recurrences", s_r_stirling_recurrence, True),
        Suite("9", "first kind, shift r -> r+1", s_first_shift),
        Suite("10", "second kind, shift r -> r+1", s_second_shift),
        Suite("11", "r-Stirling shift r -> r+1", s_r_stirling_shift, True),
        Suite("12", "orthogonality of the W and V triangles", s_orthogonality),
        Suite("13", "W/V inversion of sequences", s_inversion),
        Suite("14", "Dobinski-type series for Dowling polynomials", s_dobinski),
        Suite("15", "finite-difference closed form", s_explicit),
        Suite("16", "(m)_{n-l,L} convolution recurrence", s_recurrence16),
        Suite("boundary", "first columns W(n,0) and V(n,0)", s_boundary),
        Suite("egf", "exponential generating functions", s_egf),
        Suite("limits", "L -> 0 classical limits", s_classical_limit),
        Suite("boson", "normal ordering in the boson algebra", s_boson),
    ]
}


def _equal(lhs, rhs) -> bool:
    return lhs == rhs


def _show(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


def run_suite(key: str, nmax: int, ms=None, rs=None, max_checks: Optional[int] = None) -> SuiteResult:
    if key not in SUITES:
        raise KeyError(f"unknown suite {key!r}; choose from {', '.join(SUITES)} or 'all'")
    suite = SUITES[key]
    ms = tuple(ms) if ms else DEFAULT_MS
    if not rs:
        rs = STIRLING_RS if suite.uses_stirling_r else DEFAULT_RS
    checks = 0
    for label, lhs, rhs in suite.run(nmax, ms, tuple(rs)):
        checks += 1
        if not _equal(lhs, rhs):
            detail = label if lhs is True or lhs is False else f"{label}: {_show(lhs)} != {_show(rhs)}"
            return SuiteResult(key, suite.title, False, checks, detail)
        if max_checks is not None and checks >= max_checks:
            break
    return SuiteResult(key, suite.title, True, checks)


def run_suites(keys, nmax: int, ms=None, rs=None) -> list[SuiteResult]:
    if keys == "all" or keys == ["all"]:
        keys = list(SUITES)
    return [run_suite(k, nmax, ms, rs) for k in keys]
