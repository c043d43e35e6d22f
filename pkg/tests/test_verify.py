import pytest

from degwhitney import triangles as T
from degwhitney import verify
from degwhitney.exact import LAMBDA


@pytest.mark.parametrize("key", list(verify.SUITES))
def test_suite_passes(key):
    result = verify.run_suite(key, 7)
    assert result.passed, result.counterexample
    assert result.checks > 0
    assert result.line().startswith("PASS")


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suite("99", 3)


def test_run_suites_all():
    results = verify.run_suites("all", 3)
    assert [r.suite for r in results] == list(verify.SUITES)
    assert all(r.passed for r in results)


def test_max_checks_stops_early():
    assert verify.run_suite("12", 6, max_checks=5).checks == 5


def _corrupt_w(monkeypatch, target=(2, 1, 4, 2)):
    real = T.W

    def W(m, r, n, k):
        value = real(m, r, n, k)
        return value + LAMBDA if (m, r, n, k) == target else value

    monkeypatch.setattr(T, "W", W)


@pytest.mark.parametrize("key", ["12", "16", "boundary", "15", "egf"])
def test_corrupted_entry_is_reported(monkeypatch, key):
    target = (2, 1, 4, 0) if key == "boundary" else (2, 1, 4, 2)
    _corrupt_w(monkeypatch, target)
    result = verify.run_suite(key, 6)
    assert not result.passed
    assert result.counterexample
    assert "FAIL" in result.line() and "first counterexample" in result.line()


def test_counterexample_names_parameters(monkeypatch):
    _corrupt_w(monkeypatch)
    result = verify.run_suite("15", 6)
    assert "m=2 r=1 n=4 k=2" in result.counterexample


def test_dobinski_allowance_is_tight():
    assert verify.dobinski_allowance(0.0) == pytest.approx(verify.DOBINSKI_TOL + 1e-12)
    # at moderate magnitudes the rounding share stays below the tolerance itself
    assert verify.dobinski_allowance(1e4) < 2 * verify.DOBINSKI_TOL
