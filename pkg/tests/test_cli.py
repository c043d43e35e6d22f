import json
import subprocess
import sys
from fractions import Fraction

import pytest

from degwhitney import cli, export
from degwhitney import triangles as T
from degwhitney.exact import LAMBDA, LambdaPoly


def test_table_csv_example():
    res = cli.run(["table", "--family", "whitney-second", "--m", "2", "--r", "1", "--nmax", "3", "--format", "csv"])
    assert res.code == 0
    lines = res.stdout.splitlines()
    assert lines[0] == "n,k,value"
    assert "3,0,2*L^2-3*L+1" in lines
    rows = export.triangle_from_csv(res.stdout)
    assert len(rows) == 4
    assert rows == [T.get_triangle(T.TriangleParams("whitney-second", 2, 1)).row(n) for n in range(4)]


def test_table_json_roundtrip_is_byte_identical():
    res = cli.run(["table", "--family", "whitney-first", "--m", "3", "--r", "1/2", "--nmax", "5"])
    assert res.code == 0
    family, m, r, rows = export.triangle_from_json(res.stdout)
    assert (family, m, r) == ("whitney-first", 3, Fraction(1, 2))
    assert export.triangle_to_json(family, m, r, rows) + "\n" == res.stdout


def test_table_numeric_lambda():
    res = cli.run(["table", "--m", "2", "--r", "1", "--nmax", "3", "--lambda", "1", "--format", "csv"])
    assert "3,0,0" in res.stdout.splitlines()


def test_table_rejects_forced_parameters():
    res = cli.run(["table", "--family", "stirling2-deg", "--m", "2"])
    assert res.code == 2
    assert res.stderr


def test_verify_example():
    res = cli.run(["verify", "--theorem", "12", "--nmax", "8", "--m", "2", "--r", "1"])
    assert res.code == 0
    assert res.stdout.strip().splitlines()[-1] == "PASS"


def test_verify_json_and_multiple():
    res = cli.run(["verify", "--theorem", "1,4", "--theorem", "16", "--nmax", "4", "--format", "json"])
    assert res.code == 0
    report = json.loads(res.stdout)
    assert report["passed"] is True
    assert [s["suite"] for s in report["suites"]] == ["1", "4", "16"]


def test_verify_failure_exit_code(monkeypatch):
    real = T.W
    monkeypatch.setattr(T, "W", lambda m, r, n, k: real(m, r, n, k) + (1 if (n, k) == (3, 1) else 0))
    res = cli.run(["verify", "--theorem", "12", "--nmax", "5", "--m", "2", "--r", "1"])
    assert res.code == 1
    assert "first counterexample" in res.stdout
    assert res.stdout.strip().splitlines()[-1] == "FAIL"


def test_verify_unknown_suite():
    res = cli.run(["verify", "--theorem", "42"])
    assert res.code == 2
    assert "unknown suite" in res.stderr


def test_normal_order_example():
    res = cli.run(["normal-order"], stdin="a*ad\n")
    assert res.code == 0
    assert res.stdout == "(1)*ad a + (1)\n"


def test_normal_order_numeric_lambda():
    res = cli.run(["normal-order", "--lambda", "1"], stdin="ffact(N, 2)")
    assert res.stdout == "(1)*ad^2 a^2\n"


def test_normal_order_parse_error_has_offset():
    res = cli.run(["normal-order"], stdin="a +* ad")
    assert res.code == 2
    assert "offset 3" in res.stderr


def test_eval():
    res = cli.run(["eval", "--what", "dowling", "--n", "2", "--m", "1", "--r", "0", "--format", "csv"])
    assert res.stdout.strip() == "0,-L+1,1"
    res = cli.run(["eval", "--what", "dowling", "--n", "3", "--x", "1", "--lambda", "0", "--format", "csv"])
    assert res.stdout.strip() == "5"
    res = cli.run(["eval", "--what", "whitney-first", "--n", "2", "--k", "0", "--m", "2", "--r", "1"])
    assert LambdaPoly.from_json(json.loads(res.stdout)["value"]) == 3


def test_egf():
    res = cli.run(["egf", "--kind", "whitney", "--k", "1", "--order", "2", "--format", "csv"])
    assert res.code == 0
    assert res.stdout.splitlines()[-1].endswith(",-L+1")
    res = cli.run(["egf", "--kind", "whitney", "--k", "3", "--order", "2"])
    assert res.code == 2
    res = cli.run(["egf", "--kind", "dowling", "--x", "0", "--m", "2", "--r", "1", "--order", "3"])
    values = [LambdaPoly.from_json(c) for c in json.loads(res.stdout)["egf_values"]]
    assert values == [T.W(2, 1, n, 0) for n in range(4)]


def test_dobinski():
    res = cli.run(["dobinski", "--n", "5", "--x", "1", "--lambda", "1/2", "--m", "2", "--r", "1", "--format", "json"])
    assert res.code == 0
    out = json.loads(res.stdout)
    assert abs(out["value"] - float(Fraction(out["exact"]))) <= 1e-9
    assert cli.run(["dobinski", "--n", "3", "--x", "1"]).code == 2
    assert cli.run(["dobinski", "--n", "3", "--x", "-1", "--lambda", "0"]).code == 2
    assert cli.run(["dobinski", "--n", "3", "--x", "1", "--lambda", "0", "--tol", "0"]).code == 2


@pytest.mark.parametrize("argv", [[], ["table", "--bogus"], ["table", "--m", "0"], ["table", "--r", "-1"],
                                  ["table", "--nmax", "x"], ["eval"], ["frobnicate"]])
def test_usage_errors(argv):
    res = cli.run(argv)
    assert res.code == 2
    assert res.stderr


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "degwhitney", "normal-order"], input="ad*a + 1",
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "(1)*ad a + (1)\n"
