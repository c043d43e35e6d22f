"""Command line front end.

    degwhitney table --family whitney-second --m 2 --r 1 --nmax 3 --format csv
    degwhitney verify --theorem 12 --nmax 8 --m 2 --r 1
    degwhitney eval --what dowling --n 4 --x 1 --m 2 --r 1
    echo "a*ad" | degwhitney normal-order
    degwhitney egf --kind whitney --k 2 --order 6
    degwhitney dobinski --n 5 --x 1 --lambda 1/2 --m 2 --r 1

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import boson, export, verify
from .dowling import dobinski_eval, dowling_poly
from .exact import LambdaPoly, format_rational
from .series import dowling_egf, whitney_egf
from .triangles import FAMILIES, TriangleParams, get_triangle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class CliConfig:
    subcommand: str
    m: int = 1
    r: Fraction = Fraction(0)
    lam: Optional[Fraction] = None  # None means symbolic
    nmax: int = 5
    format: str = "json"
    tol: float = 1e-9
    family: str = "whitney-second"
    theorems: list[str] = field(default_factory=lambda: ["all"])
    grid: bool = True  # verify over the default (m, r) grid unless --m/--r given
    what: str = "dowling"
    n: int = 0
    k: int = 0
    x: Optional[Fraction] = None
    kind: str = "whitney"
    order: int = 8


@dataclass
class CliResult:
    code: int
    stdout: str
    stderr: str


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _lambda(text: str) -> Optional[Fraction]:
    if text == "symbolic":
        return None
    return _rational(text)


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return v


def _pos_int(text: str) -> int:
    v = _nonneg_int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="degwhitney", description="Degenerate r-Whitney numbers and r-Dowling polynomials.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, *, fmt=True, lam=True):
        sp.add_argument("--m", type=_pos_int, default=None, help="positive integer m (default 1)")
        sp.add_argument("--r", type=_rational, default=None, help="non-negative rational r (default 0)")
        if lam:
            sp.add_argument("--lambda", dest="lam", type=_lambda, default=None,
                            help="rational value for L, or 'symbolic' (default)")
        if fmt:
            sp.add_argument("--format", choices=("csv", "json"), default="json")

    t = sub.add_parser("table", help="emit a number triangle")
    t.add_argument("--family", choices=FAMILIES, default="whitney-second")
    t.add_argument("--nmax", type=_nonneg_int, default=5)
    common(t)

    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("--theorem", action="append", default=None,
                   help=f"suite id ({', '.join(verify.SUITES)}) or 'all'; repeatable or comma separated")
    v.add_argument("--nmax", type=_nonneg_int, default=8)
    common(v, lam=False, fmt=False)
    v.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("eval", help="evaluate D(n, x), W(n, k) or V(n, k)")
    e.add_argument("--what", choices=("dowling", "whitney-second", "whitney-first"), default="dowling")
    e.add_argument("--n", type=_nonneg_int, required=True)
    e.add_argument("--k", type=_nonneg_int, default=0)
    e.add_argument("--x", type=_rational, default=None, help="point for the Dowling polynomial (default: symbolic, prints coefficients)")
    common(e)

    o = sub.add_parser("normal-order", help="normal-order an expression read from stdin")
    o.add_argument("--lambda", dest="lam", type=_lambda, default=None)

    g = sub.add_parser("egf", help="print exponential generating function coefficients")
    g.add_argument("--kind", choices=("whitney", "dowling"), default="whitney")
    g.add_argument("--k", type=_nonneg_int, default=0)
    g.add_argument("--x", type=_rational, default=Fraction(1))
    g.add_argument("--order", type=_nonneg_int, default=8)
    common(g)

    d = sub.add_parser("dobinski", help="evaluate the Dobinski-type series numerically")
    d.add_argument("--n", type=_nonneg_int, required=True)
    d.add_argument("--x", type=float, required=True)
    d.add_argument("--tol", type=float, default=1e-9)
    common(d)
    return p


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    cfg = CliConfig(ns.subcommand)
    cfg.grid = ns.subcommand == "verify" and ns.m is None and ns.r is None
    cfg.m = ns.m if getattr(ns, "m", None) is not None else 1
    cfg.r = ns.r if getattr(ns, "r", None) is not None else Fraction(0)
    cfg.lam = getattr(ns, "lam", None)
    for name in ("nmax", "format", "tol", "family", "what", "n", "k", "x", "kind", "order"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if ns.subcommand == "verify":
        raw = ns.theorem or ["all"]
        cfg.theorems = [s.strip() for item in raw for s in item.split(",") if s.strip()]
    return cfg


class UsageError(Exception):
    pass


def _validate(cfg: CliConfig) -> None:
    if cfg.r < 0:
        raise UsageError("--r must be non-negative")
    if cfg.subcommand == "table":
        TriangleParams(cfg.family, cfg.m, cfg.r)  # raises on forced-parameter families
    if cfg.subcommand == "verify":
        bad = [t for t in cfg.theorems if t != "all" and t not in verify.SUITES]
        if bad:
            raise UsageError(f"unknown suite(s): {', '.join(bad)}")
    if cfg.subcommand == "dobinski":
        if cfg.lam is None:
            raise UsageError("dobinski needs a numeric --lambda")
        if not cfg.tol > 0:
            raise UsageError("--tol must be positive")
        if cfg.x < 0:
            raise UsageError("--x must be non-negative")
    if cfg.subcommand == "egf" and cfg.kind == "whitney" and cfg.order < cfg.k:
        raise UsageError("--order must be at least --k")


def _specialize(p: LambdaPoly, lam: Optional[Fraction]) -> LambdaPoly:
    return p if lam is None else LambdaPoly.const(p.evaluate(lam))


def _cmd_table(cfg: CliConfig, out) -> int:
    params = TriangleParams(cfg.family, cfg.m, cfg.r)
    rows = [[_specialize(p, cfg.lam) for p in row] for row in get_triangle(params).rows(cfg.nmax)]
    if cfg.format == "csv":
        out.write(export.triangle_to_csv(rows))
    else:
        out.write(export.triangle_to_json(cfg.family, cfg.m, cfg.r, rows) + "\n")
    return EXIT_OK


def _cmd_verify(cfg: CliConfig, out) -> int:
    keys = list(verify.SUITES) if "all" in cfg.theorems else cfg.theorems
    ms = None if cfg.grid else (cfg.m,)
    rs = None if cfg.grid else (cfg.r,)
    results = [verify.run_suite(k, cfg.nmax, ms, rs) for k in keys]
    ok = all(r.passed for r in results)
    if cfg.format == "json":
        out.write(json.dumps({
            "passed": ok,
            "suites": [{"suite": r.suite, "title": r.title, "passed": r.passed, "checks": r.checks,
                        "counterexample": r.counterexample} for r in results],
        }, sort_keys=True) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
        out.write(("PASS" if ok else "FAIL") + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_eval(cfg: CliConfig, out) -> int:
    params = TriangleParams("whitney-second", cfg.m, cfg.r)
    if cfg.what == "dowling":
        d = dowling_poly(params, cfg.n)
        if cfg.x is None:
            value = [_specialize(c, cfg.lam) for c in d.coeffs]
        else:
            value = _specialize(d(cfg.x), cfg.lam)
    else:
        fam = cfg.what
        value = _specialize(get_triangle(TriangleParams(fam, cfg.m, cfg.r)).entry(cfg.n, cfg.k), cfg.lam)
    if cfg.format == "json":
        enc = [v.to_json() for v in value] if isinstance(value, list) else value.to_json()
        out.write(json.dumps({"what": cfg.what, "m": cfg.m, "r": format_rational(cfg.r), "n": cfg.n,
                              "value": enc}, sort_keys=True) + "\n")
    else:
        text = ",".join(str(v) for v in value) if isinstance(value, list) else str(value)
        out.write(text + "\n")
    return EXIT_OK


def _cmd_normal_order(cfg: CliConfig, stdin_text: str, out) -> int:
    nf = boson.normal_order(boson.parse(stdin_text.strip()))
    if cfg.lam is not None:
        nf = boson.NormalForm({pq: _specialize(c, cfg.lam) for pq, c in nf.terms.items()})
    out.write(str(nf) + "\n")
    return EXIT_OK


def _cmd_egf(cfg: CliConfig, out) -> int:
    if cfg.kind == "whitney":
        s = whitney_egf(cfg.m, cfg.r, cfg.k, cfg.order)
    else:
        s = dowling_egf(cfg.m, cfg.r, cfg.x, cfg.order)
    coeffs = [_specialize(c, cfg.lam) for c in s.coeffs]
    scaled = [_specialize(c, cfg.lam) for c in s.egf_coefficients()]
    if cfg.format == "json":
        out.write(json.dumps({"kind": cfg.kind, "order": s.order,
                              "coefficients": [c.to_json() for c in coeffs],
                              "egf_values": [c.to_json() for c in scaled]}, sort_keys=True) + "\n")
    else:
        out.write("n,coefficient,n!*coefficient\n")
        for n, (c, v) in enumerate(zip(coeffs, scaled)):
            out.write(f"{n},{c},{v}\n")
    return EXIT_OK


def _cmd_dobinski(cfg: CliConfig, out) -> int:
    params = TriangleParams("whitney-second", cfg.m, cfg.r)
    value = dobinski_eval(params, cfg.n, cfg.x, float(cfg.lam), cfg.tol)
    exact = dowling_poly(params, cfg.n).at(Fraction(cfg.x), cfg.lam)
    if cfg.format == "json":
        out.write(json.dumps({"value": value, "exact": format_rational(exact), "tol": cfg.tol}, sort_keys=True) + "\n")
    else:
        out.write(f"{value!r}\n")
    return EXIT_OK


def execute(cfg: CliConfig, stdin_text: str, out, err) -> int:
    try:
        _validate(cfg)
        if cfg.subcommand == "table":
            return _cmd_table(cfg, out)
        if cfg.subcommand == "verify":
            return _cmd_verify(cfg, out)
        if cfg.subcommand == "eval":
            return _cmd_eval(cfg, out)
        if cfg.subcommand == "normal-order":
            return _cmd_normal_order(cfg, stdin_text, out)
        if cfg.subcommand == "egf":
            return _cmd_egf(cfg, out)
        if cfg.subcommand == "dobinski":
            return _cmd_dobinski(cfg, out)
    except boson.ParseError as exc:
        err.write(f"degwhitney: {exc}\n")
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        err.write(f"degwhitney: error: {exc}\n")
        return EXIT_USAGE
    raise AssertionError(f"unhandled subcommand {cfg.subcommand}")


def run(argv, stdin: str = "") -> CliResult:
    """Run the CLI in-process and capture its output."""
    out, err = io.StringIO(), io.StringIO()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            ns = build_parser().parse_args(list(argv))
    except SystemExit as exc:
        return CliResult(int(exc.code or 0), out.getvalue(), err.getvalue())
    code = execute(config_from_args(ns), stdin, out, err)
    return CliResult(code, out.getvalue(), err.getvalue())


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    stdin_text = sys.stdin.read() if ns.subcommand == "normal-order" else ""
    return execute(config_from_args(ns), stdin_text, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
