"""Exact scalars and dense polynomials in the degeneracy parameter and in x.

Scalars are :class:`fractions.Fraction`.  A :class:`LambdaPoly` is a dense
polynomial in the indeterminate lambda (printed ``L``) over the rationals; an
:class:`XPoly` is a dense polynomial in ``x`` whose coefficients are
:class:`LambdaPoly`.  Both are immutable and kept in canonical form (trailing
zeros stripped), so ``==`` is structural equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` string to a Fraction.

    Floats are rejected: nothing in this module is allowed to go inexact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class _DensePoly:
    """Shared machinery for canonical dense polynomials over a commutative ring."""

    __slots__ = ("_coeffs",)
    var = "?"

    def __init__(self, coeffs=()):
        cs = [self._coerce_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    # subclass hooks
    @classmethod
    def _coerce_coeff(cls, c):
        raise NotImplementedError

    @classmethod
    def _is_scalar(cls, other) -> bool:
        raise NotImplementedError

    @classmethod
    def _from_canonical(cls, coeffs: tuple):
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def zero(cls):
        return cls._from_canonical(())

    @classmethod
    def one(cls):
        return cls([1])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def lead(self):
        if not self._coeffs:
            return self._coerce_coeff(0)
        return self._coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return self._coerce_coeff(0)

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def normalized(self):
        return type(self)(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._coeffs == other._coeffs
        if self._is_scalar(other):
            return self._coeffs == type(self).const(other)._coeffs
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self._coeffs))

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if self._is_scalar(other):
            return type(self).const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._from_canonical(tuple(-c for c in self._coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if self._is_scalar(other):
            c = self._coerce_coeff(other)
            return type(self)([c * a for a in self._coeffs])
        if not isinstance(other, type(self)):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return type(self).zero()
        out = [self._coerce_coeff(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = type(self).one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __iter__(self):
        return iter(self._coeffs)


class LambdaPoly(_DensePoly):
    """Polynomial in lambda with Fraction coefficients, ``coeffs[i]`` at ``L**i``."""

    __slots__ = ()
    var = "L"

    @classmethod
    def _coerce_coeff(cls, c):
        return as_rational(c)

    @classmethod
    def _is_scalar(cls, other) -> bool:
        return isinstance(other, (int, Fraction)) and not isinstance(other, bool)

    @classmethod
    def lam(cls) -> "LambdaPoly":
        return cls([0, 1])

    @classmethod
    def linear(cls, const, slope) -> "LambdaPoly":
        """``const + slope*L``."""
        return cls([const, slope])

    def __truediv__(self, other):
        if isinstance(other, LambdaPoly):
            if not other.is_constant() or not other:
                raise ZeroDivisionError("can only divide by a nonzero constant")
            other = other.lead
        other = as_rational(other)
        if other == 0:
            raise ZeroDivisionError("division of LambdaPoly by zero")
        return LambdaPoly([c / other for c in self._coeffs])

    def substitute(self, c) -> "LambdaPoly":
        """Replace L by ``c*L``."""
        c = as_rational(c)
        out, power = [], Fraction(1)
        for a in self._coeffs:
            out.append(a * power)
            power *= c
        return LambdaPoly(out)

    def evaluate(self, v) -> Fraction:
        v = as_rational(v)
        acc = Fraction(0)
        for a in reversed(self._coeffs):
            acc = acc * v + a
        return acc

    def to_float(self, v: float) -> float:
        acc = 0.0
        for a in reversed(self._coeffs):
            acc = acc * v + float(a)
        return acc

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data) -> "LambdaPoly":
        return cls([parse_rational(s) for s in data])

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            if i == 0:
                term = format_rational(c)
            else:
                mono = "L" if i == 1 else f"L^{i}"
                if c == 1:
                    term = mono
                elif c == -1:
                    term = "-" + mono
                else:
                    term = f"{format_rational(c)}*{mono}"
            if parts and not term.startswith("-"):
                term = "+" + term
            parts.append(term)
        return "".join(parts)

    def __repr__(self):
        return f"LambdaPoly({self})"

    _TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(\*?L(?:\^(\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "LambdaPoly":
        """Inverse of ``str``: reads strings such as ``"2*L^2-3*L+1"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        out: dict[int, Fraction] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"bad polynomial term at offset {pos} in {text!r}")
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing sign at offset {pos} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            mono = m.group(3)
            if mono is None:
                deg = 0
            else:
                if mono.startswith("*") and not m.group(2):
                    raise ValueError(f"dangling '*' at offset {pos} in {text!r}")
                if not mono.startswith("*") and m.group(2):
                    raise ValueError(f"missing '*' at offset {pos} in {text!r}")
                deg = int(m.group(4)) if m.group(4) else 1
            out[deg] = out.get(deg, Fraction(0)) + sign * coef
            pos = m.end()
        top = max(out)
        return cls([out.get(i, 0) for i in range(top + 1)])


class XPoly(_DensePoly):
    """Polynomial in x whose coefficients are :class:`LambdaPoly`."""

    __slots__ = ()
    var = "x"

    @classmethod
    def _coerce_coeff(cls, c):
        if isinstance(c, LambdaPoly):
            return c
        return LambdaPoly.const(as_rational(c))

    @classmethod
    def _is_scalar(cls, other) -> bool:
        return isinstance(other, LambdaPoly) or (
            isinstance(other, (int, Fraction)) and not isinstance(other, bool)
        )

    @classmethod
    def x(cls) -> "XPoly":
        return cls([0, 1])

    @classmethod
    def linear(cls, const, slope) -> "XPoly":
        """``const + slope*x``; either argument may be a LambdaPoly."""
        return cls([const, slope])

    def evaluate(self, at) -> LambdaPoly:
        """Value at ``x = at`` (a rational or a LambdaPoly)."""
        if not isinstance(at, LambdaPoly):
            at = LambdaPoly.const(as_rational(at))
        acc = LambdaPoly.zero()
        for c in reversed(self._coeffs):
            acc = acc * at + c
        return acc

    def map_coeffs(self, fn) -> "XPoly":
        return XPoly([fn(c) for c in self._coeffs])

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("*x" if i == 1 else f"*x^{i}")
            parts.append(f"({c}){mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"XPoly({self})"


def poly_arith(op: str, p, q):
    """Dispatch ``add``/``sub``/``mul``/``scale`` on two polynomials (or a poly and a scalar)."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op in ("mul", "scale"):
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def lambda_substitute(p: LambdaPoly, c) -> LambdaPoly:
    return p.substitute(c)


def lambda_eval(p: LambdaPoly, v) -> Fraction:
    return p.evaluate(v)


LAMBDA = LambdaPoly.lam()
