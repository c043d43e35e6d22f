"""Normal ordering in the single-mode boson (Weyl) algebra.

Elements are kept as :class:`NormalForm`, a finite sum of c * (ad)^p a^q with
every creator to the left.  Products are reordered with the closed form

    a^q (ad)^s = sum_j C(q, j) C(s, j) j! c^j (ad)^(s-j) a^(q-j)

where c is the commutator [a, ad] (1 for the physical algebra).  A literal
word rewriter applying ``a ad -> ad a + c`` one step at a time is kept as an
independent check of that formula.

A small expression language feeds the engine::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | 'a' | 'ad' | 'N' | 'L'
            | 'ffact' '(' expr ',' INT ')' | '(' expr ')'

``N`` is sugar for ``ad*a``, ``L`` is the degeneracy parameter and
``ffact(e, n)`` is the degenerate falling factorial (e)_{n,L}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact import LAMBDA, LambdaPoly, as_rational
from .factorial import binomial, factorial, falling_factorial_at, falling_factorial_int

# --- normal forms ------------------------------------------------------------


class NormalForm:
    """sum_{(p, q)} c_{p,q} (ad)^p a^q with LambdaPoly coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for (p, q), c in (terms or {}).items():
            if not isinstance(c, LambdaPoly):
                c = LambdaPoly.const(as_rational(c))
            if p < 0 or q < 0:
                raise ValueError("exponents must be non-negative")
            if c:
                clean[(p, q)] = c
        self._terms = clean

    @classmethod
    def scalar(cls, c) -> "NormalForm":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, p: int, q: int, c=1) -> "NormalForm":
        return cls({(p, q): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, p: int, q: int) -> LambdaPoly:
        return self._terms.get((p, q), LambdaPoly.zero())

    def off_diagonal(self) -> dict:
        return {pq: c for pq, c in self._terms.items() if pq[0] != pq[1]}

    def is_diagonal(self) -> bool:
        return not self.off_diagonal()

    def diagonal(self) -> list[LambdaPoly]:
        """Coefficients of (ad)^k a^k for k = 0..max."""
        top = max((p for p, q in self._terms if p == q), default=-1)
        return [self.coefficient(k, k) for k in range(top + 1)]

    def number_state_value(self, s: int) -> LambdaPoly:
        """Eigenvalue of a diagonal form on the number state |s>."""
        if not self.is_diagonal():
            raise ValueError("only diagonal normal forms act on |s> by a scalar")
        total = LambdaPoly.zero()
        for (k, _), c in self._terms.items():
            total = total + c * falling_factorial_int(s, k)
        return total

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, NormalForm):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _lift(self, other):
        if isinstance(other, NormalForm):
            return other
        if isinstance(other, (int, Fraction, LambdaPoly)) and not isinstance(other, bool):
            return NormalForm.scalar(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for pq, c in other._terms.items():
            out[pq] = out.get(pq, LambdaPoly.zero()) + c
        return NormalForm(out)

    __radd__ = __add__

    def __neg__(self):
        return NormalForm({pq: -c for pq, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NormalForm":
        return NormalForm({pq: v * c for pq, v in self._terms.items()})

    def multiply(self, other: "NormalForm", commutator=1) -> "NormalForm":
        commutator = as_rational(commutator)
        out: dict = {}
        for (p, q), c1 in self._terms.items():
            for (s, t), c2 in other._terms.items():
                c12 = c1 * c2
                for j in range(min(q, s) + 1):
                    w = binomial(q, j) * binomial(s, j) * factorial(j) * commutator ** j
                    if not w:
                        continue
                    key = (p + s - j, q + t - j)
                    out[key] = out.get(key, LambdaPoly.zero()) + c12 * w
        return NormalForm(out)

    def __mul__(self, other):
        if isinstance(other, NormalForm):
            return self.multiply(other)
        if isinstance(other, (int, Fraction, LambdaPoly)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LambdaPoly)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def power(self, e: int, commutator=1) -> "NormalForm":
        out = NormalForm.scalar(1)
        for _ in range(e):
            out = out.multiply(self, commutator)
        return out

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for p, q in sorted(self._terms, reverse=True):
            mono = []
            if p:
                mono.append("ad" if p == 1 else f"ad^{p}")
            if q:
                mono.append("a" if q == 1 else f"a^{q}")
            coef = f"({self._terms[(p, q)]})"
            parts.append(coef + ("*" + " ".join(mono) if mono else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"NormalForm({self})"


def ad_a(k: int, c=1) -> NormalForm:
    """c * (ad)^k a^k."""
    return NormalForm.monomial(k, k, c)


def rewrite_word(word: str, commutator=1) -> NormalForm:
    """Normal-order a word over {A, D} by repeated ``AD -> DA + c``.

    Each step removes one (A, D) inversion, so the loop terminates.
    """
    if set(word) - {"A", "D"}:
        raise ValueError("words are over the letters A (annihilator) and D (creator)")
    commutator = as_rational(commutator)
    pending = {word: Fraction(1)}
    done: dict = {}
    while pending:
        w, c = pending.popitem()
        i = w.find("AD")
        if i < 0:
            key = (w.count("D"), w.count("A"))
            done[key] = done.get(key, Fraction(0)) + c
            continue
        for nw, nc in ((w[:i] + "DA" + w[i + 2:], c), (w[:i] + w[i + 2:], c * commutator)):
            if nc:
                pending[nw] = pending.get(nw, Fraction(0)) + nc
    return NormalForm(done)


# --- expressions --------------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    name: str  # "a", "ad" or "L"


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*"
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class FFact:
    arg: "Expr"
    n: int


Expr = Union[Atom, Num, Neg, BinOp, Pow, FFact]
OperatorExpr = Expr


def number_operator() -> Expr:
    return BinOp("*", Atom("ad"), Atom("a"))


def to_source(e: Expr) -> str:
    """Fully parenthesized source text that parses back to ``e``."""
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Num):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(e, Neg):
        return f"-({to_source(e.operand)})"
    if isinstance(e, BinOp):
        return f"({to_source(e.left)}){e.op}({to_source(e.right)})"
    if isinstance(e, Pow):
        return f"({to_source(e.base)})^{e.exponent}"
    if isinstance(e, FFact):
        return f"ffact({to_source(e.arg)}, {e.n})"
    raise TypeError(f"not an expression node: {e!r}")


class ParseError(ValueError):
    def __init__(self, offset: int, expected, found: str, source: str = ""):
        self.offset = offset
        self.expected = frozenset(expected)
        self.found = found
        self.source = source
        want = ", ".join(sorted(self.expected))
        super().__init__(f"syntax error at offset {offset}: expected {want}; found {found}")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "ident", a punctuation character, or "eof"
    text: str
    offset: int  # byte offset into the UTF-8 source


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")
_IDENTS = {"a", "ad", "N", "L", "ffact"}
_PUNCT = set("+-*^(),/")


def _tokenize(source: str) -> list[_Tok]:
    toks = []
    pos = 0
    byte_at = lambda i: len(source[:i].encode("utf-8"))
    while True:
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(_Tok("int", m.group(1), byte_at(start)))
        elif m.group(2):
            toks.append(_Tok("ident", m.group(2), byte_at(start)))
        else:
            ch = m.group(3)
            # unknown characters become a token no grammar rule accepts, so the
            # error is reported where the parser first meets them
            toks.append(_Tok(ch if ch in _PUNCT else "invalid", ch, byte_at(start)))
        pos = m.end()
    toks.append(_Tok("eof", "", len(source.encode("utf-8"))))
    return toks


_ATOM_START = {"integer", "a", "ad", "N", "L", "ffact", "("}


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.toks = _tokenize(source)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(t.offset, expected, found, self.source)

    def eat(self, kind: str) -> _Tok:
        if self.tok.kind != kind:
            self.fail({kind})
        t = self.tok
        self.i += 1
        return t

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "eof":
            self.fail({"+", "-", "*", "end of input"})
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.tok.kind
            self.i += 1
            e = BinOp(op, e, self.term())
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.tok.kind == "*":
            self.i += 1
            e = BinOp("*", e, self.unary())
        return e

    def unary(self) -> Expr:
        if self.tok.kind == "-":
            self.i += 1
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.tok.kind == "^":
            self.i += 1
            if self.tok.kind != "int":
                self.fail({"integer"})
            return Pow(base, int(self.eat("int").text))
        return base

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "int":
            self.i += 1
            value = Fraction(int(t.text))
            if self.tok.kind == "/":
                self.i += 1
                if self.tok.kind != "int":
                    self.fail({"integer"})
                den = int(self.eat("int").text)
                if den == 0:
                    raise ParseError(self.toks[self.i - 1].offset, {"nonzero integer"}, "0", self.source)
                value = value / den
            return Num(value)
        if t.kind == "ident" and t.text in _IDENTS:
            self.i += 1
            if t.text == "N":
                return number_operator()
            if t.text == "ffact":
                self.eat("(")
                arg = self.expr()
                self.eat(",")
                if self.tok.kind != "int":
                    self.fail({"integer"})
                n = int(self.eat("int").text)
                if self.tok.kind != ")":
                    self.fail({")"})
                self.i += 1
                return FFact(arg, n)
            return Atom(t.text)
        if t.kind == "(":
            self.i += 1
            e = self.expr()
            self.eat(")")
            return e
        self.fail(_ATOM_START)


def parse(source: str) -> Expr:
    """Parse operator-expression text; raises :class:`ParseError` with a byte offset."""
    return _Parser(source).parse()


def normal_order(expr, commutator=1) -> NormalForm:
    """Normal form of an expression (or source string)."""
    if isinstance(expr, str):
        expr = parse(expr)
    go = lambda e: normal_order(e, commutator)
    if isinstance(expr, Atom):
        if expr.name == "a":
            return NormalForm.monomial(0, 1)
        if expr.name == "ad":
            return NormalForm.monomial(1, 0)
        if expr.name == "L":
            return NormalForm.scalar(LAMBDA)
        raise ValueError(f"unknown atom {expr.name!r}")
    if isinstance(expr, Num):
        return NormalForm.scalar(expr.value)
    if isinstance(expr, Neg):
        return -go(expr.operand)
    if isinstance(expr, BinOp):
        left, right = go(expr.left), go(expr.right)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        return left.multiply(right, commutator)
    if isinstance(expr, Pow):
        return go(expr.base).power(expr.exponent, commutator)
    if isinstance(expr, FFact):
        base = go(expr.arg)
        out = NormalForm.scalar(1)
        for j in range(expr.n):
            out = out.multiply(base - LAMBDA * j, commutator)
        return out
    raise TypeError(f"not an expression node: {expr!r}")


# --- Whitney numbers from the algebra ----------------------------------------


class OffDiagonalError(ArithmeticError):
    """A normal form that should be diagonal carries (ad)^p a^q terms with p != q."""


def scaled_number_ffact(m: int, r, n: int, shift=0) -> Expr:
    """ffact(m*N + r + shift, n) as an expression tree."""
    inner = BinOp("+", BinOp("*", Num(Fraction(m)), number_operator()), Num(as_rational(r) + as_rational(shift)))
    return FFact(inner, n)


def whitney_from_normal_ordering(m: int, r, n: int, commutator=1) -> list[LambdaPoly]:
    """Row n of W read from the normal form of (m N + r)_{n,L}.

    The (k, k) coefficient is W(n, k) m^k.
    """
    nf = normal_order(scaled_number_ffact(m, r, n), commutator)
    bad = nf.off_diagonal()
    if bad:
        raise OffDiagonalError(f"off-diagonal terms in normal form: {NormalForm(bad)}")
    diag = nf.diagonal()
    diag += [LambdaPoly.zero()] * (n + 1 - len(diag))
    return [c / Fraction(m) ** k for k, c in enumerate(diag)]


def number_state_eigenvalue(p: int, q: int, s: int) -> Fraction:
    """(ad)^k a^k |s> = (s)_k |s>; only the diagonal case p = q = k has a rational eigenvalue."""
    if s < 0:
        raise ValueError("s must be non-negative")
    if p != q:
        raise ValueError("(ad)^p a^q with p != q maps |s> to a different number state")
    return falling_factorial_int(s, p)


def verify_inversion_identities(nmax: int, ms=(1, 2), rs=(0, 1), commutator=1) -> dict[str, bool]:
    """Re-derive the normal-ordering identities through the engine.

    Left-hand sides are normal-ordered with the given commutator, right-hand
    sides are assembled from the recurrence triangles.  Returns one flag per
    identity family; a corrupted commutator must make some of them fail.
    """
    from . import triangles as T

    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    nf = lambda e: normal_order(e, commutator)
    N = number_operator()
    report = {}

    def record(name, ok):
        report[name] = report.get(name, True) and bool(ok)

    for n in range(1, nmax + 1):
        # a^n ad - ad a^n = n a^(n-1) and the creator mirror
        an, adn = Pow(Atom("a"), n), Pow(Atom("ad"), n)
        record("annihilator-commutator",
               nf(BinOp("-", BinOp("*", an, Atom("ad")), BinOp("*", Atom("ad"), an)))
               == NormalForm.monomial(0, n - 1, n))
        record("creator-commutator",
               nf(BinOp("-", BinOp("*", Atom("a"), adn), BinOp("*", adn, Atom("a"))))
               == NormalForm.monomial(n - 1, 0, n))
        # degenerate powers of N and their inversion
        record("degenerate-number-power",
               nf(FFact(N, n)) == sum((ad_a(k, T.stirling_degenerate(n, k, "second")) for k in range(n + 1)), NormalForm()))
        record("degenerate-number-power-inverse",
               nf(BinOp("*", Pow(Atom("ad"), n), Pow(Atom("a"), n)))
               == sum((nf(FFact(N, k)).scale(T.stirling_degenerate(n, k, "first")) for k in range(n + 1)), NormalForm()))

    for r in rs:
        for n in range(nmax + 1):
            record("r-stirling-brace",
                   nf(scaled_number_ffact(1, r, n))
                   == sum((ad_a(k, T.r_stirling(n, k, r, "brace")) for k in range(n + 1)), NormalForm()))
            signed = lambda k: T.r_stirling(n, k, r, "bracket") * (-1) ** (n - k)
            record("r-stirling-bracket",
                   nf(BinOp("*", Pow(Atom("ad"), n), Pow(Atom("a"), n)))
                   == sum((nf(scaled_number_ffact(1, r, k)).scale(signed(k)) for k in range(n + 1)), NormalForm()))

    for m in ms:
        for r in rs:
            for n in range(nmax + 1):
                mnf = lambda k: nf(scaled_number_ffact(m, r, k))
                # second-kind expansion and first-kind inversion
                record("whitney-second-expansion",
                       mnf(n) == sum((ad_a(k, T.W(m, r, n, k) * m ** k) for k in range(n + 1)), NormalForm()))
                record("whitney-first-inversion",
                       ad_a(n, m ** n) == sum((mnf(k).scale(T.V(m, r, n, k)) for k in range(n + 1)), NormalForm()))
                # one-step derivations behind the three-term recurrences
                step = BinOp("-", BinOp("+", BinOp("*", Num(Fraction(m)), N), Num(as_rational(r))), BinOp("*", Num(Fraction(n)), Atom("L")))
                lhs = mnf(n).multiply(nf(step), commutator)
                rhs = sum((ad_a(k, (T.W(m, r, n, k - 1) + LambdaPoly.linear(m * k + r, -n) * T.W(m, r, n, k)) * m ** k)
                           for k in range(n + 2)), NormalForm())
                record("whitney-second-recurrence", lhs == rhs)
                lhs = nf(BinOp("*", Pow(Atom("ad"), n + 1), Pow(Atom("a"), n + 1))).scale(m ** (n + 1))
                rhs = sum((mnf(k).scale(T.V(m, r, n, k - 1) + LambdaPoly.linear(-r - m * n, k) * T.V(m, r, n, k))
                           for k in range(n + 2)), NormalForm())
                record("whitney-first-recurrence", lhs == rhs)
                # ad (m(1 + N) + r)_{n,L} a, three ways
                inner = BinOp("+", BinOp("*", Num(Fraction(m)), BinOp("*", Atom("a"), Atom("ad"))), Num(as_rational(r)))
                sandwich = nf(BinOp("*", BinOp("*", Atom("ad"), FFact(inner, n)), Atom("a")))
                number_side = nf(BinOp("*", N, scaled_number_ffact(m, r, n)))
                via_shift = sum((ad_a(k, (T.W(m, r, n + 1, k) - LambdaPoly.linear(r, -n) * T.W(m, r, n, k)) * Fraction(m) ** (k - 1))
                                 for k in range(n + 2)), NormalForm())
                via_sum = sum((ad_a(k, T.recurrence16_rhs(m, r, n, k) * Fraction(m) ** (k - 1)) for k in range(1, n + 2)), NormalForm())
                record("sandwich-recurrence", sandwich == number_side == via_shift == via_sum)
                # diagonal action on number states
                for s in range(nmax + 1):
                    record("number-state-diagonal",
                           mnf(n).number_state_value(s) == falling_factorial_at(m * s + as_rational(r), n))
    return report
