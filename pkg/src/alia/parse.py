"""Tiny exact-expression parser for polynomials in X, Y and roots of unity.

Grammar (whitespace ignored):

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := ('-')* atom ('^' int)?
    atom   := int | 'X' | 'Y' | 'w' | 'w'<int> | '(' expr ')'

`w` is the field's primitive root; `w<n>` is exp(2*pi*i/n) and requires n to
divide the field's root order.  Values are exact sparse Laurent-free
polynomials over the field; `parse_hompoly` additionally checks homogeneity.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyc, FieldSpec
from .bivariate import HomPoly


class _P:
    """Sparse polynomial in X, Y: {(deg_x, deg_y): Cyc}."""

    __slots__ = ("f", "m")

    def __init__(self, f: FieldSpec, m=None):
        self.f = f
        self.m = m or {}

    @staticmethod
    def const(f, c: Cyc):
        return _P(f, {(0, 0): c} if not c.is_zero() else {})

    def add(self, o):
        m = dict(self.m)
        for k, v in o.m.items():
            s = m.get(k, self.f.zero) + v
            if s.is_zero():
                m.pop(k, None)
            else:
                m[k] = s
        return _P(self.f, m)

    def neg(self):
        return _P(self.f, {k: -v for k, v in self.m.items()})

    def mul(self, o):
        m = {}
        for (i1, j1), a in self.m.items():
            for (i2, j2), b in o.m.items():
                k = (i1 + i2, j1 + j2)
                s = m.get(k, self.f.zero) + a * b
                if s.is_zero():
                    m.pop(k, None)
                else:
                    m[k] = s
        return _P(self.f, m)

    def inv_const(self):
        if set(self.m) - {(0, 0)}:
            raise ValueError("division by a non-constant")
        return _P.const(self.f, self.m[(0, 0)].inv())

    def pow(self, k: int):
        out = _P.const(self.f, self.f.one)
        for _ in range(k):
            out = out.mul(self)
        return out


class _Parser:
    def __init__(self, f: FieldSpec, text: str):
        self.f = f
        self.s = text.replace(" ", "")
        self.i = 0

    def peek(self):
        return self.s[self.i] if self.i < len(self.s) else ""

    def take(self):
        c = self.peek()
        self.i += 1
        return c

    def parse(self) -> _P:
        v = self.expr()
        if self.i != len(self.s):
            raise ValueError(f"trailing input at {self.i}: {self.s[self.i:]!r}")
        return v

    def expr(self) -> _P:
        v = self.term()
        while self.peek() and self.peek() in "+-":
            op = self.take()
            t = self.term()
            v = v.add(t if op == "+" else t.neg())
        return v

    def term(self) -> _P:
        v = self.factor()
        while self.peek() and self.peek() in "*/":
            op = self.take()
            t = self.factor()
            v = v.mul(t if op == "*" else t.inv_const())
        return v

    def factor(self) -> _P:
        neg = False
        while self.peek() == "-":
            self.take()
            neg = not neg
        v = self.atom()
        if self.peek() == "^":
            self.take()
            v = v.pow(self.integer())
        return v.neg() if neg else v

    def integer(self) -> int:
        out = ""
        while self.peek().isdigit():
            out += self.take()
        if not out:
            raise ValueError(f"expected integer at {self.i}")
        return int(out)

    def atom(self) -> _P:
        c = self.peek()
        f = self.f
        if c == "(":
            self.take()
            v = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parenthesis")
            return v
        if c.isdigit():
            return _P.const(f, f.from_int(self.integer()))
        if c == "X":
            self.take()
            return _P(f, {(1, 0): f.one})
        if c == "Y":
            self.take()
            return _P(f, {(0, 1): f.one})
        if c == "w":
            self.take()
            if self.peek().isdigit():
                n = self.integer()
                if self.f.root_order % n:
                    raise ValueError(f"w{n} not in field of root order {f.root_order}")
                return _P.const(f, f.omega_pow(f.root_order // n))
            return _P.const(f, f.omega)
        raise ValueError(f"unexpected character {c!r} at {self.i}")


def parse_scalar(f: FieldSpec, text) -> Cyc:
    if isinstance(text, int):
        return f.from_int(text)
    if "/" in text and all(ch.isdigit() or ch in "-/" for ch in text):
        return f.from_fraction(Fraction(text))
    p = _Parser(f, str(text)).parse()
    if set(p.m) - {(0, 0)}:
        raise ValueError(f"not a scalar: {text!r}")
    return p.m.get((0, 0), f.zero)


def parse_hompoly(f: FieldSpec, text: str, degree: int | None = None) -> HomPoly:
    p = _Parser(f, text).parse()
    if not p.m:
        if degree is None:
            raise ValueError("cannot infer degree of the zero polynomial")
        return HomPoly.zero(f, degree)
    degs = {i + j for (i, j) in p.m}
    if len(degs) != 1:
        raise ValueError(f"not homogeneous: {text!r}")
    d = degs.pop()
    if degree is not None and d != degree:
        raise ValueError(f"degree {d} != expected {degree}")
    coeffs = [f.zero] * (d + 1)
    for (i, _j), v in p.m.items():
        coeffs[i] = v
    return HomPoly(f, d, coeffs)
