"""Exact arithmetic over Q and the three cyclotomic fields used by the pipeline.

Each symmetry group works over a fixed extension of Q by a root of unity w:

    T:  Q[w3],  w3^2 + w3 + 1 = 0
    O:  Q[w24], w24^8 - w24^4 + 1 = 0
    Y:  Q[w5],  w5^4 + w5^3 + w5^2 + w5 + 1 = 0

Elements are stored in the power basis modulo the minimal polynomial, as an
integer coefficient vector over a common positive denominator, always in
reduced canonical form.  Values are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class FieldSpec:
    """A cyclotomic field Q[w]/(min_poly), with precomputed reduction tables."""

    __slots__ = (
        "group", "root_order", "min_poly", "deg", "_pow", "key",
        "zero", "one", "omega", "_inv_cache",
    )

    def __init__(self, group: str, root_order: int, min_poly: tuple[int, ...]):
        self.group = group
        self.root_order = root_order
        self.min_poly = min_poly          # ascending, monic integer coefficients
        self.deg = len(min_poly) - 1
        self.key = (group, root_order)
        # w^m reduced to the power basis, for m = 0 .. 2*deg - 2 and m < root_order
        top = max(2 * self.deg - 1, root_order)
        pows: list[tuple[int, ...]] = []
        for m in range(top):
            if m < self.deg:
                row = [0] * self.deg
                row[m] = 1
            else:
                # w^m = w * w^(m-1), then substitute w^deg = -(lower part)
                prev = pows[m - 1]
                row = [0] + list(prev[:-1])
                lead = prev[-1]
                if lead:
                    for j in range(self.deg):
                        row[j] -= lead * min_poly[j]
            pows.append(tuple(row))
        self._pow = tuple(pows)
        self._inv_cache = {}
        self.zero = Cyc(self, (0,) * self.deg, 1)
        self.one = Cyc(self, (1,) + (0,) * (self.deg - 1), 1)
        om = [0] * self.deg
        om[1 % self.deg] = 1
        self.omega = Cyc(self, tuple(om), 1)

    def __repr__(self):
        return f"FieldSpec({self.group}, w{self.root_order})"

    def from_int(self, n: int) -> "Cyc":
        return Cyc(self, (n,) + (0,) * (self.deg - 1), 1)

    def from_fraction(self, q) -> "Cyc":
        q = Fraction(q)
        return Cyc(self, (q.numerator,) + (0,) * (self.deg - 1), q.denominator)

    def omega_pow(self, m: int) -> "Cyc":
        return Cyc(self, self._pow[m % self.root_order], 1)

    def min_poly_text(self) -> str:
        return _poly_text(self.min_poly)


def _poly_text(coeffs) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*w" if c != 1 else "w")
        else:
            terms.append(f"{c}*w^{i}" if c != 1 else f"w^{i}")
    return " + ".join(terms) if terms else "0"


class Cyc:
    """Element of a cyclotomic field: integer vector over a common denominator."""

    __slots__ = ("f", "c", "d")

    def __init__(self, f: FieldSpec, c: tuple[int, ...], d: int, _norm: bool = False):
        if _norm:
            if d < 0:
                d = -d
                c = tuple(-x for x in c)
            g = d
            for x in c:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g > 1:
                d //= g
                c = tuple(x // g for x in c)
        self.f = f
        self.c = c
        self.d = d

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def reduce(raw, spec: FieldSpec) -> "Cyc":
        """Reduce an integer/rational polynomial in w (ascending coeffs) mod min_poly."""
        acc = [Fraction(0)] * spec.deg
        for m, a in enumerate(raw):
            if not a:
                continue
            a = Fraction(a)
            row = spec._pow[m % spec.root_order] if m >= len(spec._pow) else spec._pow[m]
            for j, r in enumerate(row):
                if r:
                    acc[j] += a * r
        return Cyc.from_fractions(spec, acc)

    @staticmethod
    def from_fractions(spec: FieldSpec, fracs) -> "Cyc":
        den = 1
        fr = [Fraction(x) for x in fracs]
        for q in fr:
            den = den * q.denominator // gcd(den, q.denominator)
        nums = tuple(int(q * den) for q in fr)
        return Cyc(spec, nums, den, _norm=True)

    def to_fractions(self) -> list[Fraction]:
        return [Fraction(n, self.d) for n in self.c]

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def rat(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return Fraction(self.c[0], self.d)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, o: "Cyc") -> "Cyc":
        da, db = self.d, o.d
        if da == db:
            return Cyc(self.f, tuple(x + y for x, y in zip(self.c, o.c)), da, _norm=True)
        return Cyc(self.f, tuple(x * db + y * da for x, y in zip(self.c, o.c)),
                   da * db, _norm=True)

    def __sub__(self, o: "Cyc") -> "Cyc":
        da, db = self.d, o.d
        if da == db:
            return Cyc(self.f, tuple(x - y for x, y in zip(self.c, o.c)), da, _norm=True)
        return Cyc(self.f, tuple(x * db - y * da for x, y in zip(self.c, o.c)),
                   da * db, _norm=True)

    def __neg__(self) -> "Cyc":
        return Cyc(self.f, tuple(-x for x in self.c), self.d)

    def __mul__(self, o: "Cyc") -> "Cyc":
        f = self.f
        n = f.deg
        a, b = self.c, o.c
        conv = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = list(conv[:n])
        pows = f._pow
        for m in range(n, 2 * n - 1):
            cm = conv[m]
            if cm:
                row = pows[m]
                for j, r in enumerate(row):
                    if r:
                        out[j] += cm * r
        return Cyc(f, tuple(out), self.d * o.d, _norm=True)

    def scale(self, num: int, den: int = 1) -> "Cyc":
        return Cyc(self.f, tuple(num * x for x in self.c), self.d * den, _norm=True)

    def inv(self) -> "Cyc":
        """Multiplicative inverse via extended Euclid over Q[x] mod min_poly."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.is_rational():
            q = self.rat()
            return self.f.from_fraction(1 / q)
        key = (self.c, self.d)
        hit = self.f._inv_cache.get(key)
        if hit is not None:
            return hit
        a = [Fraction(n, self.d) for n in self.c]
        m = [Fraction(x) for x in self.f.min_poly]
        g, u = _ext_gcd_mod(a, m)
        # g is a nonzero constant; inverse is u / g
        inv = Cyc.from_fractions(self.f, [x / g for x in u])
        if len(self.f._inv_cache) < 4096:
            self.f._inv_cache[key] = inv
        return inv

    def __truediv__(self, o: "Cyc") -> "Cyc":
        return self * o.inv()

    def __pow__(self, k: int) -> "Cyc":
        if k < 0:
            return self.inv() ** (-k)
        out = self.f.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- Galois action -----------------------------------------------------------

    def galois(self, k: int) -> "Cyc":
        """Field automorphism w -> w^k, for gcd(k, root_order) = 1."""
        f = self.f
        if gcd(k, f.root_order) != 1:
            raise ValueError("not a unit exponent")
        acc = [0] * f.deg
        for i, a in enumerate(self.c):
            if a:
                row = f._pow[(i * k) % f.root_order]
                for j, r in enumerate(row):
                    if r:
                        acc[j] += a * r
        return Cyc(f, tuple(acc), self.d, _norm=True)

    def conj(self) -> "Cyc":
        """Complex conjugation w -> w^-1."""
        return self.galois(self.f.root_order - 1)

    def abs_sq(self) -> Fraction:
        """a * conj(a), demanded rational (raises otherwise)."""
        return (self * self.conj()).rat()

    def mult_order(self, bound: int = 120) -> int:
        """Multiplicative order, or raises if it exceeds the bound."""
        acc = self
        for k in range(1, bound + 1):
            if acc == self.f.one:
                return k
            acc = acc * self
        raise ValueError("order exceeds bound")

    # -- comparisons / misc ------------------------------------------------------

    def __eq__(self, o) -> bool:
        return isinstance(o, Cyc) and self.c == o.c and self.d == o.d

    def __hash__(self):
        return hash((self.c, self.d))

    def __repr__(self):
        return f"Cyc({self.to_text()!r})"

    def to_text(self) -> str:
        """Canonical text form `c0 + c1*w + ... (mod <min_poly>)`, rationals as p/q."""
        parts = []
        for i, n in enumerate(self.c):
            val = str(n) if self.d == 1 else f"{n}/{self.d}"
            if i == 0:
                parts.append(val)
            elif i == 1:
                parts.append(f"{val}*w")
            else:
                parts.append(f"{val}*w^{i}")
        return " + ".join(parts) + f" (mod {self.f.min_poly_text()})"

    def complex(self) -> complex:
        """Float embedding w -> exp(2*pi*i/n).  Diagnostics only."""
        import cmath
        w = cmath.exp(2j * cmath.pi / self.f.root_order)
        return sum(n * w ** i for i, n in enumerate(self.c)) / self.d


def _ext_gcd_mod(a: list[Fraction], m: list[Fraction]):
    """Return (g, u) with u*a = g (a nonzero rational) modulo the monic poly m."""
    r0, r1 = m[:], a[:]
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while True:
        r1 = _trim(r1)
        if len(r1) == 1:
            return r1[0], s1
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_divmod(a, b):
    a = a[:]
    b = _trim(b)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return q, _trim(a)


T_FIELD = FieldSpec("T", 3, (1, 1, 1))
O_FIELD = FieldSpec("O", 24, (1, 0, 0, 0, -1, 0, 0, 0, 1))
Y_FIELD = FieldSpec("Y", 5, (1, 1, 1, 1, 1))

FIELDS = {"T": T_FIELD, "O": O_FIELD, "Y": Y_FIELD}


def parse_cyc(spec: FieldSpec, text: str, aliases: dict | None = None) -> Cyc:
    """Parse compact character-table notation: '.', '-2', 'A', '-*A', '/A', ...

    Aliases map symbol names to Cyc values; '.' is zero, 'nX' means n*X.
    """
    text = text.strip()
    if text == ".":
        return spec.zero
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:]
    num = ""
    while text and text[0].isdigit():
        num += text[0]
        text = text[1:]
    coef = int(num) if num else 1
    if text:
        if aliases is None or text not in aliases:
            raise ValueError(f"unknown symbol {text!r}")
        base = aliases[text]
    else:
        base = spec.one
    return base.scale(sign * coef)
