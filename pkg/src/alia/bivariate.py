"""Homogeneous bivariate polynomial algebra over a cyclotomic field.

A HomPoly of degree d stores the coefficient of X^i Y^(d-i) at index i.
The group acts on polynomials by substitution, g.p(X,Y) = p(g^-1 (X,Y)),
and new (relative) invariants are produced with the transvectant.
"""

from __future__ import annotations

from math import comb

from .cyclotomic import Cyc, FieldSpec


class HomPoly:
    __slots__ = ("f", "deg", "c")

    def __init__(self, f: FieldSpec, deg: int, coeffs):
        coeffs = tuple(coeffs)
        assert len(coeffs) == deg + 1, "coefficient vector must have length deg+1"
        self.f = f
        self.deg = deg
        self.c = coeffs

    @staticmethod
    def zero(f: FieldSpec, deg: int) -> "HomPoly":
        return HomPoly(f, deg, (f.zero,) * (deg + 1))

    @staticmethod
    def monomial(f: FieldSpec, deg: int, i: int, coeff: Cyc | None = None) -> "HomPoly":
        c = [f.zero] * (deg + 1)
        c[i] = coeff if coeff is not None else f.one
        return HomPoly(f, deg, c)

    @staticmethod
    def linear(f: FieldSpec, x_coeff: Cyc, y_coeff: Cyc) -> "HomPoly":
        return HomPoly(f, 1, (y_coeff, x_coeff))

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.c)

    def __eq__(self, o) -> bool:
        return isinstance(o, HomPoly) and self.deg == o.deg and self.c == o.c

    def __hash__(self):
        return hash((self.deg, self.c))

    def __add__(self, o: "HomPoly") -> "HomPoly":
        assert self.deg == o.deg, "degree mismatch"
        return HomPoly(self.f, self.deg, tuple(a + b for a, b in zip(self.c, o.c)))

    def __sub__(self, o: "HomPoly") -> "HomPoly":
        assert self.deg == o.deg, "degree mismatch"
        return HomPoly(self.f, self.deg, tuple(a - b for a, b in zip(self.c, o.c)))

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.f, self.deg, tuple(-a for a in self.c))

    def scale(self, k: Cyc) -> "HomPoly":
        return HomPoly(self.f, self.deg, tuple(k * a for a in self.c))

    def __mul__(self, o: "HomPoly") -> "HomPoly":
        f = self.f
        out = [f.zero] * (self.deg + o.deg + 1)
        for i, a in enumerate(self.c):
            if a.is_zero():
                continue
            for j, b in enumerate(o.c):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return HomPoly(f, self.deg + o.deg, out)

    def __pow__(self, k: int) -> "HomPoly":
        out = HomPoly.monomial(self.f, 0, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def dx(self) -> "HomPoly":
        # d/dX of sum c_i X^i Y^(d-i)
        f = self.f
        if self.deg == 0:
            return HomPoly.zero(f, 0)
        out = [f.zero] * self.deg
        for i in range(1, self.deg + 1):
            if not self.c[i].is_zero():
                out[i - 1] = self.c[i].scale(i)
        return HomPoly(f, self.deg - 1, out)

    def dy(self) -> "HomPoly":
        f = self.f
        if self.deg == 0:
            return HomPoly.zero(f, 0)
        out = [f.zero] * self.deg
        for i in range(self.deg):
            if not self.c[i].is_zero():
                out[i] = self.c[i].scale(self.deg - i)
        return HomPoly(f, self.deg - 1, out)

    def deriv(self, k: int, l: int) -> "HomPoly":
        p = self
        for _ in range(k):
            p = p.dx()
        for _ in range(l):
            p = p.dy()
        return p

    def eval(self, x: Cyc, y: Cyc) -> Cyc:
        """Exact evaluation at (x, y)."""
        f = self.f
        acc = f.zero
        xp = [f.one]
        yp = [f.one]
        for _ in range(self.deg):
            xp.append(xp[-1] * x)
            yp.append(yp[-1] * y)
        for i, a in enumerate(self.c):
            if not a.is_zero():
                acc = acc + a * xp[i] * yp[self.deg - i]
        return acc

    def eval_at_int(self, t: int) -> Cyc:
        """Exact evaluation at X = t, Y = 1 by Horner in X."""
        f = self.f
        acc = f.zero
        for a in reversed(self.c):
            acc = acc.scale(t) + a
        return acc

    def subst_linear(self, a: Cyc, b: Cyc, c: Cyc, d: Cyc) -> "HomPoly":
        """p(aX + bY, cX + dY), expanded exactly."""
        f = self.f
        n = self.deg
        lx = HomPoly(f, 1, (b, a))   # aX + bY
        ly = HomPoly(f, 1, (d, c))   # cX + dY
        # powers of the two linear forms
        px = [HomPoly.monomial(f, 0, 0)]
        py = [HomPoly.monomial(f, 0, 0)]
        for _ in range(n):
            px.append(px[-1] * lx)
            py.append(py[-1] * ly)
        out = HomPoly.zero(f, n) if n else HomPoly(f, 0, (self.c[0],))
        if n == 0:
            return out
        for i, coeff in enumerate(self.c):
            if not coeff.is_zero():
                out = out + (px[i] * py[n - i]).scale(coeff)
        return out

    def to_text(self) -> str:
        terms = []
        for i, a in enumerate(self.c):
            if a.is_zero():
                continue
            mono = []
            if i:
                mono.append("X" if i == 1 else f"X^{i}")
            if self.deg - i:
                j = self.deg - i
                mono.append("Y" if j == 1 else f"Y^{j}")
            head = "*".join(mono) if mono else "1"
            terms.append(f"({a.to_text().split(' (mod')[0]})*{head}")
        return " + ".join(terms) if terms else "0"


# -- 2x2 matrices over the field ------------------------------------------------


class Mat2:
    __slots__ = ("f", "a", "b", "c", "d")

    def __init__(self, a: Cyc, b: Cyc, c: Cyc, d: Cyc):
        self.f = a.f
        self.a, self.b, self.c, self.d = a, b, c, d

    @staticmethod
    def identity(f: FieldSpec) -> "Mat2":
        return Mat2(f.one, f.zero, f.zero, f.one)

    def __mul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> Cyc:
        return self.a * self.d - self.b * self.c

    def tr(self) -> Cyc:
        return self.a + self.d

    def inv(self) -> "Mat2":
        dt = self.det()
        if dt == self.f.one:
            return Mat2(self.d, -self.b, -self.c, self.a)
        k = dt.inv()
        return Mat2(k * self.d, -(k * self.b), -(k * self.c), k * self.a)

    def __eq__(self, o) -> bool:
        return (isinstance(o, Mat2) and self.a == o.a and self.b == o.b
                and self.c == o.c and self.d == o.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        strip = lambda x: x.to_text().split(" (mod")[0]
        return f"Mat2[[{strip(self.a)}, {strip(self.b)}], [{strip(self.c)}, {strip(self.d)}]]"

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]


def act(g: Mat2, p: HomPoly) -> HomPoly:
    """Left group action on polynomials: (g.p)(X,Y) = p(g^-1 (X,Y))."""
    assert g.f is p.f, "field spec mismatch"
    gi = g.inv()
    return p.subst_linear(gi.a, gi.b, gi.c, gi.d)


def act_many(g: Mat2, polys) -> list[HomPoly]:
    gi = g.inv()
    return [p.subst_linear(gi.a, gi.b, gi.c, gi.d) for p in polys]


def transvect(phi: HomPoly, psi: HomPoly, k: int) -> HomPoly:
    """k-th transvectant of two scalar forms (unnormalized classical sum)."""
    if k > min(phi.deg, psi.deg):
        raise ValueError("transvection order exceeds a degree")
    f = phi.f
    out = HomPoly.zero(f, phi.deg + psi.deg - 2 * k)
    for i in range(k + 1):
        term = phi.deriv(i, k - i) * psi.deriv(k - i, i)
        coeff = comb(k, i)
        if i % 2:
            coeff = -coeff
        out = out + term.scale(f.from_int(coeff))
    return out


def transvect_entrywise(phi: HomPoly, entries, k: int):
    """Transvectant of a scalar with a matrix/vector of forms, entry by entry.

    `entries` is a nested list of HomPoly; the scalar derivative pattern is
    shared across entries.
    """
    f = phi.f
    dphis = [phi.deriv(i, k - i) for i in range(k + 1)]

    def one(e: HomPoly) -> HomPoly:
        out = HomPoly.zero(f, phi.deg + e.deg - 2 * k)
        for i in range(k + 1):
            coeff = comb(k, i)
            if i % 2:
                coeff = -coeff
            out = out + (dphis[i] * e.deriv(k - i, i)).scale(f.from_int(coeff))
        return out

    if isinstance(entries[0], HomPoly):
        return [one(e) for e in entries]
    return [[one(e) for e in row] for row in entries]


def equivariance_check(g: Mat2, phi: HomPoly, psi: HomPoly, k: int) -> bool:
    """Transvection commutes with the group action."""
    lhs = act(g, transvect(phi, psi, k))
    rhs = transvect(act(g, phi), act(g, psi), k)
    return lhs == rhs


# -- dehomogenization -------------------------------------------------------------


def poly1_trim(p):
    while len(p) > 1 and p[-1].is_zero():
        p = p[:-1]
    return p


def poly1_divmod(a, b):
    f = a[0].f
    a = list(a)
    b = poly1_trim(list(b))
    if len(b) == 1 and b[0].is_zero():
        raise ZeroDivisionError
    q = [f.zero] * max(1, len(a) - len(b) + 1)
    inv = b[-1].inv()
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if not c.is_zero():
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] = a[i + j] - c * y
    return q, poly1_trim(a)


def poly1_gcd(a, b):
    a, b = poly1_trim(list(a)), poly1_trim(list(b))
    while not (len(b) == 1 and b[0].is_zero()):
        _, r = poly1_divmod(a, b)
        a, b = b, r
    if not a[-1].is_zero():
        inv = a[-1].inv()
        a = [inv * x for x in a]
    return a


def dehomogenize(p: HomPoly, q: HomPoly):
    """Return (num, den) univariate coefficient lists in s = X/Y, lowest terms."""
    if p.deg != q.deg:
        raise ValueError("degree mismatch")
    if q.is_zero():
        raise ValueError("zero denominator form")
    num = list(p.c)
    den = list(q.c)
    g = poly1_gcd(num, den)
    if len(g) > 1:
        num, _ = poly1_divmod(num, g)
        den, _ = poly1_divmod(den, g)
    num, den = poly1_trim(num), poly1_trim(den)
    if not den[-1].is_zero():
        inv = den[-1].inv()
        num = [inv * x for x in num]
        den = [inv * x for x in den]
    return num, den


# -- matrices of polynomials -------------------------------------------------------


def pmat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def pmat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def pmat_scale(a, k: Cyc):
    return [[x.scale(k) for x in row] for row in a]


def pmat_mul_poly(a, p: HomPoly):
    return [[x * p for x in row] for row in a]


def pmat_conj(tau_g, m, tau_g_inv):
    """tau(g) M tau(g)^-1 for a constant matrix tau(g) and HomPoly matrix M."""
    n = len(m)
    f = tau_g[0][0].f
    deg = m[0][0].deg

    def cell_mul(scalar: Cyc, p: HomPoly) -> HomPoly:
        return p.scale(scalar)

    tmp = [[HomPoly.zero(f, deg) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = HomPoly.zero(f, deg)
            for t in range(n):
                if not tau_g[i][t].is_zero() and not m[t][j].is_zero():
                    acc = acc + cell_mul(tau_g[i][t], m[t][j])
            tmp[i][j] = acc
    out = [[HomPoly.zero(f, deg) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = HomPoly.zero(f, deg)
            for t in range(n):
                if not tau_g_inv[t][j].is_zero() and not tmp[i][t].is_zero():
                    acc = acc + cell_mul(tau_g_inv[t][j], tmp[i][t])
            out[i][j] = acc
    return out


def pmat_act(g: Mat2, tau_g, tau_g_inv, m):
    """Full action on sl(V) (x) k[X,Y]: conjugate entries and substitute."""
    conj = pmat_conj(tau_g, m, tau_g_inv)
    gi = g.inv()
    return [[p.subst_linear(gi.a, gi.b, gi.c, gi.d) for p in row] for row in conj]


def pmat_trace(m) -> HomPoly:
    acc = m[0][0]
    for i in range(1, len(m)):
        acc = acc + m[i][i]
    return acc


def poly_content_scale(polys):
    """Rational making the integer coefficients of a family coprime."""
    from fractions import Fraction
    from math import gcd
    num_gcd = 0
    den_lcm = 1
    for p in polys:
        for c in p.c:
            for x in c.c:
                if x:
                    num_gcd = gcd(num_gcd, abs(x))
            den_lcm = den_lcm * c.d // gcd(den_lcm, c.d)
    if num_gcd == 0:
        return Fraction(1)
    return Fraction(den_lcm, num_gcd)


def pvec_primitive(vec):
    s = poly_content_scale(vec)
    if s == 1:
        return list(vec)
    k = vec[0].f.from_fraction(s)
    return [p.scale(k) for p in vec]


def pmat_primitive(mat):
    s = poly_content_scale([p for row in mat for p in row])
    if s == 1:
        return [list(row) for row in mat]
    k = mat[0][0].f.from_fraction(s)
    return [[p.scale(k) for p in row] for row in mat]
