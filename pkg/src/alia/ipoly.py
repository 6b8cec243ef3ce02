"""Dense polynomials in the zero-homogeneous invariant I over a cyclotomic field.

The canonical form of an automorphic-function coefficient uses powers of I
only; J enters through the substitution J = -1 - I.  A small amount of
fraction-free linear algebra over k[I] (Bareiss scheme) supports the solves
where growth control matters.
"""

from __future__ import annotations

from .cyclotomic import Cyc, FieldSpec


class IPoly:
    __slots__ = ("f", "c")

    def __init__(self, f: FieldSpec, coeffs):
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        self.f = f
        self.c = tuple(coeffs)

    @staticmethod
    def zero(f: FieldSpec) -> "IPoly":
        return IPoly(f, (f.zero,))

    @staticmethod
    def one(f: FieldSpec) -> "IPoly":
        return IPoly(f, (f.one,))

    @staticmethod
    def const(v: Cyc) -> "IPoly":
        return IPoly(v.f, (v,))

    @staticmethod
    def gen(f: FieldSpec) -> "IPoly":
        """The polynomial I."""
        return IPoly(f, (f.zero, f.one))

    @staticmethod
    def jgen(f: FieldSpec) -> "IPoly":
        """J = -1 - I."""
        return IPoly(f, (-f.one, -f.one))

    def is_zero(self) -> bool:
        return len(self.c) == 1 and self.c[0].is_zero()

    def deg(self) -> int:
        return len(self.c) - 1

    def is_const(self) -> bool:
        return len(self.c) == 1

    def __eq__(self, o) -> bool:
        return isinstance(o, IPoly) and self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, o: "IPoly") -> "IPoly":
        n = max(len(self.c), len(o.c))
        f = self.f
        return IPoly(f, [(self.c[i] if i < len(self.c) else f.zero)
                         + (o.c[i] if i < len(o.c) else f.zero) for i in range(n)])

    def __sub__(self, o: "IPoly") -> "IPoly":
        n = max(len(self.c), len(o.c))
        f = self.f
        return IPoly(f, [(self.c[i] if i < len(self.c) else f.zero)
                         - (o.c[i] if i < len(o.c) else f.zero) for i in range(n)])

    def __neg__(self) -> "IPoly":
        return IPoly(self.f, [-x for x in self.c])

    def __mul__(self, o: "IPoly") -> "IPoly":
        if self.is_zero() or o.is_zero():
            return IPoly.zero(self.f)
        out = [self.f.zero] * (len(self.c) + len(o.c) - 1)
        for i, x in enumerate(self.c):
            if not x.is_zero():
                for j, y in enumerate(o.c):
                    if not y.is_zero():
                        out[i + j] = out[i + j] + x * y
        return IPoly(self.f, out)

    def scale(self, k: Cyc) -> "IPoly":
        return IPoly(self.f, [k * x for x in self.c])

    def __pow__(self, k: int) -> "IPoly":
        out = IPoly.one(self.f)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, o: "IPoly"):
        if o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.f
        a = list(self.c)
        b = list(o.c)
        q = [f.zero] * max(1, len(a) - len(b) + 1)
        inv = b[-1].inv()
        for i in range(len(a) - len(b), -1, -1):
            c = a[i + len(b) - 1] * inv
            if not c.is_zero():
                q[i] = c
                for j, y in enumerate(b):
                    a[i + j] = a[i + j] - c * y
        return IPoly(f, q), IPoly(f, a)

    def div_exact(self, o: "IPoly") -> "IPoly":
        q, r = self.divmod(o)
        if not r.is_zero():
            raise ValueError("inexact division in k[I]")
        return q

    def divisible_by(self, o: "IPoly") -> bool:
        return self.divmod(o)[1].is_zero()

    def monic(self) -> "IPoly":
        if self.is_zero():
            return self
        inv = self.c[-1].inv()
        return self.scale(inv)

    def eval(self, x: Cyc) -> Cyc:
        acc = self.f.zero
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def eval_fraction(self, num: Cyc, den_inv: Cyc) -> Cyc:
        """Evaluate at num * den_inv (both field values)."""
        return self.eval(num * den_inv)

    def substitute(self, o: "IPoly") -> "IPoly":
        acc = IPoly.zero(self.f)
        for a in reversed(self.c):
            acc = acc * o + IPoly.const(a)
        return acc

    def to_text(self) -> str:
        strip = lambda x: x.to_text().split(" (mod")[0]
        terms = []
        for i, a in enumerate(self.c):
            if a.is_zero() and len(self.c) > 1:
                continue
            head = "" if i == 0 else ("*I" if i == 1 else f"*I^{i}")
            terms.append(f"({strip(a)}){head}")
        return " + ".join(terms) if terms else "0"

    def monomial_split(self):
        """Factor the polynomial as unit * I^a * J^b with a, b >= 0, or None.

        Used to normalize weight-vector coefficients; J = -1 - I.
        """
        if self.is_zero():
            return None
        p = self
        a = 0
        while p.c[0].is_zero():
            p = IPoly(self.f, p.c[1:])
            a += 1
        b = 0
        j = IPoly.jgen(self.f)
        while not p.is_const():
            q, r = p.divmod(j)
            if not r.is_zero():
                return None
            p = q
            b += 1
        return p.c[0], a, b


def ipoly_gcd(a: IPoly, b: IPoly) -> IPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def ipoly_gcd_many(polys) -> IPoly:
    it = iter(polys)
    g = next(it)
    for p in it:
        g = ipoly_gcd(g, p)
        if g.is_const() and not g.is_zero():
            return g.monic()
    return g.monic() if not g.is_zero() else g


def ipoly_ext_gcd(a: IPoly, b: IPoly):
    """(g, u, v) with u*a + v*b = g, g monic gcd."""
    f = a.f
    r0, r1 = a, b
    s0, s1 = IPoly.one(f), IPoly.zero(f)
    t0, t1 = IPoly.zero(f), IPoly.one(f)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.c[-1].inv()
    return r0.scale(lead), s0.scale(lead), t0.scale(lead)


# -- matrices over k[I] -------------------------------------------------------------


def imat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    f = a[0][0].f
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = IPoly.zero(f)
            for t in range(k):
                if not a[i][t].is_zero() and not b[t][j].is_zero():
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def imat_bracket(a, b):
    ab = imat_mul(a, b)
    ba = imat_mul(b, a)
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(ab, ba)]


def imat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def imat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def imat_scale(a, k: IPoly):
    return [[k * x for x in row] for row in a]


def imat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def imat_is_zero(a) -> bool:
    return all(x.is_zero() for row in a for x in row)


def imat_eval(a, x: Cyc):
    return [[p.eval(x) for p in row] for row in a]


def imat_eye(f: FieldSpec, n: int):
    return [[IPoly.one(f) if i == j else IPoly.zero(f) for j in range(n)]
            for i in range(n)]


def imat_zero(f: FieldSpec, n: int, m: int | None = None):
    m = n if m is None else m
    return [[IPoly.zero(f) for _ in range(m)] for _ in range(n)]


def bareiss_kernel(rows, ncols: int, f: FieldSpec):
    """Right kernel over the fraction field k(I), fraction-free elimination.

    Returns primitive k[I]-vectors (content removed), one per free column.
    """
    m = [list(r) for r in rows if any(not x.is_zero() for x in r)]
    if not m:
        ident = imat_eye(f, ncols)
        return [list(row) for row in ident]
    piv_rows = []
    piv_cols = []
    prev = IPoly.one(f)
    r = 0
    for col in range(ncols):
        piv = None
        best = None
        for i in range(r, len(m)):
            if not m[i][col].is_zero():
                d = m[i][col].deg()
                if best is None or d < best:
                    best, piv = d, i
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if all(x.is_zero() for x in m[i]):
                continue
            for j in range(ncols):
                if j == col:
                    continue
                num = m[r][col] * m[i][j] - m[i][col] * m[r][j]
                m[i][j] = num.div_exact(prev)
            m[i][col] = IPoly.zero(f)
        prev = m[r][col]
        piv_rows.append(r)
        piv_cols.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free:
        # back-substitute over k(I) keeping (num, den) pairs, then clear
        sol_num = [IPoly.zero(f) for _ in range(ncols)]
        sol_den = [IPoly.one(f) for _ in range(ncols)]
        sol_num[fc] = IPoly.one(f)
        for rr in range(len(piv_cols) - 1, -1, -1):
            pc = piv_cols[rr]
            acc_n = IPoly.zero(f)
            acc_d = IPoly.one(f)
            for j in range(pc + 1, ncols):
                a = m[rr][j]
                if a.is_zero() or sol_num[j].is_zero():
                    continue
                acc_n = acc_n * sol_den[j] + a * sol_num[j] * acc_d
                acc_d = acc_d * sol_den[j]
            sol_num[pc] = -acc_n
            sol_den[pc] = acc_d * m[rr][pc]
        # common denominator and content removal
        den = IPoly.one(f)
        for j in range(ncols):
            if not sol_num[j].is_zero():
                g = ipoly_gcd(den, sol_den[j])
                den = den * sol_den[j].div_exact(g)
        vec = []
        for j in range(ncols):
            if sol_num[j].is_zero():
                vec.append(IPoly.zero(f))
            else:
                vec.append(sol_num[j] * den.div_exact(sol_den[j]))
        nz = [v for v in vec if not v.is_zero()]
        g = ipoly_gcd_many(nz)
        if not g.is_const():
            vec = [v.div_exact(g) if not v.is_zero() else v for v in vec]
        lead = next(v for v in vec if not v.is_zero()).c[-1].inv()
        vec = [v.scale(lead) for v in vec]
        basis.append(vec)
    return basis
