"""Dense exact linear algebra over a cyclotomic field.

Matrices are lists of lists of Cyc.  Pivoting is first-nonzero, so all
results are deterministic and reproducible.
"""

from __future__ import annotations

from .cyclotomic import Cyc, FieldSpec


def zeros(f: FieldSpec, m: int, n: int):
    return [[f.zero] * n for _ in range(m)]


def eye(f: FieldSpec, n: int):
    out = zeros(f, n, n)
    for i in range(n):
        out[i][i] = f.one
    return out


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    f = a[0][0].f
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            acc = f.zero
            for t in range(k):
                x = ai[t]
                if not x.is_zero():
                    acc = acc + x * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v):
    f = a[0][0].f
    out = []
    for row in a:
        acc = f.zero
        for x, y in zip(row, v):
            if not x.is_zero():
                acc = acc + x * y
        out.append(acc)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c: Cyc):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_is_zero(a) -> bool:
    return all(x.is_zero() for row in a for x in row)


def transpose(a):
    return [list(col) for col in zip(*a)]


def trace(a):
    acc = a[0][0]
    for i in range(1, len(a)):
        acc = acc + a[i][i]
    return acc


def mat_inv(a):
    """Inverse by Gauss-Jordan; raises on singular input."""
    n = len(a)
    f = a[0][0].f
    aug = [list(row) + list(e) for row, e in zip(a, eye(f, n))]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not aug[r][col].is_zero():
                piv = r
                break
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inv()
        aug[col] = [inv * x for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def det(a) -> Cyc:
    n = len(a)
    f = a[0][0].f
    m = [list(row) for row in a]
    sign = 1
    acc = f.one
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not m[r][col].is_zero():
                piv = r
                break
        if piv is None:
            return f.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        p = m[col][col]
        acc = acc * p
        inv = p.inv()
        for r in range(col + 1, n):
            if not m[r][col].is_zero():
                c = m[r][col] * inv
                m[r] = [x - c * y for x, y in zip(m[r], m[col])]
    return acc if sign == 1 else -acc


def rref(rows, ncols: int):
    """Reduced row echelon form.  Returns (reduced_rows, pivot_columns)."""
    m = [list(r) for r in rows if any(not x.is_zero() for x in r)]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if not m[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inv()
        m[r] = [inv * x for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][col].is_zero():
                c = m[i][col]
                m[i] = [x - c * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[0])


def kernel(rows, ncols: int, f: FieldSpec | None = None):
    """Basis of the right kernel of the matrix given by `rows`.

    Basis vectors are normalized with a leading 1 in each free column,
    listed in increasing free-column order.
    """
    red, pivots = rref(rows, ncols)
    if f is None:
        for r in rows:
            for x in r:
                f = x.f
                break
            if f:
                break
    if f is None:
        raise ValueError("cannot infer field from empty system")
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [f.zero] * ncols
        v[fc] = f.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(a_rows, rhs, ncols: int):
    """One solution x of A x = rhs, or None if inconsistent."""
    f = rhs[0].f
    aug = [list(r) + [b] for r, b in zip(a_rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [f.zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x
