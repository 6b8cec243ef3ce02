"""Molien series of the irreducible representations.

Three independent routes are implemented and cross-checked:

  * exact group averaging of chi(g) / det(1 - sigma(g^-1) t),
  * the closed-form numerators attached to the Dynkin labels,
  * a per-degree brute-force dimension count over all group elements.

Rational functions in t are held as (numerator, denominator) pairs of
Fraction coefficient lists; the presentation over the chosen primary
denominators (1-t^d1)(1-t^d2) is kept non-reduced on purpose.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import golden
from .groups import Rep, build_cover, build_irreps, dynkin_label_map, dynkin_structure

# -- Fraction polynomial helpers (ascending coefficients) -----------------------


def qp_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def qp_add(a, b):
    n = max(len(a), len(b))
    return qp_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                    for i in range(n)])


def qp_scale(a, c):
    return [x * c for x in a]


def qp_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return qp_trim(out)


def qp_divmod(a, b):
    a = list(a)
    b = qp_trim(b)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv = Fraction(1) / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return qp_trim(q), qp_trim(a)


def qp_div_exact(a, b):
    q, r = qp_divmod(a, b)
    if r != [0]:
        raise ValueError("inexact polynomial division")
    return q


def one_minus_t_pow(d):
    p = [Fraction(0)] * (d + 1)
    p[0] = Fraction(1)
    p[d] = Fraction(-1)
    return p


def geometric(step, count):
    """1 + t^step + ... + t^(step*(count-1)); zero polynomial for count 0."""
    if count <= 0:
        return [Fraction(0)]
    p = [Fraction(0)] * (step * (count - 1) + 1)
    for k in range(count):
        p[step * k] = Fraction(1)
    return p


def series_coeffs(num, den, order):
    """Taylor coefficients of num/den up to t^order (den[0] != 0)."""
    inv0 = Fraction(1) / den[0]
    out = []
    for k in range(order + 1):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc * inv0)
    return out


# -- Molien series by group averaging --------------------------------------------


@lru_cache(maxsize=None)
def molien_series(group: str, label: str):
    """Exact (num, den) Fraction polynomials of the Molien series."""
    cover = build_cover(group)
    rep = build_irreps(group)[label]
    chi = rep.character()
    f = cover.f
    # det(1 - sigma(g^-1) t) = 1 - tr(sigma(g^-1)) t + t^2 since det sigma = 1
    weight: dict = {}
    for i in range(cover.order):
        tau = cover.elements[cover.inverse[i]].tr()
        w = chi[cover.class_of[i]]
        if tau in weight:
            weight[tau] = weight[tau] + w
        else:
            weight[tau] = w
    taus = list(weight)
    quads = [[f.one, -tau, f.one] for tau in taus]
    num = [f.zero]
    for j, tau in enumerate(taus):
        term = [weight[tau]]
        for k, q in enumerate(quads):
            if k != j:
                term = _cp_mul(term, q, f)
        num = _cp_add(num, term, f)
    den = [f.one]
    for q in quads:
        den = _cp_mul(den, q, f)
    qnum = [c.rat() / cover.order for c in num]
    qden = [c.rat() for c in den]
    return qp_trim(qnum), qp_trim(qden)


def _cp_mul(a, b, f):
    out = [f.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x.is_zero():
            for j, y in enumerate(b):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
    return out


def _cp_add(a, b, f):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else f.zero) + (b[i] if i < len(b) else f.zero)
            for i in range(n)]


def primary_degrees(group: str):
    return tuple(golden.tables()["molien"]["primary_degrees"][group])


@lru_cache(maxsize=None)
def molien_numerator(group: str, label: str):
    """Numerator over (1-t^d1)(1-t^d2); raises if the remainder is nonzero."""
    num, den = molien_series(group, label)
    d1, d2 = primary_degrees(group)
    target = qp_mul(one_minus_t_pow(d1), one_minus_t_pow(d2))
    n = qp_div_exact(qp_mul(num, target), den)
    if any(x.denominator != 1 or x < 0 for x in n):
        raise ValueError("numerator is not a non-negative integer polynomial")
    return n


def numerator_exponents(group: str, label: str):
    """Exponents with multiplicity, e.g. [2, 4, 6, 6, 8, 10]."""
    n = molien_numerator(group, label)
    out = []
    for e, c in enumerate(n):
        out.extend([e] * int(c))
    return out


# -- closed forms ------------------------------------------------------------------


def closed_form_numerator(group: str, label: str):
    """Branch closed form for the numerator, over the same primary denominators."""
    branch, i = dynkin_label_map(group)[label]
    a, b, c = dynkin_structure(group)["abc"]
    if branch == "x":
        if not 0 <= i <= a - 1:
            raise ValueError("chain index out of range")
        n = [Fraction(0)] * (6 * a - 5)
        n[i] += 1
        n[6 * a - 6 - i] += 1
        tail = qp_mul(qp_add(_mono(2 * a - i), _mono(4 * a - 4 - i)), geometric(2, i))
        return qp_trim(qp_add(n, tail))
    bc = b if branch == "y" else c
    if not 0 <= i <= bc - 2:
        raise ValueError("branch index out of range")
    head = _mono(a + bc - i - 2)
    head = qp_mul(head, qp_add(_mono(0), _mono(2 * a - 2)))
    head = qp_mul(head, qp_div_exact(one_minus_t_pow(2 * a), one_minus_t_pow(2 * bc)))
    return qp_mul(head, geometric(2, i + 1))


def _mono(e):
    p = [Fraction(0)] * (e + 1)
    p[e] = Fraction(1)
    return p


# -- structural identities ----------------------------------------------------------


def stanley_check(group: str, label: str) -> dict:
    """Free-module count and degree-sum identities for one irreducible."""
    cover = build_cover(group)
    rep = build_irreps(group)[label]
    exps = numerator_exponents(group, label)
    d1, d2 = primary_degrees(group)
    k = len(exps)
    lhs1 = k * cover.order
    rhs1 = d1 * d2 * rep.dim
    lhs2 = Fraction(2, k) * sum(exps)
    rhs2 = d1 + d2 - 2
    return {
        "group": group, "irrep": label, "k": k, "exponents": exps,
        "count_identity": lhs1 == rhs1,
        "degree_identity": lhs2 == rhs2,
        "generator_count_is_2dim": k == 2 * rep.dim,
    }


# -- brute-force dimension oracle ----------------------------------------------------


@lru_cache(maxsize=None)
def _hom_sym_traces(group: str, max_deg: int):
    """h_d(eigenvalues of sigma(g)) for every element, d = 0..max_deg.

    Uses h_d = tr * h_(d-1) - h_(d-2) (valid since det sigma = 1), so no
    eigenvalue extraction is needed.
    """
    cover = build_cover(group)
    f = cover.f
    memo = {}
    out = []
    for i in range(cover.order):
        tau = cover.elements[i].tr()
        if tau not in memo:
            hs = [f.one, tau]
            for _ in range(2, max_deg + 1):
                hs.append(tau * hs[-1] - hs[-2])
            memo[tau] = hs[: max_deg + 1]
        out.append(memo[tau])
    return out


def invariant_dimension_bruteforce(group: str, label: str, degree: int) -> int:
    """dim (V (x) k_d[X,Y])^G by averaging over every group element."""
    cover = build_cover(group)
    rep = build_irreps(group)[label]
    chi = rep.character()
    hs = _hom_sym_traces(group, degree)
    f = cover.f
    acc = f.zero
    for i in range(cover.order):
        acc = acc + chi[cover.class_of[i]] * hs[cover.inverse[i]][degree]
    val = acc.rat() / cover.order
    if val.denominator != 1 or val < 0:
        raise ValueError("non-integral invariant dimension")
    return int(val)


def taylor_coefficients(group: str, label: str, order: int):
    num, den = molien_series(group, label)
    return series_coeffs(num, den, order)
