"""Projection onto (relative) invariants, the classical ground forms, their
syzygy, and the zero-homogeneous automorphic functions I and J.

Projections solve the invariance conditions for the two group generators
exactly.  The action of the first generator is diagonalized first (its
eigenvalues are roots of unity inside the field), which shrinks the linear
system for the second generator by an order of magnitude.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import golden, linalg
from .bivariate import HomPoly, Mat2, act, transvect
from .cyclotomic import Cyc, FieldSpec
from .groups import Rep, build_cover, build_irreps, natural_rep
from .ipoly import IPoly
from .parse import parse_hompoly, parse_scalar

NU = {"alpha": None, "beta": 3, "gamma": 2}   # alpha exponent is d_G
ZETA_ORDER = ("alpha", "beta", "gamma")


class ProjectionError(RuntimeError):
    pass


class LocalizationError(RuntimeError):
    pass


# -- eigen machinery -----------------------------------------------------------


def unit_group_candidates(f: FieldSpec):
    """All roots of unity inside the field (powers of -w or w)."""
    gen = f.omega if f.root_order % 2 == 0 else -f.omega
    order = f.root_order if f.root_order % 2 == 0 else 2 * f.root_order
    out = []
    acc = f.one
    for _ in range(order):
        out.append(acc)
        acc = acc * gen
    return out


def eig_decompose(m, f: FieldSpec):
    """Full eigendecomposition with root-of-unity eigenvalues.

    Returns a list of (eigenvalue, vector) pairs spanning the space; raises
    if the matrix is not diagonalizable with eigenvalues in the field.
    """
    n = len(m)
    pairs = []
    for lam in unit_group_candidates(f):
        rows = [[m[i][j] - (lam if i == j else f.zero) for j in range(n)]
                for i in range(n)]
        for v in linalg.kernel(rows, n, f):
            pairs.append((lam, v))
        if len(pairs) == n:
            break
    if len(pairs) != n:
        raise ProjectionError("matrix is not split-diagonalizable over the field")
    return pairs


@lru_cache(maxsize=None)
def _poly_eigendata(group: str, d: int):
    """Eigenbasis of the first generator's action on degree-d forms.

    Built from eigen linear forms: products l1^i l2^(d-i) with eigenvalue
    mu1^i mu2^(d-i).
    """
    cover = build_cover(group)
    f = cover.f
    gi = cover.gen_r.inv()
    # left eigenrows of sigma(r^-1): u sigma(r^-1) = mu u
    mt = [[gi.a, gi.c], [gi.b, gi.d]]   # transpose
    pairs = eig_decompose(mt, f)
    (mu1, u1), (mu2, u2) = pairs
    l1 = HomPoly(f, 1, (u1[0], u1[1]))  # coeff of X at index 1
    l2 = HomPoly(f, 1, (u2[0], u2[1]))
    l1 = HomPoly(f, 1, (l1.c[1], l1.c[0]))
    l2 = HomPoly(f, 1, (l2.c[1], l2.c[0]))
    # sanity: act(r, l) = mu * l
    assert act(cover.gen_r, l1) == l1.scale(mu1)
    assert act(cover.gen_r, l2) == l2.scale(mu2)
    p1 = [HomPoly.monomial(f, 0, 0)]
    p2 = [HomPoly.monomial(f, 0, 0)]
    for _ in range(d):
        p1.append(p1[-1] * l1)
        p2.append(p2[-1] * l2)
    basis = []
    vals = []
    for i in range(d + 1):
        basis.append(p1[i] * p2[d - i])
        vals.append(mu1 ** i * mu2 ** (d - i))
    return basis, vals


@lru_cache(maxsize=None)
def _poly_s_transforms(group: str, d: int):
    """Images under the second generator of the degree-d eigenbasis."""
    cover = build_cover(group)
    f = cover.f
    # reuse powers of the transformed eigen linear forms
    b1, _ = _poly_eigendata(group, 1)
    t1 = act(cover.gen_s, b1[1])
    t2 = act(cover.gen_s, b1[0])
    p1 = [HomPoly.monomial(f, 0, 0)]
    p2 = [HomPoly.monomial(f, 0, 0)]
    for _ in range(d):
        p1.append(p1[-1] * t1)
        p2.append(p2[-1] * t2)
    return [p1[i] * p2[d - i] for i in range(d + 1)]


# -- scalar relative invariants ---------------------------------------------------


def relative_invariant_polys(group: str, d: int, chi_r: Cyc, chi_s: Cyc):
    """Basis of degree-d forms with act(g, p) = chi(g) p on both generators."""
    cover = build_cover(group)
    f = cover.f
    basis, vals = _poly_eigendata(group, d)
    s_imgs = _poly_s_transforms(group, d)
    sel = [i for i, v in enumerate(vals) if v == chi_r]
    if not sel:
        return []
    cols = []
    for i in sel:
        delta = s_imgs[i] - basis[i].scale(chi_s)
        cols.append(list(delta.c))
    rows = [[cols[j][i] for j in range(len(sel))] for i in range(d + 1)]
    ker = linalg.kernel(rows, len(sel), f)
    out = []
    for x in ker:
        p = HomPoly.zero(f, d)
        for c, i in zip(x, sel):
            if not c.is_zero():
                p = p + basis[i].scale(c)
        out.append(p)
    return out


# -- vector and matrix invariants ---------------------------------------------------


@lru_cache(maxsize=None)
def _rep_eigendata(group: str, label: str, dual: bool = False):
    """Eigenvectors of the first generator in an irrep (or its dual)."""
    rep = build_irreps(group)[label]
    f = rep.f
    m = rep.r_img
    if dual:
        m = linalg.transpose(linalg.mat_inv(m))
    return eig_decompose(m, f)


def invariant_poly_vectors(group: str, label: str, d: int):
    """Basis of (V (x) k_d[X,Y])^G as lists of HomPoly components."""
    rep = build_irreps(group)[label]
    cover = rep.cover
    f = rep.f
    n = rep.dim
    pairs = _rep_eigendata(group, label)
    pbasis, pvals = _poly_eigendata(group, d)
    s_imgs = _poly_s_transforms(group, d)
    s_mat = rep.s_img
    cand = [(w, i) for lam, w in pairs for i in range(d + 1)
            if (lam * pvals[i]) == f.one]
    ncoord = n * (d + 1)
    cols = []
    for w, i in cand:
        sw = linalg.mat_vec(s_mat, w)
        col = [f.zero] * ncoord
        for comp in range(n):
            if not sw[comp].is_zero():
                for e, cc in enumerate(s_imgs[i].c):
                    if not cc.is_zero():
                        col[comp * (d + 1) + e] = col[comp * (d + 1) + e] + sw[comp] * cc
            if not w[comp].is_zero():
                for e, cc in enumerate(pbasis[i].c):
                    if not cc.is_zero():
                        col[comp * (d + 1) + e] = col[comp * (d + 1) + e] - w[comp] * cc
        cols.append(col)
    if not cand:
        return []
    rows = [[cols[j][i] for j in range(len(cand))] for i in range(ncoord)]
    ker = linalg.kernel(rows, len(cand), f)
    out = []
    for x in ker:
        comps = [HomPoly.zero(f, d) for _ in range(n)]
        for c, (w, i) in zip(x, cand):
            if c.is_zero():
                continue
            scaled = pbasis[i].scale(c)
            for comp in range(n):
                if not w[comp].is_zero():
                    comps[comp] = comps[comp] + scaled.scale(w[comp])
        out.append(comps)
    return out


@lru_cache(maxsize=None)
def _sl_eigendata(group: str, label: str):
    """Eigen elements of the conjugation action of the first generator on sl(V).

    Returns (elements, eigenvalues): traceless matrices P E_ab P^-1 for a != b
    and P H_k P^-1, with eigenvalues d_a/d_b and 1.
    """
    rep = build_irreps(group)[label]
    f = rep.f
    n = rep.dim
    pairs = eig_decompose(rep.r_img, f)
    vals = [lam for lam, _ in pairs]
    p = linalg.transpose([v for _, v in pairs])
    pinv = linalg.mat_inv(p)
    elems = []
    eigs = []
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            m = [[p[i][a] * pinv[b][j] for j in range(n)] for i in range(n)]
            elems.append(m)
            eigs.append(vals[a] * vals[b].inv())
    for k in range(n - 1):
        m = [[p[i][k] * pinv[k][j] - p[i][k + 1] * pinv[k + 1][j] for j in range(n)]
             for i in range(n)]
        elems.append(m)
        eigs.append(f.one)
    return elems, eigs


def equivariant_matrix_maps(group: str, rep_label: str, comp_label: str):
    """Basis of (sl(V) (x) W*)^G: equivariant embeddings of W into sl(V).

    Each basis element is returned as a list over the W basis of n x n
    constant matrices.
    """
    irreps = build_irreps(group)
    rep = irreps[rep_label]
    comp = irreps[comp_label]
    f = rep.f
    n, w = rep.dim, comp.dim
    sl_elems, sl_eigs = _sl_eigendata(group, rep_label)
    dual_pairs = _rep_eigendata(group, comp_label, dual=True)
    cand = [(m, phi) for m, lam in zip(sl_elems, sl_eigs)
            for lam2, phi in dual_pairs if lam * lam2 == f.one]
    if not cand:
        return []
    s_m = rep.s_img
    s_mi = linalg.mat_inv(s_m)
    s_dual = linalg.transpose(linalg.mat_inv(comp.s_img))
    ncoord = n * n * w
    cols = []
    for m, phi in cand:
        tm = linalg.mat_mul(linalg.mat_mul(s_m, m), s_mi)
        tphi = linalg.mat_vec(s_dual, phi)
        col = []
        for i in range(n):
            for j in range(n):
                for t in range(w):
                    col.append(tm[i][j] * tphi[t] - m[i][j] * phi[t])
        cols.append(col)
    rows = [[cols[j][i] for j in range(len(cand))] for i in range(ncoord)]
    ker = linalg.kernel(rows, len(cand), f)
    out = []
    for x in ker:
        theta = [linalg.zeros(f, n, n) for _ in range(w)]
        for c, (m, phi) in zip(x, cand):
            if c.is_zero():
                continue
            for t in range(w):
                coeff = c * phi[t]
                if coeff.is_zero():
                    continue
                for i in range(n):
                    for j in range(n):
                        if not m[i][j].is_zero():
                            theta[t][i][j] = theta[t][i][j] + coeff * m[i][j]
        out.append(theta)
    return out


def matrix_ground_forms(group: str, rep_label: str, comp_label: str, d: int):
    """All embedded ground-form matrices of a component at degree d.

    One matrix per equivariant embedding (multiplicity many), each a dim(V)
    square of degree-d forms, traceless by construction.
    """
    thetas = equivariant_matrix_maps(group, rep_label, comp_label)
    etas = invariant_poly_vectors(group, comp_label, d)
    if len(etas) != 1:
        raise ProjectionError(
            f"expected a one-dimensional ground space, got {len(etas)}")
    eta = etas[0]
    rep = build_irreps(group)[rep_label]
    f = rep.f
    n = rep.dim
    out = []
    for theta in thetas:
        mat = [[HomPoly.zero(f, d) for _ in range(n)] for _ in range(n)]
        for t, p in enumerate(eta):
            if p.is_zero():
                continue
            th = theta[t]
            for i in range(n):
                for j in range(n):
                    if not th[i][j].is_zero():
                        mat[i][j] = mat[i][j] + p.scale(th[i][j])
        out.append(mat)
    return out


def fourier_project(group: str, w_label: str, v_label: str, d: int):
    """Isotypic invariant basis of (W (x) k_d[X,Y]) attached to component V.

    For W an irreducible label this is the plain invariant-vector space when
    V is trivial; for W = 'sl:<label>' the embedded matrix spaces are
    returned.
    """
    if w_label.startswith("sl:"):
        return matrix_ground_forms(group, w_label[3:], v_label, d)
    if v_label in (None, "", "trivial"):
        return invariant_poly_vectors(group, w_label, d)
    raise ValueError("unsupported projection request")


# -- classical relative invariants ---------------------------------------------------


def _scalar_character(cover, p: HomPoly):
    """Character values (on r, s) by which a form transforms; exact check."""
    out = []
    for g in (cover.gen_r, cover.gen_s):
        q = act(g, p)
        lead = next(i for i, c in enumerate(p.c) if not c.is_zero())
        ratio = q.c[lead] * p.c[lead].inv()
        if q != p.scale(ratio):
            raise ProjectionError("form is not a relative invariant")
        out.append(ratio)
    return out


def _one_dim_label(group: str, r_val: Cyc, s_val: Cyc) -> str:
    for label, rep in build_irreps(group).items():
        if rep.dim == 1 and rep.r_img[0][0] == r_val and rep.s_img[0][0] == s_val:
            return label
    raise ProjectionError("character does not match a one-dimensional irreducible")


ALPHA_CHAR = {"T": "T2", "O": "O2", "Y": "Y1"}


@lru_cache(maxsize=None)
def classical_invariants(group: str):
    """The three classical relative invariants, projection-normalized.

    alpha spans the relative-invariant line of the lowest-degree exceptional
    orbit, scaled so its first nonzero coefficient is 1; beta and gamma
    follow by transvection.  For the tetrahedral group this normalization
    reproduces the two reference syzygy constants exactly.
    """
    cover = build_cover(group)
    irreps = build_irreps(group)
    degs = golden.tables()["classical_invariants"]["degrees"][group]
    chi_rep = irreps[ALPHA_CHAR[group]]
    chi_r, chi_s = chi_rep.r_img[0][0], chi_rep.s_img[0][0]
    line = relative_invariant_polys(group, degs[0], chi_r, chi_s)
    if len(line) != 1:
        raise ProjectionError("ground-form line is not one-dimensional")
    alpha = line[0]
    lead = next(i for i, c in enumerate(alpha.c) if not c.is_zero())
    alpha = alpha.scale(alpha.c[lead].inv())
    beta = transvect(alpha, alpha, 2)
    gamma = transvect(alpha, beta, 1)
    if beta.deg != degs[1] or gamma.deg != degs[2]:
        raise ProjectionError("transvectant degrees do not match the table")
    if beta.is_zero() or gamma.is_zero():
        raise ProjectionError("vanishing transvectant; normalization lost")
    out = {}
    for name, p in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        chi_r, chi_s = _scalar_character(cover, p)
        label = _one_dim_label(group, chi_r, chi_s)
        out[name] = {"poly": p, "char": label, "chi_r": chi_r, "chi_s": chi_s}
    return out


@lru_cache(maxsize=None)
def primary_secondary_invariants(group: str):
    """The invariant triple (abar, bbar, gbar) used by all recipes."""
    ci = classical_invariants(group)
    a, b, g = ci["alpha"]["poly"], ci["beta"]["poly"], ci["gamma"]["poly"]
    if group == "T":
        return {"abar": g, "bbar": a * b, "gbar": a ** 3}
    if group == "O":
        return {"abar": b, "bbar": a * a, "gbar": a * g}
    return {"abar": a, "bbar": b, "gbar": g}


@lru_cache(maxsize=None)
def syzygy_coefficients(group: str):
    """(C_beta, C_gamma) with alpha^d + C_beta beta^3 + C_gamma gamma^2 = 0."""
    cover = build_cover(group)
    f = cover.f
    ci = classical_invariants(group)
    d_g = golden.tables()["classical_invariants"]["d_g"][group]
    pa = ci["alpha"]["poly"] ** d_g
    pb = ci["beta"]["poly"] ** 3
    pc = ci["gamma"]["poly"] ** 2
    rows = [[pb.c[i], pc.c[i]] for i in range(pa.deg + 1)]
    rhs = [-pa.c[i] for i in range(pa.deg + 1)]
    sol = linalg.solve(rows, rhs, 2)
    if sol is None:
        raise ProjectionError("no syzygy solution; basis drift")
    cb, cg = sol
    check = pa + pb.scale(cb) + pc.scale(cg)
    if not check.is_zero():
        raise ProjectionError("syzygy identity failed to verify")
    return cb, cg


def syzygy_for_pole(group: str, pole: str):
    """Coefficients {name: C} of the relation normalized to C[pole] = 1."""
    cb, cg = syzygy_coefficients(group)
    f = build_cover(group).f
    base = {"alpha": f.one, "beta": cb, "gamma": cg}
    inv = base[pole].inv()
    return {k: v * inv for k, v in base.items()}


def zeta_exponent(group: str, name: str) -> int:
    if name == "alpha":
        return golden.tables()["classical_invariants"]["d_g"][group]
    return NU[name]


def ij_assignment(group: str, pole: str):
    """Names carrying I and J for the chosen pole orbit.

    J goes with the relative invariant of the lowest stabilizer count; by
    the degree ordering this is always the later name in (alpha, beta,
    gamma).  Ties (equal counts) are flagged as a free choice.
    """
    others = [n for n in ZETA_ORDER if n != pole]
    i_name, j_name = others[0], others[1]
    degs = dict(zip(ZETA_ORDER,
                    golden.tables()["classical_invariants"]["degrees"][group]))
    tie = degs[i_name] == degs[j_name]
    return {"I": i_name, "J": j_name, "tie": tie}


class IJContext:
    """Automorphic functions I, J for one (group, pole) localization.

    I = C_I * zeta_I^nu_I / zeta^nu and J likewise; 1 + I + J = 0 holds
    identically after clearing zeta^nu, and quotients of invariants by powers
    of zeta^nu reduce to polynomials in I.
    """

    def __init__(self, group: str, pole: str):
        self.group = group
        self.pole = pole
        cover = build_cover(group)
        ci = classical_invariants(group)
        assign = ij_assignment(group, pole)
        coeffs = syzygy_for_pole(group, pole)
        i_name, j_name = assign["I"], assign["J"]
        self._setup(
            cover.f,
            golden.tables()["classical_invariants"]["group_orders"][group],
            ci[pole]["poly"] ** zeta_exponent(group, pole),
            ci[i_name]["poly"] ** zeta_exponent(group, i_name),
            ci[j_name]["poly"] ** zeta_exponent(group, j_name),
            coeffs[i_name], coeffs[j_name], i_name, j_name, assign["tie"])

    @classmethod
    def from_parts(cls, f, order, pole_pol, i_num, j_num, c_i, c_j,
                   i_name="I", j_name="J", pole="custom"):
        obj = cls.__new__(cls)
        obj.group = None
        obj.pole = pole
        obj._setup(f, order, pole_pol, i_num, j_num, c_i, c_j, i_name, j_name,
                   False)
        return obj

    def _setup(self, f, order, pole_pol, i_num, j_num, c_i, c_j,
               i_name, j_name, tie):
        self.f = f
        self.order = order
        self.pole_pol = pole_pol
        self.i_num = i_num
        self.j_num = j_num
        self.c_i = c_i
        self.c_j = c_j
        self.i_name = i_name
        self.j_name = j_name
        self.tie = tie
        rel = pole_pol + i_num.scale(c_i) + j_num.scale(c_j)
        if not rel.is_zero():
            raise LocalizationError("1 + I + J relation failed")
        self._basis_cache: dict = {}

    def quotient_basis(self, m: int):
        """Numerators of I^j over the cleared denominator zeta^(m nu)."""
        if m not in self._basis_cache:
            polys = []
            for j in range(m + 1):
                polys.append((self.i_num ** j) * (self.pole_pol ** (m - j)))
            self._basis_cache[m] = polys
        return self._basis_cache[m]

    def reduce_quotient(self, q: HomPoly, m: int) -> IPoly:
        """Express q / zeta^(m nu) as a polynomial in I; exact or error."""
        if q.deg != m * self.order:
            raise LocalizationError("quotient degree is not a multiple of |G|")
        basis = self.quotient_basis(m)
        rows = [[b.c[i] for b in basis] for i in range(q.deg + 1)]
        rhs = list(q.c)
        sol = linalg.solve(rows, rhs, m + 1)
        if sol is None:
            raise LocalizationError("entry is not in the localization")
        check = HomPoly.zero(self.f, q.deg)
        coeffs = []
        ci_pow = self.f.one
        for j, b in enumerate(sol):
            check = check + basis[j].scale(b)
            coeffs.append(b * ci_pow.inv())   # coeff_j = b_j / C_I^j
            ci_pow = ci_pow * self.c_i
        if check != q:
            raise LocalizationError("quotient reduction failed to verify")
        return IPoly(self.f, coeffs)

    def ij_product_in_i(self) -> IPoly:
        """I*J as an element of k[I]: -I - I^2."""
        f = self.f
        return IPoly(f, (f.zero, -f.one, -f.one))

    def i_lambda(self):
        from .bivariate import dehomogenize
        return dehomogenize(self.i_num.scale(self.c_i), self.pole_pol)


@lru_cache(maxsize=None)
def ij_context(group: str, pole: str) -> IJContext:
    return IJContext(group, pole)


# -- diagnostics -------------------------------------------------------------------


def _complex_roots(coeffs):
    """Durand-Kerner root finder for a univariate complex polynomial."""
    import cmath
    n = len(coeffs) - 1
    if n <= 0:
        return []
    lead = coeffs[-1]
    cs = [c / lead for c in coeffs]
    roots = [cmath.exp(2j * cmath.pi * k / n) * (0.4 + 0.9j) for k in range(n)]
    for _ in range(200):
        shift = 0.0
        new = []
        for i, r in enumerate(roots):
            val = 0j
            for c in reversed(cs):
                val = val * r + c
            den = 1.0 + 0j
            for j, s in enumerate(roots):
                if j != i:
                    den *= (r - s)
            delta = val / den
            shift = max(shift, abs(delta))
            new.append(r - delta)
        roots = new
        if shift < 1e-14:
            break
    return roots


def orbit_diagnostic(group: str, tol: float = 1e-9) -> bool:
    """Float-only check that the zero set of alpha is a single group orbit."""
    ci = classical_invariants(group)
    alpha = ci["alpha"]["poly"]
    cover = build_cover(group)
    coeffs = [c.complex() for c in alpha.c]
    while abs(coeffs[-1]) < 1e-12:
        coeffs.pop()
    roots = _complex_roots(coeffs)
    has_infinity = len(roots) < alpha.deg
    pts = [(r, 1.0 + 0j) for r in roots]
    if has_infinity:
        pts.append((1.0 + 0j, 0j))
    start = pts[0]
    orbit = set()
    frontier = [start]
    seen = [start]

    def close(p, q):
        px, py = p
        qx, qy = q
        cross = px * qy - py * qx
        return abs(cross) <= tol * max(1.0, abs(px), abs(py), abs(qx), abs(qy))

    gens = [cover.gen_r, cover.gen_s]
    while frontier:
        x, y = frontier.pop()
        for g in gens:
            a, b, c, d = (g.a.complex(), g.b.complex(), g.c.complex(), g.d.complex())
            q = (a * x + b * y, c * x + d * y)
            if not any(close(q, s) for s in seen):
                seen.append(q)
                frontier.append(q)
    if len(seen) != len(pts):
        return False
    return all(any(close(p, s) for s in seen) for p in pts)
