"""Invariant matrices in sl(V) (x) k[X,Y]: embedded ground forms, transvectant
chains up to the group order, multipliers, and localization at a pole orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import golden, linalg
from .bivariate import (HomPoly, pmat_mul_poly, pmat_primitive,
                        pmat_trace, transvect_entrywise)
from .groups import build_cover, build_irreps, sl_decomposition
from .invariants import (ij_context, matrix_ground_forms,
                         primary_secondary_invariants, zeta_exponent)


class ChainError(RuntimeError):
    pass


@dataclass
class HomogeneousGenerator:
    """One |G|-homogeneous invariant matrix: chain transvectant x multiplier."""
    name: str
    component: str
    copy_index: int
    matrix: list          # square HomPoly matrix, uniform entry degree |G|
    chain_degree: int     # degree before the multiplier


def group_order(group: str) -> int:
    return golden.tables()["classical_invariants"]["group_orders"][group]


@lru_cache(maxsize=None)
def invariant_matrix_chain(group: str, rep_label: str):
    """All |G|-homogeneous generators of the invariant matrices of sl(V).

    Components and chain recipes follow the baked-in tables; for components
    of multiplicity m, each recipe is applied to each embedded copy.
    Returns a list of HomogeneousGenerator of length dim(V)^2 - 1.
    """
    cover = build_cover(group)
    rep = build_irreps(group)[rep_label]
    order = group_order(group)
    decomp = sl_decomposition(group, rep_label)
    chains = golden.recipes()["matrix_chains"][group]
    grounds = golden.recipes()["matrix_ground_degrees"][group]
    prim = primary_secondary_invariants(group)
    out = []
    for comp, mult in sorted(decomp.items()):
        rows = chains[comp]
        gdeg = grounds[comp]
        copies = [pmat_primitive(c)
                  for c in matrix_ground_forms(group, rep_label, comp, gdeg)]
        if len(copies) != mult:
            raise ChainError(f"{rep_label}/{comp}: expected {mult} embeddings, "
                             f"got {len(copies)}")
        for ci, ground in enumerate(copies):
            named = {"A": ground}
            for row in rows:
                if "inv" in row:
                    src = named[row["src"]]
                    mat = transvect_entrywise(prim[row["inv"]], src, row["k"])
                else:
                    mat = named[row["src"]]
                named[row["name"]] = mat
                deg = mat[0][0].deg
                if deg != row["deg"]:
                    raise ChainError(f"{row['name']}: degree {deg} != {row['deg']}")
                if all(p.is_zero() for r2 in mat for p in r2):
                    raise ChainError(f"{row['name']}: listed transvectant vanished")
                mult_poly = None
                ea, eb = row["mult"]
                for inv_name, e in (("abar", ea), ("bbar", eb)):
                    for _ in range(e):
                        mult_poly = (prim[inv_name] if mult_poly is None
                                     else mult_poly * prim[inv_name])
                hom = mat if mult_poly is None else pmat_mul_poly(mat, mult_poly)
                if hom[0][0].deg != order:
                    raise ChainError(f"{row['name']}: homogenized degree "
                                     f"{hom[0][0].deg} != {order}")
                if not pmat_trace(hom).is_zero():
                    raise ChainError(f"{row['name']}: trace is nonzero")
                suffix = f"#{ci + 1}" if mult > 1 else ""
                out.append(HomogeneousGenerator(
                    name=row["name"] + suffix, component=comp, copy_index=ci,
                    matrix=pmat_primitive(hom), chain_degree=row["deg"]))
    n = rep.dim
    if len(out) != n * n - 1:
        raise ChainError(f"{rep_label}: {len(out)} generators != {n * n - 1}")
    return out


def trivial_line(group: str):
    """The excluded scalar generator: identity times a degree-|G| invariant."""
    prim = primary_secondary_invariants(group)
    row = golden.recipes()["matrix_chains"][group][group[0] + "1"][0]
    ea, eb = row["mult"]
    poly = None
    for inv_name, e in (("abar", ea), ("bbar", eb)):
        for _ in range(e):
            poly = prim[inv_name] if poly is None else poly * prim[inv_name]
    return poly


@dataclass
class LocalizedGenerator:
    """A homogeneous generator divided by zeta^nu (zero-homogeneous quotient)."""
    name: str
    component: str
    copy_index: int
    numerator: list       # HomPoly matrix of degree |G|
    pole: str

    def round_trip(self, group: str, original) -> bool:
        """quotient * zeta^nu == original, checked entrywise exactly."""
        ctx = ij_context(group, self.pole)
        one = ctx.pole_pol
        return all(p * one == q * one for row_n, row_o in
                   zip(self.numerator, original) for p, q in zip(row_n, row_o))


def localize(group: str, rep_label: str, pole: str):
    """Zero-homogeneous minimal generating set at the chosen pole orbit."""
    gens = invariant_matrix_chain(group, rep_label)
    return [LocalizedGenerator(g.name, g.component, g.copy_index, g.matrix, pole)
            for g in gens]


def scalar_line_localized(group: str, pole: str):
    """The identity-multiple line as a polynomial in I (excluded from sl)."""
    ctx = ij_context(group, pole)
    return ctx.reduce_quotient(trivial_line(group), 1)


def independence_check(group: str, rep_label: str, gens=None,
                       sample_points=(2, 3, 5, 7, -2)) -> bool:
    """Exact rank certificate: full flattened rank at one sample point
    certifies linear independence over the function field."""
    if gens is None:
        gens = invariant_matrix_chain(group, rep_label)
    if not gens:
        return True
    f = build_cover(group).f
    n = len(gens[0].matrix)
    want = len(gens)
    for t in sample_points:
        rows = []
        for g in gens:
            rows.append([p.eval_at_int(t) for row in g.matrix for p in row])
        if linalg.rank(rows, n * n) == want:
            return True
    return _symbolic_rank(group, gens) == want


def _symbolic_rank(group: str, gens) -> int:
    """Fallback exact rank over k(lambda) via many-point evaluation.

    The rank over the function field is the maximum over sample points; the
    maximum is attained outside finitely many points, so scanning degree+1
    points is conclusive.
    """
    f = build_cover(group).f
    n = len(gens[0].matrix)
    deg = max(p.deg for g in gens for row in g.matrix for p in row)
    best = 0
    for t in range(deg + 2):
        rows = [[p.eval_at_int(t) for row in g.matrix for p in row] for g in gens]
        best = max(best, linalg.rank(rows, n * n))
        if best == len(gens):
            break
    return best


def span_dimension_predicted(group: str, rep_label: str) -> int:
    """Molien-predicted dimension of the degree-|G| invariant space of sl(V)."""
    from .molien import taylor_coefficients
    order = group_order(group)
    total = 0
    for comp, mult in sl_decomposition(group, rep_label).items():
        total += mult * int(taylor_coefficients(group, comp, order)[order])
    return total
