"""Binary polyhedral matrix groups, their irreducible representations and
character data.

The three covers are closed out of the concrete 2x2 generator matrices.  The
printed generator pair does not itself satisfy the abstract presentation
r^d = (r^-1 s)^3 = s^2 = -id, so after closing the matrix group a canonical
presentation pair is located by search and everything downstream (words,
classes, representations) is expressed through that pair.

Irreducible representations are built constructively: symmetric powers of the
natural representation, twists by one-dimensional characters, one character
projection split (octahedral case) and Galois twists (icosahedral case).
Labels are attached by matching computed characters against the baked-in
tables.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import golden, linalg
from .bivariate import HomPoly, Mat2, act
from .cyclotomic import FIELDS, Cyc, FieldSpec, parse_cyc
from .parse import parse_scalar

EXPECTED_ORDER = {"T": 24, "O": 48, "Y": 120}
D_G = {"T": 3, "O": 4, "Y": 5}


def _seed_generators(f: FieldSpec):
    """The concrete natural-representation generator matrices, per group."""
    if f.group == "T":
        w = f.omega
        one = f.one
        r = Mat2(-one - w, f.zero, one, w)
        s = Mat2(-w, one + w, one + w, w)
    elif f.group == "O":
        w8 = f.omega ** 3
        one = f.one
        r = Mat2(w8 ** 2, -one, w8 + w8 ** 3, -w8 - w8 ** 2 + w8 ** 3)
        s = Mat2(one, -w8 + w8 ** 2 + w8 ** 3, w8 + w8 ** 2 - w8 ** 3,
                 f.from_int(-2))
    else:
        w = f.omega
        one = f.one
        r = Mat2(w, -(w ** 2) - w ** 3, f.zero, w ** 4)
        s = Mat2(-(w ** 2), w ** 4, -one - w, w ** 2)
    return r, s


class CoverError(RuntimeError):
    pass


class SchurCover:
    """Closed matrix group with words, classes and lookup tables."""

    def __init__(self, f: FieldSpec):
        self.f = f
        self.group = f.group
        self.d_g = D_G[f.group]
        self.order = EXPECTED_ORDER[f.group]
        seed_r, seed_s = _seed_generators(f)
        pool = self._close([seed_r, seed_s])
        if len(pool) != self.order:
            raise CoverError(f"closure has order {len(pool)}, expected {self.order}")
        self.gen_r, self.gen_s = self._presentation_pair(pool)
        # rebuild breadth-first from the canonical pair so words use (r, s)
        self.elements: list[Mat2] = []
        self.words: list[tuple[int, ...]] = []
        self.parent: list[tuple[int, int]] = []
        self.index: dict[Mat2, int] = {}
        self._bfs()
        self.inverse = [self.index[e.inv()] for e in self.elements]
        self.square = [self.index[e * e] for e in self.elements]
        self.classes = self._conjugacy_classes()
        self.class_of = [0] * self.order
        for ci, cl in enumerate(self.classes):
            for i in cl:
                self.class_of[i] = ci
        self.class_reps = [cl[0] for cl in self.classes]
        self._verify()

    # -- construction ---------------------------------------------------------

    def _close(self, gens):
        seen = {Mat2.identity(self.f)}
        frontier = [Mat2.identity(self.f)]
        cap = 2 * self.order
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    p = e * g
                    if p not in seen:
                        seen.add(p)
                        nxt.append(p)
                        if len(seen) > cap:
                            raise CoverError("closure exceeds expected order")
            frontier = nxt
        return seen

    def _presentation_pair(self, pool):
        f = self.f
        neg_id = Mat2(-f.one, f.zero, f.zero, -f.one)
        elems = sorted(pool, key=lambda m: (m.a.c, m.a.d, m.b.c, m.b.d,
                                            m.c.c, m.c.d, m.d.c, m.d.d))
        seed_r, seed_s = _seed_generators(f)
        r_first = [m for m in (-seed_r, seed_r) if m in pool]
        s_first = [m for m in (seed_s, -seed_s) if m in pool]

        def r_ok(m):
            p = Mat2.identity(f)
            for _ in range(self.d_g):
                p = p * m
            return p == neg_id

        def s_ok(m):
            return m * m == neg_id

        def pair_ok(r, s):
            t = r.inv() * s
            return t * t * t == neg_id and self._generates(r, s)

        r_cands = r_first + [m for m in elems if r_ok(m)]
        s_cands = s_first + [m for m in elems if s_ok(m)]
        for r in r_cands:
            if not r_ok(r):
                continue
            for s in s_cands:
                if s_ok(s) and pair_ok(r, s):
                    return r, s
        raise CoverError("no presentation pair found")

    def _generates(self, r, s) -> bool:
        return len(self._close([r, s])) == self.order

    def _bfs(self):
        ident = Mat2.identity(self.f)
        self.elements = [ident]
        self.words = [()]
        self.parent = [(-1, -1)]
        self.index = {ident: 0}
        gens = (self.gen_r, self.gen_s)
        head = 0
        while head < len(self.elements):
            e = self.elements[head]
            for gi, g in enumerate(gens):
                p = e * g
                if p not in self.index:
                    self.index[p] = len(self.elements)
                    self.elements.append(p)
                    self.words.append(self.words[head] + (gi,))
                    self.parent.append((head, gi))
            head += 1

    def _conjugacy_classes(self):
        gens = (self.gen_r, self.gen_s)
        gen_invs = tuple(g.inv() for g in gens)
        classes = []
        seen = [False] * self.order
        for start in range(self.order):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            head = 0
            while head < len(orbit):
                x = self.elements[orbit[head]]
                for g, gi in zip(gens, gen_invs):
                    y = self.index[g * x * gi]
                    if not seen[y]:
                        seen[y] = True
                        orbit.append(y)
                head += 1
            classes.append(sorted(orbit))
        return classes

    def _verify(self):
        f = self.f
        neg_id = Mat2(-f.one, f.zero, f.zero, -f.one)
        p = Mat2.identity(f)
        for _ in range(self.d_g):
            p = p * self.gen_r
        if p != neg_id:
            raise CoverError("r^d != -id")
        if self.gen_s * self.gen_s != neg_id:
            raise CoverError("s^2 != -id")
        t = self.gen_r.inv() * self.gen_s
        if t * t * t != neg_id:
            raise CoverError("(r^-1 s)^3 != -id")
        one = f.one
        for e in self.elements:
            if e.det() != one:
                raise CoverError("element outside SL2")

    # -- lookups ---------------------------------------------------------------

    def word_element(self, word: str) -> int:
        """Index of the element spelled by a word over 'r' and 's'."""
        m = Mat2.identity(self.f)
        for ch in word:
            if ch == "r":
                m = m * self.gen_r
            elif ch == "s":
                m = m * self.gen_s
            else:
                raise ValueError(f"bad word character {ch!r}")
        return self.index[m]

    def element_order(self, i: int) -> int:
        m = self.elements[i]
        acc = m
        for k in range(1, 2 * self.order + 1):
            if acc == Mat2.identity(self.f):
                return k
            acc = acc * m
        raise CoverError("order overflow")

    def psl_order(self, i: int) -> int:
        """Order of the image in PSL2 (modulo the center)."""
        m = self.elements[i]
        acc = m
        for k in range(1, 2 * self.order + 1):
            if acc.b.is_zero() and acc.c.is_zero() and acc.a == acc.d:
                return k
            acc = acc * m
        raise CoverError("order overflow")

    def natural_traces(self):
        return [self.elements[self.class_reps[c]].tr()
                for c in range(len(self.classes))]


class Rep:
    """A matrix representation given by generator images (lists of lists)."""

    def __init__(self, cover: SchurCover, r_img, s_img, label: str | None = None):
        self.cover = cover
        self.f = cover.f
        self.r_img = r_img
        self.s_img = s_img
        self.dim = len(r_img)
        self.label = label
        self._images = None
        self._char = None

    def images(self):
        """Matrices for every group element, in cover BFS order."""
        if self._images is None:
            out = [linalg.eye(self.f, self.dim)]
            gens = (self.r_img, self.s_img)
            for i in range(1, self.cover.order):
                p, gi = self.cover.parent[i]
                out.append(linalg.mat_mul(out[p], gens[gi]))
            self._images = out
        return self._images

    def image(self, i: int):
        return self.images()[i]

    def character(self):
        if self._char is None:
            imgs = self.images()
            self._char = tuple(linalg.trace(imgs[rep])
                               for rep in self.cover.class_reps)
        return self._char

    def char_at(self, elem_idx: int) -> Cyc:
        return self.character()[self.cover.class_of[elem_idx]]

    def is_irreducible(self) -> bool:
        return char_norm(self.cover, self.character()) == 1

    def tensor(self, other: "Rep") -> "Rep":
        return Rep(self.cover, _kron(self.r_img, other.r_img),
                   _kron(self.s_img, other.s_img))

    def twist(self, one_dim: "Rep") -> "Rep":
        cr = one_dim.r_img[0][0]
        cs = one_dim.s_img[0][0]
        return Rep(self.cover, linalg.mat_scale(self.r_img, cr),
                   linalg.mat_scale(self.s_img, cs))

    def galois(self, k: int) -> "Rep":
        tw = lambda m: [[x.galois(k) for x in row] for row in m]
        return Rep(self.cover, tw(self.r_img), tw(self.s_img))

    def dual(self) -> "Rep":
        inv_t = lambda m: linalg.transpose(linalg.mat_inv(m))
        return Rep(self.cover, inv_t(self.r_img), inv_t(self.s_img))

    def det_values(self):
        return linalg.det(self.r_img), linalg.det(self.s_img)


def _kron(a, b):
    na, nb = len(a), len(b)
    out = []
    for i in range(na):
        for k in range(nb):
            row = []
            for j in range(na):
                for l in range(nb):
                    row.append(a[i][j] * b[k][l])
            out.append(row)
    return out


def trivial_rep(cover: SchurCover) -> Rep:
    return Rep(cover, [[cover.f.one]], [[cover.f.one]])


def one_dim_rep(cover: SchurCover, r_val: Cyc, s_val: Cyc) -> Rep:
    return Rep(cover, [[r_val]], [[s_val]])


def natural_rep(cover: SchurCover) -> Rep:
    return Rep(cover, cover.gen_r.rows(), cover.gen_s.rows())


def symmetric_power(cover: SchurCover, h: int) -> Rep:
    """Action on degree-h forms in the monomial basis X^i Y^(h-i)."""
    f = cover.f

    def mat_for(g: Mat2):
        cols = []
        for j in range(h + 1):
            img = act(g, HomPoly.monomial(f, h, j))
            cols.append(list(img.c))
        return [[cols[j][i] for j in range(h + 1)] for i in range(h + 1)]

    return Rep(cover, mat_for(cover.gen_r), mat_for(cover.gen_s))


# -- character machinery -------------------------------------------------------


def char_inner(cover: SchurCover, chi1, chi2) -> Fraction:
    """<chi1, chi2> = (1/|G|) sum |class| chi1 conj(chi2); must be rational."""
    f = cover.f
    acc = f.zero
    for c, cl in enumerate(cover.classes):
        term = chi1[c] * chi2[c].conj()
        acc = acc + term.scale(len(cl))
    return acc.rat() / cover.order


def char_norm(cover: SchurCover, chi) -> Fraction:
    return char_inner(cover, chi, chi)


def char_mul(chi1, chi2):
    return tuple(a * b for a, b in zip(chi1, chi2))


def sl_character(rep: Rep):
    """Character of sl(V) = V (x) V* minus the trivial summand."""
    one = rep.f.one
    return tuple(x * x.conj() - one for x in rep.character())


def decompose(cover: SchurCover, irreps: dict[str, Rep], chi) -> dict[str, int]:
    """Multiplicities of a character in the irreducible basis."""
    out = {}
    total = 0
    for label, rep in irreps.items():
        m = char_inner(cover, chi, rep.character())
        if m.denominator != 1 or m < 0:
            raise ValueError(f"non-integral multiplicity {m} at {label}")
        if m:
            out[label] = int(m)
            total += int(m) * rep.dim
    dim0 = chi[_identity_class(cover)].rat()
    if total != dim0:
        raise ValueError("decomposition dimensions do not add up")
    return out


def _identity_class(cover: SchurCover) -> int:
    return cover.class_of[0]


def fs_indicator(rep: Rep) -> int:
    """Frobenius-Schur indicator (1/|G|) sum chi(g^2)."""
    cover = rep.cover
    chi = rep.character()
    acc = rep.f.zero
    for i in range(cover.order):
        acc = acc + chi[cover.class_of[cover.square[i]]]
    val = acc.rat() / cover.order
    if val.denominator != 1:
        raise ValueError("non-integral indicator")
    return int(val)


def det_char_label(rep: Rep, irreps: dict[str, Rep]) -> str:
    """Label of the one-dimensional representation det(rho)."""
    dr, ds = rep.det_values()
    for label, cand in irreps.items():
        if cand.dim == 1 and cand.r_img[0][0] == dr and cand.s_img[0][0] == ds:
            return label
    raise ValueError("determinant character not found among irreducibles")


# -- isotypic projection split (used for the octahedral 2-dim block) ------------


def isotypic_complement(rep: Rep, known: Rep) -> Rep:
    """Restrict `rep` to the complement of the `known`-isotypic part."""
    cover = rep.cover
    f = rep.f
    chi = known.character()
    imgs = rep.images()
    n = rep.dim
    proj = linalg.zeros(f, n, n)
    for i in range(cover.order):
        c = chi[cover.class_of[i]].conj()
        if c.is_zero():
            continue
        proj = linalg.mat_add(proj, linalg.mat_scale(imgs[i], c))
    scale = f.from_fraction(Fraction(known.dim, cover.order))
    proj = linalg.mat_scale(proj, scale)
    # complement basis: column space of (1 - P)
    comp = linalg.mat_sub(linalg.eye(f, n), proj)
    cols = linalg.transpose(comp)
    red, _ = linalg.rref(cols, n)
    basis = [list(v) for v in red]          # rows span the complement
    bt = linalg.transpose(basis)            # n x k basis matrix

    def restrict(m):
        mb = linalg.mat_mul(m, bt)
        out_cols = []
        for j in range(len(basis)):
            col = [mb[i][j] for i in range(n)]
            x = linalg.solve(bt, col, len(basis))
            if x is None:
                raise ValueError("projection split produced a non-invariant basis")
            out_cols.append(x)
        return linalg.transpose(out_cols)

    return Rep(cover, restrict(rep.r_img), restrict(rep.s_img))


# -- irrep construction per group ------------------------------------------------


def _build_unlabeled(cover: SchurCover) -> list[Rep]:
    f = cover.f
    nat = natural_rep(cover)
    if cover.group == "T":
        w = f.omega
        t2 = one_dim_rep(cover, w, f.one)
        t3 = one_dim_rep(cover, w * w, f.one)
        return [trivial_rep(cover), t2, t3, nat, nat.twist(t3), nat.twist(t2),
                symmetric_power(cover, 2)]
    if cover.group == "O":
        sgn = one_dim_rep(cover, -f.one, -f.one)
        sym2 = symmetric_power(cover, 2)
        sym3 = symmetric_power(cover, 3)
        sym4 = symmetric_power(cover, 4)
        o6 = sym2.twist(sgn)
        o3 = isotypic_complement(sym4, o6)
        return [trivial_rep(cover), sgn, o3, nat, nat.twist(sgn), o6, sym2, sym3]
    # icosahedral: Galois twist w5 -> w5^2 supplies the second branch
    sym2 = symmetric_power(cover, 2)
    y3 = nat.galois(2)
    return [trivial_rep(cover), nat, y3, sym2.galois(2), sym2, nat.tensor(y3),
            symmetric_power(cover, 3), symmetric_power(cover, 4),
            symmetric_power(cover, 5)]


def table_aliases(f: FieldSpec, table: dict) -> dict[str, Cyc]:
    return {k: parse_scalar(f, v) for k, v in table["alias"].items()}


def parse_table_value(f: FieldSpec, text: str, aliases) -> Cyc:
    return parse_cyc(f, text, aliases)


def match_character_table(cover: SchurCover, reps: list[Rep]):
    """Match computed classes/irreps against the baked-in table.

    Returns (col_to_class, rep_to_row_label) or raises if no consistent
    assignment exists.  Column candidates are filtered by the natural-rep
    trace; remaining ambiguity is resolved by requiring the whole table to
    match row by row.
    """
    table = golden.tables()["character_tables"][cover.group]
    f = cover.f
    aliases = table_aliases(f, table)
    rows = table["rows"]
    ncols = len(table["class_words"])
    if ncols != len(cover.classes):
        raise ValueError("class count mismatch with table")
    nat_label = table["natural"]
    nat_row = next(r for r in rows if r["label"] == nat_label)
    nat_vals = [parse_table_value(f, v, aliases) for v in nat_row["values"]]
    nat_traces = cover.natural_traces()
    row_vals = {r["label"]: [parse_table_value(f, v, aliases) for v in r["values"]]
                for r in rows}
    row_dims = {r["label"]: r["dim"] for r in rows}
    nat_rep_idx = next(i for i, rep in enumerate(reps)
                       if rep.dim == 2 and rep.r_img == cover.gen_r.rows()
                       and rep.s_img == cover.gen_s.rows())

    candidates = [[c for c in range(ncols) if nat_traces[c] == nat_vals[col]]
                  for col in range(ncols)]
    chars = [rep.character() for rep in reps]

    def try_rows(col_to_class):
        label_of = {}
        used = set()
        for i, chi in enumerate(chars):
            hit = None
            for r in rows:
                lab = r["label"]
                if lab in used or row_dims[lab] != reps[i].dim:
                    continue
                if all(chi[col_to_class[c]] == row_vals[lab][c] for c in range(ncols)):
                    hit = lab
                    break
            if hit is None:
                return None
            if i == nat_rep_idx and hit != nat_label:
                return None
            label_of[i] = hit
            used.add(hit)
        return label_of

    def backtrack(col, assigned, used):
        if col == ncols:
            labels = try_rows(assigned)
            if labels is not None:
                return list(assigned), labels
            return None
        for c in candidates[col]:
            if c not in used:
                assigned.append(c)
                used.add(c)
                hit = backtrack(col + 1, assigned, used)
                if hit:
                    return hit
                assigned.pop()
                used.remove(c)
        return None

    hit = backtrack(0, [], set())
    if hit is None:
        raise ValueError(f"no consistent table match for {cover.group}")
    return hit


def verify_labeled_table(group: str):
    """Class assignment making every labeled irrep match its own table row.

    Returns (col_to_class, diffs); diffs is empty on full entrywise agreement
    (including determinant and indicator columns).
    """
    cover = build_cover(group)
    irreps = build_irreps(group)
    table = golden.tables()["character_tables"][group]
    f = cover.f
    aliases = table_aliases(f, table)
    rows = {r["label"]: r for r in table["rows"]}
    ncols = len(table["class_words"])
    nat_label = table["natural"]
    nat_vals = [parse_table_value(f, v, aliases)
                for v in rows[nat_label]["values"]]
    nat_traces = cover.natural_traces()
    candidates = [[c for c in range(ncols) if nat_traces[c] == nat_vals[col]]
                  for col in range(ncols)]
    chars = {lab: rep.character() for lab, rep in irreps.items()}
    parsed = {lab: [parse_table_value(f, v, aliases) for v in r["values"]]
              for lab, r in rows.items()}

    def full_match(col_to_class):
        return all(chars[lab][col_to_class[c]] == parsed[lab][c]
                   for lab in irreps for c in range(ncols))

    def backtrack(col, assigned, used):
        if col == ncols:
            return list(assigned) if full_match(assigned) else None
        for c in candidates[col]:
            if c not in used:
                assigned.append(c)
                used.add(c)
                hit = backtrack(col + 1, assigned, used)
                if hit:
                    return hit
                assigned.pop()
                used.remove(c)
        return None

    col_to_class = backtrack(0, [], set())
    if col_to_class is None:
        return None, ["no class assignment matches the labeled rows"]
    diffs = []
    for lab, rep in irreps.items():
        row = rows[lab]
        if fs_indicator(rep) != row["iota"]:
            diffs.append(f"{lab}: indicator mismatch")
        if det_char_label(rep, irreps) != row["det"]:
            diffs.append(f"{lab}: determinant character mismatch")
    return col_to_class, diffs


@lru_cache(maxsize=None)
def build_cover(group: str) -> SchurCover:
    return SchurCover(FIELDS[group])


@lru_cache(maxsize=None)
def build_irreps(group: str) -> dict[str, Rep]:
    """All irreducibles, keyed by their table labels, in table row order."""
    cover = build_cover(group)
    reps = _build_unlabeled(cover)
    for rep in reps:
        if not rep.is_irreducible():
            raise ValueError("constructed representation is not irreducible")
    _, labels = match_character_table(cover, reps)
    for i, rep in enumerate(reps):
        rep.label = labels[i]
    order = [r["label"] for r in golden.tables()["character_tables"][group]["rows"]]
    out = {lab: next(r for r in reps if r.label == lab) for lab in order}
    if group == "T":
        _fix_tetrahedral_convention(cover, out)
        out = {lab: out[lab] for lab in order}
    total = sum(r.dim ** 2 for r in out.values())
    if total != cover.order:
        raise ValueError("sum of squared dimensions mismatch")
    return out


def _fix_tetrahedral_convention(cover: SchurCover, irreps: dict[str, Rep]) -> None:
    """Pin the two cube characters so the ground form carries the first one.

    The table is symmetric under swapping the conjugate pair of cube
    characters (together with the two twisted 2-dim blocks); the convention
    is anchored to the ground form: the quartic relative-invariant line whose
    syzygy constants are rational carries the label T2.
    """
    from .bivariate import act

    f = cover.f
    for lab in ("T2", "T3"):
        rep = irreps[lab]
        chi_r, chi_s = rep.r_img[0][0], rep.s_img[0][0]
        line = _quartic_line(cover, chi_r, chi_s)
        lead = next(i for i, c in enumerate(line.c) if not c.is_zero())
        alpha = line.scale(line.c[lead].inv())
        from .bivariate import transvect
        beta = transvect(alpha, alpha, 2)
        gamma = transvect(alpha, beta, 1)
        pa, pb, pc = alpha ** 3, beta ** 3, gamma ** 2
        rows = [[pb.c[i], pc.c[i]] for i in range(pa.deg + 1)]
        rhs = [-pa.c[i] for i in range(pa.deg + 1)]
        sol = linalg.solve(rows, rhs, 2)
        if sol and sol[0].is_rational() and sol[1].is_rational():
            if lab == "T3":
                irreps["T2"], irreps["T3"] = irreps["T3"], irreps["T2"]
                irreps["T5"], irreps["T6"] = irreps["T6"], irreps["T5"]
                for name, rep2 in irreps.items():
                    rep2.label = name
            return
    raise ValueError("no rational-syzygy quartic line found")


def _quartic_line(cover: SchurCover, chi_r: Cyc, chi_s: Cyc):
    """The degree-4 relative-invariant line for a 1-dim character (dense solve)."""
    from .bivariate import HomPoly

    f = cover.f
    rep4 = symmetric_power(cover, 4)
    rows = []
    for mat, chi in ((rep4.r_img, chi_r), (rep4.s_img, chi_s)):
        for i in range(5):
            rows.append([mat[i][j] - (chi if i == j else f.zero) for j in range(5)])
    ker = linalg.kernel(rows, 5, f)
    if len(ker) != 1:
        raise ValueError("quartic relative line is not one-dimensional")
    return HomPoly(f, 4, ker[0])


def irrep(group: str, label: str) -> Rep:
    return build_irreps(group)[label]


def sl_decomposition(group: str, label: str) -> dict[str, int]:
    cover = build_cover(group)
    irreps = build_irreps(group)
    return decompose(cover, irreps, sl_character(irreps[label]))


# -- Dynkin diagram structure -----------------------------------------------------


def dynkin_adjacency(group: str) -> dict[str, dict[str, int]]:
    """Neighbors of each irrep: decomposition of natural (x) V."""
    cover = build_cover(group)
    irreps = build_irreps(group)
    nat = irreps[golden.tables()["character_tables"][group]["natural"]]
    out = {}
    for label, rep in irreps.items():
        prod = char_mul(nat.character(), rep.character())
        out[label] = decompose(cover, irreps, prod)
    return out


def dynkin_structure(group: str):
    """Walk the diagram: x-chain, branch point, two tail branches, (a, b, c)."""
    adj = dynkin_adjacency(group)
    irreps = build_irreps(group)
    trivial = next(l for l, r in irreps.items()
                   if all(v == r.f.one for v in r.character()))
    chain = [trivial]
    prev = None
    cur = trivial
    while True:
        nbrs = [l for l in adj[cur] if l != prev]
        if prev is None:
            nxt = nbrs[0] if len(nbrs) == 1 else None
        else:
            nxt = nbrs[0] if len(nbrs) == 1 else None
        if nxt is None:
            break
        prev, cur = cur, nxt
        chain.append(cur)
    branch_point = chain[-1]
    tails = []
    for start in sorted(adj[branch_point]):
        if start in chain:
            continue
        tail = [start]
        p, c = branch_point, start
        while True:
            nbrs = [l for l in adj[c] if l != p]
            if not nbrs:
                break
            p, c = c, nbrs[0]
            tail.append(c)
        tails.append(tail)
    if len(tails) != 2:
        raise ValueError("diagram does not have exactly two tail branches")
    tails.sort(key=len, reverse=True)
    a = len(chain)
    b = len(tails[0]) + 1
    c = len(tails[1]) + 1
    return {"chain": chain, "branch_y": list(reversed(tails[0])),
            "branch_z": list(reversed(tails[1])), "abc": (a, b, c)}


def dynkin_label_map(group: str) -> dict[str, tuple[str, int]]:
    """Map irrep label -> ('x'|'y'|'z', index) from the computed diagram."""
    s = dynkin_structure(group)
    out = {}
    for i, lab in enumerate(s["chain"]):
        out[lab] = ("x", i)
    for i, lab in enumerate(s["branch_y"]):
        out[lab] = ("y", i)
    for i, lab in enumerate(s["branch_z"]):
        out[lab] = ("z", i)
    return out
