"""Structure-constant algebras, coalgebras, bialgebras and Hopf algebras.

Everything is presented by sparse structure tensors over exact cyclotomic
scalars and checked exhaustively over basis tuples; violations come back
as report entries with witnesses, never as silent errors.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .cyclotomic import CycScalar
from .linalg import (
    Mat, SVec, Subspace, Tensor3, Vec,
    ShapeMismatch, basis_vec, cone, czero, dot, kernel, kernel_from_sparse_rows,
    kron_index, sv_add_into, sv_from_dense, sv_scale, sv_to_dense, vec_eq, vec_is_zero, zeros,
)
from .reports import CheckReport


class NotABialgebra(ValueError):
    pass


class NotGroupAlgebra(ValueError):
    pass


class NotGroupLike(ValueError):
    pass


class AxiomViolation(ValueError):
    pass


class AlgebraSC:
    """Algebra by structure constants: e_i * e_j = sum_k mult[i,j,k] e_k."""

    def __init__(self, dim: int, mult: Tensor3, unit: Vec):
        if mult.shape != (dim, dim, dim):
            raise ShapeMismatch("multiplication tensor has wrong shape")
        if len(unit) != dim:
            raise ShapeMismatch("unit vector has wrong dimension")
        self.dim = dim
        self.mult = mult
        self.unit = list(unit)
        self._by_ij: dict[tuple[int, int], list[tuple[int, CycScalar]]] = {}
        for (i, j, k), c in mult.data.items():
            self._by_ij.setdefault((i, j), []).append((k, c))

    def unit_sv(self) -> SVec:
        return sv_from_dense(self.unit)

    def mul_basis(self, i: int, j: int) -> SVec:
        out: SVec = {}
        for k, c in self._by_ij.get((i, j), ()):
            out[k] = c
        return out

    def mul_sv(self, a: SVec, b: SVec) -> SVec:
        out: SVec = {}
        by_ij = self._by_ij
        for i, ca in a.items():
            for j, cb in b.items():
                terms = by_ij.get((i, j))
                if not terms:
                    continue
                c = ca * cb
                for k, w in terms:
                    cur = out.get(k)
                    new = c * w if cur is None else cur + c * w
                    if new:
                        out[k] = new
                    elif cur is not None:
                        del out[k]
        return out

    def mul_vec(self, a: Vec, b: Vec) -> Vec:
        return sv_to_dense(self.mul_sv(sv_from_dense(a), sv_from_dense(b)), self.dim)

    def pow_sv(self, a: SVec, n: int) -> SVec:
        result = self.unit_sv()
        for _ in range(n):
            result = self.mul_sv(result, a)
        return result

    def left_mul_matrix(self, a: Vec) -> Mat:
        cols = [sv_to_dense(self.mul_sv(sv_from_dense(a), {j: cone()}), self.dim) for j in range(self.dim)]
        return Mat.from_cols(cols)


class CoalgebraSC:
    """Coalgebra by structure constants: Delta(e_k) = sum comult[k,i,j] e_i (x) e_j."""

    def __init__(self, dim: int, comult: Tensor3, counit: Vec):
        if comult.shape != (dim, dim, dim):
            raise ShapeMismatch("comultiplication tensor has wrong shape")
        if len(counit) != dim:
            raise ShapeMismatch("counit covector has wrong dimension")
        self.dim = dim
        self.comult = comult
        self.counit = list(counit)
        self._by_k: dict[int, dict[tuple[int, int], CycScalar]] = {}
        for (k, i, j), c in comult.data.items():
            self._by_k.setdefault(k, {})[(i, j)] = c

    def comult_basis(self, k: int) -> dict[tuple[int, int], CycScalar]:
        return self._by_k.get(k, {})

    def comult_sv(self, v: SVec) -> dict[tuple[int, int], CycScalar]:
        out: dict[tuple[int, int], CycScalar] = {}
        for k, c in v.items():
            for key, w in self._by_k.get(k, {}).items():
                cur = out.get(key)
                new = c * w if cur is None else cur + c * w
                if new:
                    out[key] = new
                elif cur is not None:
                    del out[key]
        return out

    def counit_sv(self, v: SVec) -> CycScalar:
        total = czero()
        for k, c in v.items():
            e = self.counit[k]
            if e:
                total = total + e * c
        return total

    def counit_vec(self, v: Vec) -> CycScalar:
        return dot(self.counit, v)


class BialgebraSC(AlgebraSC, CoalgebraSC):
    """Algebra + coalgebra on one carrier (compatibility checked on demand)."""

    def __init__(self, dim: int, mult: Tensor3, unit: Vec, comult: Tensor3, counit: Vec):
        AlgebraSC.__init__(self, dim, mult, unit)
        CoalgebraSC.__init__(self, dim, comult, counit)


class HopfSC(BialgebraSC):
    """Bialgebra with an antipode matrix plus declared extra data.

    Group-likes and characters are declared and verified, never enumerated;
    cosemisimplicity is an input flag, validated only for group algebras.
    """

    def __init__(self, dim: int, mult: Tensor3, unit: Vec, comult: Tensor3, counit: Vec,
                 antipode: Optional[Mat] = None, labels: Optional[list[str]] = None,
                 conductor: int = 1, group_likes: Optional[dict[str, Vec]] = None,
                 characters: Optional[dict[str, Vec]] = None,
                 finite_dim: bool = True, cosemisimple: bool = False):
        super().__init__(dim, mult, unit, comult, counit)
        if antipode is not None and (antipode.nrows != dim or antipode.ncols != dim):
            raise ShapeMismatch("antipode matrix has wrong shape")
        self.antipode = antipode
        self.labels = labels or [f"e{i}" for i in range(dim)]
        self.conductor = conductor
        self.group_likes = dict(group_likes or {})
        self.characters = dict(characters or {})
        self.finite_dim = finite_dim
        self.cosemisimple = cosemisimple

    def antipode_sv(self, v: SVec) -> SVec:
        if self.antipode is None:
            raise NotABialgebra("no antipode stored")
        return self.antipode.apply_sv(v)

    def label_index(self, label: str) -> int:
        return self.labels.index(label)


# -- axiom checkers ----------------------------------------------------------


def check_algebra(A: AlgebraSC) -> CheckReport:
    rep = CheckReport("algebra axioms")
    n = A.dim
    assoc = rep.add("associativity", True)
    for i in range(n):
        for j in range(n):
            ij = A.mul_basis(i, j)
            for k in range(n):
                lhs = A.mul_sv(ij, {k: cone()})
                rhs = A.mul_sv({i: cone()}, A.mul_basis(j, k))
                if lhs != rhs:
                    assoc.ok = False
                    if len(assoc.witnesses) < 8:
                        assoc.witnesses.append((i, j, k))
    unit = rep.add("two_sided_unit", True)
    u = A.unit_sv()
    for i in range(n):
        e = {i: cone()}
        if A.mul_sv(u, e) != e or A.mul_sv(e, u) != e:
            unit.ok = False
            unit.witnesses.append(i)
    return rep


def check_coalgebra(C: CoalgebraSC) -> CheckReport:
    rep = CheckReport("coalgebra axioms")
    n = C.dim
    coassoc = rep.add("coassociativity", True)
    for k in range(n):
        d = C.comult_basis(k)
        left: dict[tuple[int, int, int], CycScalar] = {}
        right: dict[tuple[int, int, int], CycScalar] = {}
        for (a, b), c in d.items():
            for (x, y), w in C.comult_basis(a).items():
                key = (x, y, b)
                cur = left.get(key)
                new = c * w if cur is None else cur + c * w
                if new:
                    left[key] = new
                elif cur is not None:
                    del left[key]
            for (x, y), w in C.comult_basis(b).items():
                key = (a, x, y)
                cur = right.get(key)
                new = c * w if cur is None else cur + c * w
                if new:
                    right[key] = new
                elif cur is not None:
                    del right[key]
        if set(left) != set(right) or any(left[kk] != right[kk] for kk in left):
            coassoc.ok = False
            coassoc.witnesses.append(k)
    counit = rep.add("counit", True)
    for k in range(n):
        lhs_l: SVec = {}
        lhs_r: SVec = {}
        for (a, b), c in C.comult_basis(k).items():
            e = C.counit[a]
            if e:
                sv_add_into(lhs_l, {b: e * c})
            e = C.counit[b]
            if e:
                sv_add_into(lhs_r, {a: e * c})
        if lhs_l != {k: cone()} or lhs_r != {k: cone()}:
            counit.ok = False
            counit.witnesses.append(k)
    return rep


def _comult_pair_product(B: BialgebraSC, da, db) -> dict[tuple[int, int], CycScalar]:
    """Product of two expanded coproducts inside B (x) B."""
    out: dict[tuple[int, int], CycScalar] = {}
    for (a1, a2), ca in da.items():
        for (b1, b2), cb in db.items():
            c = ca * cb
            left = B.mul_basis(a1, b1)
            if not left:
                continue
            right = B.mul_basis(a2, b2)
            if not right:
                continue
            for x, cx in left.items():
                cxc = cx * c
                for y, cy in right.items():
                    key = (x, y)
                    cur = out.get(key)
                    new = cxc * cy if cur is None else cur + cxc * cy
                    if new:
                        out[key] = new
                    elif cur is not None:
                        del out[key]
    return out


def check_bialgebra(B: BialgebraSC) -> CheckReport:
    rep = CheckReport("bialgebra axioms")
    rep.merge(check_algebra(B))
    rep.merge(check_coalgebra(B))
    n = B.dim
    ent = rep.add("comult_is_algebra_map", True)
    for i in range(n):
        di = B.comult_basis(i)
        for j in range(n):
            lhs = B.comult_sv(B.mul_basis(i, j))
            rhs = _comult_pair_product(B, di, B.comult_basis(j))
            if set(lhs) != set(rhs) or any(lhs[k] != rhs[k] for k in lhs):
                ent.ok = False
                if len(ent.witnesses) < 8:
                    ent.witnesses.append((i, j))
    ent = rep.add("counit_is_algebra_map", True)
    for i in range(n):
        for j in range(n):
            lhs = B.counit_sv(B.mul_basis(i, j))
            rhs = B.counit[i] * B.counit[j]
            if lhs != rhs:
                ent.ok = False
                if len(ent.witnesses) < 8:
                    ent.witnesses.append((i, j))
    u = B.unit_sv()
    du = B.comult_sv(u)
    uu: dict[tuple[int, int], CycScalar] = {}
    for i, ci in u.items():
        for j, cj in u.items():
            v = ci * cj
            if v:
                uu[(i, j)] = v
    rep.add("comult_unit", du == uu)
    rep.add("counit_unit", B.counit_sv(u).is_one())
    return rep


def _antipode_axiom_entry(rep: CheckReport, B: BialgebraSC, S: Mat) -> None:
    n = B.dim
    u = B.unit_sv()
    left = rep.add("antipode_left", True)
    right = rep.add("antipode_right", True)
    for k in range(n):
        target = sv_scale(u, B.counit[k])
        lhs: SVec = {}
        rhs: SVec = {}
        for (i, j), c in B.comult_basis(k).items():
            sv_add_into(lhs, B.mul_sv(sv_scale(S.apply_sv({i: cone()}), c), {j: cone()}))
            sv_add_into(rhs, B.mul_sv({i: c}, S.apply_sv({j: cone()})))
        if lhs != target:
            left.ok = False
            left.witnesses.append(k)
        if rhs != target:
            right.ok = False
            right.witnesses.append(k)


def check_hopf(H: HopfSC) -> CheckReport:
    rep = CheckReport("Hopf algebra axioms")
    rep.merge(check_bialgebra(H))
    if H.antipode is None:
        rep.add("antipode_present", False, detail="no antipode stored")
        return rep
    rep.add("antipode_present", True)
    _antipode_axiom_entry(rep, H, H.antipode)
    return rep


# -- convolution and antipode solving ---------------------------------------


def convolution(f: Mat, g: Mat, C: CoalgebraSC, A: AlgebraSC) -> Mat:
    """Convolution product m_A (f (x) g) Delta_C of maps C -> A."""
    if f.ncols != C.dim or g.ncols != C.dim or f.nrows != A.dim or g.nrows != A.dim:
        raise ShapeMismatch("convolution shape mismatch")
    cols = []
    for k in range(C.dim):
        acc: SVec = {}
        for (i, j), c in C.comult_basis(k).items():
            fi = f.apply_sv({i: cone()})
            gj = g.apply_sv({j: cone()})
            sv_add_into(acc, A.mul_sv(sv_scale(fi, c), gj))
        cols.append(sv_to_dense(acc, A.dim))
    return Mat.from_cols(cols)


def unit_counit_map(B: BialgebraSC) -> Mat:
    return Mat.from_cols([[B.counit[k] * B.unit[i] for i in range(B.dim)] for k in range(B.dim)])


ANTIPODE_SOLVE_DIM_CAP = 24


def compute_antipode(B: BialgebraSC, dim_cap: int = ANTIPODE_SOLVE_DIM_CAP) -> Optional[Mat]:
    """Solve m(S (x) id)Delta = u eps = m(id (x) S)Delta for the antipode matrix.

    Returns None when the system is inconsistent (no antipode).  The dense
    solve is quadratic in dim^2, so it is capped; structured constructors
    carry closed-form antipodes instead.
    """
    n = B.dim
    if n > dim_cap:
        raise ShapeMismatch(f"antipode solve capped at dim {dim_cap} (got {n})")
    if not check_bialgebra(B).ok:
        raise NotABialgebra("antipode solve needs a verified bialgebra")
    # unknowns x[(p, s)] = S[s][p], flattened as p * n + s
    rows: list[SVec] = []
    rhs: list[CycScalar] = []
    for k in range(n):
        d = B.comult_basis(k)
        for t in range(n):
            row_l: SVec = {}
            row_r: SVec = {}
            for (i, j), c in d.items():
                # left axiom: sum_s x[i,s] (e_s e_j)_t
                for s in range(n):
                    w = B.mul_basis(s, j).get(t)
                    if w:
                        key = i * n + s
                        cur = row_l.get(key)
                        new = c * w if cur is None else cur + c * w
                        if new:
                            row_l[key] = new
                        elif cur is not None:
                            del row_l[key]
                # right axiom: sum_s x[j,s] (e_i e_s)_t
                for s in range(n):
                    w = B.mul_basis(i, s).get(t)
                    if w:
                        key = j * n + s
                        cur = row_r.get(key)
                        new = c * w if cur is None else cur + c * w
                        if new:
                            row_r[key] = new
                        elif cur is not None:
                            del row_r[key]
            target = B.counit[k] * B.unit[t]
            rows.append(row_l)
            rhs.append(target)
            rows.append(row_r)
            rhs.append(target)
    # solve the sparse system [rows | rhs]
    aug_rows = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[n * n] = b
        if r:
            aug_rows.append(r)
    sub = kernel_from_sparse_rows(aug_rows, n * n + 1)
    # solutions of Ax = b correspond to kernel vectors with last coord -1
    particular = None
    for v in sub.rows:
        if v[n * n]:
            particular = [(-x / v[n * n]) for x in v[: n * n]]
            break
    if particular is None:
        return None
    S = Mat.zero(n, n)
    for p in range(n):
        for s in range(n):
            S.rows[s][p] = particular[p * n + s]
    return S


# -- group-likes, characters, hit actions ------------------------------------


def verify_group_like(B: BialgebraSC, c: Vec) -> bool:
    cc: dict[tuple[int, int], CycScalar] = {}
    sc = sv_from_dense(c)
    for i, ci in sc.items():
        for j, cj in sc.items():
            v = ci * cj
            if v:
                cc[(i, j)] = v
    return B.comult_sv(sc) == cc and B.counit_vec(c).is_one()


def verify_character(B: BialgebraSC, chi: Vec) -> bool:
    if not dot(chi, B.unit).is_one():
        return False
    for i in range(B.dim):
        xi = chi[i]
        for j in range(B.dim):
            lhs = czero()
            for k, w in B.mul_basis(i, j).items():
                if chi[k]:
                    lhs = lhs + w * chi[k]
            if lhs != xi * chi[j]:
                return False
    return True


def char_eval(chi: Vec, v: Vec) -> CycScalar:
    return dot(chi, v)


def char_convolve(B: CoalgebraSC, chi: Vec, eta: Vec) -> Vec:
    out = zeros(B.dim)
    for k in range(B.dim):
        total = czero()
        for (i, j), c in B.comult_basis(k).items():
            if chi[i] and eta[j]:
                total = total + c * chi[i] * eta[j]
        out[k] = total
    return out


def char_convpow(B: CoalgebraSC, chi: Vec, n: int) -> Vec:
    out = list(B.counit)
    for _ in range(n):
        out = char_convolve(B, out, chi)
    return out


def phi_map(B: CoalgebraSC, chi: Vec) -> Mat:
    """The hit action h -> sum chi(h_1) h_2 as a matrix."""
    cols = []
    for k in range(B.dim):
        acc: SVec = {}
        for (i, j), c in B.comult_basis(k).items():
            if chi[i]:
                sv_add_into(acc, {j: c * chi[i]})
        cols.append(sv_to_dense(acc, B.dim))
    return Mat.from_cols(cols)


def psi_map(B: CoalgebraSC, chi: Vec) -> Mat:
    """The dual hit action h -> sum h_1 chi(h_2) as a matrix."""
    cols = []
    for k in range(B.dim):
        acc: SVec = {}
        for (i, j), c in B.comult_basis(k).items():
            if chi[j]:
                sv_add_into(acc, {i: c * chi[j]})
        cols.append(sv_to_dense(acc, B.dim))
    return Mat.from_cols(cols)


def phi_power(B: CoalgebraSC, chi: Vec, c: int) -> Mat:
    out = Mat.identity(B.dim)
    step = phi_map(B, chi)
    for _ in range(c):
        out = step @ out
    return out


def psi_power(B: CoalgebraSC, chi: Vec, c: int) -> Mat:
    out = Mat.identity(B.dim)
    step = psi_map(B, chi)
    for _ in range(c):
        out = step @ out
    return out


def kaplansky_check(H: HopfSC, chi: Vec, z: Vec, n: int) -> tuple[bool, bool]:
    """Evaluate both sides of the ad-equivariance <-> commutation equivalence.

    Returns (ad_condition, commutation_condition) where the first is
    chi^n(h) z = sum h_1 z S(h_2) for all basis h and the second is
    h z = z phi^n(h) for all basis h.  The two must agree.
    """
    chin = char_convpow(H, chi, n)
    zs = sv_from_dense(z)
    ad_ok = True
    for h in range(H.dim):
        lhs = sv_scale(zs, chin[h])
        rhs: SVec = {}
        for (i, j), c in H.comult_basis(h).items():
            mid = H.mul_sv({i: c}, zs)
            sv_add_into(rhs, H.mul_sv(mid, H.antipode_sv({j: cone()})))
        if lhs != rhs:
            ad_ok = False
            break
    phin = phi_power(H, chi, n)
    comm_ok = True
    for h in range(H.dim):
        lhs = H.mul_sv({h: cone()}, zs)
        rhs = H.mul_sv(zs, sv_from_dense(phin.col(h)))
        if lhs != rhs:
            comm_ok = False
            break
    return ad_ok, comm_ok


# -- ad-invariant integrals ---------------------------------------------------


def verify_ad_integral(H: HopfSC, gamma: Vec) -> bool:
    """The three defining conditions, checked over all basis tuples."""
    if H.antipode is None:
        raise NotABialgebra("ad-invariant integral needs an antipode")
    if not dot(gamma, H.unit).is_one():
        return False
    u = H.unit_sv()
    for h in range(H.dim):
        acc: SVec = {}
        for (i, j), c in H.comult_basis(h).items():
            if gamma[j]:
                sv_add_into(acc, {i: c * gamma[j]})
        if acc != sv_scale(u, gamma[h]):
            return False
    for h in range(H.dim):
        eps_h = H.counit[h]
        for x in range(H.dim):
            total = czero()
            for (i, j), c in H.comult_basis(h).items():
                mid = H.mul_sv({i: c}, {x: cone()})
                prod = H.mul_sv(mid, H.antipode_sv({j: cone()}))
                for k, w in prod.items():
                    if gamma[k]:
                        total = total + w * gamma[k]
            if total != eps_h * gamma[x]:
                return False
    return True


def is_group_algebra(H: HopfSC) -> bool:
    """True when every basis vector is group-like and products stay on the basis."""
    for i in range(H.dim):
        if not verify_group_like(H, basis_vec(H.dim, i)):
            return False
    for i in range(H.dim):
        for j in range(H.dim):
            prod = H.mul_basis(i, j)
            if len(prod) != 1 or not next(iter(prod.values())).is_one():
                return False
    return sum(1 for c in H.unit if c) == 1


def group_algebra_integral(H: HopfSC) -> Vec:
    """Dual basis functional at the identity element of a group algebra."""
    if not is_group_algebra(H):
        raise NotGroupAlgebra("ad-invariant integral builder needs a group-algebra presentation")
    idx = next(i for i, c in enumerate(H.unit) if c)
    gamma = zeros(H.dim)
    gamma[idx] = cone()
    return gamma


# -- primitives, wedge, filtrations ------------------------------------------


def skew_primitives(C: CoalgebraSC, g: Vec, h: Vec,
                    bial: Optional[BialgebraSC] = None) -> Subspace:
    """{c : Delta c = c (x) h + g (x) c} by an exact linear solve.

    g and h must be group-like when a bialgebra is supplied for the check.
    """
    if bial is not None:
        for v in (g, h):
            if not verify_group_like(bial, v):
                raise NotGroupLike("skew primitives need group-like reference vectors")
    n = C.dim
    rows: dict[tuple[int, int], SVec] = {}
    for k in range(n):
        items: dict[tuple[int, int], CycScalar] = dict(C.comult_basis(k))
        # subtract e_k (x) h + g (x) e_k
        delta: dict[tuple[int, int], CycScalar] = {}
        for j, cj in enumerate(h):
            if cj:
                delta[(k, j)] = cj
        for i, ci in enumerate(g):
            if ci:
                key = (i, k)
                delta[key] = delta.get(key, czero()) + ci
        for key, c in delta.items():
            cur = items.get(key)
            new = (-c) if cur is None else cur - c
            if new:
                items[key] = new
            else:
                items.pop(key, None)
        for key, c in items.items():
            rows.setdefault(key, {})[k] = c
    return kernel_from_sparse_rows(rows.values(), n)


def primitives(C: CoalgebraSC, unit_vec: Optional[Vec] = None) -> Subspace:
    """Primitive elements Delta c = c (x) 1 + 1 (x) c."""
    if unit_vec is None:
        if not isinstance(C, AlgebraSC):
            raise ValueError("primitives of a bare coalgebra need the reference unit vector")
        unit_vec = C.unit
    return skew_primitives(C, unit_vec, unit_vec)


def wedge(C: CoalgebraSC, U: Subspace, W: Subspace) -> Subspace:
    """U wedge W = Delta^{-1}(U (x) C + C (x) W), computed sparsely.

    Membership: reduce the coefficient matrix of Delta(v) column-wise by U,
    then row-wise by W; v is in the wedge iff the residual vanishes.
    """
    n = C.dim
    if U.ambient != n or W.ambient != n:
        raise ShapeMismatch("subspace ambient dimension mismatch")
    u_piv = {p: row for p, row in zip(U.pivots, U.rows)}
    w_piv = {p: row for p, row in zip(W.pivots, W.rows)}
    eq_rows: dict[tuple[int, int], SVec] = {}
    for k in range(n):
        t: dict[tuple[int, int], CycScalar] = dict(C.comult_basis(k))
        # column reduction (first leg) by U
        for (i, j) in [key for key in t if key[0] in u_piv]:
            c = t.pop((i, j), None)
            if c is None:
                continue
            row = u_piv[i]
            for i2, w in enumerate(row):
                if i2 != i and w:
                    key = (i2, j)
                    cur = t.get(key)
                    new = -(c * w) if cur is None else cur - c * w
                    if new:
                        t[key] = new
                    elif cur is not None:
                        del t[key]
        # row reduction (second leg) by W
        for (i, j) in [key for key in t if key[1] in w_piv]:
            c = t.pop((i, j), None)
            if c is None:
                continue
            row = w_piv[j]
            for j2, w in enumerate(row):
                if j2 != j and w:
                    key = (i, j2)
                    cur = t.get(key)
                    new = -(c * w) if cur is None else cur - c * w
                    if new:
                        t[key] = new
                    elif cur is not None:
                        del t[key]
        for key, c in t.items():
            eq_rows.setdefault(key, {})[k] = c
    return kernel_from_sparse_rows(eq_rows.values(), n)


def filtration_from(C: CoalgebraSC, F0: Subspace, max_steps: int = 64) -> tuple[list[Subspace], bool]:
    """Iterate F_{n+1} = wedge(F_n, F0) until stationary.

    Returns the strictly increasing chain of layers and whether it exhausts
    the carrier (for F0 = K 1 this is the connectedness test).
    """
    layers = [F0]
    current = F0
    for _ in range(max_steps):
        nxt = wedge(C, current, F0)
        if nxt.dim == current.dim and nxt == current:
            break
        layers.append(nxt)
        current = nxt
    return layers, current.dim == C.dim


# -- concrete builders --------------------------------------------------------


def group_algebra_cyclic(n: int, conductor: int = 1, generator_label: str = "g") -> HopfSC:
    """The group algebra K C_n with basis 1, g, ..., g^(n-1)."""
    mult = Tensor3((n, n, n))
    comult = Tensor3((n, n, n))
    for i in range(n):
        for j in range(n):
            mult[(i, j, (i + j) % n)] = cone()
        comult[(i, i, i)] = cone()
    unit = basis_vec(n, 0)
    counit = [cone()] * n
    S = Mat.zero(n, n)
    for i in range(n):
        S.rows[(n - i) % n][i] = cone()
    labels = ["1"] + [f"{generator_label}{'' if k == 1 else k}" for k in range(1, n)]
    group_likes = {labels[k]: basis_vec(n, k) for k in range(n)}
    return HopfSC(n, mult, unit, comult, counit, S, labels=labels, conductor=conductor,
                  group_likes=group_likes, finite_dim=True, cosemisimple=True)


def cyclic_character(H: HopfSC, value: CycScalar, generator_index: int = 1) -> Vec:
    """Character of K C_n sending the generator basis vector to the given root."""
    n = H.dim
    chi = zeros(n)
    power = cone()
    chi[0] = cone()
    # basis is 1, g, g^2, ...: the k-th basis vector is g^k
    for k in range(1, n):
        power = power * value
        chi[k] = power
    if not verify_character(H, chi):
        raise ValueError("value does not define a character (needs value^n = 1)")
    return chi


def group_algebra_product_cyclic(orders: list[int], conductor: int = 1) -> HopfSC:
    """Group algebra of a direct product of cyclic groups."""
    dims = list(orders)
    n = 1
    for d in dims:
        n *= d
    def to_index(tup):
        idx = 0
        for d, t in zip(dims, tup):
            idx = idx * d + (t % d)
        return idx
    import itertools
    elements = list(itertools.product(*[range(d) for d in dims]))
    mult = Tensor3((n, n, n))
    comult = Tensor3((n, n, n))
    for a, ea in enumerate(elements):
        for b, eb in enumerate(elements):
            prod = tuple((x + y) % d for x, y, d in zip(ea, eb, dims))
            mult[(a, b, to_index(prod))] = cone()
        comult[(a, a, a)] = cone()
    unit = basis_vec(n, 0)
    counit = [cone()] * n
    S = Mat.zero(n, n)
    for a, ea in enumerate(elements):
        inv = tuple((-x) % d for x, d in zip(ea, dims))
        S.rows[to_index(inv)][a] = cone()
    labels = ["*".join(f"g{i}^{t}" for i, t in enumerate(e)) or "1" for e in elements]
    group_likes = {labels[a]: basis_vec(n, a) for a in range(n)}
    return HopfSC(n, mult, unit, comult, counit, S, labels=labels, conductor=conductor,
                  group_likes=group_likes, finite_dim=True, cosemisimple=True)
