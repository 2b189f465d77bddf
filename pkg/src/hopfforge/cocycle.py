"""Pre-bialgebras with cocycles and the deformed bosonization they generate.

A pre-bialgebra is a coalgebra in the Yetter-Drinfeld category together
with a unit and a multiplication that is H-linear and a coalgebra map but
possibly neither associative nor colinear.  A cocycle R (x) R -> H twists
the smash product into a bialgebra on R (x) H; the trivial cocycle
recovers the Radford-Majid bosonization.
"""

from __future__ import annotations

from typing import Optional

from .cyclotomic import CycScalar
from .hopf import AlgebraSC, BialgebraSC, CoalgebraSC, HopfSC, AxiomViolation, check_bialgebra
from .linalg import (
    Mat, SVec, Tensor3, Vec,
    ShapeMismatch, cone, czero, kron_index, sv_add_into, sv_from_dense, sv_scale, sv_to_dense,
    vec_eq, zeros,
)
from .reports import CheckReport
from .yd import YDModule, check_yd

PairSV = dict  # sparse element of a two-fold tensor product, keyed by index pairs


class PreBialgebra:
    """(R, m, u, delta, eps) in the YD category over H; axioms on demand."""

    def __init__(self, H: HopfSC, yd: YDModule, mult: Tensor3, unit: Vec,
                 comult: Tensor3, counit: Vec):
        n = yd.dim
        if yd.H is not H:
            raise ShapeMismatch("YD structure must live over the given Hopf algebra")
        if mult.shape != (n, n, n) or comult.shape != (n, n, n):
            raise ShapeMismatch("structure tensors must match the carrier dimension")
        if len(unit) != n or len(counit) != n:
            raise ShapeMismatch("unit/counit dimension mismatch")
        self.H = H
        self.yd = yd
        self.dim = n
        self.algebra = AlgebraSC(n, mult, unit)   # possibly non-associative; axioms not assumed
        self.coalgebra = CoalgebraSC(n, comult, counit)
        self.mult = mult
        self.unit = list(unit)
        self.comult = comult
        self.counit = list(counit)

    def mul(self, a: SVec, b: SVec) -> SVec:
        return self.algebra.mul_sv(a, b)

    def mul_basis(self, i: int, j: int) -> SVec:
        return self.algebra.mul_basis(i, j)

    def unit_sv(self) -> SVec:
        return self.algebra.unit_sv()

    def comult_basis(self, k: int):
        return self.coalgebra.comult_basis(k)

    def counit_of(self, v: SVec) -> CycScalar:
        return self.coalgebra.counit_sv(v)

    def delta_rr_basis(self, i: int, j: int) -> dict[tuple[int, int, int, int], CycScalar]:
        """Braided coproduct of e_i (x) e_j in R (x) R:

        delta(r (x) s) = (r^1 (x) r^2_(-1) s^1) (x) (r^2_0 (x) s^2)
        keyed by (r1, s1', r2_0, s2).
        """
        out: dict[tuple[int, int, int, int], CycScalar] = {}
        yd = self.yd
        for (r1, r2), cr in self.comult_basis(i).items():
            co = yd.coact_basis(r2)
            for (s1, s2), cs in self.comult_basis(j).items():
                for (h, r20), ch in co.items():
                    acted = yd.act_basis(h, s1)
                    if not acted:
                        continue
                    c = cr * cs * ch
                    for s1b, ca in acted.items():
                        key = (r1, s1b, r20, s2)
                        cur = out.get(key)
                        new = c * ca if cur is None else cur + c * ca
                        if new:
                            out[key] = new
                        elif cur is not None:
                            del out[key]
        return out

    def coact_pair(self, i: int, j: int) -> dict[tuple[int, int, int], CycScalar]:
        """Codiagonal coaction of e_i (x) e_j, keyed by (h, i0, j0)."""
        out: dict[tuple[int, int, int], CycScalar] = {}
        H = self.H
        for (h1, i0), c1 in self.yd.coact_basis(i).items():
            for (h2, j0), c2 in self.yd.coact_basis(j).items():
                for h, ch in H.mul_basis(h1, h2).items():
                    key = (h, i0, j0)
                    cur = out.get(key)
                    new = c1 * c2 * ch if cur is None else cur + c1 * c2 * ch
                    if new:
                        out[key] = new
                    elif cur is not None:
                        del out[key]
        return out


class Cocycle:
    """K-linear map R (x) R -> H stored as a sparse tensor (i, j, h)."""

    def __init__(self, xi: Tensor3):
        self.xi = xi
        self.r_dim = xi.shape[0]
        self.h_dim = xi.shape[2]
        self._by_ij: dict[tuple[int, int], SVec] = {}
        for (i, j, h), c in xi.data.items():
            self._by_ij.setdefault((i, j), {})[h] = c

    @staticmethod
    def trivial(P: PreBialgebra) -> "Cocycle":
        """xi = eps (x) eps . 1_H, the Radford-Majid case."""
        t = Tensor3((P.dim, P.dim, P.H.dim))
        for i in range(P.dim):
            ei = P.counit[i]
            if not ei:
                continue
            for j in range(P.dim):
                ej = P.counit[j]
                if not ej:
                    continue
                for h, c in enumerate(P.H.unit):
                    if c:
                        t[(i, j, h)] = ei * ej * c
        return Cocycle(t)

    def eval_basis(self, i: int, j: int) -> SVec:
        return dict(self._by_ij.get((i, j), {}))

    def eval(self, a: SVec, b: SVec) -> SVec:
        out: SVec = {}
        for i, ca in a.items():
            for j, cb in b.items():
                terms = self._by_ij.get((i, j))
                if terms:
                    sv_add_into(out, terms, ca * cb)
        return out

    def is_trivial(self, P: PreBialgebra) -> bool:
        ref = Cocycle.trivial(P)
        return self.xi == ref.xi


def is_radford_majid(xi: Cocycle, P: PreBialgebra) -> bool:
    """True exactly when the cocycle is eps (x) eps . 1_H."""
    return xi.is_trivial(P)


# -- axiom checks -------------------------------------------------------------


def check_prebialgebra(P: PreBialgebra) -> CheckReport:
    """Unit/multiplication axioms of a pre-bialgebra, witnesses per failure.

    Associativity and colinearity of m are reported as informative entries
    (prefixed 'info_'); they are not axioms and do not affect .ok.
    """
    rep = CheckReport("pre-bialgebra axioms")
    H, n = P.H, P.dim
    yd_rep = check_yd(P.yd)
    rep.add("yd_structure", yd_rep.ok,
            [e.name for e in yd_rep.failures()])
    u = P.unit_sv()
    # unit is a YD map: h.u = eps(h) u and rho(u) = 1 (x) u
    ok = all(P.yd.act({h: cone()}, u) == sv_scale(u, H.counit[h]) for h in range(H.dim))
    rep.add("unit_action_invariant", ok)
    target = {}
    for h, c in enumerate(H.unit):
        if c:
            for i, ci in u.items():
                target[(h, i)] = c * ci
    rep.add("unit_coaction_invariant", P.yd.coact(u) == target)
    # unit is group-like for delta
    duu = {}
    for i, ci in u.items():
        for j, cj in u.items():
            v = ci * cj
            if v:
                duu[(i, j)] = v
    rep.add("unit_comult", P.coalgebra.comult_sv(u) == duu)
    rep.add("unit_counit", P.counit_of(u).is_one())
    # m is H-linear: h.m(r (x) s) = sum m(h1 r (x) h2 s)
    ent = rep.add("mult_h_linear", True)
    for h in range(H.dim):
        dh = H.comult_basis(h)
        for i in range(n):
            for j in range(n):
                lhs = P.yd.act({h: cone()}, P.mul_basis(i, j))
                rhs: SVec = {}
                for (h1, h2), c in dh.items():
                    a = P.yd.act_basis(h1, i)
                    b = P.yd.act_basis(h2, j)
                    if a and b:
                        sv_add_into(rhs, sv_scale(P.mul(a, b), c))
                if lhs != rhs:
                    ent.ok = False
                    if len(ent.witnesses) < 8:
                        ent.witnesses.append((h, i, j))
    # delta m = (m (x) m) delta_{R(x)R} and eps m = eps (x) eps
    ent = rep.add("mult_comult_compat", True)
    for i in range(n):
        for j in range(n):
            lhs = P.coalgebra.comult_sv(P.mul_basis(i, j))
            rhs: PairSV = {}
            for (a, b, c_, d), c in P.delta_rr_basis(i, j).items():
                left = P.mul_basis(a, b)
                if not left:
                    continue
                right = P.mul_basis(c_, d)
                for x, cx in left.items():
                    for y, cy in right.items():
                        key = (x, y)
                        cur = rhs.get(key)
                        new = c * cx * cy if cur is None else cur + c * cx * cy
                        if new:
                            rhs[key] = new
                        elif cur is not None:
                            del rhs[key]
            if set(lhs) != set(rhs) or any(lhs[k] != rhs[k] for k in lhs):
                ent.ok = False
                if len(ent.witnesses) < 8:
                    ent.witnesses.append((i, j))
    ent = rep.add("mult_counit_compat", True)
    for i in range(n):
        for j in range(n):
            if P.counit_of(P.mul_basis(i, j)) != P.counit[i] * P.counit[j]:
                ent.ok = False
                ent.witnesses.append((i, j))
    # u is a two-sided unit for m
    ent = rep.add("unit_neutral", True)
    for i in range(n):
        e = {i: cone()}
        if P.mul(u, e) != e or P.mul(e, u) != e:
            ent.ok = False
            ent.witnesses.append(i)
    # delta and eps are YD morphisms
    ent = rep.add("comult_h_linear", True)
    for h in range(H.dim):
        dh = H.comult_basis(h)
        for k in range(n):
            lhs = _pair_from_sv(P, P.yd.act_basis(h, k))
            rhs: PairSV = {}
            for (i, j), c in P.comult_basis(k).items():
                for (h1, h2), w in dh.items():
                    a = P.yd.act_basis(h1, i)
                    b = P.yd.act_basis(h2, j)
                    for x, cx in a.items():
                        for y, cy in b.items():
                            key = (x, y)
                            cur = rhs.get(key)
                            new = c * w * cx * cy if cur is None else cur + c * w * cx * cy
                            if new:
                                rhs[key] = new
                            elif cur is not None:
                                del rhs[key]
            if set(lhs) != set(rhs) or any(lhs[k2] != rhs[k2] for k2 in lhs):
                ent.ok = False
                if len(ent.witnesses) < 8:
                    ent.witnesses.append((h, k))
    ent = rep.add("comult_colinear", True)
    for k in range(n):
        # (id_H (x) delta) rho(e_k) vs codiagonal coaction of delta(e_k)
        lhs: dict[tuple[int, int, int], CycScalar] = {}
        for (h, k0), c in P.yd.coact_basis(k).items():
            for (i, j), w in P.comult_basis(k0).items():
                key = (h, i, j)
                cur = lhs.get(key)
                new = c * w if cur is None else cur + c * w
                if new:
                    lhs[key] = new
                elif cur is not None:
                    del lhs[key]
        rhs: dict[tuple[int, int, int], CycScalar] = {}
        for (i, j), c in P.comult_basis(k).items():
            for (h, i0, j0), w in P.coact_pair(i, j).items():
                key = (h, i0, j0)
                cur = rhs.get(key)
                new = c * w if cur is None else cur + c * w
                if new:
                    rhs[key] = new
                elif cur is not None:
                    del rhs[key]
        if set(lhs) != set(rhs) or any(lhs[k2] != rhs[k2] for k2 in lhs):
            ent.ok = False
            ent.witnesses.append(k)
    ent = rep.add("counit_h_linear", True)
    for h in range(H.dim):
        for k in range(n):
            if P.counit_of(P.yd.act_basis(h, k)) != H.counit[h] * P.counit[k]:
                ent.ok = False
                ent.witnesses.append((h, k))
    ent = rep.add("counit_colinear", True)
    for k in range(n):
        acc: SVec = {}
        for (h, k0), c in P.yd.coact_basis(k).items():
            e = P.counit[k0]
            if e:
                sv_add_into(acc, {h: c * e})
        if acc != sv_scale(P.H.unit_sv(), P.counit[k]):
            ent.ok = False
            ent.witnesses.append(k)
    # informative, non-axiom diagnostics
    assoc = True
    for i in range(n):
        for j in range(n):
            ij = P.mul_basis(i, j)
            for k in range(n):
                if P.mul(ij, {k: cone()}) != P.mul({i: cone()}, P.mul_basis(j, k)):
                    assoc = False
                    break
            if not assoc:
                break
        if not assoc:
            break
    rep.add("info_mult_associative", True, detail=f"associative={assoc}")
    rep.add("info_mult_colinear", True, detail=f"colinear={mult_is_colinear(P)}")
    return rep


def _pair_from_sv(P: PreBialgebra, v: SVec) -> PairSV:
    out: PairSV = {}
    for k, c in v.items():
        for key, w in P.comult_basis(k).items():
            cur = out.get(key)
            new = c * w if cur is None else cur + c * w
            if new:
                out[key] = new
            elif cur is not None:
                del out[key]
    return out


def mult_is_colinear(P: PreBialgebra) -> bool:
    """rho m = (id (x) m) rho_{R (x) R}, checked on all basis pairs."""
    for i in range(P.dim):
        for j in range(P.dim):
            lhs = P.yd.coact(P.mul_basis(i, j))
            rhs: dict[tuple[int, int], CycScalar] = {}
            for (h, i0, j0), c in P.coact_pair(i, j).items():
                for k, w in P.mul_basis(i0, j0).items():
                    key = (h, k)
                    cur = rhs.get(key)
                    new = c * w if cur is None else cur + c * w
                    if new:
                        rhs[key] = new
                    elif cur is not None:
                        del rhs[key]
            if set(lhs) != set(rhs) or any(lhs[k] != rhs[k] for k in lhs):
                return False
    return True


def mult_is_associative(P: PreBialgebra) -> bool:
    for i in range(P.dim):
        for j in range(P.dim):
            ij = P.mul_basis(i, j)
            for k in range(P.dim):
                if P.mul(ij, {k: cone()}) != P.mul({i: cone()}, P.mul_basis(j, k)):
                    return False
    return True


def m_tilde_pair(P: PreBialgebra, xi: Cocycle, i: int, j: int) -> dict[tuple[int, int], CycScalar]:
    """(m (x) xi) delta_{R (x) R} on e_i (x) e_j, keyed by (r, h)."""
    out: dict[tuple[int, int], CycScalar] = {}
    for (a, b, c_, d), c in P.delta_rr_basis(i, j).items():
        left = P.mul_basis(a, b)
        if not left:
            continue
        right = xi.eval_basis(c_, d)
        if not right:
            continue
        for x, cx in left.items():
            for h, chv in right.items():
                key = (x, h)
                cur = out.get(key)
                new = c * cx * chv if cur is None else cur + c * cx * chv
                if new:
                    out[key] = new
                elif cur is not None:
                    del out[key]
    return out


def m_tilde(P: PreBialgebra, xi: Cocycle) -> Mat:
    """The map R (x) R -> R (x) H as a matrix on Kronecker-ordered bases."""
    nh = P.H.dim
    out = Mat.zero(P.dim * nh, P.dim * P.dim)
    for i in range(P.dim):
        for j in range(P.dim):
            col = kron_index(i, j, P.dim)
            for (r, h), c in m_tilde_pair(P, xi, i, j).items():
                out.rows[kron_index(r, h, nh)][col] = c
    return out


def check_cocycle(P: PreBialgebra, xi: Cocycle) -> CheckReport:
    """The six defining relations of a cocycle, exhaustively on basis tuples."""
    rep = CheckReport("cocycle axioms")
    H, n = P.H, P.dim
    if xi.xi.shape != (n, n, H.dim):
        raise ShapeMismatch("cocycle tensor shape mismatch")

    # ad-equivariance: xi(h1 r (x) h2 s) = h1 xi(r (x) s) S(h2)
    ent = rep.add("cocycle_ad_equivariance", True)
    for h in range(H.dim):
        dh = H.comult_basis(h)
        for i in range(n):
            for j in range(n):
                lhs: SVec = {}
                rhs: SVec = {}
                for (h1, h2), c in dh.items():
                    a = P.yd.act_basis(h1, i)
                    b = P.yd.act_basis(h2, j)
                    if a and b:
                        sv_add_into(lhs, sv_scale(xi.eval(a, b), c))
                    mid = H.mul_sv({h1: c}, xi.eval_basis(i, j))
                    sv_add_into(rhs, H.mul_sv(mid, H.antipode_sv({h2: cone()})))
                if lhs != rhs:
                    ent.ok = False
                    if len(ent.witnesses) < 8:
                        ent.witnesses.append((h, i, j))

    # comultiplicativity: Delta_H xi = (m_H (x) xi)(xi (x) rho_{R(x)R}) delta_{R(x)R}
    ent = rep.add("cocycle_comult_compat", True)
    for i in range(n):
        for j in range(n):
            lhs = H.comult_sv(xi.eval_basis(i, j))
            rhs: PairSV = {}
            for (a, b, c_, d), c in P.delta_rr_basis(i, j).items():
                first = xi.eval_basis(a, b)
                if not first:
                    continue
                for (h, c0, d0), w in _pair_coaction(P, c_, d).items():
                    second = xi.eval_basis(c0, d0)
                    if not second:
                        continue
                    for hf, cf in first.items():
                        prod = H.mul_sv({hf: c * cf * w}, {h: cone()})
                        for hp, cp in prod.items():
                            for hs, cs in second.items():
                                key = (hp, hs)
                                cur = rhs.get(key)
                                new = cp * cs if cur is None else cur + cp * cs
                                if new:
                                    rhs[key] = new
                                elif cur is not None:
                                    del rhs[key]
            if set(lhs) != set(rhs) or any(lhs[k] != rhs[k] for k in lhs):
                ent.ok = False
                if len(ent.witnesses) < 8:
                    ent.witnesses.append((i, j))
    ent = rep.add("cocycle_counit_compat", True)
    for i in range(n):
        for j in range(n):
            if H.counit_sv(xi.eval_basis(i, j)) != P.counit[i] * P.counit[j]:
                ent.ok = False
                ent.witnesses.append((i, j))

    # braided compatibility: c_{R,H}(m (x) xi) delta_RR = (m_H (x) m_R)(xi (x) rho_RR) delta_RR
    ent = rep.add("cocycle_braiding_compat", True)
    for i in range(n):
        for j in range(n):
            lhs: dict[tuple[int, int], CycScalar] = {}
            for (r, h), c in m_tilde_pair(P, xi, i, j).items():
                # c_{R,H}(r (x) h) = r_(-1) h (x) r_0 with the product in H
                for (hr, r0), cr in P.yd.coact_basis(r).items():
                    for hp, cp in H.mul_basis(hr, h).items():
                        key = (hp, r0)
                        cur = lhs.get(key)
                        new = c * cr * cp if cur is None else cur + c * cr * cp
                        if new:
                            lhs[key] = new
                        elif cur is not None:
                            del lhs[key]
            rhs: dict[tuple[int, int], CycScalar] = {}
            for (a, b, c_, d), c in P.delta_rr_basis(i, j).items():
                first = xi.eval_basis(a, b)
                if not first:
                    continue
                for (h, c0, d0), w in _pair_coaction(P, c_, d).items():
                    prod_r = P.mul_basis(c0, d0)
                    if not prod_r:
                        continue
                    for hf, cf in first.items():
                        hh = H.mul_sv({hf: c * cf * w}, {h: cone()})
                        for hp, cp in hh.items():
                            for r0, cr in prod_r.items():
                                key = (hp, r0)
                                cur = rhs.get(key)
                                new = cp * cr if cur is None else cur + cp * cr
                                if new:
                                    rhs[key] = new
                                elif cur is not None:
                                    del rhs[key]
            if set(lhs) != set(rhs) or any(lhs[k] != rhs[k] for k in lhs):
                ent.ok = False
                if len(ent.witnesses) < 8:
                    ent.witnesses.append((i, j))

    # twisted associativity: m(R (x) m) = m(R (x) mu)[(m (x) xi) delta_RR (x) R]
    ent = rep.add("cocycle_twisted_associativity", True)
    for i in range(n):
        for j in range(n):
            mt = m_tilde_pair(P, xi, i, j)
            for k in range(n):
                lhs = P.mul({i: cone()}, P.mul_basis(j, k))
                rhs: SVec = {}
                for (r, h), c in mt.items():
                    acted = P.yd.act_basis(h, k)
                    if acted:
                        sv_add_into(rhs, sv_scale(P.mul({r: cone()}, acted), c))
                if lhs != rhs:
                    ent.ok = False
                    if len(ent.witnesses) < 8:
                        ent.witnesses.append((i, j, k))

    # mixed associativity of xi:
    # m_H(xi (x) H)[R (x) mtilde] = m_H(xi (x) H)(R (x) c_{H,R})[mtilde (x) R]
    ent = rep.add("cocycle_mixed_associativity", True)
    for i in range(n):
        for j in range(n):
            mt_jk: Optional[dict] = None
            mt_ij = m_tilde_pair(P, xi, i, j)
            for k in range(n):
                lhs: SVec = {}
                for (r, h), c in m_tilde_pair(P, xi, j, k).items():
                    sv_add_into(lhs, H.mul_sv(sv_scale(xi.eval_basis(i, r), c), {h: cone()}))
                rhs: SVec = {}
                for (r, h), c in mt_ij.items():
                    # c_{H,R}(h (x) e_k) = h1 . e_k (x) h2
                    for (h1, h2), w in H.comult_basis(h).items():
                        acted = P.yd.act_basis(h1, k)
                        for k2, ck in acted.items():
                            xiv = xi.eval_basis(r, k2)
                            if xiv:
                                sv_add_into(rhs, H.mul_sv(sv_scale(xiv, c * w * ck), {h2: cone()}))
                if lhs != rhs:
                    ent.ok = False
                    if len(ent.witnesses) < 8:
                        ent.witnesses.append((i, j, k))

    # unitality: xi(r (x) u) = eps(r) 1_H = xi(u (x) r)
    ent = rep.add("cocycle_unitality", True)
    u = P.unit_sv()
    one_h = P.H.unit_sv()
    for i in range(n):
        e = {i: cone()}
        target = sv_scale(one_h, P.counit[i])
        if xi.eval(e, u) != target or xi.eval(u, e) != target:
            ent.ok = False
            ent.witnesses.append(i)
    return rep


def _pair_coaction(P: PreBialgebra, i: int, j: int) -> dict[tuple[int, int, int], CycScalar]:
    return P.coact_pair(i, j)


# -- bosonization -------------------------------------------------------------


class Bosonization:
    """Bialgebra on R (x) H with its canonical injection and retraction."""

    def __init__(self, B: BialgebraSC, sigma: Mat, pi: Mat, P: PreBialgebra, xi: Cocycle):
        self.B = B
        self.sigma = sigma
        self.pi = pi
        self.P = P
        self.xi = xi
        self.r_dim = P.dim
        self.H = P.H


def bosonize(P: PreBialgebra, xi: Cocycle, verify: bool = True) -> Bosonization:
    """Build R #_xi H.  Axiom failures are hard errors, not report entries.

    With verify=True (default) the pre-bialgebra and cocycle axioms gate the
    construction and the result is checked to be a bialgebra.
    """
    if verify:
        pre = check_prebialgebra(P)
        if not pre.ok:
            raise AxiomViolation("pre-bialgebra axioms fail: "
                                 + ", ".join(e.name for e in pre.failures()))
        coc = check_cocycle(P, xi)
        if not coc.ok:
            raise AxiomViolation("cocycle axioms fail: "
                                 + ", ".join(e.name for e in coc.failures()))
    H = P.H
    nr, nh = P.dim, H.dim
    n = nr * nh
    mult = Tensor3((n, n, n))
    # m_B[(r#h)(s#k)] = mtilde^0(r (x) h1.s) # mtilde^1(r (x) h1.s) h2 k
    mt_cache: dict[tuple[int, int], dict] = {}
    for i in range(nr):
        for j in range(nr):
            mt_cache[(i, j)] = m_tilde_pair(P, xi, i, j)
    for h in range(nh):
        dh = H.comult_basis(h)
        for s in range(nr):
            # sum h1 . s (x) h2, keyed by (s', h2)
            acted: dict[tuple[int, int], CycScalar] = {}
            for (h1, h2), c in dh.items():
                for s2, cs in P.yd.act_basis(h1, s).items():
                    key = (s2, h2)
                    cur = acted.get(key)
                    new = c * cs if cur is None else cur + c * cs
                    if new:
                        acted[key] = new
                    elif cur is not None:
                        del acted[key]
            for r in range(nr):
                row = kron_index(r, h, nh)
                for (s2, h2), c in acted.items():
                    mt = mt_cache[(r, s2)]
                    if not mt:
                        continue
                    for (r0, h0), cm in mt.items():
                        left = H.mul_basis(h0, h2)
                        for hm, chm in left.items():
                            base = c * cm * chm
                            for k in range(nh):
                                prod = H.mul_basis(hm, k)
                                col = kron_index(s, k, nh)
                                for hf, cf in prod.items():
                                    mult.add_to((row, col, kron_index(r0, hf, nh)), base * cf)
    unit = zeros(n)
    for i, ci in enumerate(P.unit):
        if ci:
            for h, c in enumerate(H.unit):
                if c:
                    unit[kron_index(i, h, nh)] = ci * c
    comult = Tensor3((n, n, n))
    # Delta_B(r#h) = r1 # r2_(-1) h1 (x) r2_0 # h2
    for r in range(nr):
        dr = P.comult_basis(r)
        for h in range(nh):
            src = kron_index(r, h, nh)
            dh = H.comult_basis(h)
            for (r1, r2), cr in dr.items():
                for (hm, r20), cm in P.yd.coact_basis(r2).items():
                    for (h1, h2), c in dh.items():
                        prod = H.mul_basis(hm, h1)
                        for hp, cp in prod.items():
                            comult.add_to(
                                (src, kron_index(r1, hp, nh), kron_index(r20, h2, nh)),
                                cr * cm * c * cp)
    counit = zeros(n)
    for r in range(nr):
        er = P.counit[r]
        if not er:
            continue
        for h in range(nh):
            eh = H.counit[h]
            if eh:
                counit[kron_index(r, h, nh)] = er * eh
    B = BialgebraSC(n, mult, unit, comult, counit)
    if verify:
        bi = check_bialgebra(B)
        if not bi.ok:
            raise AxiomViolation("bosonization is not a bialgebra: "
                                 + ", ".join(e.name for e in bi.failures()))
    sigma = Mat.zero(n, nh)
    u_r = sv_from_dense(P.unit)
    for h in range(nh):
        for i, ci in u_r.items():
            sigma.rows[kron_index(i, h, nh)][h] = ci
    pi = Mat.zero(nh, n)
    for r in range(nr):
        er = P.counit[r]
        if not er:
            continue
        for h in range(nh):
            pi.rows[h][kron_index(r, h, nh)] = er
    return Bosonization(B, sigma, pi, P, xi)


def retraction_diagnostics(B: BialgebraSC, pi: Mat, sigma: Mat, H: HopfSC) -> dict[str, bool]:
    """Which structure pi: B -> H preserves, each checked exhaustively."""
    out = {}
    n, nh = B.dim, H.dim
    # coalgebra map
    ok = True
    for k in range(n):
        lhs: PairSV = {}
        for (i, j), c in B.comult_basis(k).items():
            pi_i = pi.apply_sv({i: c})
            pi_j = pi.apply_sv({j: cone()})
            for a, ca in pi_i.items():
                for b, cb in pi_j.items():
                    key = (a, b)
                    cur = lhs.get(key)
                    new = ca * cb if cur is None else cur + ca * cb
                    if new:
                        lhs[key] = new
                    elif cur is not None:
                        del lhs[key]
        rhs = H.comult_sv(pi.apply_sv({k: cone()}))
        if set(lhs) != set(rhs) or any(lhs[kk] != rhs[kk] for kk in lhs):
            ok = False
            break
    if ok:
        for k in range(n):
            if H.counit_sv(pi.apply_sv({k: cone()})) != B.counit[k]:
                ok = False
                break
    out["coalgebra_map"] = ok
    # algebra map
    ok = vec_eq(pi.apply(B.unit), H.unit)
    if ok:
        for i in range(n):
            for j in range(n):
                lhs = pi.apply_sv(B.mul_basis(i, j))
                rhs = H.mul_sv(pi.apply_sv({i: cone()}), pi.apply_sv({j: cone()}))
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
    out["algebra_map"] = ok
    # H-bilinearity: pi(sigma(h) b) = h pi(b) and pi(b sigma(k)) = pi(b) k
    ok = True
    for h in range(nh):
        sh = sv_from_dense(sigma.col(h))
        for b in range(n):
            if pi.apply_sv(B.mul_sv(sh, {b: cone()})) != H.mul_sv({h: cone()}, pi.apply_sv({b: cone()})):
                ok = False
                break
            if pi.apply_sv(B.mul_sv({b: cone()}, sh)) != H.mul_sv(pi.apply_sv({b: cone()}), {h: cone()}):
                ok = False
                break
        if not ok:
            break
    out["H_bilinear"] = ok
    return out
