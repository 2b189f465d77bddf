import random

from hopfforge.cyclotomic import CycScalar, euler_phi
from hopfforge.hopf import group_algebra_cyclic
from hopfforge.linalg import (
    Mat, Subspace, Tensor3,
    basis_vec, cone, czero, image, kernel, kernel_from_sparse_rows, map_tensor_product,
    preimage, rref, solve, vec_eq, zeros,
)


def rat(x):
    return CycScalar.from_rational(x)


def rand_mat(rng, nrows, ncols, L=6):
    phi = euler_phi(L)
    return Mat([[CycScalar(L, [rng.randrange(-3, 4) for _ in range(phi)])
                 for _ in range(ncols)] for _ in range(nrows)])


def test_solve_identity():
    b = [rat(2), rat(-1), rat(5)]
    assert solve(Mat.identity(3), b) == b


def test_solve_inconsistent():
    A = Mat([[rat(1), rat(1)], [rat(1), rat(1)]])
    assert solve(A, [rat(0), rat(1)]) is None


def test_kernel_of_difference_row():
    K = kernel(Mat([[rat(1), rat(-1)]]))
    assert K.dim == 1
    assert K.contains_vec([rat(1), rat(1)])


def test_kernel_of_counit_covector():
    H = group_algebra_cyclic(6)
    K = kernel(Mat([H.counit]))
    assert K.dim == 5  # the augmentation ideal


def test_rref_idempotent():
    rng = random.Random(7)
    for _ in range(20):
        m = rand_mat(rng, 4, 6)
        rows1, p1 = rref([list(r) for r in m.rows])
        rows2, p2 = rref([list(r) for r in rows1])
        assert p1 == p2
        assert all(vec_eq(a, b) for a, b in zip(rows1, rows2))


def test_subspace_dimension_formula():
    rng = random.Random(11)
    for _ in range(15):
        n = rng.randrange(2, 21)
        U = Subspace(n, [rand_mat(rng, 1, n).rows[0] for _ in range(rng.randrange(1, 4))])
        W = Subspace(n, [rand_mat(rng, 1, n).rows[0] for _ in range(rng.randrange(1, 4))])
        assert U.sum(W).dim + U.intersect(W).dim == U.dim + W.dim


def test_subspace_trivial_ops():
    V = Subspace(4, [basis_vec(4, 0), basis_vec(4, 2)])
    assert V.intersect(V) == V
    assert V.sum(V) == V
    assert V.contains(V)
    assert preimage(Mat.identity(4), V) == V


def test_preimage_contracts():
    rng = random.Random(13)
    for _ in range(10):
        f = rand_mat(rng, 4, 5)
        W = Subspace(4, [rand_mat(rng, 1, 4).rows[0]])
        pre = preimage(f, W)
        assert preimage(f, image(f)) == Subspace.full(5)
        assert pre.contains(kernel(f))
        for row in pre.rows:
            assert W.contains_vec(f.apply(list(row)))


def test_preimage_wedge_oracle_kc2():
    # direct 4-dimensional solve: preimage of K1 (x) C + C (x) K1 under Delta
    H = group_algebra_cyclic(2)
    dm = Mat.zero(4, 2)
    for (k, i, j), c in H.comult.data.items():
        dm.rows[i * 2 + j][k] = c
    U = Subspace(4, [basis_vec(4, 0), basis_vec(4, 1), basis_vec(4, 2)])
    got = preimage(dm, U)
    assert got == Subspace(2, [basis_vec(2, 0)])


def test_kernel_from_sparse_rows_matches_dense():
    rng = random.Random(17)
    for _ in range(10):
        m = rand_mat(rng, 6, 5)
        sparse_rows = [{j: c for j, c in enumerate(row) if c} for row in m.rows]
        assert kernel_from_sparse_rows(sparse_rows, 5) == kernel(m)


def test_tensor_contract_unit_axis():
    H = group_algebra_cyclic(2)
    assert H.mult.contract(1, H.unit) == Mat.identity(2)
    H6 = group_algebra_cyclic(6)
    assert H6.comult.contract(2, H6.counit) == Mat.identity(6)


def test_tensor_apply_map():
    t = Tensor3((2, 2, 2), {(0, 1, 1): rat(3)})
    m = Mat([[rat(0), rat(1)], [rat(1), rat(0)]])  # swap
    out = t.apply_map(2, m)
    assert out[(0, 0, 1)] == rat(3)
    assert out[(0, 1, 1)] == rat(0)


def test_map_tensor_product_kronecker_contract():
    rng = random.Random(23)
    f = rand_mat(rng, 2, 3)
    g = rand_mat(rng, 3, 2)
    fg = map_tensor_product(f, g)
    assert map_tensor_product(Mat.identity(3), Mat.identity(4)) == Mat.identity(12)
    for i in range(3):
        for j in range(2):
            e = zeros(6)
            e[i * 2 + j] = cone()
            got = fg.apply(e)
            fi, gj = f.apply(basis_vec(3, i)), g.apply(basis_vec(2, j))
            expect = [fi[a] * gj[b] for a in range(2) for b in range(3)]
            assert vec_eq(got, expect)


def test_mat_inverse():
    rng = random.Random(29)
    for _ in range(5):
        while True:
            m = rand_mat(rng, 4, 4)
            if m.rank() == 4:
                break
        assert m @ m.inverse() == Mat.identity(4)
