import numpy as np
import pytest

from blockperm import gfq


FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


@pytest.mark.parametrize("p,e", FIELDS)
def test_field_axioms_exhaustive(p, e):
    F = gfq.GF.get(p, e)
    q = p ** e
    elems = np.arange(q, dtype=np.int16)
    a = np.repeat(elems, q)
    b = np.tile(elems, q)
    # commutativity
    assert np.array_equal(F.add(a, b), F.add(b, a))
    assert np.array_equal(F.mul(a, b), F.mul(b, a))
    # distributivity over all triples
    for c in elems:
        lhs = F.mul(c, F.add(a, b))
        rhs = F.add(F.mul(c, a), F.mul(c, b))
        assert np.array_equal(lhs, rhs)
    # additive and multiplicative inverses
    assert np.all(F.add(elems, F.neg(elems)) == 0)
    nz = elems[1:]
    assert np.all(F.mul(nz, F.inv(nz)) == 1)


@pytest.mark.parametrize("p,e", FIELDS)
def test_associativity_sampled(p, e):
    F = gfq.GF.get(p, e)
    rng = np.random.default_rng(7)
    q = p ** e
    a, b, c = (rng.integers(0, q, 50).astype(np.int16) for _ in range(3))
    assert np.array_equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert np.array_equal(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))


def test_gf_singleton_and_parse():
    assert gfq.GF.get(5) is gfq.GF.get(5, 1)
    assert gfq.GF.parse("2^3") is gfq.GF.get(2, 3)
    assert gfq.GF.parse("11") is gfq.GF.get(11)
    with pytest.raises(ValueError):
        gfq.GF.get(4)          # not prime
    with pytest.raises(ValueError):
        gfq.GF.get(2, 9)       # 512 > 256


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)])
def test_echelon_and_rank(p, e):
    F = gfq.GF.get(p, e)
    rng = np.random.default_rng(p * 10 + e)
    for _ in range(20):
        m, n = rng.integers(1, 9, 2)
        A = rng.integers(0, p ** e, (m, n)).astype(np.int16)
        R, piv, T = gfq.echelon(F, A, transform=True)
        assert np.array_equal(F.matmul(T, A), R)
        r = len(piv)
        assert gfq.rank(F, A) == r
        # pivots are strictly increasing and the pivot columns are unit
        assert list(piv) == sorted(set(piv))
        for i, c in enumerate(piv):
            col = R[:, c]
            assert col[i] == 1 and np.count_nonzero(col) == 1


def test_nullspace_annihilates():
    F = gfq.GF.get(3)
    rng = np.random.default_rng(0)
    for _ in range(20):
        A = rng.integers(0, 3, (6, 8)).astype(np.int16)
        N = gfq.nullspace(F, A)
        assert N.shape[0] == 8 - gfq.rank(F, A)
        if N.shape[0]:
            assert not F.matmul(A, N.T).any()


def test_solve_and_inverse():
    F = gfq.GF.get(7)
    rng = np.random.default_rng(1)
    # random invertible matrix by rejection
    while True:
        A = rng.integers(0, 7, (5, 5)).astype(np.int16)
        if gfq.rank(F, A) == 5:
            break
    Ainv = gfq.inverse(F, A)
    assert np.array_equal(F.matmul(A, Ainv), np.eye(5, dtype=np.int16))
    B = rng.integers(0, 7, (5, 3)).astype(np.int16)
    X = gfq.solve(F, A, B)
    assert np.array_equal(F.matmul(A, X), B)


def test_fqmatrix_wrapper():
    F = gfq.GF.get(2, 2)
    A = gfq.FqMatrix(F, [[1, 2, 3], [2, 3, 1], [3, 1, 2]])
    R, piv, r = A.rref()
    assert r == len(piv) == A.rank()
    N = A.nullspace_basis()
    assert N.shape[0] == 3 - r
    ident = gfq.FqMatrix.identity(F, 3)
    assert ident.rank() == 3


def test_spin_basis_closure():
    F = gfq.GF.get(2)
    # regular module of C4 acting on F2^4, spin up from a single vector
    M = np.roll(np.eye(4, dtype=np.int16), 1, axis=1)
    seed = np.zeros((1, 4), dtype=np.int16)
    seed[0, 0] = 1
    basis, piv, _tree = gfq.spin_basis(F, [M], seed)
    assert basis.shape[0] == 4
    spanned = gfq.rank(F, np.vstack([basis, F.matmul(basis, M.T)]))
    assert spanned == basis.shape[0]
