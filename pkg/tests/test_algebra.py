import numpy as np
import pytest

from blockperm import algebra, gfq
from blockperm.permgrp import PermGroup


def test_group_algebra_multiplication():
    F = gfq.GF.get(3)
    g = PermGroup.symmetric(3)
    a = algebra.group_algebra(F, g)
    assert a.dim == 6
    # unit element acts as identity
    x = np.zeros(6, dtype=np.int16)
    x[2] = 1
    assert np.array_equal(a.multiply(a.one, x), x)
    assert np.array_equal(a.multiply(x, a.one), x)


def test_radical_of_modular_group_algebra():
    F = gfq.GF.get(3)
    a = algebra.group_algebra(F, PermGroup.cyclic(3))
    rows, piv = a.radical_basis()
    assert rows.shape[0] == 2
    # radical elements are nilpotent here: J^3 = 0
    powers = a.radical_powers()
    assert [r.shape[0] for r in powers] == [3, 2, 1, 0]


def test_semisimple_quotient_splits():
    F = gfq.GF.get(5)
    a = algebra.group_algebra(F, PermGroup.symmetric(3))
    assert a.is_semisimple()
    abar, proj, lift = a.semisimple_quotient()
    assert abar.dim == a.dim


def test_primitive_and_central_idempotents():
    F = gfq.GF.get(7)
    a = algebra.group_algebra(F, PermGroup.cyclic(6))
    prims = a.primitive_idempotents(seed=0)
    assert len(prims) == 6
    for e in prims:
        assert a.is_idempotent(e)
    cents = a.central_primitive_idempotents(seed=0)
    total = np.zeros(a.dim, dtype=np.int16)
    for z in cents:
        total = F.add(total, z)
    assert np.array_equal(total, a.one)


def test_block_factors_partition_dimension():
    F = gfq.GF.get(3)
    a = algebra.group_algebra(F, PermGroup.symmetric(4))
    facs = a.block_factors(seed=0)
    assert sum(c.dim for c, _z in facs) == 24


def test_nakayama_algebra_shape():
    F = gfq.GF.get(7)
    n = algebra.nakayama_algebra(F, 2, 2)
    assert n.dim == 4
    shape = algebra.algebra_shape(n, seed=0)
    assert shape["simple_dims"] == [1, 1]
    assert shape["flags"]["is_nakayama"]
    assert shape["flags"]["is_self_injective"]
    assert not shape["flags"]["is_split_local"]


def test_self_injectivity_of_group_algebra():
    # group algebras are Frobenius, hence self-injective
    F = gfq.GF.get(2)
    a = algebra.group_algebra(F, PermGroup.symmetric(3))
    ok, pairs = a.self_injective_witness(seed=0)
    assert ok
    assert len(pairs) > 0


def test_self_injectivity_failure_detected():
    # k[x,y]/(x,y)^2: local, radical square zero of dim 3, not self-injective
    F = gfq.GF.get(5)
    mult = np.zeros((3, 3, 3), dtype=np.int16)
    one = np.array([1, 0, 0], dtype=np.int16)
    for i in range(3):
        mult[0, i, i] = 1
        mult[i, 0, i] = 1
    a = algebra.FinDimAlgebra(F, mult, one)
    assert a.is_local()
    ok, _w = a.self_injective_witness(seed=0)
    assert not ok


def test_group_algebra_is_symmetric_with_standard_form():
    F = gfq.GF.get(3)
    g = PermGroup.symmetric(3)
    a = algebra.group_algebra(F, g)
    flag, witnesses = a.is_symmetric(seed=0)
    assert flag
    # the standard symmetrizing form picks out the identity coefficient
    e_idx = [i for i, el in enumerate(g.elements()) if el.is_identity()][0]
    std = np.zeros(a.dim, dtype=np.int16)
    std[e_idx] = 1
    assert any(np.array_equal(w, std) for w in witnesses)


def test_center_of_group_algebra():
    F = gfq.GF.get(5)
    g = PermGroup.symmetric(3)
    a = algebra.group_algebra(F, g)
    z = a.center()[0]
    assert z.dim == 3   # three conjugacy classes


def test_corner_algebra():
    F = gfq.GF.get(7)
    a = algebra.nakayama_algebra(F, 2, 2)
    prims = a.primitive_idempotents(seed=0)
    C, rows, piv = a.corner(prims[0])
    assert C.dim == rows.shape[0]
    assert C.is_local()


def test_json_round_trip():
    F = gfq.GF.get(2, 2)
    a = algebra.nakayama_algebra(F, 3, 2)
    b = algebra.FinDimAlgebra.from_json(a.to_json())
    assert b.dim == a.dim
    assert np.array_equal(a.mult, b.mult)
    assert a.dumps() == b.dumps()


def test_split_local_detection():
    F = gfq.GF.get(3)
    a = algebra.group_algebra(F, PermGroup.cyclic(9))
    assert a.is_local()
    assert a.is_split_local()
