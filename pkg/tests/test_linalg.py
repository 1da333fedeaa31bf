from __future__ import annotations

import itertools
import random

import pytest

from gclose.errors import DimensionMismatch
from gclose.fields import GF, QQ
from gclose.linalg import EchelonForm, Matrix, Subspace, intersect_kernels, kernel, reduce_against, rref


def M(rows, F=QQ):
    return Matrix.from_dense(F, rows)


def test_rref_dependent_rows():
    s = rref(M([[2, 4], [1, 2]]))
    assert list(s.pivots) == [0]
    assert list(s.rows) == [{0: 1, 1: 2}]


def test_rref_identity():
    s = rref(M([[0, 1], [1, 0]]))
    assert list(s.pivots) == [0, 1]
    assert list(s.rows) == [{0: 1}, {1: 1}]


def test_rref_gf2():
    F = GF(2)
    s = rref(M([[1, 1], [1, -1]], F))
    assert s.dim == 1
    assert list(s.rows) == [{0: F(1), 1: F(1)}]


def test_rref_is_order_independent():
    rng = random.Random(0)
    rows = [[rng.randint(-2, 2) for _ in range(7)] for _ in range(5)]
    base = rref(M(rows))
    for _ in range(10):
        rng.shuffle(rows)
        assert rref(M(rows)) == base


def test_rref_idempotent_and_dense_path_agree():
    rng = random.Random(1)
    for _ in range(20):
        rows = [[rng.choice([0, 0, 1, -1, 2]) for _ in range(6)] for _ in range(5)]
        s = rref(M(rows))
        assert rref(s.basis_matrix()) == s
        ech = EchelonForm(QQ, 6)
        for r in rows:
            ech.insert({j: QQ(x) for j, x in enumerate(r) if x})
        assert ech.freeze() == s


def test_reduce_against_examples():
    s = Subspace.span(QQ, 2, [[1, 0]])
    assert reduce_against(s, [3, 5]) == [0, 5]
    assert reduce_against(Subspace.full(QQ, 2), [3, 5]) == [0, 0]
    assert reduce_against(Subspace.span(QQ, 2, [[1, 2]]), [1, 3]) == [0, 1]
    with pytest.raises(DimensionMismatch):
        reduce_against(s, [1, 2, 3])


def test_reduce_zero_iff_rank_unchanged():
    rng = random.Random(2)
    for _ in range(30):
        rows = [[rng.randint(-1, 1) for _ in range(4)] for _ in range(2)]
        s = rref(M(rows))
        v = [rng.randint(-1, 1) for _ in range(4)]
        grown = rref(M(rows + [v]))
        assert (not any(reduce_against(s, v))) == (grown.dim == s.dim)


def test_intersect_kernels_examples():
    z = Matrix.zeros(QQ, 2)
    assert intersect_kernels([z]) == Subspace.full(QQ, 2)
    assert intersect_kernels([Matrix.identity(QQ, 2)]).dim == 0
    swap = M([[0, 1], [1, 0]])
    k = intersect_kernels([swap - Matrix.identity(QQ, 2)])
    assert list(k.rows) == [{0: 1, 1: 1}]
    with pytest.raises(DimensionMismatch):
        intersect_kernels([z, Matrix.identity(QQ, 3)])


def test_rank_nullity_exhaustive_gf2():
    F = GF(2)
    for bits in itertools.product([0, 1], repeat=9):
        m = M([list(bits[0:3]), list(bits[3:6]), list(bits[6:9])], F)
        r = m.rank()
        k = kernel(m)
        assert r + k.dim == 3
        for row in k.rows:
            assert not m.apply(row)


def test_rank_nullity_random_rationals():
    rng = random.Random(3)
    for _ in range(25):
        rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(4)]
        m = M(rows)
        k = kernel(m)
        assert m.rank() + k.dim == 5
        assert all(not m.apply(row) for row in k.rows)


def test_matrix_products_and_kron():
    a = M([[1, 2], [3, 4]])
    b = M([[0, 1], [1, 0]])
    assert (a @ b).to_dense() == [[2, 1], [4, 3]]
    assert a @ [1, 1] == [3, 7]
    k = a.kron(b)
    assert k.shape == (4, 4)
    assert k[0, 1] == 1 and k[2, 3] == 4 and k[3, 3] == 0
    assert a.trace() == 5
    assert a.transpose().to_dense() == [[1, 3], [2, 4]]


def test_subspace_map_scalars_keeps_rref():
    from gclose.fields import QuadraticField

    K = QuadraticField(2)
    s = rref(M([[1, 2, 3], [0, 1, 1]]))
    t = s.map_scalars(K, K)
    assert t == rref(Matrix.from_dense(K, [[1, 2, 3], [0, 1, 1]]))
