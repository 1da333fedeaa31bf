from __future__ import annotations

import random

import pytest

from gclose.algebra import TrivialDiag, matrix_algebra, split_algebra, trivial_algebra
from gclose.errors import DimensionMismatch, InvalidPermutation, WrongDegree
from gclose.linalg import Matrix
from gclose.perms import adjacent, all_perms, compose
from gclose.tensor import (
    elem_sym_relation,
    elem_sym_relations,
    left_mul_operator,
    linear_index,
    multi_index,
    perm_operator,
    place_embed,
    pure_tensor,
    unit_tensor,
)


def test_big_endian_indexing():
    assert linear_index((1, 0, 2), 3) == 11
    assert multi_index(11, 3, 3) == (1, 0, 2)
    for x in range(27):
        assert linear_index(multi_index(x, 3, 3), 3) == x
    with pytest.raises(DimensionMismatch):
        linear_index((3,), 3)


def test_place_embed_examples():
    A, _ = split_algebra(2)
    assert place_embed(A, 3, A.one(), 2) == unit_tensor(A, 3)
    # (0,1) (x) (1,1) = e2 (x) e1 + e2 (x) e2
    assert place_embed(A, 2, A.element([0, 1]), 1) == {2: 1, 3: 1}
    M, _ = matrix_algebra(2)
    v = place_embed(M, 2, M.basis(0), 2)
    assert v == {0: 1, 12: 1}
    with pytest.raises(DimensionMismatch):
        place_embed(A, 2, A.one(), 3)


def test_left_mul_operator_laws():
    M, _ = matrix_algebra(2)
    n = 2
    assert left_mul_operator(M, n, M.one(), 1) == Matrix.identity(M.field, 16)
    rng = random.Random(0)
    for _ in range(20):
        a, b = M.random_element(rng), M.random_element(rng)
        La1, Lb2 = left_mul_operator(M, n, a, 1), left_mul_operator(M, n, b, 2)
        assert La1 @ Lb2 == Lb2 @ La1
        for i in (1, 2):
            assert left_mul_operator(M, n, a, i) @ left_mul_operator(M, n, b, i) == left_mul_operator(M, n, M.mul(a, b), i)


def test_left_mul_matches_place_embedding():
    A, _ = split_algebra(3)
    rng = random.Random(1)
    for _ in range(10):
        a, b = A.random_element(rng), A.random_element(rng)
        lhs = left_mul_operator(A, 3, a, 2).apply(place_embed(A, 3, b, 2))
        assert lhs == place_embed(A, 3, A.mul(a, b), 2)


def test_perm_operator_examples():
    assert perm_operator(3, (1, 2, 3), 2) == Matrix.identity(perm_operator(3, (1, 2, 3), 2).field, 8)
    P = perm_operator(2, (2, 1), 2)
    assert P.to_dense() == [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    with pytest.raises(InvalidPermutation):
        perm_operator(2, (1, 1), 2)


def test_perm_operator_is_homomorphism():
    for s in all_perms(3):
        for t in all_perms(3):
            assert perm_operator(3, compose(s, t), 2) == perm_operator(3, s, 2) @ perm_operator(3, t, 2)


def test_perm_conjugates_place_operators():
    M, _ = matrix_algebra(2)
    n = 3
    rng = random.Random(0)
    for t in range(1, n):
        s = adjacent(n, t)
        P = perm_operator(n, s, M.rank)
        for _ in range(5):
            a = M.random_element(rng)
            for i in range(1, n + 1):
                assert P @ left_mul_operator(M, n, a, i) == left_mul_operator(M, n, a, s[i - 1]) @ P


def test_relation_examples():
    A, D = trivial_algebra(4)
    assert elem_sym_relation(A, D, 4, (A.field(5),), 1) == {}
    B, DB = split_algebra(2)
    # a(1) + a(2) - 1 for a = (1,0): e1(x)e1 - e2(x)e2
    assert elem_sym_relation(B, DB, 2, B.element([1, 0]), 1) == {0: 1, 3: -1}
    with pytest.raises(WrongDegree):
        elem_sym_relation(B, DB, 3, B.one(), 1)
    with pytest.raises(DimensionMismatch):
        elem_sym_relation(B, DB, 2, B.one(), 3)


def test_trivial_diag_relations_vanish():
    for n in range(1, 6):
        A, D = trivial_algebra(n)
        assert isinstance(D, TrivialDiag)
        assert all(not r for r in elem_sym_relations(A, D, (A.field(3),)))


def test_relations_are_symmetric():
    M, D = matrix_algebra(3)
    rng = random.Random(2)
    a = M.random_element(rng)
    rels = elem_sym_relations(M, D, a)
    for s in all_perms(3):
        P = perm_operator(3, s, M.rank)
        for r in rels:
            assert P.apply(r) == r


def test_e_n_is_product_of_places():
    A, D = split_algebra(3)
    rng = random.Random(3)
    a = A.random_element(rng)
    # e_3 = a(1) a(2) a(3) . 1 = a (x) a (x) a
    top = elem_sym_relations(A, D, a)[2]
    s3 = a[0] * a[1] * a[2]
    want = pure_tensor(A, [a, a, a])
    for k, x in unit_tensor(A, 3).items():
        want[k] = want.get(k, 0) - s3 * x
    assert top == {k: x for k, x in want.items() if x}
