from __future__ import annotations

import random
from itertools import combinations
from math import comb

import pytest

import properties as P
from gclose.algebra import dual_numbers, matrix_algebra, product_algebra, quadratic_algebra, split_algebra, trivial_algebra
from gclose.errors import DimensionGuardExceeded, WrongShape
from gclose.hermitian import (
    OUT_OF_SCOPE,
    diagonal_generator,
    hermitian_product_check,
    hermitian_space,
    mat_action,
    preserves,
    restricted_trace,
    vinberg_catalog,
)
from gclose.linalg import Matrix
from gclose.specs import load_spec


def test_dimension_examples(closures):
    assert hermitian_space(closures.get(*trivial_algebra(3)), 3).dim == 10
    assert hermitian_space(closures.get(*split_algebra(3)), 3).dim == 27
    assert hermitian_space(closures.get(*matrix_algebra(3)), 3).dim == 84
    for maker in (lambda: split_algebra(2), lambda: quadratic_algebra(2), dual_numbers):
        assert hermitian_space(closures.get(*maker()), 2).dim == 4


@pytest.mark.parametrize("n, m", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_endv_law(n, m, closures):
    assert hermitian_space(closures.get(*matrix_algebra(n)), m).dim == comb(m * n, n)


@pytest.mark.parametrize("m", [2, 3])
def test_quadratic_law(m, closures):
    assert hermitian_space(closures.get(*quadratic_algebra(3)), m).dim == m + 2 * m * (m - 1) // 2 == m * m


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_split_law(n, m, closures):
    assert hermitian_space(closures.get(*split_algebra(n)), m).dim == m**n


def test_basis_is_fixed_by_generators(closures):
    gc = closures.get(*split_algebra(3))
    H = hermitian_space(gc, 2)
    for t in (1, 2):
        d = diagonal_generator(gc, 2, t)
        assert all(d.apply(r) == r for r in H.space.rows)


def test_identity_gamma(closures):
    A, D = split_algebra(3)
    gc = closures.get(A, D)
    gamma = [[A.one(), A.zero()], [A.zero(), A.one()]]
    assert mat_action(gc, 2, gamma) == Matrix.identity(A.field, gc.closure_dim * 8)
    with pytest.raises(WrongShape):
        mat_action(gc, 2, [[A.one()]])
    with pytest.raises(WrongShape):
        hermitian_space(gc, 0)


def _matmul(A, x, y):
    m = len(x)
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = A.zero()
            for k in range(m):
                acc = A.add(acc, A.mul(x[i][k], y[k][j]))
            row.append(acc)
        out.append(row)
    return out


def test_mat_action_is_multiplicative(closures):
    A, D = split_algebra(2)
    gc = closures.get(A, D)
    rng = random.Random(0)
    for _ in range(20):
        g1 = [[A.random_element(rng) for _ in range(2)] for _ in range(2)]
        g2 = [[A.random_element(rng) for _ in range(2)] for _ in range(2)]
        assert mat_action(gc, 2, g1) @ mat_action(gc, 2, g2) == mat_action(gc, 2, _matmul(A, g1, g2))


@pytest.mark.parametrize("spec, m", [("split:3", 2), ("matrix:2", 2), ("trivial:3", 3), ("quaternion:-1,-1", 2)])
def test_action_properties(spec, m, closures):
    H = hermitian_space(closures.get(*load_spec(spec)), m)
    assert P.hermitian_action(H) == []


def _principal_minor_sum(big: list[list]) -> object:
    total = 0
    for i, j in combinations(range(len(big)), 2):
        total += big[i][i] * big[j][j] - big[i][j] * big[j][i]
    return total


def test_mat2_trace_matches_exterior_square(closures):
    # on H = Lambda^2(V (x) U) (x) Lambda^2 V*, gamma acts by Lambda^2 of the
    # 4x4 matrix it defines on V (x) U, so the trace is the sum of 2x2 principal minors
    M, D = matrix_algebra(2)
    gc = closures.get(M, D)
    H = hermitian_space(gc, 2)
    rng = random.Random(0)
    for _ in range(10):
        a = M.random_element(rng)
        gamma = [[a, M.zero()], [M.zero(), M.one()]]
        op = mat_action(gc, 2, gamma)
        assert preserves(H, op)
        # rows (v, a), columns (w, b); entry (gamma_ab)_{vw}
        big = [[gamma[r % 2][c % 2][2 * (r // 2) + c // 2] for c in range(4)] for r in range(4)]
        assert restricted_trace(H, op) == _principal_minor_sum(big)


@pytest.mark.parametrize(
    "factors, m, dim",
    [
        (lambda: [trivial_algebra(1), trivial_algebra(3)], 2, 8),
        (lambda: [trivial_algebra(1), matrix_algebra(2)], 3, 45),
        (lambda: [trivial_algebra(1), quadratic_algebra(2)], 2, 8),
    ],
)
def test_product_check(factors, m, dim, closures):
    rep = hermitian_product_check(factors(), m, closures)
    assert rep.passed, rep.to_json()
    assert rep.dims["product"] == dim


def test_product_of_factor_spaces_direct(closures):
    A, D = product_algebra([trivial_algebra(1), split_algebra(2)])
    assert hermitian_space(closures.get(A, D), 2).dim == 2 * 4


def test_guard(closures):
    gc = closures.get(*matrix_algebra(3))
    with pytest.raises(DimensionGuardExceeded) as err:
        hermitian_space(gc, 3, cap=100)
    assert "--force" in str(err.value)


def test_catalog_desk(closures):
    report = vinberg_catalog("desk", cache=closures)
    assert report["passed"]
    rows = {r["row"]: r for r in report["rows"]}
    want = {"1": 40, "2": 27, "4": 45, "6": 84, "8": 18, "9": 8, "10": 10,
            "ex:1,2": 1, "ex:2,2": 6, "ex:3,2": 15, "ex:2,3": 20}
    for k, v in want.items():
        assert rows[k]["computed_dim"] == v == rows[k]["expected_dim"]
    assert rows["1"]["method"] == "product-formula"
    assert rows["5"]["method"] == rows["7"]["method"] == OUT_OF_SCOPE
    assert rows["5"]["computed_dim"] is None
    assert "3" not in rows
    keys = {"row", "group", "representation", "m", "n", "algebra", "expected_dim", "computed_dim", "method", "ms"}
    assert all(keys <= set(r) for r in report["rows"])


def test_catalog_override_fails(closures):
    report = vinberg_catalog("desk", cache=closures, expected_override={"6": 85})
    assert not report["passed"]
    with pytest.raises(ValueError):
        vinberg_catalog("desk", cache=closures, expected_override={"99": 1})
    with pytest.raises(ValueError):
        vinberg_catalog("huge")
