from __future__ import annotations

import json
from itertools import product as iproduct

import pytest

from gclose.algebra import (
    cyclic3_algebra,
    dual_numbers,
    matrix_algebra,
    quadratic_algebra,
    quaternion_algebra,
    split_algebra,
    trivial_algebra,
)
from gclose.checks import (
    IsoReport,
    check_csa_dimension,
    check_cubic_split,
    check_endv,
    check_group_ring,
    check_product_formula,
    check_quadratic,
    induced_character,
)
from gclose.errors import WrongDegree, WrongShape
from gclose.perms import cycle_representative, partitions

QUADRATICS = {
    "split2": lambda: split_algebra(2),
    "sqrt2": lambda: quadratic_algebra(2),
    "dual": dual_numbers,
}


@pytest.mark.parametrize("name", ["split2", "sqrt2", "dual", "quaternion"])
def test_check_quadratic(name, closures):
    A, D = quaternion_algebra() if name == "quaternion" else QUADRATICS[name]()
    rep = check_quadratic(A, D, cache=closures)
    assert rep.passed, rep.witness
    assert rep.samples == 20 and rep.seed == 0
    assert {"kernel_contains_ideal", "induced_bijective", "place_equivariance", "swap_is_conjugation"} <= set(rep.checks)


def test_check_quadratic_wrong_degree():
    with pytest.raises(WrongDegree):
        check_quadratic(*split_algebra(3))


@pytest.mark.parametrize("name", sorted(QUADRATICS))
def test_check_cubic_split(name, closures):
    rep = check_cubic_split(*QUADRATICS[name](), cache=closures)
    assert rep.passed, rep.witness
    assert rep.dims["closure"] == 6
    assert {"place_1_law", "place_2_law", "place_3_law", "s3_equivariance"} <= set(rep.checks)


def test_check_cubic_split_shape():
    with pytest.raises(WrongShape):
        check_cubic_split(*split_algebra(3))


def test_check_endv_2(closures):
    rep = check_endv(2, cache=closures)
    assert rep.passed, rep.witness
    assert rep.dims["closure"] == 4
    assert rep.details["character"] == {"1,1": "4", "2": "-2"}


def test_check_endv_3(closures):
    rep = check_endv(3, cache=closures)
    assert rep.passed, rep.witness
    assert rep.dims["closure"] == 27
    # sign(sigma) 3^cycles(sigma); the transposition class is -9
    assert rep.details["character"] == {"1,1,1": "27", "2,1": "-9", "3": "3"}
    assert rep.details["collapse_cases"] == 27 * 27
    assert rep.checks["collapse_rule"]


def _young_permutation_character(parts, sigma):
    # Ind of the trivial character from a Young subgroup: fixed words with content `parts`
    n = sum(parts)
    count = 0
    for w in iproduct(range(len(parts)), repeat=n):
        if [w.count(b) for b in range(len(parts))] != list(parts):
            continue
        if all(w[sigma[k] - 1] == w[k] for k in range(n)):
            count += 1
    return count


@pytest.mark.parametrize("parts", [(1, 1), (1, 2), (2, 2), (1, 1, 2), (2, 3)])
def test_induced_character_oracle(parts):
    ones = [{k: 1 for k in (",".join(map(str, p)) for p in partitions(b))} for b in parts]
    for p in partitions(sum(parts)):
        s = cycle_representative(p)
        assert induced_character(parts, ones, s) == _young_permutation_character(parts, s)


@pytest.mark.parametrize(
    "factors, dim",
    [
        (lambda: [trivial_algebra(1), trivial_algebra(1)], 2),
        (lambda: [trivial_algebra(1), quadratic_algebra(2)], 6),
        (lambda: [trivial_algebra(1), matrix_algebra(2)], 12),
        (lambda: [quadratic_algebra(2), matrix_algebra(2)], 48),
        (lambda: [trivial_algebra(1), trivial_algebra(1), matrix_algebra(2)], 48),
    ],
)
def test_check_product_formula(factors, dim, closures):
    rep = check_product_formula(factors(), cache=closures)
    assert rep.passed, rep.witness
    assert rep.dims["closure"] == dim


def test_product_formula_factor_limit():
    with pytest.raises(WrongShape):
        check_product_formula([trivial_algebra(1)] * 4)


@pytest.mark.parametrize("dims, dim", [([1], 1), ([1, 1], 2), ([1, 1, 2], 48)])
def test_check_group_ring(dims, dim, closures):
    rep = check_group_ring(dims, cache=closures)
    assert rep.passed and rep.dims["closure"] == dim


@pytest.mark.parametrize(
    "maker, dim", [(quaternion_algebra, 4), (cyclic3_algebra, 27), (lambda: matrix_algebra(2), 4)]
)
def test_check_csa_dimension(maker, dim, closures):
    rep = check_csa_dimension(*maker(), cache=closures)
    assert rep.passed, rep.witness
    assert rep.dims["closure"] == dim


def test_csa_rank_guard():
    with pytest.raises(WrongShape):
        check_csa_dimension(*split_algebra(2))


def test_report_witness_and_json():
    rep = IsoReport("x")
    assert not rep.passed  # no checks recorded yet
    rep.record("a", True)
    rep.record("b", False, "counterexample 1")
    rep.record("b", False, "counterexample 2")
    assert not rep.passed and rep.witness == "b: counterexample 1"
    assert json.loads(str(rep))["checks"] == {"a": True, "b": False}
