from __future__ import annotations

import json

import pytest

from gclose.errors import NonAssociative, SpecError
from gclose.specs import algebra_to_spec, load_spec, make_algebra, normalize_spec, parse_preset_string, read_spec_file

PRESET_STRINGS = [
    "split:3",
    "trivial:2",
    "matrix:2",
    "quadratic:2",
    "dual",
    "quaternion:-1,-1",
    "quaternion:2,3",
    "cyclic3",
    "product:trivial:1+matrix:2",
    "groupring:1,1,2",
]


@pytest.mark.parametrize("s", PRESET_STRINGS)
def test_round_trip_through_explicit_spec(s):
    A, D = load_spec(s)
    spec = json.loads(json.dumps(algebra_to_spec(A, D)))
    A2, D2 = load_spec(spec)
    assert A2 == A and D2 == D


def test_preset_objects():
    A, D = load_spec({"preset": "matrix", "n": 3})
    assert (A.rank, D.degree) == (9, 3)
    A, D = load_spec({"preset": "product", "factors": [{"preset": "trivial", "n": 1}, "matrix:2"]})
    assert (A.rank, D.degree) == (5, 3)
    A, D = load_spec({"preset": "split", "n": 2, "field": {"kind": "prime", "p": 7}})
    assert str(A.field) == "GF(7)"


def test_explicit_componentwise():
    spec = {
        "field": {"kind": "rational"},
        "rank": 2,
        "unit": ["1", "1"],
        "mul_table": [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]],
        "degree": {"kind": "regular"},
    }
    A, D = load_spec(spec)
    assert make_algebra(spec) == A
    assert D.degree == 2


@pytest.mark.parametrize(
    "spec, field",
    [
        ({"rank": 2, "unit": [1, 1]}, "mul_table"),
        ({"rank": 1, "unit": [1], "mul_table": [[[1, 2]]], "degree": {"kind": "regular"}}, "mul_table"),
        ({"rank": 1, "unit": [1], "mul_table": [[[1]]]}, "degree"),
        ({"rank": 1, "unit": [1], "mul_table": [[[1]]], "degree": {"kind": "nope"}}, "degree.kind"),
        ({"rank": 1, "unit": [1], "mul_table": [[[1]]], "degree": {"kind": "regular"}, "field": {"kind": "prime"}}, "field"),
        ({"preset": "matrix"}, "'n'"),
        ({"preset": "matrix", "n": 0}, "n"),
        ({"preset": "groupring", "dims": [1, "x"]}, "dims"),
        ("weird:1", "preset"),
    ],
)
def test_malformed_specs_name_the_field(spec, field):
    with pytest.raises(SpecError) as err:
        load_spec(spec)
    assert field in str(err.value)


def test_non_associative_spec():
    table = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
    ]
    with pytest.raises(NonAssociative):
        make_algebra({"rank": 3, "unit": [1, 0, 0], "mul_table": table})


def test_parse_and_normalize():
    assert parse_preset_string("groupring:1,1,2") == {"preset": "groupring", "dims": [1, 1, 2]}
    assert normalize_spec("matrix:3") == {"n": 3, "preset": "matrix"}


def test_read_spec_file(tmp_path):
    p = tmp_path / "a.json"
    p.write_text("{not json")
    with pytest.raises(SpecError):
        read_spec_file(p)
    with pytest.raises(SpecError):
        read_spec_file(tmp_path / "missing.json")
