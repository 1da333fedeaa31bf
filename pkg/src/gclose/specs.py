"""Parsing of algebra specifications (JSON objects and preset strings).

An explicit specification looks like::

    {"field": {"kind": "rational"}, "rank": 2, "unit": ["1", "1"],
     "mul_table": [[["1","0"],["0","0"]], [["0","0"],["0","1"]]],
     "degree": {"kind": "regular"}}

Degree objects: ``{"kind": "regular"}``, ``{"kind": "matrix", "size": k}``,
``{"kind": "trivial", "n": n}``, ``{"kind": "power", "inner": {...},
"multiplicity": r}``, ``{"kind": "product", "factors": [spec, ...]}`` and
``{"kind": "cyclic", "K": spec, "sigma": [[...]], "gamma": "2"}``.

Presets are either objects such as ``{"preset": "matrix", "n": 3}`` or
strings such as ``"matrix:3"``, ``"quaternion:-1,-1"``,
``"product:trivial:1+matrix:2"`` and ``"groupring:1,1,2"``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import algebra as alg
from .algebra import DegreeStructure, StructureAlgebra
from .errors import GCloseError, SpecError
from .fields import QQ, Field, field_from_descriptor

PRESETS = {
    "split": "split:n        F^n with componentwise product, regular degree n",
    "trivial": "trivial:n      the base field as a degree-n algebra",
    "matrix": "matrix:n       Mat_n with its identity degree structure",
    "quadratic": "quadratic:d    F[x]/(x^2 - d), regular degree 2",
    "dual": "dual           F[x]/(x^2), regular degree 2",
    "quaternion": "quaternion:d,g (F(sqrt d)/F, conjugation, g) as a cyclic algebra of degree 2",
    "cyclic3": "cyclic3        degree-3 cyclic algebra over F[x]/(x^3 - 3x - 1), gamma = 2",
    "product": "product:a+b+.. product of presets, e.g. product:trivial:1+matrix:2",
    "groupring": "groupring:dims product of Mat_k over the dims list, e.g. groupring:1,1,2",
}


def _need(spec: dict, key: str, where: str) -> Any:
    if key not in spec:
        raise SpecError(f"{where}: missing field '{key}'")
    return spec[key]


def _int(x: Any, where: str, minimum: int = 1) -> int:
    try:
        v = int(x)
    except (TypeError, ValueError):
        raise SpecError(f"{where}: expected an integer, got {x!r}") from None
    if isinstance(x, bool) or v < minimum:
        raise SpecError(f"{where}: expected an integer >= {minimum}, got {x!r}")
    return v


def _field(spec: dict, default: Field = QQ) -> Field:
    if "field" not in spec:
        return default
    try:
        return field_from_descriptor(spec["field"])
    except GCloseError as exc:
        raise SpecError(f"field: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"field: malformed descriptor {spec['field']!r}") from exc


def parse_preset_string(s: str) -> dict:
    """``"matrix:3"`` -> ``{"preset": "matrix", "n": 3}`` and so on."""
    s = s.strip()
    name, _, arg = s.partition(":")
    if name == "product":
        if not arg:
            raise SpecError("preset product: needs factors, e.g. product:trivial:1+matrix:2")
        return {"preset": "product", "factors": [parse_preset_string(f) for f in arg.split("+")]}
    if name in ("split", "trivial", "matrix"):
        return {"preset": name, "n": _int(arg, f"preset {name}: n")}
    if name == "quadratic":
        if not arg:
            raise SpecError("preset quadratic: missing field 'd'")
        return {"preset": name, "d": arg}
    if name in ("dual", "cyclic3"):
        if arg:
            raise SpecError(f"preset {name}: takes no argument")
        return {"preset": name}
    if name == "quaternion":
        d, _, g = arg.partition(",")
        return {"preset": name, "d": d or "-1", "gamma": g or "-1"}
    if name == "groupring":
        if not arg:
            raise SpecError("preset groupring: missing field 'dims'")
        return {"preset": name, "dims": [_int(x, "preset groupring: dims") for x in arg.split(",")]}
    raise SpecError(f"preset: unknown preset {name!r} (known: {', '.join(PRESETS)})")


def _preset(spec: dict) -> tuple[StructureAlgebra, DegreeStructure]:
    name = spec["preset"]
    F = _field(spec)
    where = f"preset {name}"
    try:
        if name == "split":
            return alg.split_algebra(_int(_need(spec, "n", where), f"{where}: n"), F)
        if name == "trivial":
            return alg.trivial_algebra(_int(_need(spec, "n", where), f"{where}: n"), F)
        if name == "matrix":
            return alg.matrix_algebra(_int(_need(spec, "n", where), f"{where}: n"), F)
        if name == "quadratic":
            return alg.quadratic_algebra(F(_need(spec, "d", where)), F)
        if name == "dual":
            return alg.dual_numbers(F)
        if name == "quaternion":
            return alg.quaternion_algebra(F(spec.get("d", -1)), F(spec.get("gamma", -1)), F)
        if name == "cyclic3":
            return alg.cyclic3_algebra(F)
        if name == "groupring":
            dims = [_int(x, f"{where}: dims") for x in _need(spec, "dims", where)]
            return alg.semisimple_from_dims(dims, F)
        if name == "product":
            factors = _need(spec, "factors", where)
            if not isinstance(factors, list) or not factors:
                raise SpecError(f"{where}: field 'factors' must be a non-empty list")
            return alg.product_algebra([load_spec(f) for f in factors])
    except SpecError:
        raise
    except (TypeError, ValueError) as exc:
        if isinstance(exc, GCloseError):
            raise
        raise SpecError(f"{where}: {exc}") from exc
    raise SpecError(f"preset: unknown preset {name!r} (known: {', '.join(PRESETS)})")


def make_algebra(spec: dict) -> StructureAlgebra:
    """Validated algebra from an explicit specification."""
    if not isinstance(spec, dict):
        raise SpecError("algebra spec must be a JSON object")
    if "preset" in spec:
        return _preset(spec)[0]
    F = _field(spec)
    rank = _int(_need(spec, "rank", "algebra"), "rank")
    unit = _need(spec, "unit", "algebra")
    table = _need(spec, "mul_table", "algebra")
    if not isinstance(unit, list) or len(unit) != rank:
        raise SpecError(f"unit: expected a list of {rank} scalars")
    if (
        not isinstance(table, list)
        or len(table) != rank
        or any(not isinstance(r, list) or len(r) != rank for r in table)
        or any(not isinstance(c, list) or len(c) != rank for r in table for c in r)
    ):
        raise SpecError(f"mul_table: expected a {rank} x {rank} x {rank} array")
    try:
        table = [[[F(x) for x in c] for c in r] for r in table]
        unit = [F(x) for x in unit]
    except (TypeError, ValueError) as exc:
        if isinstance(exc, GCloseError):
            raise
        raise SpecError(f"mul_table/unit: {exc}") from exc
    return StructureAlgebra(F, table, unit, spec.get("name", "A"))


def _degree(spec: Any, A: StructureAlgebra) -> DegreeStructure:
    if not isinstance(spec, dict):
        raise SpecError("degree: expected an object with a 'kind' field")
    kind = _need(spec, "kind", "degree")
    if kind == "regular":
        return alg.Regular(A.rank)
    if kind == "matrix":
        return alg.MatrixIdentity(_int(_need(spec, "size", "degree"), "degree.size"))
    if kind == "trivial":
        return alg.TrivialDiag(_int(_need(spec, "n", "degree"), "degree.n"))
    if kind == "power":
        return alg.Power(_degree(_need(spec, "inner", "degree"), A), _int(_need(spec, "multiplicity", "degree"), "degree.multiplicity"))
    if kind == "product":
        factors = [load_spec(f) for f in _need(spec, "factors", "degree")]
        return alg.Product(tuple(factors))
    if kind == "cyclic":
        K = make_algebra(_need(spec, "K", "degree"))
        sigma = [[A.field(x) for x in row] for row in _need(spec, "sigma", "degree")]
        return alg.cyclic_algebra(K, sigma, A.field(_need(spec, "gamma", "degree")))[1]
    raise SpecError(f"degree.kind: unknown kind {kind!r}")


def load_spec(spec: Any) -> tuple[StructureAlgebra, DegreeStructure]:
    """Algebra and validated degree structure from a spec object or preset string."""
    if isinstance(spec, str):
        spec = parse_preset_string(spec)
    if not isinstance(spec, dict):
        raise SpecError("algebra spec must be a JSON object or preset string")
    if "preset" in spec:
        A, D = _preset(spec)
    else:
        A = make_algebra(spec)
        D = _degree(_need(spec, "degree", "algebra"), A)
    alg.validate_degree(A, D)
    return A, D


def normalize_spec(spec: Any) -> Any:
    """Canonical JSON-ready form of a spec (preset strings become objects)."""
    if isinstance(spec, str):
        spec = parse_preset_string(spec)
    return json.loads(json.dumps(spec, sort_keys=True, default=str))


def read_spec_file(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecError(f"spec file {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec file {path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _degree_to_spec(A: StructureAlgebra, D: DegreeStructure) -> dict:
    if isinstance(D, alg.Regular):
        return {"kind": "regular"}
    if isinstance(D, alg.MatrixIdentity):
        return {"kind": "matrix", "size": D.size}
    if isinstance(D, alg.TrivialDiag):
        return {"kind": "trivial", "n": D.n}
    if isinstance(D, alg.Power):
        return {"kind": "power", "inner": _degree_to_spec(A, D.inner), "multiplicity": D.multiplicity}
    if isinstance(D, alg.Product):
        return {"kind": "product", "factors": [algebra_to_spec(a, d) for a, d in D.factors]}
    if isinstance(D, alg.CyclicExplicit):
        F = A.field
        return {
            "kind": "cyclic",
            "K": algebra_to_spec(D.K, alg.Regular(D.K.rank)),
            "sigma": [[F.format(x) for x in row] for row in D.sigma],
            "gamma": F.format(D.gamma),
        }
    raise SpecError(f"cannot serialize degree structure {D!r}")


def algebra_to_spec(A: StructureAlgebra, D: DegreeStructure) -> dict:
    """Explicit specification that :func:`load_spec` maps back to ``(A, D)``."""
    F = A.field
    return {
        "name": A.name,
        "field": F.descriptor(),
        "rank": A.rank,
        "unit": [F.format(x) for x in A.unit],
        "mul_table": [[[F.format(x) for x in c] for c in r] for r in A.mul_table()],
        "degree": _degree_to_spec(A, D),
    }
