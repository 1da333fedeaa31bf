"""Galois closure ``G(A) = A^{(x)n} / I`` and its descended actions.

The left ideal ``I`` is generated by the relations ``eps_j(u_l)`` and is found
by saturating their span under the place operators ``L(u_k, i)``.  Because
the subspace is kept in canonical RREF, the quotient basis (the non-pivot
columns) and every matrix derived from it are independent of the order in
which vectors were discovered.
"""

from __future__ import annotations

import logging
import os
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Any, Sequence

from .algebra import (
    DegreeStructure,
    Element,
    StructureAlgebra,
    change_degree_field,
    validate_degree,
)
from .errors import DimensionGuardExceeded, IdealNotStable
from .fields import Field
from .linalg import EchelonForm, Matrix, Subspace, Vector
from .perms import adjacent, adjacent_word, cycle_representative, partitions, shape_key
from .tensor import apply_perm, elem_sym_relations, place_operators

log = logging.getLogger(__name__)

DEFAULT_CAP = 100_000
STRETCH_AT = 65_536


def default_cap() -> int:
    env = os.environ.get("GCLOSE_DIM_CAP")
    return int(env) if env else DEFAULT_CAP


def default_threads() -> int:
    env = os.environ.get("GCLOSE_THREADS")
    return max(1, int(env)) if env else 1


def ideal_generators(A: StructureAlgebra, D: DegreeStructure) -> list[Vector]:
    """``eps_j(u_l)`` for ``l`` over the basis and ``j = 1..n`` (basis-major)."""
    out = []
    for l in range(A.rank):
        out.extend(elem_sym_relations(A, D, A.basis(l)))
    return out


def saturate_left_ideal(
    gens: Sequence[Vector],
    A: StructureAlgebra,
    n: int,
    cap: int | None = None,
    force: bool = False,
    threads: int | None = None,
    stats: dict | None = None,
) -> Subspace:
    """Smallest subspace containing ``gens`` and stable under every ``L(u_k, i)``.

    Worklist rows are processed first in, first out; each row is hit by the
    operators in ``(place, basis index)`` order and nonzero residues are
    inserted and queued.  With ``threads > 1`` the operator products for a
    batch of rows are computed in a pool, but insertion stays sequential in
    the same order, so the run is step-for-step identical to the serial one.
    """
    ambient = A.rank**n
    cap = default_cap() if cap is None else cap
    if ambient > cap and not force:
        raise DimensionGuardExceeded(ambient, cap)
    threads = default_threads() if threads is None else max(1, threads)
    ech = EchelonForm(A.field, ambient)
    work: deque = deque()
    for g in gens:
        res = ech.insert(g)
        if res is not None:
            work.append(res)
    if not work:
        return ech.freeze()
    ops = place_operators(A, n)
    applied = 0

    def images(row):
        return [op.apply(row) for op in ops]

    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        while work:
            if pool is None:
                batch = [images(work.popleft())]
            else:
                rows = [work.popleft() for _ in range(min(len(work), 8 * threads))]
                batch = list(pool.map(images, rows))
            for imgs in batch:
                for v in imgs:
                    applied += 1
                    if not v:
                        continue
                    res = ech.insert(v)
                    if res is not None:
                        work.append(res)
    finally:
        if pool is not None:
            pool.shutdown()
    if stats is not None:
        stats["operator_applications"] = applied
    return ech.freeze()


@dataclass
class GaloisClosure:
    algebra: StructureAlgebra
    degree: DegreeStructure
    n: int
    ambient_dim: int
    ideal: Subspace
    closure_dim: int
    basis_columns: list[int]
    act: list[list[Matrix]]  # act[i-1][k]: place i, basis element u_k
    sgen: list[Matrix]  # sgen[t-1]: transposition (t, t+1)
    timings_ms: dict = dc_field(default_factory=dict)
    stretch: bool = False

    @property
    def field(self) -> Field:
        return self.algebra.field

    def project(self, v: Vector) -> list:
        """Quotient coordinates of an ambient vector."""
        res = self.ideal.reduce(v)
        z = self.field.zero
        return [res.get(c, z) for c in self.basis_columns]

    def lift(self, q: Sequence[Any]) -> Vector:
        return {c: x for c, x in zip(self.basis_columns, q) if x}

    def projection_matrix(self) -> Matrix:
        cols = []
        pos = {c: i for i, c in enumerate(self.basis_columns)}
        for x in range(self.ambient_dim):
            res = self.ideal.reduce({x: self.field.one})
            cols.append({pos[c]: y for c, y in res.items() if c in pos})
        return Matrix.from_columns(self.field, self.closure_dim, cols)

    def lift_matrix(self) -> Matrix:
        one = self.field.one
        return Matrix.from_columns(self.field, self.ambient_dim, [{c: one} for c in self.basis_columns])

    def act_element(self, a: Element, i: int) -> Matrix:
        """Descended action of ``a`` in place ``i``."""
        out = Matrix.zeros(self.field, self.closure_dim)
        for k, x in enumerate(a):
            if x:
                out = out + self.act[i - 1][k].scale(x)
        return out

    def descended_perm(self, sigma: Sequence[int]) -> Matrix:
        """Action of ``sigma`` on the quotient, multiplied out from its
        minimal adjacent-transposition word."""
        out = Matrix.identity(self.field, self.closure_dim)
        for t in adjacent_word(tuple(sigma)):
            out = out @ self.sgen[t - 1]
        return out

    def sn_character(self) -> dict[str, Any]:
        return sn_character(self)


def _descend(gc_ideal: Subspace, cols: list[int], field: Field, image) -> Matrix:
    pos = {c: i for i, c in enumerate(cols)}
    one = field.one
    out_cols = []
    for c in cols:
        res = gc_ideal.reduce(image({c: one}))
        out_cols.append({pos[k]: x for k, x in res.items() if k in pos})
    return Matrix.from_columns(field, len(cols), out_cols)


def verify_stability(A: StructureAlgebra, n: int, ideal: Subspace) -> None:
    """Raise :class:`IdealNotStable` unless every place operator and adjacent
    transposition maps each ideal row back into the ideal."""
    ops = place_operators(A, n)
    m = A.rank
    for r, row in enumerate(ideal.rows):
        for idx, op in enumerate(ops):
            if ideal.reduce(op.apply(row)):
                i, k = divmod(idx, m)
                raise IdealNotStable(f"L(u{k}, {i + 1}) moves ideal row {r} out of the ideal")
        for t in range(1, n):
            if ideal.reduce(apply_perm(n, adjacent(n, t), m, row)):
                raise IdealNotStable(f"transposition ({t} {t + 1}) moves ideal row {r} out of the ideal")


def galois_closure(
    A: StructureAlgebra,
    D: DegreeStructure,
    cap: int | None = None,
    force: bool = False,
    threads: int | None = None,
    verify: bool = True,
) -> GaloisClosure:
    validate_degree(A, D)
    n, m = D.degree, A.rank
    ambient = m**n
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    gens = ideal_generators(A, D)
    timings["generators"] = (time.perf_counter() - t0) * 1000
    t0 = time.perf_counter()
    stats: dict = {}
    ideal = saturate_left_ideal(gens, A, n, cap=cap, force=force, threads=threads, stats=stats)
    timings["saturation"] = (time.perf_counter() - t0) * 1000
    if verify:
        t0 = time.perf_counter()
        verify_stability(A, n, ideal)
        timings["stability"] = (time.perf_counter() - t0) * 1000
    t0 = time.perf_counter()
    cols = ideal.nonpivots()
    ops = place_operators(A, n)
    act = [[_descend(ideal, cols, A.field, ops[(i - 1) * m + k].apply) for k in range(m)] for i in range(1, n + 1)]
    sgen = [
        _descend(ideal, cols, A.field, lambda v, t=t: apply_perm(n, adjacent(n, t), m, v)) for t in range(1, n)
    ]
    timings["descent"] = (time.perf_counter() - t0) * 1000
    log.info("closure %s: ambient %d, ideal %d, closure %d", A.name, ambient, ideal.dim, len(cols))
    return GaloisClosure(
        algebra=A,
        degree=D,
        n=n,
        ambient_dim=ambient,
        ideal=ideal,
        closure_dim=len(cols),
        basis_columns=cols,
        act=act,
        sgen=sgen,
        timings_ms=timings,
        stretch=ambient >= STRETCH_AT,
    )


def sn_character(gc: GaloisClosure) -> dict[str, Any]:
    """Trace of the descended action on one representative per cycle type,
    keyed ``"2,1"`` and so on."""
    return {shape_key(s): gc.descended_perm(cycle_representative(s)).trace() for s in partitions(gc.n)}


def verify_membership(gc: GaloisClosure, a: Sequence[Any], j: int) -> bool:
    """Whether ``eps_j(a)`` lies in the ideal generated from basis elements."""
    rel = elem_sym_relations(gc.algebra, gc.degree, tuple(gc.field(x) for x in a))[j - 1]
    return not gc.ideal.reduce(rel)


@dataclass
class BaseChangeReport:
    source_field: str
    target_field: str
    source_dim: int
    target_dim: int
    ideal_equal: bool

    @property
    def passed(self) -> bool:
        return self.source_dim == self.target_dim and self.ideal_equal

    def to_json(self) -> dict:
        return {
            "source_field": self.source_field,
            "target_field": self.target_field,
            "source_dim": self.source_dim,
            "target_dim": self.target_dim,
            "ideal_equal": self.ideal_equal,
            "passed": self.passed,
        }


def base_change_check(
    A: StructureAlgebra, D: DegreeStructure, ext: Field, gc: GaloisClosure | None = None, **kw
) -> BaseChangeReport:
    """Compare ``G(A/F)`` with ``G(A_S/S)`` for a supported extension ``S``.

    The ideal of the extended algebra must equal the ``S``-span of the
    original ideal; since embeddings preserve canonical RREF this is a
    comparison of the mapped rows.
    """
    embed = A.field.extension_map(ext)
    gc = gc or galois_closure(A, D, **kw)
    AS = A.change_field(ext, embed)
    DS = change_degree_field(D, ext, embed)
    gcs = galois_closure(AS, DS, **kw)
    mapped = gc.ideal.map_scalars(ext, embed)
    return BaseChangeReport(str(A.field), str(ext), gc.closure_dim, gcs.closure_dim, mapped == gcs.ideal)


def closure_report(gc: GaloisClosure, spec: Any = None, dump_actions: bool = False) -> dict:
    field = gc.field
    out = {
        "algebra": spec,
        "n": gc.n,
        "ambient_dim": gc.ambient_dim,
        "ideal_dim": gc.ideal.dim,
        "closure_dim": gc.closure_dim,
        "stretch": gc.stretch,
        "characters": {k: field.format(v) for k, v in sn_character(gc).items()},
        "timings_ms": {k: round(v, 3) for k, v in gc.timings_ms.items()},
    }
    if dump_actions:
        def fmt(mat: Matrix):
            return [[field.format(x) for x in row] for row in mat.to_dense()]

        out["basis_columns"] = gc.basis_columns
        out["actions"] = {
            f"{i + 1}:{k}": fmt(mat) for i, row in enumerate(gc.act) for k, mat in enumerate(row)
        }
        out["transpositions"] = {f"{t + 1}": fmt(mat) for t, mat in enumerate(gc.sgen)}
    return out
