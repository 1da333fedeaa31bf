"""Deterministic exact linear algebra over the fields in :mod:`gclose.fields`.

Vectors are sparse ``dict[int, scalar]`` maps with no stored zeros.
Subspaces are always kept in fully reduced row-echelon form (pivot entries 1,
pivot columns zero in every other row, pivots increasing), which makes the
basis a canonical invariant of the subspace: two :class:`Subspace` objects
describe the same set exactly when their rows compare equal.
"""

from __future__ import annotations

from typing import Any, Iterable, Mapping, Sequence

from .errors import DimensionMismatch
from .fields import Field

Vector = dict  # dict[int, scalar], no zero values

DENSE_FILL = 0.5


def as_vector(v: Mapping[int, Any] | Sequence[Any]) -> Vector:
    """Sparse copy of ``v`` (a mapping or a dense sequence)."""
    if isinstance(v, Mapping):
        return {int(k): x for k, x in v.items() if x}
    return {k: x for k, x in enumerate(v) if x}


def dense(v: Mapping[int, Any], n: int, zero: Any) -> list:
    out = [zero] * n
    for k, x in v.items():
        out[k] = x
    return out


def axpy(y: Vector, c: Any, x: Mapping[int, Any]) -> Vector:
    """``y += c * x`` in place; returns ``y``."""
    if not c:
        return y
    for k, xv in x.items():
        cur = y.get(k)
        if cur is None:
            y[k] = c * xv
        else:
            new = cur + c * xv
            if new:
                y[k] = new
            else:
                del y[k]
    return y


def scaled(c: Any, x: Mapping[int, Any]) -> Vector:
    if not c:
        return {}
    return {k: c * xv for k, xv in x.items()}


def add(x: Mapping[int, Any], y: Mapping[int, Any]) -> Vector:
    out = dict(x)
    return axpy(out, 1, y)


class Matrix:
    """Sparse matrix over an exact field, stored by rows.

    Instances are treated as immutable once built; the column view used by
    :meth:`apply` is computed lazily and cached.
    """

    __slots__ = ("field", "nrows", "ncols", "_rows", "_cols")

    def __init__(
        self,
        field: Field,
        nrows: int,
        ncols: int,
        rows: Mapping[int, Mapping[int, Any]] | Sequence[Mapping[int, Any]] | None = None,
    ):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self._rows: list[dict] = [{} for _ in range(nrows)]
        self._cols: list[dict] | None = None
        if rows is not None:
            items = rows.items() if isinstance(rows, Mapping) else enumerate(rows)
            for i, row in items:
                if not 0 <= i < nrows:
                    raise DimensionMismatch(f"row {i} outside 0..{nrows - 1}")
                clean = {}
                for j, x in row.items():
                    if not 0 <= j < ncols:
                        raise DimensionMismatch(f"column {j} outside 0..{ncols - 1}")
                    if x:
                        clean[j] = x
                self._rows[i] = clean

    @classmethod
    def from_dense(cls, field: Field, rows: Sequence[Sequence[Any]], ncols: int | None = None) -> "Matrix":
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged dense matrix")
        return cls(field, nrows, ncols, [{j: field(x) for j, x in enumerate(r) if x} for r in rows])

    @classmethod
    def from_columns(cls, field: Field, nrows: int, cols: Sequence[Mapping[int, Any]]) -> "Matrix":
        rows: list[dict] = [{} for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, x in col.items():
                if x:
                    rows[i][j] = x
        return cls(field, nrows, len(cols), rows)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one = field.one
        return cls(field, n, n, [{i: one} for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int | None = None) -> "Matrix":
        return cls(field, nrows, nrows if ncols is None else ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        return self._rows[i].get(j, self.field.zero)

    def row(self, i: int) -> Vector:
        return dict(self._rows[i])

    def rows(self) -> list[Vector]:
        return [dict(r) for r in self._rows]

    def column(self, j: int) -> Vector:
        return dict(self._columns()[j])

    def _columns(self) -> list[dict]:
        if self._cols is None:
            cols: list[dict] = [{} for _ in range(self.ncols)]
            for i, row in enumerate(self._rows):
                for j, x in row.items():
                    cols[j][i] = x
            self._cols = cols
        return self._cols

    def entries(self) -> Iterable[tuple[int, int, Any]]:
        for i, row in enumerate(self._rows):
            for j in sorted(row):
                yield i, j, row[j]

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def to_dense(self) -> list[list]:
        z = self.field.zero
        return [dense(r, self.ncols, z) for r in self._rows]

    def apply(self, v: Mapping[int, Any]) -> Vector:
        """Sparse matrix-vector product ``M v``."""
        cols = self._columns()
        out: dict = {}
        for j, x in v.items():
            for i, y in cols[j].items():
                cur = out.get(i)
                out[i] = x * y if cur is None else cur + x * y
        return {i: x for i, x in out.items() if x}

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            orows = other._rows
            out = []
            for row in self._rows:
                acc: dict = {}
                for k, x in row.items():
                    axpy(acc, x, orows[k])
                out.append(acc)
            return Matrix(self.field, self.nrows, other.ncols, out)
        if isinstance(other, Mapping):
            if other and max(other) >= self.ncols:
                raise DimensionMismatch("vector longer than matrix width")
            return self.apply(other)
        if isinstance(other, (list, tuple)):
            if len(other) != self.ncols:
                raise DimensionMismatch(f"vector of length {len(other)} for width {self.ncols}")
            return dense(self.apply(as_vector(other)), self.nrows, self.field.zero)
        return NotImplemented

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        out = [axpy(dict(a), sign, b) for a, b in zip(self._rows, other._rows)]
        return Matrix(self.field, self.nrows, self.ncols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, 1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, -1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c: Any) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, [scaled(c, r) for r in self._rows])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, self._columns())

    def trace(self) -> Any:
        t = self.field.zero
        for i in range(min(self.nrows, self.ncols)):
            x = self._rows[i].get(i)
            if x is not None:
                t = t + x
        return t

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; row index ``i * other.nrows + k``."""
        out = []
        for row in self._rows:
            for orow in other._rows:
                out.append(
                    {j * other.ncols + l: x * y for j, x in row.items() for l, y in orow.items()}
                )
        return Matrix(self.field, self.nrows * other.nrows, self.ncols * other.ncols, out)

    def is_zero(self) -> bool:
        return not any(self._rows)

    def rank(self) -> int:
        return rref(self).dim

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz}, field={self.field})"


class Subspace:
    """A subspace of ``field^ambient`` in canonical reduced row-echelon form."""

    __slots__ = ("field", "ambient", "rows", "pivots", "_by_pivot")

    def __init__(self, field: Field, ambient: int, rows: Sequence[Mapping[int, Any]], pivots: Sequence[int]):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)
        self._by_pivot = dict(zip(self.pivots, self.rows))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, [{i: field.one} for i in range(ambient)], range(ambient))

    @classmethod
    def span(cls, field: Field, ambient: int, vectors: Iterable[Mapping[int, Any] | Sequence[Any]]) -> "Subspace":
        vs = [as_vector(v) for v in vectors]
        return rref(Matrix(field, len(vs), ambient, vs))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return self.ambient - len(self.rows)

    def nonpivots(self) -> list[int]:
        piv = self._by_pivot
        return [c for c in range(self.ambient) if c not in piv]

    def reduce(self, v: Mapping[int, Any]) -> Vector:
        return _reduce(self._by_pivot, v)

    def contains(self, v: Mapping[int, Any] | Sequence[Any]) -> bool:
        return not self.reduce(as_vector(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def coordinates(self, v: Mapping[int, Any]) -> list:
        """Coefficients of ``v`` (assumed in the subspace) on the basis rows."""
        z = self.field.zero
        return [v.get(p, z) for p in self.pivots]

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.ambient, self.rows)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def map_scalars(self, field: Field, f) -> "Subspace":
        """Apply a field embedding entrywise (RREF is preserved by embeddings)."""
        rows = [{k: f(x) for k, x in r.items()} for r in self.rows]
        return Subspace(field, self.ambient, rows, self.pivots)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and self.rows == other.rows
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, field={self.field})"


def _reduce(by_pivot: Mapping[int, Mapping[int, Any]], v: Mapping[int, Any]) -> Vector:
    # rows are fully reduced, so one pass over the pivots present in v suffices
    r = dict(v)
    for c in [c for c in v if c in by_pivot]:
        coef = v[c]
        for k, x in by_pivot[c].items():
            cur = r.get(k)
            if cur is None:
                r[k] = -(coef * x)
            else:
                new = cur - coef * x
                if new:
                    r[k] = new
                else:
                    del r[k]
    return r


class EchelonForm:
    """Incrementally grown subspace, always kept in canonical RREF."""

    def __init__(self, field: Field, ambient: int):
        self.field = field
        self.ambient = ambient
        self._rows: dict[int, dict] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, v: Mapping[int, Any]) -> Vector:
        return _reduce(self._rows, v)

    def insert(self, v: Mapping[int, Any]) -> Vector | None:
        """Add ``v`` to the span.

        Returns a copy of the normalized residue when the dimension grew,
        otherwise ``None``.
        """
        res = _reduce(self._rows, v)
        if not res:
            return None
        p = min(res)
        lead = res[p]
        if lead != 1:
            inv = 1 / lead
            res = {k: x * inv for k, x in res.items()}
        # only rows with a smaller pivot can carry a nonzero in column p
        for q, row in self._rows.items():
            if q < p:
                c = row.get(p)
                if c is not None:
                    axpy(row, -c, res)
        self._rows[p] = res
        return dict(res)

    def contains(self, v: Mapping[int, Any]) -> bool:
        return not _reduce(self._rows, v)

    def freeze(self) -> Subspace:
        pivots = sorted(self._rows)
        return Subspace(self.field, self.ambient, [dict(self._rows[p]) for p in pivots], pivots)


def _rref_dense(field: Field, rows: list[dict], ncols: int) -> Subspace:
    z = field.zero
    a = [dense(r, ncols, z) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        i = next((i for i in range(r, len(a)) if a[i][c]), None)
        if i is None:
            continue
        a[r], a[i] = a[i], a[r]
        inv = 1 / a[r][c]
        pr = [x * inv for x in a[r]]
        a[r] = pr
        for k in range(len(a)):
            if k != r:
                f = a[k][c]
                if f:
                    rk = a[k]
                    a[k] = [rk[j] - f * pr[j] if pr[j] else rk[j] for j in range(ncols)]
        pivots.append(c)
        r += 1
    return Subspace(field, ncols, [as_vector(a[i]) for i in range(r)], pivots)


def rref(m: Matrix) -> Subspace:
    """Row space of ``m`` in canonical reduced row-echelon form.

    Matrices with fill above 50% go through a dense Gauss-Jordan pass; the
    result is identical either way.
    """
    rows = [r for r in m._rows if r]
    if not rows:
        return Subspace.zero(m.field, m.ncols)
    fill = sum(len(r) for r in rows) / (len(rows) * m.ncols)
    if fill > DENSE_FILL:
        return _rref_dense(m.field, rows, m.ncols)
    ech = EchelonForm(m.field, m.ncols)
    for r in rows:
        ech.insert(r)
    return ech.freeze()


def reduce_against(s: Subspace, v: Mapping[int, Any] | Sequence[Any]):
    """Canonical residue of ``v`` modulo ``s``; zero exactly when ``v`` is in ``s``.

    Dense input gives dense output, sparse gives sparse.
    """
    if isinstance(v, Mapping):
        if v and (min(v) < 0 or max(v) >= s.ambient):
            raise DimensionMismatch(f"index outside ambient dimension {s.ambient}")
        return s.reduce(as_vector(v))
    if len(v) != s.ambient:
        raise DimensionMismatch(f"vector of length {len(v)} against ambient {s.ambient}")
    return dense(s.reduce(as_vector(v)), s.ambient, s.field.zero)


def _kernel_from_rref(field: Field, echelon: Subspace) -> Subspace:
    n = echelon.ambient
    one = field.one
    basis = []
    for f in echelon.nonpivots():
        v = {f: one}
        for p, row in zip(echelon.pivots, echelon.rows):
            x = row.get(f)
            if x is not None:
                v[p] = -x
        basis.append(v)
    return rref(Matrix(field, len(basis), n, basis))


def kernel(m: Matrix) -> Subspace:
    """Right kernel ``{v : m v = 0}``."""
    return _kernel_from_rref(m.field, rref(m))


def intersect_kernels(ops: Sequence[Matrix]) -> Subspace:
    """Common kernel of square operators of one size."""
    if not ops:
        raise DimensionMismatch("intersect_kernels needs at least one operator")
    n = ops[0].nrows
    for op in ops:
        if op.nrows != n or op.ncols != n:
            raise DimensionMismatch(f"operator {op.shape} in a family of {n}x{n} operators")
    field = ops[0].field
    ech = EchelonForm(field, n)
    for op in ops:
        for r in op._rows:
            if r:
                ech.insert(r)
    return _kernel_from_rref(field, ech.freeze())
