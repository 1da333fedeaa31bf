"""Finite-rank associative algebras given by structure constants, together
with degree-n structures and their characteristic polynomials.

An algebra of rank ``m`` over a field has basis ``u_0..u_{m-1}`` and
structure constants ``c[i][j][k]`` with ``u_i u_j = sum_k c[i][j][k] u_k``.
Elements are tuples of ``m`` field scalars.

A degree structure says how the algebra sits inside ``n x n`` matrices (the
embedding used to define ``det(T - a)``).  Only the closed list of kinds
below is supported:

``Regular``          left multiplication on the algebra itself (``n = m``)
``MatrixIdentity``   ``Mat_k`` with its standard basis ``e_ij`` (``n = k``)
``TrivialDiag``      a rank-one algebra embedded diagonally (``(T - a)^n``)
``Power``            block-diagonal repetition of another structure
``Product``          block-diagonal product of several degree algebras
``CyclicExplicit``   a cyclic algebra ``(K/F, sigma, gamma)`` in its
                     explicit ``n x n`` matrix model over ``K``
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Any, Sequence, Union

from .errors import (
    AutomorphismOrderWrong,
    BadUnit,
    CoefficientNotInBase,
    FieldMismatch,
    InvalidDegreeStructure,
    NonAssociative,
    NotAutomorphism,
    WrongDegree,
)
from .fields import QQ, Field
from .linalg import Matrix

Element = tuple


class StructureAlgebra:
    """Associative unital algebra with a fixed basis.

    Construction validates associativity on every basis triple and the unit
    law on every basis element.
    """

    def __init__(self, field: Field, table, unit: Sequence[Any], name: str = "A", check: bool = True):
        m = len(unit)
        if m < 1:
            raise BadUnit("algebra rank must be positive")
        self.field = field
        self.rank = m
        self.name = name
        try:
            self.unit: Element = tuple(field(x) for x in unit)
        except (TypeError, ValueError) as exc:
            raise FieldMismatch(f"unit: {exc}") from exc
        if len(table) != m or any(len(row) != m for row in table):
            raise BadUnit(f"mul_table must be {m} x {m} x {m}")
        mul: list[list[dict]] = []
        for i in range(m):
            row = []
            for j in range(m):
                entry = table[i][j]
                if isinstance(entry, dict):
                    items = entry.items()
                else:
                    if len(entry) != m:
                        raise BadUnit(f"mul_table[{i}][{j}] must have {m} coordinates")
                    items = enumerate(entry)
                try:
                    row.append({k: field(x) for k, x in items if x})
                except (TypeError, ValueError) as exc:
                    raise FieldMismatch(f"mul_table[{i}][{j}]: {exc}") from exc
            mul.append(row)
        self._mul = mul
        # left regular matrices of basis elements: column j holds u_i u_j
        self._left = [
            Matrix.from_columns(field, m, [mul[i][j] for j in range(m)]) for i in range(m)
        ]
        if check:
            self._validate()

    def _validate(self) -> None:
        m = self.rank
        for i in range(m):
            e = self.basis(i)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise BadUnit(f"unit does not act as identity on u{i}")
        for i in range(m):
            for j in range(m):
                uij = self._mul[i][j]
                for k in range(m):
                    left: dict = {}
                    for l, c in uij.items():
                        for t, x in self._mul[l][k].items():
                            left[t] = left.get(t, 0) + c * x
                    right: dict = {}
                    for l, c in self._mul[j][k].items():
                        for t, x in self._mul[i][l].items():
                            right[t] = right.get(t, 0) + c * x
                    if {t: x for t, x in left.items() if x} != {t: x for t, x in right.items() if x}:
                        raise NonAssociative((i, j, k))

    # elements -------------------------------------------------------------

    def zero(self) -> Element:
        return (self.field.zero,) * self.rank

    def one(self) -> Element:
        return self.unit

    def basis(self, i: int) -> Element:
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(self.rank))

    def element(self, coords: Sequence[Any]) -> Element:
        if len(coords) != self.rank:
            raise WrongDegree(f"element needs {self.rank} coordinates, got {len(coords)}")
        return tuple(self.field(x) for x in coords)

    def add(self, x: Element, y: Element) -> Element:
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple(a - b for a, b in zip(x, y))

    def scale(self, c: Any, x: Element) -> Element:
        return tuple(c * a for a in x)

    def mul(self, x: Element, y: Element) -> Element:
        out = [self.field.zero] * self.rank
        mul = self._mul
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = mul[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, v in row[j].items():
                    out[k] = out[k] + c * v
        return tuple(out)

    def power(self, x: Element, k: int) -> Element:
        out = self.unit
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def structure_constant(self, i: int, j: int, k: int) -> Any:
        return self._mul[i][j].get(k, self.field.zero)

    def product_of_basis(self, i: int, j: int) -> dict:
        return dict(self._mul[i][j])

    def left_regular_matrix(self, a: Element) -> Matrix:
        """Matrix of ``x -> a x`` in the basis (column ``j`` is ``a u_j``)."""
        out = Matrix.zeros(self.field, self.rank)
        for i, ai in enumerate(a):
            if ai:
                out = out + self._left[i].scale(ai)
        return out

    def basis_left_matrix(self, i: int) -> Matrix:
        return self._left[i]

    def is_commutative(self) -> bool:
        return all(self._mul[i][j] == self._mul[j][i] for i in range(self.rank) for j in range(i))

    def random_element(self, rng: random.Random, bound: int = 3) -> Element:
        return tuple(self.field(rng.randint(-bound, bound)) for _ in range(self.rank))

    def mul_table(self) -> list[list[list[Any]]]:
        z = self.field.zero
        return [
            [[self._mul[i][j].get(k, z) for k in range(self.rank)] for j in range(self.rank)]
            for i in range(self.rank)
        ]

    def change_field(self, field: Field, embed=None) -> "StructureAlgebra":
        """Base change ``A -> A (x) S`` along the field embedding ``embed``."""
        embed = embed or self.field.extension_map(field)
        table = [[{k: embed(x) for k, x in self._mul[i][j].items()} for j in range(self.rank)] for i in range(self.rank)]
        return StructureAlgebra(field, table, [embed(x) for x in self.unit], self.name, check=False)

    def __eq__(self, other):
        if not isinstance(other, StructureAlgebra):
            return NotImplemented
        return self.field == other.field and self.unit == other.unit and self._mul == other._mul

    def __hash__(self):
        return hash((self.rank, self.field, self.unit))

    def __repr__(self) -> str:
        return f"StructureAlgebra({self.name!r}, rank={self.rank}, field={self.field})"


# characteristic polynomials ------------------------------------------------


@dataclass(frozen=True)
class CharPoly:
    """``T^n - s_1 T^{n-1} + s_2 T^{n-2} - ... + (-1)^n s_n``."""

    coeffs: tuple  # (s_1, ..., s_n)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def s(self, j: int, one: Any = 1) -> Any:
        if j == 0:
            return one
        return self.coeffs[j - 1]

    def monic(self, one: Any = 1) -> list:
        """Coefficients ``[1, c_1, ..., c_n]`` of ``T^n + c_1 T^{n-1} + ...``."""
        return [one] + [c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs, start=1)]

    @classmethod
    def from_monic(cls, c: Sequence[Any]) -> "CharPoly":
        return cls(tuple(x if j % 2 == 0 else -x for j, x in enumerate(c[1:], start=1)))

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        return CharPoly.from_monic(poly_mul(self.monic(), other.monic()))

    def power(self, k: int) -> "CharPoly":
        out = [1]
        for _ in range(k):
            out = poly_mul(out, self.monic())
        return CharPoly.from_monic(out)


def poly_mul(p: Sequence[Any], q: Sequence[Any]) -> list:
    """Product of coefficient lists in descending powers."""
    out: list = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def berkowitz(m: Sequence[Sequence[Any]], one: Any, zero: Any) -> list:
    """Division-free characteristic polynomial ``det(T - m)``.

    Returns ``[1, c_1, ..., c_n]`` (descending powers of ``T``). Only ring
    operations are used, so entries may live in any commutative ring.
    """
    n = len(m)
    if n == 0:
        return [one]
    c = [one, -m[0][0]]
    for r in range(1, n):
        # blocks of the leading (r+1) x (r+1) minor
        row = [m[r][k] for k in range(r)]
        col = [m[k][r] for k in range(r)]
        q = [one, -m[r][r]]
        v = col
        for _ in range(r):
            s = zero
            for x, y in zip(row, v):
                s = s + x * y
            q.append(-s)
            v = [sum((m[i][k] * v[k] for k in range(r)), zero) for i in range(r)]
        new = []
        for i in range(r + 2):
            acc = zero
            for j in range(min(i, r) + 1):
                acc = acc + q[i - j] * c[j]
            new.append(acc)
        c = new
    return c


# degree structures ---------------------------------------------------------


@dataclass(frozen=True)
class Regular:
    n: int

    @property
    def degree(self) -> int:
        return self.n


@dataclass(frozen=True)
class MatrixIdentity:
    size: int

    @property
    def degree(self) -> int:
        return self.size


@dataclass(frozen=True)
class TrivialDiag:
    n: int

    @property
    def degree(self) -> int:
        return self.n


@dataclass(frozen=True)
class Power:
    inner: "DegreeStructure"
    multiplicity: int

    @property
    def degree(self) -> int:
        return self.inner.degree * self.multiplicity


@dataclass(frozen=True)
class Product:
    factors: tuple  # ((StructureAlgebra, DegreeStructure), ...)

    @property
    def degree(self) -> int:
        return sum(d.degree for _, d in self.factors)

    def offsets(self) -> list[int]:
        out, pos = [], 0
        for a, _ in self.factors:
            out.append(pos)
            pos += a.rank
        return out

    def split(self, x: Element) -> list[Element]:
        return [tuple(x[o : o + a.rank]) for o, (a, _) in zip(self.offsets(), self.factors)]

    def idempotents(self) -> list[Element]:
        """Coordinates of ``(0, .., 1_{A_j}, .., 0)`` for each factor."""
        total = sum(a.rank for a, _ in self.factors)
        out = []
        for o, (a, _) in zip(self.offsets(), self.factors):
            z = a.field.zero
            v = [z] * total
            v[o : o + a.rank] = a.unit
            out.append(tuple(v))
        return out

    def embed(self, j: int, x: Element) -> Element:
        """The element with ``x`` in factor ``j`` and zeros elsewhere."""
        a = self.factors[j][0]
        total = sum(f.rank for f, _ in self.factors)
        v = [a.field.zero] * total
        o = self.offsets()[j]
        v[o : o + a.rank] = x
        return tuple(v)


@dataclass(frozen=True)
class CyclicExplicit:
    """Cyclic algebra data: ``K`` commutative of rank ``n``, ``sigma`` the
    ``n x n`` matrix of the generator of ``Gal(K/F)`` (column ``j`` is the image
    of the ``j``-th basis vector of ``K``) and ``gamma`` in ``F``."""

    K: StructureAlgebra
    sigma: tuple  # rows
    gamma: Any

    @property
    def degree(self) -> int:
        return self.K.rank


DegreeStructure = Union[Regular, MatrixIdentity, TrivialDiag, Power, Product, CyclicExplicit]


def _matrix_table(field: Field, k: int) -> list:
    one = field.one
    m = k * k
    table = [[{} for _ in range(m)] for _ in range(m)]
    for i in range(k):
        for j in range(k):
            for l in range(k):
                table[i * k + j][j * k + l] = {i * k + l: one}
    return table


def validate_degree(A: StructureAlgebra, D: DegreeStructure) -> None:
    """Raise :class:`InvalidDegreeStructure` unless ``D`` fits ``A``."""
    if isinstance(D, Regular):
        if D.n != A.rank:
            raise InvalidDegreeStructure(f"regular degree {D.n} != rank {A.rank}")
    elif isinstance(D, MatrixIdentity):
        k = D.size
        if A.rank != k * k:
            raise InvalidDegreeStructure(f"matrix degree {k} needs rank {k * k}, got {A.rank}")
        ref = StructureAlgebra(A.field, _matrix_table(A.field, k), _matrix_unit(A.field, k), check=False)
        if ref != A:
            raise InvalidDegreeStructure("matrix degree structure needs the standard e_ij basis")
    elif isinstance(D, TrivialDiag):
        if A.rank != 1 or D.n < 1:
            raise InvalidDegreeStructure("trivial degree structure needs a rank-1 algebra")
    elif isinstance(D, Power):
        if D.multiplicity < 1:
            raise InvalidDegreeStructure("power multiplicity must be positive")
        validate_degree(A, D.inner)
    elif isinstance(D, Product):
        if not D.factors:
            raise InvalidDegreeStructure("empty product")
        for a, d in D.factors:
            validate_degree(a, d)
        ref, _ = product_algebra(D.factors)
        if ref != A:
            raise InvalidDegreeStructure("algebra is not the product of the listed factors")
    elif isinstance(D, CyclicExplicit):
        ref, _ = cyclic_algebra(D.K, D.sigma, D.gamma)
        if ref != A:
            raise InvalidDegreeStructure("algebra does not match its cyclic data")
    else:
        raise InvalidDegreeStructure(f"unknown degree structure {D!r}")


class _KElt:
    """Element of a commutative algebra ``K`` with ring operators (for Berkowitz)."""

    __slots__ = ("K", "x")

    def __init__(self, K: StructureAlgebra, x: Element):
        self.K = K
        self.x = x

    def __add__(self, other):
        return _KElt(self.K, self.K.add(self.x, other.x))

    def __sub__(self, other):
        return _KElt(self.K, self.K.sub(self.x, other.x))

    def __mul__(self, other):
        return _KElt(self.K, self.K.mul(self.x, other.x))

    def __neg__(self):
        return _KElt(self.K, tuple(-a for a in self.x))


def _mat_apply(sigma: Sequence[Sequence[Any]], x: Element) -> Element:
    return tuple(sum((r[j] * x[j] for j in range(len(x))), 0 * x[0]) for r in sigma)


def cyclic_matrix(D: CyclicExplicit, a: Element) -> list[list[Element]]:
    """The ``n x n`` matrix over ``K`` representing ``a = sum_i u^i x_i``.

    Entry ``(r, c)`` is ``sigma^c(x_{r-c})`` on and below the diagonal and
    ``gamma sigma^c(x_{n+r-c})`` above it.
    """
    K, n = D.K, D.degree
    xs = [tuple(a[i * n : (i + 1) * n]) for i in range(n)]
    # sig[c][i] = sigma^c(x_i)
    sig = [xs]
    for _ in range(1, n):
        sig.append([_mat_apply(D.sigma, x) for x in sig[-1]])
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            if r >= c:
                row.append(sig[c][r - c])
            else:
                row.append(K.scale(D.gamma, sig[c][n + r - c]))
        out.append(row)
    return out


def _in_base(K: StructureAlgebra, x: Element) -> Any:
    """Return ``lam`` with ``x == lam * 1_K`` or raise."""
    unit = K.unit
    j = next(i for i, u in enumerate(unit) if u)
    lam = x[j] / unit[j]
    if K.scale(lam, unit) != tuple(x):
        raise CoefficientNotInBase(f"coefficient {x} is not in the base field")
    return lam


def char_poly(A: StructureAlgebra, D: DegreeStructure, a: Sequence[Any]) -> CharPoly:
    """Characteristic polynomial ``det(T - iota(a))`` of ``a`` under ``D``."""
    F = A.field
    a = tuple(a)
    if len(a) != A.rank:
        raise WrongDegree(f"element of length {len(a)} for rank {A.rank}")
    if isinstance(D, Regular):
        m = A.left_regular_matrix(a).to_dense()
        return CharPoly.from_monic(berkowitz(m, F.one, F.zero))
    if isinstance(D, MatrixIdentity):
        k = D.size
        m = [[a[i * k + j] for j in range(k)] for i in range(k)]
        return CharPoly.from_monic(berkowitz(m, F.one, F.zero))
    if isinstance(D, TrivialDiag):
        c = a[0] / A.unit[0]
        return CharPoly.from_monic(berkowitz([[c]], F.one, F.zero)).power(D.n)
    if isinstance(D, Power):
        return char_poly(A, D.inner, a).power(D.multiplicity)
    if isinstance(D, Product):
        out = CharPoly(())
        for (Ai, Di), ai in zip(D.factors, D.split(a)):
            out = out * char_poly(Ai, Di, ai)
        return out
    if isinstance(D, CyclicExplicit):
        K = D.K
        m = [[_KElt(K, x) for x in row] for row in cyclic_matrix(D, a)]
        c = berkowitz(m, _KElt(K, K.unit), _KElt(K, K.zero()))
        return CharPoly.from_monic([F.one] + [_in_base(K, x.x) for x in c[1:]])
    raise InvalidDegreeStructure(f"unknown degree structure {D!r}")


def s_coeff(A: StructureAlgebra, D: DegreeStructure, a: Sequence[Any], j: int) -> Any:
    return char_poly(A, D, a).s(j, A.field.one)


def trace(A, D, a):
    return s_coeff(A, D, a, 1)


def norm(A, D, a):
    return s_coeff(A, D, a, D.degree)


def conjugate(A: StructureAlgebra, D: DegreeStructure, a: Sequence[Any]) -> Element:
    """``Tr(a) 1 - a`` for a degree-2 structure."""
    if D.degree != 2:
        raise WrongDegree(f"conjugation needs degree 2, got {D.degree}")
    return A.sub(A.scale(trace(A, D, a), A.unit), tuple(a))


def evaluate_poly(A: StructureAlgebra, monic: Sequence[Any], a: Element) -> Element:
    """Horner evaluation of a descending coefficient list at ``a`` inside ``A``."""
    out = A.zero()
    for c in monic:
        out = A.add(A.mul(out, a), A.scale(c, A.unit))
    return out


# constructors --------------------------------------------------------------


def _matrix_unit(field: Field, k: int) -> list:
    return [field.one if i % (k + 1) == 0 else field.zero for i in range(k * k)]


def split_algebra(n: int, field: Field = QQ):
    """``F^n`` with componentwise product and its regular degree-n structure."""
    table = [[{i: field.one} if i == j else {} for j in range(n)] for i in range(n)]
    return StructureAlgebra(field, table, [field.one] * n, f"split{n}"), Regular(n)


def matrix_algebra(k: int, field: Field = QQ):
    """``Mat_k`` on the row-major basis ``e_ij -> i*k + j``, degree ``k``."""
    return StructureAlgebra(field, _matrix_table(field, k), _matrix_unit(field, k), f"mat{k}"), MatrixIdentity(k)


def trivial_algebra(n: int, field: Field = QQ):
    """The base field viewed as a degree-``n`` algebra."""
    return StructureAlgebra(field, [[{0: field.one}]], [field.one], f"trivial{n}"), TrivialDiag(n)


def monogenic_algebra(poly: Sequence[Any], field: Field = QQ, name: str | None = None) -> StructureAlgebra:
    """``F[x]/(f)`` on the basis ``1, x, .., x^{d-1}``.

    ``poly`` lists the coefficients of the monic ``f`` from the constant term up.
    """
    f = [field(c) for c in poly]
    d = len(f) - 1
    if d < 1 or f[-1] != field.one:
        raise BadUnit("monogenic algebra needs a monic polynomial of positive degree")
    # x^k reduced mod f, for k < 2d - 1
    powers = []
    cur = [field.one] + [field.zero] * (d - 1)
    for _ in range(2 * d - 1):
        powers.append(cur)
        top = cur[-1]
        cur = [field.zero] + cur[:-1]
        if top:
            cur = [c - top * f[i] for i, c in enumerate(cur)]
    table = [[dict(enumerate(powers[i + j])) for j in range(d)] for i in range(d)]
    unit = [field.one] + [field.zero] * (d - 1)
    return StructureAlgebra(field, table, unit, name or f"F[x]/({poly})")


def quadratic_algebra(d: Any, field: Field = QQ):
    """``F[x]/(x^2 - d)`` with its regular degree-2 structure (``d = 0`` gives the dual numbers)."""
    return monogenic_algebra([-field(d), 0, 1], field, f"quadratic({d})"), Regular(2)


def dual_numbers(field: Field = QQ):
    A, D = quadratic_algebra(0, field)
    A.name = "dual"
    return A, D


def automorphism_from_generator(K: StructureAlgebra, image: Sequence[Any]) -> tuple:
    """Matrix of the ring map of a monogenic ``K`` sending ``x`` to ``image``."""
    img = K.element(image)
    cols = []
    cur = K.unit
    for _ in range(K.rank):
        cols.append(cur)
        cur = K.mul(cur, img)
    return tuple(tuple(cols[j][i] for j in range(K.rank)) for i in range(K.rank))


def _mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n)), 0 * a[0][0]) for j in range(n)) for i in range(n))


def _check_automorphism(K: StructureAlgebra, sigma) -> None:
    n = K.rank
    F = K.field
    if len(sigma) != n or any(len(r) != n for r in sigma):
        raise NotAutomorphism(f"sigma must be {n} x {n}")
    if Matrix.from_dense(F, [list(r) for r in sigma]).rank() != n:
        raise NotAutomorphism("sigma is not invertible")
    if _mat_apply(sigma, K.unit) != K.unit:
        raise NotAutomorphism("sigma does not fix 1")
    images = [_mat_apply(sigma, K.basis(i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = _mat_apply(sigma, K.mul(K.basis(i), K.basis(j)))
            if lhs != K.mul(images[i], images[j]):
                raise NotAutomorphism(f"sigma(k{i} k{j}) != sigma(k{i}) sigma(k{j})")
    ident = tuple(tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n))
    power = ident
    for d in range(1, n + 1):
        power = _mat_mul(power, sigma)
        if power == ident and d < n:
            raise AutomorphismOrderWrong(f"sigma has order {d}, expected {n}")
    if power != ident:
        raise AutomorphismOrderWrong(f"sigma^{n} is not the identity")


def cyclic_algebra(K: StructureAlgebra, sigma, gamma: Any, name: str = "cyclic"):
    """The cyclic algebra ``K + uK + .. + u^{n-1}K`` with ``u^n = gamma`` and
    ``alpha u = u sigma(alpha)``.

    Basis element ``u^i k_j`` has index ``i*n + j``.  Returns the algebra and
    its :class:`CyclicExplicit` degree-n structure.
    """
    F = K.field
    n = K.rank
    sigma = tuple(tuple(F(x) for x in row) for row in sigma)
    gamma = F(gamma)
    if not K.is_commutative():
        raise NotAutomorphism("K must be commutative")
    if not gamma:
        raise InvalidDegreeStructure("gamma must be nonzero")
    _check_automorphism(K, sigma)
    # sig_pow[j][a] = sigma^j(k_a)
    sig_pow = [[K.basis(a) for a in range(n)]]
    for _ in range(1, n):
        sig_pow.append([_mat_apply(sigma, x) for x in sig_pow[-1]])
    m = n * n
    table = [[{} for _ in range(m)] for _ in range(m)]
    for i in range(n):
        for a in range(n):
            for j in range(n):
                for b in range(n):
                    # (u^i k_a)(u^j k_b) = u^{i+j} sigma^j(k_a) k_b
                    prod = K.mul(sig_pow[j][a], K.basis(b))
                    e = i + j
                    if e >= n:
                        e -= n
                        prod = K.scale(gamma, prod)
                    table[i * n + a][j * n + b] = {e * n + c: x for c, x in enumerate(prod) if x}
    unit = list(K.unit) + [F.zero] * (m - n)
    A = StructureAlgebra(F, table, unit, name)
    return A, CyclicExplicit(K, sigma, gamma)


def quaternion_algebra(d: Any = -1, gamma: Any = -1, field: Field = QQ):
    """``(F(sqrt d)/F, conjugation, gamma)``; ``d = gamma = -1`` gives Hamilton's quaternions."""
    K = monogenic_algebra([-field(d), 0, 1], field, f"F(sqrt({d}))")
    sigma = automorphism_from_generator(K, [0, -1])
    return cyclic_algebra(K, sigma, gamma, f"quaternion({d},{gamma})")


def cyclic3_algebra(field: Field = QQ):
    """Degree-3 cyclic algebra over ``K = F[x]/(x^3 - 3x - 1)`` with ``gamma = 2``.

    The roots are ``2cos(20 + 120k degrees)``; the generator of the Galois
    group is ``x -> 2 - x^2`` (``x -> x^2 - 2`` instead permutes the roots
    of ``x^3 - 3x + 1`` and is rejected as a non-automorphism here).
    """
    K = monogenic_algebra([-1, -3, 0, 1], field, "K9")
    sigma = automorphism_from_generator(K, [2, 0, -1])
    return cyclic_algebra(K, sigma, 2, "cyclic3")


def product_algebra(factors: Sequence[tuple[StructureAlgebra, DegreeStructure]]):
    """Direct product with block-diagonal degree structure (factor-major basis)."""
    factors = tuple((a, d) for a, d in factors)
    if not factors:
        raise InvalidDegreeStructure("empty product")
    F = factors[0][0].field
    for a, _ in factors:
        if a.field != F:
            raise FieldMismatch(f"factor {a.name} is over {a.field}, expected {F}")
    total = sum(a.rank for a, _ in factors)
    table = [[{} for _ in range(total)] for _ in range(total)]
    unit = []
    off = 0
    for a, _ in factors:
        for i in range(a.rank):
            for j in range(a.rank):
                table[off + i][off + j] = {off + k: x for k, x in a.product_of_basis(i, j).items()}
        unit.extend(a.unit)
        off += a.rank
    name = "x".join(a.name for a, _ in factors)
    return StructureAlgebra(F, table, unit, name), Product(factors)


def semisimple_from_dims(dims: Sequence[int], field: Field = QQ):
    """``prod_rho Mat_{n_rho}``, e.g. the split group ring of a finite group."""
    if not dims or any(int(k) < 1 for k in dims):
        raise InvalidDegreeStructure("dims must be a non-empty list of positive integers")
    factors = [matrix_algebra(int(k), field) for k in dims]
    if len(factors) == 1:
        return factors[0]
    A, D = product_algebra(factors)
    A.name = "groupring" + "-".join(str(k) for k in dims)
    return A, D


def change_degree_field(D: DegreeStructure, field: Field, embed) -> DegreeStructure:
    """Base change of a degree structure along a field embedding."""
    if isinstance(D, (Regular, MatrixIdentity, TrivialDiag)):
        return D
    if isinstance(D, Power):
        return Power(change_degree_field(D.inner, field, embed), D.multiplicity)
    if isinstance(D, Product):
        return Product(tuple((a.change_field(field, embed), change_degree_field(d, field, embed)) for a, d in D.factors))
    if isinstance(D, CyclicExplicit):
        return CyclicExplicit(
            D.K.change_field(field, embed),
            tuple(tuple(embed(x) for x in row) for row in D.sigma),
            embed(D.gamma),
        )
    raise InvalidDegreeStructure(f"unknown degree structure {D!r}")
