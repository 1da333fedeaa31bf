"""The tensor power ``A^{(x)n}`` on its multi-index basis.

Multi-indices are linearized big-endian: place 1 is the most significant
digit, so ``(i_1, .., i_n) -> sum_p i_p m^{n-p}``.  Places are 1-based.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Sequence

from .algebra import DegreeStructure, Element, StructureAlgebra, char_poly
from .errors import DimensionMismatch, InvalidPermutation, WrongDegree
from .linalg import Matrix, Vector
from .perms import Perm, is_permutation


def linear_index(multi: Sequence[int], m: int) -> int:
    idx = 0
    for d in multi:
        if not 0 <= d < m:
            raise DimensionMismatch(f"digit {d} outside 0..{m - 1}")
        idx = idx * m + d
    return idx


def multi_index(idx: int, m: int, n: int) -> tuple[int, ...]:
    if not 0 <= idx < m**n:
        raise DimensionMismatch(f"index {idx} outside 0..{m**n - 1}")
    out = []
    for _ in range(n):
        idx, d = divmod(idx, m)
        out.append(d)
    return tuple(reversed(out))


def _check_place(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise DimensionMismatch(f"place {i} outside 1..{n}")


def pure_tensor(A: StructureAlgebra, factors: Sequence[Element]) -> Vector:
    """Coordinates of ``x_1 (x) .. (x) x_n``."""
    m = A.rank
    vec: dict = {0: A.field.one}
    for x in factors:
        nxt: dict = {}
        for idx, c in vec.items():
            base = idx * m
            for d, xd in enumerate(x):
                if xd:
                    nxt[base + d] = c * xd
        vec = nxt
    return vec


def unit_tensor(A: StructureAlgebra, n: int) -> Vector:
    return pure_tensor(A, [A.unit] * n)


def place_embed(A: StructureAlgebra, n: int, a: Element, i: int) -> Vector:
    """``1 (x) .. (x) a (x) .. (x) 1`` with ``a`` in place ``i``."""
    _check_place(n, i)
    return pure_tensor(A, [a if p == i else A.unit for p in range(1, n + 1)])


def left_mul_operator(A: StructureAlgebra, n: int, a: Element, i: int) -> Matrix:
    """Matrix of ``x -> a ._i x`` (left multiplication in place ``i``)."""
    _check_place(n, i)
    m = A.rank
    L = A.left_regular_matrix(tuple(a)).to_dense()
    lo = m ** (n - i)
    hi = m ** (i - 1)
    nz = [(k, d, L[k][d]) for k in range(m) for d in range(m) if L[k][d]]
    rows: list[dict] = [{} for _ in range(m**n)]
    for h in range(hi):
        for k, d, x in nz:
            rbase = (h * m + k) * lo
            cbase = (h * m + d) * lo
            for l in range(lo):
                rows[rbase + l][cbase + l] = x
    return Matrix(A.field, m**n, m**n, rows)


@lru_cache(maxsize=16)
def place_operators(A: StructureAlgebra, n: int) -> tuple[Matrix, ...]:
    """``L(u_k, i)`` for all places and basis elements, ordered by ``(i, k)``."""
    return tuple(left_mul_operator(A, n, A.basis(k), i) for i in range(1, n + 1) for k in range(A.rank))


def _check_perm(n: int, sigma: Sequence[int]) -> Perm:
    sigma = tuple(int(s) for s in sigma)
    if not is_permutation(sigma, n):
        raise InvalidPermutation(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def permute_index(idx: int, m: int, n: int, sigma: Perm) -> int:
    digits = multi_index(idx, m, n)
    out = [0] * n
    for p, d in enumerate(digits):
        out[sigma[p] - 1] = d
    return linear_index(out, m)


def perm_operator(n: int, sigma: Sequence[int], m: int, field=None) -> Matrix:
    """Permutation matrix moving tensor factor ``i`` to position ``sigma(i)``.

    Satisfies ``perm(s) L(a, i) = L(a, s(i)) perm(s)`` and
    ``perm(s t) = perm(s) perm(t)``.
    """
    from .fields import QQ

    sigma = _check_perm(n, sigma)
    field = field or QQ
    one = field.one
    N = m**n
    rows: list[dict] = [{} for _ in range(N)]
    for x in range(N):
        rows[permute_index(x, m, n, sigma)][x] = one
    return Matrix(field, N, N, rows)


def apply_perm(n: int, sigma: Sequence[int], m: int, v: Vector) -> Vector:
    sigma = _check_perm(n, sigma)
    return {permute_index(x, m, n, sigma): c for x, c in v.items()}


def elementary_symmetric_tensors(A: StructureAlgebra, n: int, a: Element) -> list[Vector]:
    """``[e_0, .., e_n]`` with ``e_j = e_j(a^(1), .., a^(n)) . 1``.

    Uses ``prod_p (1 + t a^(p)) = (x)_p (1 + t a)`` and builds the tensor one
    place at a time, keeping the running coefficient of each power of ``t``.
    """
    m = A.rank
    unit = [(d, x) for d, x in enumerate(A.unit) if x]
    av = [(d, x) for d, x in enumerate(a) if x]
    state: list[dict] = [{0: A.field.one}]
    for p in range(n):
        nxt: list[dict] = [{} for _ in range(p + 2)]
        for j, vec in enumerate(state):
            for idx, c in vec.items():
                base = idx * m
                tgt = nxt[j]
                for d, x in unit:
                    k = base + d
                    tgt[k] = tgt.get(k, 0) + c * x
                tgt = nxt[j + 1]
                for d, x in av:
                    k = base + d
                    tgt[k] = tgt.get(k, 0) + c * x
        state = [{k: x for k, x in vec.items() if x} for vec in nxt]
    return state


def elem_sym_relations(A: StructureAlgebra, D: DegreeStructure, a: Element) -> list[Vector]:
    """``[eps_1(a), .., eps_n(a)]`` where ``eps_j(a) = e_j(a^(1), ..) - s_j(a)``."""
    n = D.degree
    a = tuple(a)
    s = char_poly(A, D, a)
    es = elementary_symmetric_tensors(A, n, a)
    unit = es[0]
    out = []
    for j in range(1, n + 1):
        vec = dict(es[j])
        sj = s.s(j)
        if sj:
            for k, x in unit.items():
                vec[k] = vec.get(k, 0) - sj * x
        out.append({k: x for k, x in vec.items() if x})
    return out


def elem_sym_relation(A: StructureAlgebra, D: DegreeStructure, n: int, a: Element, j: int) -> Vector:
    if n != D.degree:
        raise WrongDegree(f"n = {n} but the degree structure has degree {D.degree}")
    if not 1 <= j <= n:
        raise DimensionMismatch(f"j = {j} outside 1..{n}")
    return elem_sym_relations(A, D, a)[j - 1]


def vector_to_json(field, v: Vector) -> dict[str, str]:
    return {str(k): field.format(x) for k, x in sorted(v.items())}
