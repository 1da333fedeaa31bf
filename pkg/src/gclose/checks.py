"""Verifiers for the explicit isomorphisms and dimension formulas.

Each verifier computes the relevant Galois closure, builds the comparison
map as an exact matrix where there is one, and records a list of named
sub-checks.  A report passes only when every sub-check does.  Random samples
come from ``random.Random(seed)`` so a failure is a reproducible
counterexample.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from math import factorial, prod
from typing import Any, Callable, Sequence

from .algebra import (
    DegreeStructure,
    Element,
    StructureAlgebra,
    conjugate,
    cyclic_matrix,
    matrix_algebra,
    norm,
    product_algebra,
    semisimple_from_dims,
    trivial_algebra,
)
from .algebra import CyclicExplicit
from .closure import GaloisClosure, galois_closure, sn_character
from .errors import WrongDegree, WrongShape
from .linalg import Matrix, Vector
from .perms import (
    Perm,
    adjacent,
    all_perms,
    compose,
    cycle_representative,
    cycle_type,
    inverse,
    partitions,
    shape_key,
    sign,
)
from .tensor import apply_perm, left_mul_operator, linear_index, multi_index

DEFAULT_SAMPLES = 20


@dataclass
class IsoReport:
    name: str
    dims: dict = dc_field(default_factory=dict)
    samples: int = 0
    seed: int = 0
    checks: dict = dc_field(default_factory=dict)
    witness: str | None = None
    details: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def record(self, check: str, ok: bool, witness: str | None = None) -> bool:
        self.checks[check] = self.checks.get(check, True) and bool(ok)
        if not ok and self.witness is None:
            self.witness = f"{check}: {witness}" if witness else check
        return ok

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "dims": self.dims,
            "samples": self.samples,
            "seed": self.seed,
            "checks": self.checks,
            "witness": self.witness,
            "details": self.details,
        }

    def __str__(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class ClosureCache:
    """Shares closures between verifiers (keyed by algebra and degree structure)."""

    def __init__(self, **kw):
        self.kw = kw
        self._store: dict = {}

    def get(self, A: StructureAlgebra, D: DegreeStructure) -> GaloisClosure:
        key = (A, D)
        if key not in self._store:
            self._store[key] = galois_closure(A, D, **self.kw)
        return self._store[key]


def _closure(A, D, cache: ClosureCache | None, **kw) -> GaloisClosure:
    return cache.get(A, D) if cache is not None else galois_closure(A, D, **kw)


def _phi_matrix(field, ambient: int, target: int, image: Callable[[int], Vector]) -> Matrix:
    return Matrix.from_columns(field, target, [image(x) for x in range(ambient)])


def _random_vector(field, dim: int, rng: random.Random, terms: int = 6) -> Vector:
    out: dict = {}
    for _ in range(terms):
        x = rng.randrange(dim)
        c = rng.randint(-3, 3)
        if c:
            out[x] = out.get(x, 0) + field(c)
    return {k: v for k, v in out.items() if v}


def _induced_checks(rep: IsoReport, gc: GaloisClosure, phi: Matrix, target: int) -> None:
    """Kernel containment and bijectivity of the induced map on the quotient."""
    bad = next((r for r, row in enumerate(gc.ideal.rows) if phi.apply(row)), None)
    rep.record("kernel_contains_ideal", bad is None, f"ideal row {bad} has nonzero image")
    cols = [phi.column(c) for c in gc.basis_columns]
    induced = Matrix.from_columns(gc.field, target, cols)
    rk = induced.rank()
    rep.record(
        "induced_bijective",
        gc.closure_dim == target and rk == target,
        f"closure dim {gc.closure_dim}, target dim {target}, rank {rk}",
    )


# quadratic -----------------------------------------------------------------


def check_quadratic(
    A: StructureAlgebra, D: DegreeStructure, seed: int = 0, samples: int = DEFAULT_SAMPLES, cache=None
) -> IsoReport:
    """``G(A) ~= A`` via ``b (x) c -> b cbar`` for a degree-2 algebra."""
    if D.degree != 2:
        raise WrongDegree(f"check_quadratic needs degree 2, got {D.degree}")
    F, m = A.field, A.rank
    rep = IsoReport(f"quadratic:{A.name}", seed=seed, samples=samples)
    gc = _closure(A, D, cache)
    rep.dims = {"ambient": gc.ambient_dim, "closure": gc.closure_dim, "target": m}
    conj = [conjugate(A, D, A.basis(j)) for j in range(m)]

    def image(x: int) -> Vector:
        i, j = divmod(x, m)
        return {k: v for k, v in enumerate(A.mul(A.basis(i), conj[j])) if v}

    phi = _phi_matrix(F, m * m, m, image)
    _induced_checks(rep, gc, phi, m)

    def phi_of(v: Vector) -> Element:
        out = phi.apply(v)
        return tuple(out.get(k, F.zero) for k in range(m))

    rng = random.Random(seed)
    for s in range(samples):
        x = _random_vector(F, m * m, rng)
        a1, a2 = A.random_element(rng), A.random_element(rng)
        moved = left_mul_operator(A, 2, a1, 1).apply(left_mul_operator(A, 2, a2, 2).apply(x))
        want = A.mul(A.mul(a1, phi_of(x)), conjugate(A, D, a2))
        rep.record("place_equivariance", phi_of(moved) == want, f"sample {s}")
        swapped = phi_of(apply_perm(2, (2, 1), m, x))
        rep.record("swap_is_conjugation", swapped == conjugate(A, D, phi_of(x)), f"sample {s}")
    # conjugation laws on all basis pairs
    for i in range(m):
        a = A.basis(i)
        abar = conjugate(A, D, a)
        no = A.scale(norm(A, D, a), A.unit)
        rep.record("a_abar_is_norm", A.mul(a, abar) == no == A.mul(abar, a), f"u{i}")
        for j in range(m):
            b = A.basis(j)
            lhs = conjugate(A, D, A.mul(a, b))
            rep.record("conjugation_antimultiplicative", lhs == A.mul(conjugate(A, D, b), abar), f"u{i}, u{j}")
    return rep


# cubic split ---------------------------------------------------------------


def check_cubic_split(
    B: StructureAlgebra, DB: DegreeStructure, seed: int = 0, samples: int = DEFAULT_SAMPLES, cache=None
) -> IsoReport:
    """``G(F x B) ~= B^3`` via ``(r1 b3 b2bar, r2 b1 b3bar, r3 b2 b1bar)``."""
    if B.rank != 2 or DB.degree != 2:
        raise WrongShape(f"check_cubic_split needs a rank-2 degree-2 algebra, got rank {B.rank} degree {DB.degree}")
    F = B.field
    A, D = product_algebra([trivial_algebra(1, F), (B, DB)])
    rep = IsoReport(f"cubic_split:{B.name}", seed=seed, samples=samples)
    gc = _closure(A, D, cache)
    rep.dims = {"ambient": gc.ambient_dim, "closure": gc.closure_dim, "target": 6}
    zero_b = B.zero()

    def parts(k: int):
        return (F.one, zero_b) if k == 0 else (F.zero, B.basis(k - 1))

    def cbar(b):
        return conjugate(B, DB, b)

    def phi_parts(xs) -> list[Element]:
        (r1, b1), (r2, b2), (r3, b3) = xs
        return [
            B.scale(r1, B.mul(b3, cbar(b2))),
            B.scale(r2, B.mul(b1, cbar(b3))),
            B.scale(r3, B.mul(b2, cbar(b1))),
        ]

    def image(x: int) -> Vector:
        comps = phi_parts([parts(k) for k in multi_index(x, 3, 3)])
        return {2 * c + t: v for c, comp in enumerate(comps) for t, v in enumerate(comp) if v}

    phi = _phi_matrix(F, 27, 6, image)
    _induced_checks(rep, gc, phi, 6)

    def phi_of(v: Vector) -> list[Element]:
        out = phi.apply(v)
        return [tuple(out.get(2 * c + t, F.zero) for t in range(2)) for c in range(3)]

    rng = random.Random(seed)
    for s in range(samples):
        x = _random_vector(F, 27, rng)
        r = F(rng.randint(-3, 3))
        c = B.random_element(rng)
        a = (r,) + tuple(c)
        base = phi_of(x)
        for i in range(3):
            got = phi_of(left_mul_operator(A, 3, a, i + 1).apply(x))
            want = [None] * 3
            want[i] = B.scale(r, base[i])
            want[(i + 1) % 3] = B.mul(c, base[(i + 1) % 3])
            want[(i - 1) % 3] = B.mul(base[(i - 1) % 3], cbar(c))
            rep.record(f"place_{i + 1}_law", got == want, f"sample {s}")
        for sigma in all_perms(3):
            got = phi_of(apply_perm(3, sigma, A.rank, x))
            inv = inverse(sigma)
            want = [base[inv[k] - 1] for k in range(3)]
            if sign(sigma) < 0:
                want = [cbar(w) for w in want]
            rep.record("s3_equivariance", got == want, f"sample {s}, sigma {sigma}")
    return rep


# endomorphism algebras -----------------------------------------------------


def _endv_phi(n: int, x: int) -> tuple[int, int] | None:
    """``phi(e_{i1 j1} (x) .. (x) e_{in jn}) = sgn(tau) u_{i1} (x) .. (x) u_{in}``
    when ``tau: k -> j_k`` is a bijection; returns (target index, sign)."""
    digits = multi_index(x, n * n, n)
    rows = [d // n for d in digits]
    tau = tuple(d % n + 1 for d in digits)
    if sorted(tau) != list(range(1, n + 1)):
        return None
    return linear_index(rows, n), sign(tau)


def check_endv(n: int, seed: int = 0, samples: int = DEFAULT_SAMPLES, cache=None, **kw) -> IsoReport:
    """``G(Mat_n) ~= V^(x)n (x) Lambda^n V*`` with its sign-twisted ``S_n`` action."""
    if n < 2:
        raise WrongDegree("check_endv needs n >= 2")
    A, D = matrix_algebra(n)
    F = A.field
    m = n * n
    rep = IsoReport(f"endv:{n}", seed=seed, samples=samples)
    gc = _closure(A, D, cache, **kw)
    target = n**n
    rep.dims = {"ambient": gc.ambient_dim, "closure": gc.closure_dim, "target": target}

    def image(x: int) -> Vector:
        hit = _endv_phi(n, x)
        return {} if hit is None else {hit[0]: F(hit[1])}

    phi = _phi_matrix(F, gc.ambient_dim, target, image)
    _induced_checks(rep, gc, phi, target)

    # S_n equivariance on every basis vector for the generators
    for t in range(1, n):
        s = adjacent(n, t)
        for x in range(gc.ambient_dim):
            lhs = phi.apply(apply_perm(n, s, m, {x: F.one}))
            rhs = {k: -v for k, v in apply_perm(n, s, n, phi.column(x)).items()}
            if lhs != rhs:
                rep.record("sign_twisted_equivariance", False, f"basis {x}, transposition ({t} {t + 1})")
                break
        else:
            rep.record("sign_twisted_equivariance", True)
    rng = random.Random(seed)
    perms = list(all_perms(n))
    for s in range(samples):
        x = _random_vector(F, gc.ambient_dim, rng)
        sigma = rng.choice(perms)
        lhs = phi.apply(apply_perm(n, sigma, m, x))
        rhs = {k: sign(sigma) * v for k, v in apply_perm(n, sigma, n, phi.apply(x)).items()}
        rep.record("sign_twisted_equivariance", lhs == rhs, f"sample {s}, sigma {sigma}")
        a = A.random_element(rng)
        i = rng.randint(1, n)
        lhs = phi.apply(left_mul_operator(A, n, a, i).apply(x))
        amat = Matrix.from_dense(F, [[a[r * n + c] for c in range(n)] for r in range(n)])
        rhs = _act_on_factor(amat, n, n, i).apply(phi.apply(x))
        rep.record("place_action_is_matrix_action", lhs == rhs, f"sample {s}, place {i}")
    # collapse rule for products of matrix units
    exhaustive = n <= 3
    rows_list = (
        [multi_index(r, n, n) for r in range(n**n)]
        if exhaustive
        else [tuple(rng.randrange(n) for _ in range(n)) for _ in range(samples)]
    )
    taus = (
        [multi_index(t, n, n) for t in range(n**n)]
        if exhaustive
        else [tuple(rng.randrange(n) for _ in range(n)) for _ in range(samples)]
    )
    ident = tuple(range(n))
    collapse_ok = True
    for rows in rows_list:
        base = gc.project({linear_index([r * n + c for r, c in zip(rows, ident)], m): F.one})
        for tau in taus:
            got = gc.project({linear_index([r * n + c for r, c in zip(rows, tau)], m): F.one})
            if sorted(tau) == list(ident):
                want = [sign(tuple(t + 1 for t in tau)) * v for v in base]
            else:
                want = [F.zero] * gc.closure_dim
            if got != want:
                collapse_ok = False
                rep.record("collapse_rule", False, f"rows {rows}, tau {tau}")
                break
        if not collapse_ok:
            break
    rep.record("collapse_rule", collapse_ok)
    rep.details["collapse_cases"] = len(rows_list) * len(taus)
    chars = sn_character(gc)
    expected = {shape_key(p): F(_sgn_shape(p) * n ** len(p)) for p in partitions(n)}
    rep.record("character", chars == expected, f"{ {k: str(v) for k, v in chars.items()} }")
    rep.details["character"] = {k: F.format(v) for k, v in chars.items()}
    return rep


def _sgn_shape(shape: Sequence[int]) -> int:
    return -1 if sum(k - 1 for k in shape) % 2 else 1


def _act_on_factor(mat: Matrix, dim: int, n: int, i: int) -> Matrix:
    """``mat`` acting on tensor factor ``i`` of ``(F^dim)^(x)n``."""
    F = mat.field
    left = Matrix.identity(F, dim ** (i - 1))
    right = Matrix.identity(F, dim ** (n - i))
    return left.kron(mat).kron(right)


# product formula -----------------------------------------------------------


def block_subgroup_character(parts: Sequence[int], chars: Sequence[dict], h: Perm) -> Any:
    """``prod_i chi_i(h restricted to block i)`` for ``h`` in ``S_{n_1} x .. x S_{n_k}``,
    or ``None`` when ``h`` does not preserve the blocks."""
    block = []
    for b, size in enumerate(parts):
        block.extend([b] * size)
    out = 1
    starts = [sum(parts[:b]) for b in range(len(parts))]
    for b, size in enumerate(parts):
        lo = starts[b]
        restricted = []
        for k in range(lo, lo + size):
            img = h[k] - 1
            if block[img] != b:
                return None
            restricted.append(img - lo + 1)
        out = out * chars[b][shape_key(cycle_type(tuple(restricted)))]
    return out


def induced_character(parts: Sequence[int], chars: Sequence[dict], sigma: Perm) -> Any:
    """Brute-force ``Ind_H^{S_n}`` with ``H`` the block Young subgroup:
    ``(1/|H|) sum over g in S_n with g^-1 sigma g in H of chi_H(g^-1 sigma g)``."""
    n = sum(parts)
    order_h = prod(factorial(k) for k in parts)
    total: Any = 0
    for g in all_perms(n):
        h = compose(inverse(g), compose(sigma, g))
        val = block_subgroup_character(parts, chars, h)
        if val is not None:
            total = total + val
    if isinstance(total, int):
        return total // order_h if total % order_h == 0 else total / order_h
    return total / order_h


def check_product_formula(
    factors: Sequence[tuple[StructureAlgebra, DegreeStructure]], cache=None, seed: int = 0
) -> IsoReport:
    """Dimension and ``S_n``-character of ``G(A_1 x .. x A_k)`` against the
    induced representation from ``S_{n_1} x .. x S_{n_k}``."""
    factors = list(factors)
    if not 1 <= len(factors) <= 3:
        raise WrongShape("check_product_formula takes one to three factors")
    parts = [d.degree for _, d in factors]
    n = sum(parts)
    names = "x".join(a.name for a, _ in factors)
    rep = IsoReport(f"product_formula:{names}", seed=seed)
    sub = [_closure(a, d, cache) for a, d in factors]
    A, D = product_algebra(factors)
    gc = _closure(A, D, cache)
    multinomial = factorial(n) // prod(factorial(k) for k in parts)
    expected = multinomial * prod(g.closure_dim for g in sub)
    rep.dims = {"closure": gc.closure_dim, "expected": expected, "multinomial": multinomial, "factors": [g.closure_dim for g in sub]}
    rep.record("dimension", gc.closure_dim == expected, f"{gc.closure_dim} != {expected}")
    chars = [sn_character(g) for g in sub]
    direct = sn_character(gc)
    F = A.field
    induced = {shape_key(p): F(induced_character(parts, chars, cycle_representative(p))) for p in partitions(n)}
    rep.record("character", direct == induced, f"direct {direct} vs induced {induced}")
    rep.details["character"] = {k: F.format(v) for k, v in direct.items()}
    rep.details["induced"] = {k: F.format(v) for k, v in induced.items()}
    return rep


# group rings and central simple algebras -----------------------------------


def check_group_ring(dims: Sequence[int], cache=None) -> IsoReport:
    """``dim G(prod Mat_{n_rho}) = N prod n_rho^{n_rho}`` with ``N = (sum n)! / prod n!``."""
    dims = [int(k) for k in dims]
    A, D = semisimple_from_dims(dims)
    rep = IsoReport(f"group_ring:{','.join(map(str, dims))}")
    gc = _closure(A, D, cache)
    multinomial = factorial(sum(dims)) // prod(factorial(k) for k in dims)
    expected = multinomial * prod(k**k for k in dims)
    rep.dims = {"ambient": gc.ambient_dim, "closure": gc.closure_dim, "expected": expected}
    rep.record("dimension", gc.closure_dim == expected, f"{gc.closure_dim} != {expected}")
    return rep


def check_csa_dimension(A: StructureAlgebra, D: DegreeStructure, cache=None, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> IsoReport:
    """``dim_F G(A/F) = n^n`` for a central simple algebra of degree ``n`` and rank ``n^2``."""
    n = D.degree
    if A.rank != n * n:
        raise WrongShape(f"central simple algebra of degree {n} needs rank {n * n}, got {A.rank}")
    rep = IsoReport(f"csa:{A.name}", seed=seed, samples=samples)
    gc = _closure(A, D, cache)
    rep.dims = {"ambient": gc.ambient_dim, "closure": gc.closure_dim, "expected": n**n}
    rep.record("dimension", gc.closure_dim == n**n, f"{gc.closure_dim} != {n ** n}")
    if isinstance(D, CyclicExplicit):
        # the explicit matrix model is multiplicative
        rng = random.Random(seed)
        K = D.K
        for s in range(samples):
            a, b = A.random_element(rng), A.random_element(rng)
            ma, mb = cyclic_matrix(D, a), cyclic_matrix(D, b)
            prod_ab = [
                [_ksum(K, [K.mul(ma[r][k], mb[k][c]) for k in range(n)]) for c in range(n)] for r in range(n)
            ]
            rep.record("matrix_model_multiplicative", prod_ab == cyclic_matrix(D, A.mul(a, b)), f"sample {s}")
    return rep


def _ksum(K, xs):
    out = K.zero()
    for x in xs:
        out = K.add(out, x)
    return out
