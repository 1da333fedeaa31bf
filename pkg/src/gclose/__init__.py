"""Exact Galois closures of finite-rank (possibly non-commutative) algebras.

The closure of a degree-n algebra ``A`` is ``A^(x)n`` modulo the left ideal
generated by ``e_j(a^(1), .., a^(n)) - s_j(a)``; it carries ``n`` commuting
``A``-actions and an ``S_n``-action.  Hermitian spaces are the diagonal
``S_n``-invariants of ``G(A) (x) U^(x)n``.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .algebra import (
    CharPoly,
    CyclicExplicit,
    MatrixIdentity,
    Power,
    Product,
    Regular,
    StructureAlgebra,
    TrivialDiag,
    char_poly,
    conjugate,
    cyclic3_algebra,
    cyclic_algebra,
    dual_numbers,
    matrix_algebra,
    product_algebra,
    quadratic_algebra,
    quaternion_algebra,
    semisimple_from_dims,
    split_algebra,
    trivial_algebra,
)
from .checks import (
    IsoReport,
    check_csa_dimension,
    check_cubic_split,
    check_endv,
    check_group_ring,
    check_product_formula,
    check_quadratic,
)
from .closure import (
    GaloisClosure,
    base_change_check,
    galois_closure,
    ideal_generators,
    saturate_left_ideal,
    sn_character,
    verify_membership,
)
from .fields import GF, QQ, QuadraticField
from .hermitian import HermitianSpace, hermitian_product_check, hermitian_space, mat_action, vinberg_catalog
from .linalg import Matrix, Subspace, intersect_kernels, reduce_against, rref
from .specs import load_spec, make_algebra
from .tensor import elem_sym_relation, left_mul_operator, perm_operator, place_embed

__all__ = [name for name in dir() if not name.startswith("_")]
