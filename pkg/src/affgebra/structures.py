"""Affgebra structure types and their symbolic axiom checkers.

Each checker lifts the arguments to polynomial variables, expands both
sides of the identity and declares PASS only when every coordinate of the
difference is the zero polynomial.  Heap expressions with ``2k+1`` entries
become alternating sums, which is what the cancellation and reshuffling
rules for abelian heaps amount to in coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .affine import AffineMap, BiAffineMap, heap, symbolic_args
from .errors import AlphaNotIdentity, DimensionMismatch
from .kernel import Matrix, vsub
from .verdict import Verdict, polynomial_verdict

__all__ = [
    "HomAssocAffgebra", "HomLieAffgebra", "HomPreLieAffgebra", "HomLieAlgebra",
    "HomAssocAlgebra", "check_affine_antisymmetry", "check_affine_hom_jacobi",
    "check_affine_jacobi", "check_hom_associativity", "check_hom_prelie",
    "check_multiplicativity", "check_homlie_algebra", "homlie_algebra_verdicts",
    "check_hom_assoc_algebra", "LEFT", "RIGHT",
]

LEFT = "left"
RIGHT = "right"


def _check_alpha(op: BiAffineMap, alpha: AffineMap):
    if op.dim != alpha.dim or alpha.M.nrows != alpha.M.ncols:
        raise DimensionMismatch(f"operation on dim {op.dim} with alpha of shape {alpha.M.shape}")


@dataclass(frozen=True)
class HomAssocAffgebra:
    mul: BiAffineMap
    alpha: AffineMap
    plain: bool = False  # built as an associative affgebra (alpha = id)

    def __post_init__(self):
        _check_alpha(self.mul, self.alpha)

    @property
    def dim(self):
        return self.mul.dim

    @property
    def field(self):
        return self.mul.field


@dataclass(frozen=True)
class HomLieAffgebra:
    bracket: BiAffineMap
    alpha: AffineMap
    plain: bool = False

    def __post_init__(self):
        _check_alpha(self.bracket, self.alpha)

    @property
    def dim(self):
        return self.bracket.dim

    @property
    def field(self):
        return self.bracket.field


@dataclass(frozen=True)
class HomPreLieAffgebra:
    prod: BiAffineMap
    alpha: AffineMap
    side: str = LEFT
    plain: bool = False

    def __post_init__(self):
        _check_alpha(self.prod, self.alpha)
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")

    @property
    def dim(self):
        return self.prod.dim

    @property
    def field(self):
        return self.prod.field


class _LinearHom:
    """Shared behaviour of the linear Hom-algebra types."""

    @property
    def dim(self):
        return self.alpha.nrows

    @property
    def field(self):
        return self.alpha.field

    @cached_property
    def op(self) -> BiAffineMap:
        return BiAffineMap.from_bilinear(self.sc, self.field)

    @cached_property
    def alpha_map(self) -> AffineMap:
        return AffineMap.linear(self.alpha)

    def mul(self, x, y):
        return self.op(x, y)

    def sc_entry(self, k, i, j):
        return self.sc[k][i][j]


def _freeze_sc(sc, field):
    return tuple(tuple(tuple(field(x) for x in row) for row in mat) for mat in sc)


@dataclass(frozen=True)
class HomLieAlgebra(_LinearHom):
    """Structure constants ``sc[k][i][j]`` (coefficient of e_k in [e_i, e_j]) and linear alpha."""

    sc: tuple
    alpha: Matrix

    def __post_init__(self):
        object.__setattr__(self, "sc", _freeze_sc(self.sc, self.alpha.field))
        n = self.alpha.nrows
        if self.alpha.ncols != n or len(self.sc) != n or any(
                len(m) != n or any(len(r) != n for r in m) for m in self.sc):
            raise DimensionMismatch("structure constants must be n x n x n with n x n alpha")

    def bracket(self, x, y):
        return self.op(x, y)


@dataclass(frozen=True)
class HomAssocAlgebra(_LinearHom):
    """Bilinear product tensor with a linear twisting map."""

    sc: tuple
    alpha: Matrix

    def __post_init__(self):
        object.__setattr__(self, "sc", _freeze_sc(self.sc, self.alpha.field))
        n = self.alpha.nrows
        if len(self.sc) != n:
            raise DimensionMismatch("product tensor must be n x n x n")


# -- affgebra checkers --------------------------------------------------------

def check_affine_antisymmetry(s: HomLieAffgebra) -> Verdict:
    br = s.bracket
    a, b = symbolic_args(s.dim, 2, s.field)
    lhs = heap(br(a, b), br(a, a), br(b, a))
    return polynomial_verdict("affine_antisymmetry", vsub(lhs, br(b, b)), s.dim, 2, s.field)


def _hom_jacobi_residual(br, alpha, a, b, c):
    lhs = heap(br(alpha(a), br(b, c)), br(alpha(a), br(a, a)),
               br(alpha(b), br(c, a)), br(alpha(b), br(b, b)),
               br(alpha(c), br(a, b)))
    return vsub(lhs, br(alpha(c), br(c, c)))


def check_affine_hom_jacobi(s: HomLieAffgebra) -> Verdict:
    a, b, c = symbolic_args(s.dim, 3, s.field)
    res = _hom_jacobi_residual(s.bracket, s.alpha, a, b, c)
    return polynomial_verdict("affine_hom_jacobi", res, s.dim, 3, s.field)


def check_affine_jacobi(s: HomLieAffgebra) -> Verdict:
    if not s.alpha.is_identity():
        raise AlphaNotIdentity("the affine Jacobi identity needs alpha = id")
    a, b, c = symbolic_args(s.dim, 3, s.field)
    res = _hom_jacobi_residual(s.bracket, s.alpha, a, b, c)
    return polynomial_verdict("affine_jacobi", res, s.dim, 3, s.field)


def check_hom_associativity(s: HomAssocAffgebra) -> Verdict:
    mu, al = s.mul, s.alpha
    a, b, c = symbolic_args(s.dim, 3, s.field)
    res = vsub(mu(al(a), mu(b, c)), mu(mu(a, b), al(c)))
    return polynomial_verdict("hom_associativity", res, s.dim, 3, s.field)


def check_hom_prelie(s: HomPreLieAffgebra) -> Verdict:
    p, al = s.prod, s.alpha
    a, b, c = symbolic_args(s.dim, 3, s.field)
    if s.side == LEFT:
        lhs = p(p(a, b), al(c))
        rhs = heap(p(al(a), p(b, c)), p(al(b), p(a, c)), p(p(b, a), al(c)))
    else:
        lhs = p(al(a), p(b, c))
        rhs = heap(p(p(a, b), al(c)), p(p(a, c), al(b)), p(al(a), p(c, b)))
    return polynomial_verdict(f"hom_prelie_{s.side}", vsub(lhs, rhs), s.dim, 3, s.field)


def check_multiplicativity(op: BiAffineMap, alpha: AffineMap) -> Verdict:
    _check_alpha(op, alpha)
    a, b = symbolic_args(op.dim, 2, op.field)
    res = vsub(alpha(op(a, b)), op(alpha(a), alpha(b)))
    return polynomial_verdict("multiplicativity", res, op.dim, 2, op.field)


# -- linear Hom-algebras ------------------------------------------------------

def homlie_algebra_verdicts(L: HomLieAlgebra):
    n = L.dim
    witness = None
    for k in range(n):
        for i in range(n):
            for j in range(i, n):
                if L.sc[k][i][j] != -L.sc[k][j][i]:
                    witness = {"k": k, "i": i, "j": j}
                    break
            if witness:
                break
        if witness:
            break
    anti = Verdict("antisymmetry", witness is None, witness=witness)
    a, b, c = symbolic_args(n, 3, L.field)
    al = L.alpha_map
    br = L.bracket
    terms = [br(al(a), br(b, c)), br(al(b), br(c, a)), br(al(c), br(a, b))]
    res = tuple(x + y + z for x, y, z in zip(*terms))
    jac = polynomial_verdict("hom_jacobi", res, n, 3, L.field)
    return anti, jac


def check_homlie_algebra(L: HomLieAlgebra) -> Verdict:
    anti, jac = homlie_algebra_verdicts(L)
    if not anti:
        return Verdict("homlie_algebra", False, witness=anti.witness, note="antisymmetry")
    if not jac:
        return Verdict("homlie_algebra", False, witness=jac.witness,
                       residual_digest=jac.residual_digest, note="hom_jacobi")
    return Verdict("homlie_algebra", True)


def check_hom_assoc_algebra(A: HomAssocAlgebra) -> Verdict:
    a, b, c = symbolic_args(A.dim, 3, A.field)
    al, m = A.alpha_map, A.mul
    res = vsub(m(al(a), m(b, c)), m(m(a, b), al(c)))
    return polynomial_verdict("hom_associativity", res, A.dim, 3, A.field)
