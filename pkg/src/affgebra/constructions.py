"""Structure-producing constructions: induced brackets, Yau twists and the
Hom-Lie affgebra ``A(L; alpha, kappa, lambda, r)`` built from algebra data."""
from __future__ import annotations

from dataclasses import dataclass

from .affine import AffineMap, BiAffineMap, action, interpolate_biaffine
from .errors import (AlphaNotMultiplicative, DataInvariantViolated, DimensionMismatch,
                     NotEndomorphism, PreconditionFailed)
from .kernel import Matrix, unit_vector, vsub
from .structures import (HomAssocAffgebra, HomLieAffgebra, HomLieAlgebra, HomPreLieAffgebra,
                         check_hom_associativity, check_hom_prelie, check_multiplicativity)
from .verdict import Verdict

__all__ = [
    "AffgebraData", "commutator_bracket", "prelie_to_lie", "scalar_action_bracket",
    "constant_bracket", "yau_twist_assoc", "yau_twist_lie", "yau_twist_prelie",
    "build_from_data", "affine_from_homlie", "compatibility_verdict", "commutation_verdict",
    "data_verdicts",
]


@dataclass(frozen=True)
class AffgebraData:
    """The tuple ``(L; alpha, kappa, lambda, r)``; alpha is ``L.alpha``."""

    L: HomLieAlgebra
    kappa: Matrix
    lam: Matrix
    r: tuple

    def __post_init__(self):
        n = self.L.dim
        if self.kappa.shape != (n, n) or self.lam.shape != (n, n) or len(self.r) != n:
            raise DimensionMismatch("kappa, lambda must be n x n and r of length n")
        object.__setattr__(self, "r", tuple(self.L.field(x) for x in self.r))

    @property
    def dim(self):
        return self.L.dim

    @property
    def alpha(self):
        return self.L.alpha

    @property
    def field(self):
        return self.L.field


def _basis(n, field):
    return [unit_vector(n, i, field) for i in range(n)]


def compatibility_residual(L: HomLieAlgebra, kappa: Matrix, lam: Matrix, i, j):
    """``lam[a,b] - ([lam a, alpha b] - [alpha a, kappa b] + [alpha a, lam b])`` on basis vectors."""
    n, F = L.dim, L.field
    a, b = unit_vector(n, i, F), unit_vector(n, j, F)
    al = L.alpha
    br = L.bracket
    lhs = lam.apply(br(a, b))
    rhs = [x - y + z for x, y, z in zip(br(lam.apply(a), al.apply(b)),
                                        br(al.apply(a), kappa.apply(b)),
                                        br(al.apply(a), lam.apply(b)))]
    return vsub(lhs, rhs)


def compatibility_verdict(L, kappa, lam) -> Verdict:
    for i in range(L.dim):
        for j in range(L.dim):
            if any(compatibility_residual(L, kappa, lam, i, j)):
                return Verdict("compatibility", False, witness={"i": i, "j": j})
    return Verdict("compatibility", True)


def commutation_verdict(name, X: Matrix, alpha: Matrix) -> Verdict:
    ok = X @ alpha == alpha @ X
    return Verdict(name, ok)


def data_verdicts(d: AffgebraData):
    return [
        compatibility_verdict(d.L, d.kappa, d.lam),
        commutation_verdict("kappa_alpha_commute", d.kappa, d.alpha),
        commutation_verdict("lambda_alpha_commute", d.lam, d.alpha),
    ]


# -- induced brackets ---------------------------------------------------------

def commutator_bracket(s: HomAssocAffgebra) -> HomLieAffgebra:
    """``{a, b} = <ab, ba, alpha(b)>``."""
    if not check_hom_associativity(s):
        raise PreconditionFailed("input is not Hom-associative")
    if not check_multiplicativity(s.mul, s.alpha):
        raise PreconditionFailed("alpha is not multiplicative")
    n, F = s.dim, s.field
    Z = Matrix.zeros(n, n, F)
    tail = BiAffineMap([Z] * n, Z, s.alpha.M, s.alpha.t)
    return HomLieAffgebra(s.mul - s.mul.swapped() + tail, s.alpha, plain=s.plain)


def prelie_to_lie(s: HomPreLieAffgebra) -> HomLieAffgebra:
    """``{a, b} = <a.b, b.a, alpha(b)>`` (alpha applied to the second argument)."""
    if not check_hom_prelie(s):
        raise PreconditionFailed(f"input is not {s.side} Hom-pre-Lie")
    if not check_multiplicativity(s.prod, s.alpha):
        raise PreconditionFailed("alpha is not multiplicative")
    n, F = s.dim, s.field
    Z = Matrix.zeros(n, n, F)
    tail = BiAffineMap([Z] * n, Z, s.alpha.M, s.alpha.t)
    return HomLieAffgebra(s.prod - s.prod.swapped() + tail, s.alpha, plain=s.plain)


def scalar_action_bracket(dim, xi, alpha: AffineMap) -> HomLieAffgebra:
    """``{a, b} = xi |>_a b``."""
    F = alpha.field
    xi = F(xi)
    br = interpolate_biaffine(lambda a, b: action(xi, a, b), dim, F)
    return HomLieAffgebra(br, alpha)


def constant_bracket(dim, phi: AffineMap, alpha: AffineMap) -> HomLieAffgebra:
    """``{a, b} = phi(a)``."""
    if phi.dim != dim:
        raise DimensionMismatch("phi must act on the given dimension")
    F = phi.field
    Z = Matrix.zeros(dim, dim, F)
    return HomLieAffgebra(BiAffineMap([Z] * dim, phi.M, Z, phi.t), alpha)


# -- Yau twists ---------------------------------------------------------------

def _twist_gate(op, old_alpha, alpha):
    if not check_multiplicativity(op, alpha):
        raise NotEndomorphism("twisting map does not preserve the operation")
    if old_alpha @ alpha != alpha @ old_alpha:
        raise NotEndomorphism("twisting map does not commute with the existing alpha")


def yau_twist_assoc(s: HomAssocAffgebra, alpha: AffineMap) -> HomAssocAffgebra:
    """``(A, alpha o mu, alpha o alpha_s)``; for associative input this is ``(A, alpha o mu, alpha)``."""
    _twist_gate(s.mul, s.alpha, alpha)
    return HomAssocAffgebra(s.mul.after(alpha), alpha @ s.alpha)


def yau_twist_lie(s: HomLieAffgebra, alpha: AffineMap) -> HomLieAffgebra:
    _twist_gate(s.bracket, s.alpha, alpha)
    return HomLieAffgebra(s.bracket.after(alpha), alpha @ s.alpha)


def yau_twist_prelie(s: HomPreLieAffgebra, alpha: AffineMap) -> HomPreLieAffgebra:
    """New product ``a ._alpha b = alpha(a) . alpha(b)``."""
    _twist_gate(s.prod, s.alpha, alpha)
    prod = interpolate_biaffine(lambda a, b: s.prod(alpha(a), alpha(b)), s.dim, s.field)
    return HomPreLieAffgebra(prod, alpha @ s.alpha, side=s.side)


# -- Hom-Lie algebra data -----------------------------------------------------

def build_from_data(d: AffgebraData, validate=True) -> HomLieAffgebra:
    """``{a, b} = [a, b] + kappa(a) + lambda(b - a) + r`` with the alpha of ``L``."""
    if validate:
        for v in data_verdicts(d):
            if not v:
                raise DataInvariantViolated(f"{v.name} fails" + (
                    f" on basis pair {v.witness}" if v.witness else ""))
    L = d.L
    bracket = BiAffineMap(L.op.B, d.kappa - d.lam, d.lam, d.r)
    return HomLieAffgebra(bracket, AffineMap.linear(L.alpha))


def affine_from_homlie(L: HomLieAlgebra, r) -> HomLieAffgebra:
    """``{a, b} = [a, b] + alpha(b) + r``; requires alpha to be multiplicative."""
    d = AffgebraData(L, L.alpha, L.alpha, tuple(r))
    if not compatibility_verdict(L, L.alpha, L.alpha):
        raise AlphaNotMultiplicative("alpha[a, b] != [alpha a, alpha b]")
    return build_from_data(d)
