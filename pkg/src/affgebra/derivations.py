"""Generalized derivations of Hom-Lie algebras as exact kernel computations.

Each space is the kernel of one linear system in the flattened entries of
the unknown matrices.  The system matrix is assembled column by column:
every unknown is set to 1 in turn and the resulting residuals of all
defining equations (on all basis pairs, which suffices by bilinearity)
form that column.
"""
from __future__ import annotations

from dataclasses import dataclass
import random

from .constructions import commutation_verdict, compatibility_residual, compatibility_verdict
from .errors import InternalInconsistency, NotInDelta, NotInPair17
from .affine import symbolic_args
from .kernel import Matrix, mat_kernel, rank, unit_vector
from .structures import HomLieAlgebra
from .verdict import Verdict, polynomial_verdict

__all__ = [
    "SolutionSpace", "GenDerivTriple", "delta_space", "qc_space", "centroid_space",
    "alpha_derivation_space", "compatible_pair_space", "delta_lambda_space", "delta_verdict",
    "derivation_to_pair", "pair_to_derivation", "is_subspace", "alpha_kappa_verdict",
]


@dataclass(frozen=True)
class SolutionSpace:
    """Kernel of a linear system over ``nmats`` flattened n x n matrices."""

    name: str
    n: int
    nmats: int
    basis: tuple
    field: object
    particular: tuple | None = None

    @property
    def ambient_dim(self):
        return self.nmats * self.n * self.n

    @property
    def dim(self):
        return len(self.basis)

    def matrices(self, vec):
        n2 = self.n * self.n
        return tuple(Matrix.from_flat(vec[m * n2:(m + 1) * n2], self.n, self.n, self.field)
                     for m in range(self.nmats))

    def basis_matrices(self):
        return [self.matrices(v) for v in self.basis]

    def combine(self, coeffs):
        F = self.field
        out = [F.zero] * self.ambient_dim
        for c, v in zip(coeffs, self.basis):
            out = [x + c * y for x, y in zip(out, v)]
        return tuple(out)

    def sample(self, rng: random.Random):
        """A pseudo-random element as a tuple of matrices."""
        coeffs = [self.field.random(rng) for _ in self.basis]
        return self.matrices(self.combine(coeffs))


@dataclass(frozen=True)
class GenDerivTriple:
    lam: Matrix
    lamP: Matrix
    lamPP: Matrix


def _flatten(mats):
    return tuple(x for M in mats for x in M.flat())


def _bracket_table(L: HomLieAlgebra):
    n, F = L.dim, L.field
    units = [unit_vector(n, i, F) for i in range(n)]
    al = L.alpha
    return units, [al.apply(e) for e in units]


def _commutators(mats, alpha):
    out = []
    for X in mats:
        out.extend((X @ alpha - alpha @ X).flat())
    return out


def _solve(name, L, nmats, residual):
    """Kernel of ``residual`` (a linear function of ``nmats`` matrices)."""
    n, F = L.dim, L.field
    n2 = n * n
    cols = []
    for u in range(nmats * n2):
        vec = [F.zero] * (nmats * n2)
        vec[u] = F.one
        mats = tuple(Matrix.from_flat(vec[m * n2:(m + 1) * n2], n, n, F) for m in range(nmats))
        cols.append(tuple(residual(*mats)))
    nrows = len(cols[0]) if cols else 0
    A = Matrix.from_columns(cols, nrows, F) if nrows else Matrix.zeros(0, len(cols), F)
    return SolutionSpace(name, n, nmats, tuple(mat_kernel(A)), F)


def _delta_residual(L, lam, lamP, lamPP):
    units, al_units = _bracket_table(L)
    br = L.bracket
    out = []
    for i, ei in enumerate(units):
        for j, ej in enumerate(units):
            x = br(lam.apply(ei), al_units[j])
            y = br(al_units[i], lamP.apply(ej))
            z = lamPP.apply(br(ei, ej))
            out.extend(p + q - r for p, q, r in zip(x, y, z))
    out.extend(_commutators((lam, lamP, lamPP), L.alpha))
    return out


def delta_space(L: HomLieAlgebra) -> SolutionSpace:
    """All triples ``(lambda, lambda', lambda'')`` in Delta(L)."""
    return _solve("delta", L, 3, lambda a, b, c: _delta_residual(L, a, b, c))


def delta_verdict(L, lam, lamP, lamPP) -> Verdict:
    ok = not any(_delta_residual(L, lam, lamP, lamPP))
    return Verdict("delta_membership", ok)


def qc_space(L: HomLieAlgebra) -> SolutionSpace:
    """Quasi-centroid: ``[k a, alpha b] = [alpha a, k b]`` and ``k alpha = alpha k``."""
    def residual(k):
        return _delta_residual(L, k, -k, Matrix.zeros(L.dim, L.dim, L.field))
    return _solve("qc", L, 1, residual)


def alpha_kappa_verdict(L: HomLieAlgebra, kappa: Matrix) -> Verdict:
    """``[alpha(a), kappa(a)] = 0`` as a polynomial identity in the coordinates of ``a``.

    For maps commuting with alpha this is equivalent to quasi-centroid
    membership (polarize in ``a``; characteristic is never 2).
    """
    (a,) = symbolic_args(L.dim, 1, L.field)
    res = L.bracket(L.alpha.apply(a), kappa.apply(a))
    return polynomial_verdict("alpha_kappa_vanishes", res, L.dim, 1, L.field)


def centroid_space(L: HomLieAlgebra) -> SolutionSpace:
    """Centroid: ``k[a, b] = [k a, alpha b] = [alpha a, k b]`` and ``k alpha = alpha k``."""
    units, al_units = _bracket_table(L)
    br = L.bracket

    def residual(k):
        out = []
        for i, ei in enumerate(units):
            for j, ej in enumerate(units):
                lhs = k.apply(br(ei, ej))
                mid = br(k.apply(ei), al_units[j])
                rhs = br(al_units[i], k.apply(ej))
                out.extend(x - y for x, y in zip(lhs, mid))
                out.extend(y - z for y, z in zip(mid, rhs))
        out.extend(_commutators((k,), L.alpha))
        return out
    return _solve("centroid", L, 1, residual)


def alpha_derivation_space(L: HomLieAlgebra) -> SolutionSpace:
    """``lambda`` with ``(lambda, lambda, lambda)`` in Delta(L)."""
    return _solve("alphader", L, 1, lambda m: _delta_residual(L, m, m, m))


def _compatibility_residual_all(L, kappa, lam):
    out = []
    for i in range(L.dim):
        for j in range(L.dim):
            out.extend(compatibility_residual(L, kappa, lam, i, j))
    out.extend(_commutators((kappa, lam), L.alpha))
    return out


def compatible_pair_space(L: HomLieAlgebra) -> SolutionSpace:
    """Pairs ``(kappa, lambda)`` satisfying the compatibility condition and commuting with alpha."""
    return _solve("pair17", L, 2, lambda k, m: _compatibility_residual_all(L, k, m))


def delta_lambda_space(L: HomLieAlgebra) -> SolutionSpace:
    """Pairs ``(delta, lambda)`` with ``(delta, lambda, lambda)`` in Delta(L)."""
    return _solve("delta_lambda", L, 2, lambda d, m: _delta_residual(L, d, m, m))


def is_subspace(small: SolutionSpace, big: SolutionSpace) -> bool:
    """Rank test: stacking ``small`` onto ``big`` does not raise the rank."""
    if not small.basis:
        return True
    F = big.field
    if not big.basis:
        return False
    A = Matrix(list(big.basis), F)
    AB = Matrix(list(big.basis) + list(small.basis), F)
    return rank(A) == rank(AB)


def derivation_to_pair(delta: Matrix, lam: Matrix, L: HomLieAlgebra):
    """From ``(delta, lambda, lambda)`` in Delta(L) to ``kappa = lambda - delta``."""
    if not delta_verdict(L, delta, lam, lam):
        raise NotInDelta("(delta, lambda, lambda) is not in Delta(L)")
    kappa = lam - delta
    cert = [compatibility_verdict(L, kappa, lam),
            commutation_verdict("kappa_alpha_commute", kappa, L.alpha),
            commutation_verdict("lambda_alpha_commute", lam, L.alpha)]
    if not all(cert):
        raise InternalInconsistency("forward conversion produced invalid data")
    return kappa, cert


def pair_to_derivation(kappa: Matrix, lam: Matrix, L: HomLieAlgebra):
    """From a compatible pair to ``delta = lambda - kappa``."""
    pre = [compatibility_verdict(L, kappa, lam),
           commutation_verdict("kappa_alpha_commute", kappa, L.alpha),
           commutation_verdict("lambda_alpha_commute", lam, L.alpha)]
    if not all(pre):
        bad = next(v for v in pre if not v)
        raise NotInPair17(f"{bad.name} fails")
    delta = lam - kappa
    cert = [delta_verdict(L, delta, lam, lam)]
    if not cert[0]:
        raise InternalInconsistency("backward conversion left Delta(L)")
    return delta, cert
