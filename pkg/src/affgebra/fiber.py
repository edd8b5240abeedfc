"""Fibres of Hom-affgebras at fixed points of alpha, basepoint changes, and
extraction of the data ``(L; alpha, kappa, lambda, r)``.

Everything is computed after recentring at the base point ``o``
(substituting ``a -> a + o``); in those coordinates ``o`` is the zero of
the fibre and the fibre bracket is the bilinear part of the bracket.
"""
from __future__ import annotations

from dataclasses import dataclass

from .affine import AffineMap, BiAffineMap, heap, interpolate_biaffine, symbolic_args, translation_iso
from .constructions import AffgebraData, data_verdicts
from .errors import InternalInconsistency, NotFixedPoint, PreconditionFailed
from .kernel import Matrix, mat_kernel, mat_solve, unit_vector, vadd, vsub, zero_vector
from .structures import (HomAssocAffgebra, HomAssocAlgebra, HomLieAffgebra, HomLieAlgebra,
                         check_affine_antisymmetry, check_affine_hom_jacobi,
                         check_hom_assoc_algebra, check_homlie_algebra)
from .verdict import Verdict, polynomial_verdict

__all__ = ["FixedPoints", "FiberResult", "alpha_fixed_points", "recentre", "fiber_lie",
           "fiber_assoc", "extract_data", "basepoint_change"]


@dataclass(frozen=True)
class FixedPoints:
    """Affine solution set ``particular + span(kernel)``; ``particular`` is None when empty."""

    particular: tuple | None
    kernel: tuple

    @property
    def empty(self):
        return self.particular is None

    def points(self, limit=None):
        """The particular point followed by ``particular + v`` for each kernel vector."""
        if self.empty:
            return []
        pts = [self.particular] + [vadd(self.particular, v) for v in self.kernel]
        return pts if limit is None else pts[:limit]


@dataclass(frozen=True)
class FiberResult:
    base: tuple
    algebra: HomLieAlgebra | HomAssocAlgebra
    verdict: Verdict


def alpha_fixed_points(alpha: AffineMap) -> FixedPoints:
    n, F = alpha.dim, alpha.field
    A = alpha.M - Matrix.identity(n, F)
    rhs = tuple(-x for x in alpha.t)
    x = mat_solve(A, rhs)
    if x is None:
        return FixedPoints(None, ())
    return FixedPoints(x, tuple(mat_kernel(A)))


def _require_fixed(alpha, o):
    o = tuple(alpha.field(x) for x in o)
    if alpha(o) != o:
        raise NotFixedPoint(f"alpha does not fix {list(map(str, o))}")
    return o


def recentre(op: BiAffineMap, o) -> BiAffineMap:
    """The operation in coordinates centred at ``o``: ``(x, y) -> op(x+o, y+o) - o``."""
    return interpolate_biaffine(lambda x, y: vsub(op(vadd(x, o), vadd(y, o)), o), op.dim, op.field)


def recentre_lie(s: HomLieAffgebra, o) -> HomLieAffgebra:
    o = _require_fixed(s.alpha, o)
    return HomLieAffgebra(recentre(s.bracket, o), AffineMap.linear(s.alpha.M))


def fiber_lie(s: HomLieAffgebra, o) -> FiberResult:
    o = _require_fixed(s.alpha, o)
    br = recentre(s.bracket, o)
    L = HomLieAlgebra(br.tensor(), s.alpha.M)
    return FiberResult(o, L, check_homlie_algebra(L))


def fiber_assoc(s: HomAssocAffgebra, o) -> FiberResult:
    o = _require_fixed(s.alpha, o)
    mu = recentre(s.mul, o)
    A = HomAssocAlgebra(mu.tensor(), s.alpha.M)
    return FiberResult(o, A, check_hom_assoc_algebra(A))


def extract_data(s: HomLieAffgebra, o, check=True) -> AffgebraData:
    """``r = {o,o}``, ``lambda(a) = {o,a} - {o,o}``, ``kappa(a) = {a,a} - {o,o}`` at ``o``."""
    o = _require_fixed(s.alpha, o)
    if check:
        for v in (check_affine_antisymmetry(s), check_affine_hom_jacobi(s)):
            if not v:
                raise PreconditionFailed(f"not a Hom-Lie affgebra: {v.report_line()}")
    n, F = s.dim, s.field
    br = recentre(s.bracket, o)
    zero = zero_vector(n, F)
    r = br(zero, zero)
    units = [unit_vector(n, i, F) for i in range(n)]
    lam = Matrix.from_columns([vsub(br(zero, e), r) for e in units], n, F)
    kappa = Matrix.from_columns([vsub(br(e, e), r) for e in units], n, F)
    L = HomLieAlgebra(br.tensor(), s.alpha.M)
    d = AffgebraData(L, kappa, lam, r)
    if check:
        bad = [v for v in data_verdicts(d) if not v]
        if bad:
            raise InternalInconsistency(f"extracted data violates {bad[0].name}")
    return d


def _fiber_bracket_point(br, o, a, b):
    # [a, b]_o as a point: <{a,b}, {a,o}, {o,o}, {o,b}, o>
    return heap(br(a, b), br(a, o), br(o, o), br(o, b), o)


def basepoint_change(s: HomLieAffgebra, o, e):
    """``tau_o^e`` plus a certificate that it intertwines the fibre brackets and alphas."""
    o = _require_fixed(s.alpha, o)
    e = _require_fixed(s.alpha, e)
    n, F = s.dim, s.field
    tau = translation_iso(o, e) if n else AffineMap.identity(0, F)
    a, b = symbolic_args(n, 2, F)
    br = s.bracket
    lhs = _fiber_bracket_point(br, e, tau(a), tau(b))
    rhs = tau(_fiber_bracket_point(br, o, a, b))
    bracket_ok = polynomial_verdict("intertwines_bracket", vsub(lhs, rhs), n, 2, F)
    alpha_ok = polynomial_verdict("intertwines_alpha", vsub(s.alpha(tau(a)), tau(s.alpha(a))),
                                  n, 2, F)
    return tau, [bracket_ok, alpha_ok]
