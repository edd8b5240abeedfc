"""Homomorphisms of Hom-Lie affgebras and their data-level description.

A map ``phi(a) = psi a + q'`` between ``A(L; alpha, kappa, lambda, r)`` and
``A(L'; alpha', kappa', lambda', r')`` is a homomorphism exactly when ``psi``
is a Hom-Lie algebra homomorphism and

* ``q' = alpha'(q')``
* ``psi kappa = kappa' psi``
* ``psi lambda = (ad_{q'} + lambda') psi``
* ``psi(r) = r' - q' + kappa'(q')``

where ``ad_{q'} = [q', -]'``.  The checks below evaluate both sides of that
equivalence independently so they can be compared.
"""
from __future__ import annotations

from dataclasses import dataclass
import itertools

from .affine import AffineMap, symbolic_args
from .constructions import AffgebraData, build_from_data
from .errors import (DataHomInvalid, DimensionMismatch, InternalInconsistency, NotFixedPoint,
                     PsiNotInvertible)
from .fiber import alpha_fixed_points, extract_data
from .kernel import Matrix, mat_inverse, mat_kernel, mat_solve, unit_vector, vadd, vsub
from .structures import HomLieAffgebra, HomLieAlgebra
from .verdict import Verdict, boolean_verdict, polynomial_verdict

__all__ = [
    "AffgebraHom", "DataHom", "affgebra_hom_verdicts", "check_affgebra_hom", "linearize_hom",
    "data_hom_verdicts", "check_data_hom", "equivalence_check", "assemble_hom",
    "iso_data_verdicts", "check_iso_data", "ad_matrix", "linear_psi_space",
    "enumerate_data_homs",
]


@dataclass(frozen=True)
class AffgebraHom:
    phi: AffineMap
    source: HomLieAffgebra
    target: HomLieAffgebra

    def __post_init__(self):
        if self.phi.M.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatch(
                f"phi has shape {self.phi.M.shape}, expected "
                f"({self.target.dim}, {self.source.dim})")


@dataclass(frozen=True)
class DataHom:
    psi: Matrix
    qprime: tuple
    source: AffgebraData
    target: AffgebraData

    def __post_init__(self):
        if self.psi.shape != (self.target.dim, self.source.dim) or len(self.qprime) != self.target.dim:
            raise DimensionMismatch("psi must be dim' x dim and q' of length dim'")
        object.__setattr__(self, "qprime", tuple(self.target.field(x) for x in self.qprime))


def _combine(name, verdicts):
    for v in verdicts:
        if not v:
            return Verdict(name, False, witness=v.witness, residual_digest=v.residual_digest,
                           note=v.name)
    return Verdict(name, True)


# -- affgebra level -----------------------------------------------------------

def affgebra_hom_verdicts(h: AffgebraHom):
    """``phi alpha = alpha' phi`` and ``phi{a, b} = {phi a, phi b}'`` as polynomial identities."""
    s, t, phi = h.source, h.target, h.phi
    n, F = s.dim, s.field
    (a,) = symbolic_args(n, 1, F)
    alpha_res = vsub(phi(s.alpha(a)), t.alpha(phi(a)))
    alpha_v = polynomial_verdict("hom_alpha", alpha_res, n, 1, F)
    a, b = symbolic_args(n, 2, F)
    br_res = vsub(phi(s.bracket(a, b)), t.bracket(phi(a), phi(b)))
    bracket_v = polynomial_verdict("hom_bracket", br_res, n, 2, F)
    return [alpha_v, bracket_v]


def check_affgebra_hom(h: AffgebraHom) -> Verdict:
    return _combine("affgebra_hom", affgebra_hom_verdicts(h))


def linearize_hom(h: AffgebraHom, o, o2=None):
    """``psi`` and ``q' = phi(o) - o2``; ``o2`` defaults to the origin of the target."""
    s = h.source
    o = tuple(s.field(x) for x in o)
    if s.alpha(o) != o:
        raise NotFixedPoint(f"alpha does not fix {list(map(str, o))}")
    q = h.phi(o)
    if o2 is not None:
        q = vsub(q, tuple(s.field(x) for x in o2))
    return h.phi.M, q


# -- data level ---------------------------------------------------------------

def ad_matrix(L: HomLieAlgebra, q) -> Matrix:
    """Matrix of ``x -> [q, x]``."""
    n, F = L.dim, L.field
    return Matrix.from_columns([L.bracket(q, unit_vector(n, j, F)) for j in range(n)], n, F)


def _psi_bracket_verdict(psi, L, L2):
    n, F = L.dim, L.field
    for i in range(n):
        for j in range(n):
            a, b = unit_vector(n, i, F), unit_vector(n, j, F)
            if psi.apply(L.bracket(a, b)) != L2.bracket(psi.apply(a), psi.apply(b)):
                return Verdict("psi_bracket", False, witness={"i": i, "j": j})
    return Verdict("psi_bracket", True)


def data_hom_verdicts(h: DataHom):
    """One verdict per condition, in the order: bracket, alpha, then the four data equations."""
    d, d2, psi, q = h.source, h.target, h.psi, h.qprime
    al, al2 = d.alpha, d2.alpha
    ad_q = ad_matrix(d2.L, q)
    return [
        _psi_bracket_verdict(psi, d.L, d2.L),
        boolean_verdict("psi_alpha", psi @ al == al2 @ psi),
        boolean_verdict("qprime_fixed", al2.apply(q) == q),
        boolean_verdict("psi_kappa", psi @ d.kappa == d2.kappa @ psi),
        boolean_verdict("psi_lambda", psi @ d.lam == (ad_q + d2.lam) @ psi),
        boolean_verdict("psi_r", psi.apply(d.r) == vadd(vsub(d2.r, q), d2.kappa.apply(q))),
    ]


def check_data_hom(h: DataHom) -> Verdict:
    return _combine("data_hom", data_hom_verdicts(h))


def assemble_hom(h: DataHom) -> AffgebraHom:
    """``phi(a) = psi a + q'`` between the two built affgebras."""
    v = check_data_hom(h)
    if not v:
        raise DataHomInvalid(f"{v.note} fails")
    return AffgebraHom(AffineMap(h.psi, h.qprime), build_from_data(h.source), build_from_data(h.target))


def equivalence_check(s: HomLieAffgebra, s2: HomLieAffgebra, phi: AffineMap, o, o2=None) -> Verdict:
    """Decide whether ``phi`` is a homomorphism both directly and through extracted data.

    The target is recentred at ``o2`` (default: the canonical particular
    fixed point of its alpha).  The two routes must agree.
    """
    if o2 is None:
        fp = alpha_fixed_points(s2.alpha)
        if fp.empty:
            raise NotFixedPoint("target alpha has no fixed point")
        o2 = fp.particular
    direct = check_affgebra_hom(AffgebraHom(phi, s, s2))
    d = extract_data(s, o, check=False)
    d2 = extract_data(s2, o2, check=False)
    psi, q = linearize_hom(AffgebraHom(phi, s, s2), o, o2)
    via_data = check_data_hom(DataHom(psi, q, d, d2))
    if direct.passed != via_data.passed:
        raise InternalInconsistency(
            f"direct check {direct.report_line()} disagrees with data check {via_data.report_line()}")
    return Verdict("equivalence", direct.passed, witness=direct.witness, note=direct.note)


def iso_data_verdicts(h: DataHom, q=None):
    """The conditions for an invertible ``Psi`` with ``q = Psi^{-1}(q')``."""
    d, d2, Psi = h.source, h.target, h.psi
    Pinv = mat_inverse(Psi) if Psi.nrows == Psi.ncols else None
    if Pinv is None:
        raise PsiNotInvertible("psi is not invertible")
    if q is None:
        q = Pinv.apply(h.qprime)
    q = tuple(d.field(x) for x in q)
    ad_q = ad_matrix(d.L, q)
    return [
        _psi_bracket_verdict(Psi, d.L, d2.L),
        boolean_verdict("psi_alpha", Psi @ d.alpha == d2.alpha @ Psi),
        boolean_verdict("q_matches", Psi.apply(q) == h.qprime),
        boolean_verdict("iso_qprime", h.qprime == d2.alpha.apply(Psi.apply(q))),
        boolean_verdict("iso_kappa", d2.kappa == Psi @ d.kappa @ Pinv),
        boolean_verdict("iso_lambda", d2.lam == Psi @ (d.lam - ad_q) @ Pinv),
        boolean_verdict("iso_r", d2.r == Psi.apply(vsub(vadd(d.r, q), d.kappa.apply(q)))),
    ]


def check_iso_data(h: DataHom, q=None) -> Verdict:
    return _combine("iso_data", iso_data_verdicts(h, q))


# -- solving ------------------------------------------------------------------

def linear_psi_space(d: AffgebraData, d2: AffgebraData, qprime):
    """Affine space of ``psi`` satisfying every condition that is linear once ``q'`` is fixed.

    Returns ``(particular, kernel)`` as flattened row-major matrices, or
    ``(None, ())`` when the system is inconsistent.  The bracket condition
    is quadratic in ``psi`` and is not imposed; filter candidates with
    :func:`check_data_hom`.  If ``q'`` is not fixed by ``alpha'`` the space
    is still returned but no candidate can pass.
    """
    n, m, F = d.dim, d2.dim, d.field
    q = tuple(F(x) for x in qprime)
    ad_q = ad_matrix(d2.L, q)
    rhs_r = vadd(vsub(d2.r, q), d2.kappa.apply(q))

    def residual(psi):
        out = []
        out.extend((psi @ d.alpha - d2.alpha @ psi).flat())
        out.extend((psi @ d.kappa - d2.kappa @ psi).flat())
        out.extend((psi @ d.lam - (ad_q + d2.lam) @ psi).flat())
        out.extend(psi.apply(d.r))
        return out

    zero = Matrix.zeros(m, n, F)
    base = residual(zero)
    cols = []
    for u in range(m * n):
        vec = [F.zero] * (m * n)
        vec[u] = F.one
        cols.append(tuple(x - y for x, y in zip(residual(Matrix.from_flat(vec, m, n, F)), base)))
    A = Matrix.from_columns(cols, len(base), F)
    target = [F.zero] * (len(base) - m) + list(rhs_r)
    sol = mat_solve(A, target)
    if sol is None:
        return None, ()
    return sol, tuple(mat_kernel(A))


def enumerate_data_homs(d: AffgebraData, d2: AffgebraData, limit=None):
    """Every passing ``DataHom`` over a prime field, by exhaustive search (dims at most 2)."""
    F = d.field
    if not hasattr(F, "p"):
        raise ValueError("exhaustive enumeration needs a finite field")
    if max(d.dim, d2.dim) > 2:
        raise ValueError("exhaustive enumeration is limited to dimension 2")
    n, m = d.dim, d2.dim
    elems = list(F.elements())
    found = []
    for q in itertools.product(elems, repeat=m):
        if d2.alpha.apply(q) != q:
            continue
        for flat in itertools.product(elems, repeat=m * n):
            h = DataHom(Matrix.from_flat(flat, m, n, F), q, d, d2)
            if check_data_hom(h):
                found.append(h)
                if limit is not None and len(found) >= limit:
                    return found
    return found
