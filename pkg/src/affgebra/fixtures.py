"""Concrete structures: the sna(n) matrix family, classical Hom-Lie algebras
and deterministic samplers used by the tests, demos and CLI."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
import random

from .affine import AffineMap, BiAffineMap, heap, action, interpolate_affine, interpolate_biaffine, \
    validate_biaffine
from .constructions import (AffgebraData, build_from_data, constant_bracket, scalar_action_bracket,
                            yau_twist_assoc, yau_twist_prelie)
from .derivations import compatible_pair_space
from .errors import AlphaIncompatible, ClosureFailure, DimensionMismatch, EmptyPairSpace, \
    PNotInvertible
from .kernel import Q, Matrix, mat_inverse, mat_kernel, mat_solve, rref, unit_vector, vadd, \
    zero_vector
from .structures import (LEFT, RIGHT, HomAssocAffgebra, HomLieAffgebra, HomLieAlgebra,
                         HomPreLieAffgebra, check_affine_antisymmetry,
                         check_affine_hom_jacobi, check_hom_associativity, check_homlie_algebra,
                         check_multiplicativity)

__all__ = [
    "SnaSpace", "SnaBundle", "build_sna", "sna_structures", "classical_homlie", "ALGEBRA_NAMES",
    "standard_alpha", "fixture_algebras", "sample_valid_data", "fixture_affgebras",
    "CONVENTIONS", "ASSOC_TABLES", "fixture_assoc_affgebras", "fixture_prelie_affgebras",
]

CONVENTIONS = ("n", "n+1")


# -- sna(n) -------------------------------------------------------------------

def _sna_constraints(n, convention, F):
    """Rows ``(coeffs, rhs)`` over the flattened (n+1) x (n+1) matrix."""
    m = n + 1
    top = n if convention == "n" else m
    rows = [([F.one if i == j else F.zero for i in range(m) for j in range(m)], F.zero)]
    for j in range(m):
        col = [F.zero] * (m * m)
        row = [F.zero] * (m * m)
        for i in range(top):
            col[i * m + j] = F.one
            row[j * m + i] = F.one
        rows.append((col, F.one))
        rows.append((row, F.one))
    return rows


def _matmul(A, B):
    m = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(m)), A[0][0] * 0) for j in range(m)]
            for i in range(m)]


def _madd(*terms):
    """Signed sum of matrices given as ``(sign, matrix)`` pairs."""
    m = len(terms[0][1])
    return [[sum(s * M[i][j] for s, M in terms) for j in range(m)] for i in range(m)]


@dataclass(frozen=True)
class SnaSpace:
    """Affine coordinates ``x -> base + K x`` on sna(n) inside (n+1) x (n+1) matrices."""

    n: int
    convention: str
    base: tuple
    directions: tuple
    constraints: tuple
    field: object = Q
    closure_report: dict = dc_field(default_factory=dict, compare=False)
    _pivots: tuple = ()
    _section: Matrix | None = None

    @property
    def d(self):
        return len(self.directions)

    @property
    def size(self):
        return self.n + 1

    def embed(self, x):
        flat = list(self.base)
        for c, k in zip(x, self.directions):
            flat = [u + c * v for u, v in zip(flat, k)]
        m = self.size
        return [flat[i * m:(i + 1) * m] for i in range(m)]

    def member(self, A):
        flat = [x for row in A for x in row]
        return all(sum((c * x for c, x in zip(coeffs, flat)), self.field.zero) == rhs
                   for coeffs, rhs in self.constraints)

    def violations(self, A):
        flat = [x for row in A for x in row]
        names = ["trace"] + [f"{kind}{j}" for j in range(self.size) for kind in ("colsum", "rowsum")]
        return [name for name, (coeffs, rhs) in zip(names, self.constraints)
                if sum((c * x for c, x in zip(coeffs, flat)), self.field.zero) != rhs]

    def section(self, A):
        """Model coordinates of a member matrix."""
        flat = [x for row in A for x in row]
        sub = [flat[p] - self.base[p] for p in self._pivots]
        return self._section.apply(sub) if self.d else ()


def build_sna(n: int, convention: str | None = None, field=Q) -> SnaSpace:
    """Parametrize sna(n).  With ``convention=None`` both summation ranges are
    probed and the one under which the most closure claims hold is chosen
    (the matrix product first, then the Lie bracket)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if convention is None:
        probes = {c: build_sna(n, c, field) for c in CONVENTIONS}
        score = {c: (s.closure_report["product"], s.closure_report["lie"]) for c, s in probes.items()}
        best = max(CONVENTIONS, key=lambda c: (score[c], CONVENTIONS.index(c)))
        chosen = probes[best]
        chosen.closure_report["selected_by_probe"] = True
        chosen.closure_report["scores"] = {c: {"product": p, "lie": q} for c, (p, q) in score.items()}
        return chosen
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    F = field
    cons = tuple((tuple(c), r) for c, r in _sna_constraints(n, convention, F))
    A = Matrix([c for c, _ in cons], F, ncols=(n + 1) ** 2)
    base = mat_solve(A, [r for _, r in cons])
    if base is None:
        raise ValueError(f"sna({n}) is empty under convention {convention}")
    dirs = tuple(mat_kernel(A))
    d = len(dirs)
    if d:
        K = Matrix.from_columns(dirs, (n + 1) ** 2, F)
        _, pivots = rref(K.T)
        sub = Matrix([K.rows[p] for p in pivots], F, ncols=d)
        sec = mat_inverse(sub)
    else:
        pivots, sec = (), None
    s = SnaSpace(n, convention, tuple(base), dirs, cons, F, {}, tuple(pivots), sec)
    _check_affine_ops(s)
    s.closure_report.update(convention=convention, dim=d,
                            product=_closes(s, lambda X, Y: _matmul(X, Y)),
                            lie=_closes(s, _lie_op))
    return s


def _probe_points(s):
    F = s.field
    return [zero_vector(s.d, F)] + [unit_vector(s.d, i, F) for i in range(s.d)]


def _check_affine_ops(s):
    pts = _probe_points(s)
    xi = s.field(2)
    for x in pts:
        for y in pts:
            for z in pts[:2]:
                amb = _madd((1, s.embed(x)), (-1, s.embed(y)), (1, s.embed(z)))
                if amb != s.embed(heap(x, y, z)):
                    raise AssertionError("heap does not commute with the embedding")
            amb = _madd((xi, s.embed(y)), (1 - xi, s.embed(x)))
            if amb != s.embed(action(xi, x, y)):
                raise AssertionError("action does not commute with the embedding")


def _lie_op(X, Y):
    return _madd((1, _matmul(X, Y)), (-1, _matmul(Y, X)), (1, Y))


def _closes(s, op):
    pts = _probe_points(s)
    return all(s.member(op(s.embed(x), s.embed(y))) for x in pts for y in pts)


@dataclass
class SnaBundle:
    """The four structures on sna(n); an entry is None when its closure failed."""

    space: SnaSpace
    P: list
    assoc: HomAssocAffgebra | None = None
    lie: HomLieAffgebra | None = None
    hom_assoc: HomAssocAffgebra | None = None
    hom_lie: HomLieAffgebra | None = None
    failures: dict = dc_field(default_factory=dict)
    verdicts: dict = dc_field(default_factory=dict)


def _pull_back(s, op, name):
    def evaluator(x, y):
        out = op(s.embed(x), s.embed(y))
        if not s.member(out):
            raise ClosureFailure(
                f"{name} leaves sna({s.n}): {', '.join(s.violations(out))}",
                witness={"A": s.embed(x), "B": s.embed(y), "result": out})
        return s.section(out)
    m = interpolate_biaffine(evaluator, s.d, s.field)
    v = validate_biaffine(m, evaluator, trials=10)
    if not v:
        raise ClosureFailure(f"{name} is not bi-affine in sna coordinates", witness=v.witness)
    return m


def default_P(s: SnaSpace):
    """Orthogonal projection of ``I + N`` (N the superdiagonal shift) into sna,
    falling back to a scan of small lattice points when that is singular."""
    F, m = s.field, s.size
    target = [F.one if i == j or j == i + 1 else F.zero for i in range(m) for j in range(m)]
    if s.d:
        K = Matrix.from_columns(s.directions, m * m, F)
        G = K.T @ K
        rhs = K.T.apply([t - b for t, b in zip(target, s.base)])
        x = mat_inverse(G).apply(rhs)
        cand = s.embed(x)
        if _is_usable_P(cand, F):
            return cand
        for k in range(1, 4):
            for i in range(s.d):
                for sign in (1, -1):
                    y = list(x)
                    y[i] += sign * k
                    cand = s.embed(y)
                    if _is_usable_P(cand, F):
                        return cand
    cand = s.embed(())
    if _is_usable_P(cand, F):
        return cand
    raise PNotInvertible("no invertible element found in sna")


def _is_usable_P(P, F):
    return mat_inverse(Matrix(P, F)) is not None


def sna_structures(s: SnaSpace, P=None, strict=False) -> SnaBundle:
    """Pull the four matrix structures back to model coordinates and check them.

    Closure failures are recorded in ``bundle.failures`` (or raised when
    ``strict``); successfully built structures are axiom-checked into
    ``bundle.verdicts``.
    """
    F = s.field
    if P is None:
        P = default_P(s)
    Pm = Matrix(P, F)
    if Pm.shape != (s.size, s.size):
        raise DimensionMismatch(f"P must be {s.size} x {s.size}")
    Pinv = mat_inverse(Pm)
    if Pinv is None:
        raise PNotInvertible("P is singular")
    if not s.member(P):
        raise PNotInvertible("P does not lie in sna")
    Pl, Pr = [list(r) for r in Pm.rows], [list(r) for r in Pinv.rows]

    def conj(X):
        return _matmul(_matmul(Pl, X), Pr)

    ident = AffineMap.identity(s.d, F)
    bundle = SnaBundle(s, P)

    def attempt(name, op):
        try:
            return _pull_back(s, op, name)
        except ClosureFailure as exc:
            if strict:
                raise
            bundle.failures[name] = exc
            return None

    alpha = None
    pts = _probe_points(s)
    try:
        samples = []
        for x in pts:
            img = conj(s.embed(x))
            if not s.member(img):
                raise ClosureFailure("conjugation by P leaves sna", witness={"A": s.embed(x)})
            samples.append((x, s.section(img)))
        alpha = interpolate_affine(samples, s.d, F)
    except ClosureFailure as exc:
        if strict:
            raise
        bundle.failures["alpha"] = exc

    mu = attempt("assoc", _matmul)
    if mu is not None:
        bundle.assoc = HomAssocAffgebra(mu, ident, plain=True)
        bundle.verdicts["assoc"] = [check_hom_associativity(bundle.assoc)]
    br = attempt("lie", _lie_op)
    if br is not None:
        bundle.lie = HomLieAffgebra(br, ident, plain=True)
        bundle.verdicts["lie"] = [check_affine_antisymmetry(bundle.lie),
                                  check_affine_hom_jacobi(bundle.lie)]
    if alpha is not None:
        hmu = attempt("hom_assoc", lambda X, Y: conj(_matmul(X, Y)))
        if hmu is not None:
            bundle.hom_assoc = HomAssocAffgebra(hmu, alpha)
            bundle.verdicts["hom_assoc"] = [check_hom_associativity(bundle.hom_assoc),
                                            check_multiplicativity(hmu, alpha)]
        hbr = attempt("hom_lie", lambda X, Y: _madd((1, conj(_matmul(X, Y))),
                                                     (-1, conj(_matmul(Y, X))), (1, conj(Y))))
        if hbr is not None:
            bundle.hom_lie = HomLieAffgebra(hbr, alpha)
            bundle.verdicts["hom_lie"] = [check_affine_antisymmetry(bundle.hom_lie),
                                          check_affine_hom_jacobi(bundle.hom_lie),
                                          check_multiplicativity(hbr, alpha)]
    return bundle


# -- classical Hom-Lie algebras ----------------------------------------------

def _sc_from_brackets(n, brackets, F):
    sc = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for (i, j), vec in brackets.items():
        for k, c in enumerate(vec):
            sc[k][i][j] += F(c)
            sc[k][j][i] -= F(c)
    return sc


def _structure_constants(name, n, F):
    if name == "abelian":
        if n is None or n < 0:
            raise ValueError("abelian needs a dimension")
        return _sc_from_brackets(n, {}, F)
    if name == "aff1":
        return _sc_from_brackets(2, {(0, 1): (0, 1)}, F)
    if name == "heisenberg3":
        return _sc_from_brackets(3, {(0, 1): (0, 0, 1)}, F)
    if name == "sl2":
        # basis h, e, f
        return _sc_from_brackets(3, {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)}, F)
    raise ValueError(f"unknown algebra {name!r}")


ALGEBRA_NAMES = ("abelian", "aff1", "heisenberg3", "sl2", "direct_sum")


def _direct_sum(scs, F):
    dims = [len(sc) for sc in scs]
    n = sum(dims)
    out = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    off = 0
    for sc, m in zip(scs, dims):
        for k in range(m):
            for i in range(m):
                for j in range(m):
                    out[off + k][off + i][off + j] = sc[k][i][j]
        off += m
    return out


def classical_homlie(name, alpha=None, n=None, parts=(), field=Q) -> HomLieAlgebra:
    """A named Lie algebra with twisting map ``alpha`` (identity by default).

    ``parts`` lists ``(name, n)`` summands for ``direct_sum``.
    """
    F = field
    if name == "direct_sum":
        sc = _direct_sum([_structure_constants(p, m, F) for p, m in parts], F)
    else:
        sc = _structure_constants(name, n, F)
    dim = len(sc)
    if alpha is None:
        alpha = Matrix.identity(dim, F)
    elif not isinstance(alpha, Matrix):
        alpha = Matrix(alpha, F, ncols=dim)
    if alpha.shape != (dim, dim):
        raise AlphaIncompatible(f"alpha has shape {alpha.shape}, algebra has dimension {dim}")
    L = HomLieAlgebra(sc, alpha)
    v = check_homlie_algebra(L)
    if not v:
        raise AlphaIncompatible(f"{name} with this alpha fails {v.note} at {v.witness}")
    return L


def standard_alpha(name, n=None, field=Q) -> Matrix:
    """A fixed non-identity twisting map that is multiplicative for the named algebra."""
    F = field
    if name == "abelian":
        n = n or 1
        return Matrix([[F(2) if i == j else (F.one if j == i + 1 else F.zero) for j in range(n)]
                       for i in range(n)], F, ncols=n)
    if name == "aff1":
        return Matrix.diag([1, 2], F)
    if name == "heisenberg3":
        return Matrix.diag([1, 2, 2], F)
    if name == "sl2":
        # Chevalley involution h -> -h, e <-> f
        return Matrix([[-1, 0, 0], [0, 0, 1], [0, 1, 0]], F)
    raise ValueError(f"no standard alpha for {name!r}")


def fixture_algebras(field=Q, max_dim=4):
    """Every classical algebra with alpha = id and with its standard alpha."""
    specs = [("abelian", 1), ("abelian", 2), ("abelian", 3), ("aff1", None),
             ("heisenberg3", None), ("sl2", None)]
    out = {}
    for name, n in specs:
        label = f"{name}{n}" if n else name
        out[f"{label}/id"] = classical_homlie(name, n=n, field=field)
        out[f"{label}/std"] = classical_homlie(name, standard_alpha(name, n, field), n=n, field=field)
    out["aff1+abelian1/id"] = classical_homlie("direct_sum", parts=[("aff1", None), ("abelian", 1)],
                                               field=field)
    return {k: v for k, v in out.items() if v.dim <= max_dim}


def sample_valid_data(L: HomLieAlgebra, seed: int) -> AffgebraData:
    """Random ``(kappa, lambda)`` from the compatible-pair space and random ``r``."""
    space = compatible_pair_space(L)
    if space.dim == 0:
        raise EmptyPairSpace("the compatible-pair space is trivial")
    rng = random.Random(seed)
    kappa, lam = space.sample(rng)
    r = tuple(L.field.random(rng) for _ in range(L.dim))
    return AffgebraData(L, kappa, lam, r)


def fixture_affgebras(field=Q, seed=0):
    """Hom-Lie affgebras used across the test-suite, keyed by a descriptive name."""
    F = field
    out = {}
    for name, L in fixture_algebras(F).items():
        out[f"data:{name}"] = build_from_data(sample_valid_data(L, seed))
    for n in (1, 2):
        ident = AffineMap.identity(n, F)
        out[f"scalar_action{n}"] = scalar_action_bracket(n, 3, ident)
        phi = AffineMap(Matrix.identity(n, F) * F(2), [F.one] * n)
        out[f"constant{n}"] = constant_bracket(n, phi, ident)
    return out


# -- associative and pre-Lie fixtures -----------------------------------------

def _from_table(table, F):
    """Bilinear product from ``table[i][j]`` = coordinates of ``e_i e_j``."""
    n = len(table)
    sc = [[[table[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]
    return BiAffineMap.from_bilinear(sc, F)


def _matrix_algebra_table(shape):
    """Multiplication table of matrix units for the given positions of a 2 x 2 matrix."""
    n = len(shape)
    table = []
    for (i, j) in shape:
        row = []
        for (k, l) in shape:
            vec = [0] * n
            if j == k:
                vec[shape.index((i, l))] = 1
            row.append(vec)
        table.append(row)
    return table


# name -> (multiplication table, diagonal of an automorphism used for the Hom version)
ASSOC_TABLES = {
    "scalars1": ([[[1]]], None),
    "dual2": ([[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [1, 2]),
    "triangular3": (_matrix_algebra_table([(0, 0), (0, 1), (1, 1)]), [1, 2, 1]),
    "matrices4": (_matrix_algebra_table([(0, 0), (0, 1), (1, 0), (1, 1)]), [1, 2, "1/2", 1]),
}

# a left-symmetric algebra that is not associative: e1 e1 = 2 e1, e1 e2 = e2
_LSA2 = [[[2, 0], [0, 1]], [[0, 0], [0, 0]]]


def fixture_assoc_affgebras(field=Q):
    """Hom-associative affgebras up to dimension 4.

    Each unital algebra appears with ``alpha = id`` and Yau-twisted by a
    diagonal automorphism; ``left_zero1`` is the affine product ``a b = b``.
    """
    F = field
    out = {}
    for name, (table, auto) in ASSOC_TABLES.items():
        n = len(table)
        s = HomAssocAffgebra(_from_table(table, F), AffineMap.identity(n, F), plain=True)
        out[name] = s
        if auto is not None:
            twist = AffineMap.linear(Matrix.diag([F.parse(str(x)) for x in auto], F))
            out[f"{name}/hom"] = yau_twist_assoc(s, twist)
    Z = Matrix.zeros(1, 1, F)
    out["left_zero1"] = HomAssocAffgebra(BiAffineMap([Z], Z, Matrix.identity(1, F), [F.zero]),
                                         AffineMap.identity(1, F), plain=True)
    return out


def fixture_prelie_affgebras(field=Q):
    """Hom-pre-Lie affgebras: associative ones on either side, the projection
    ``a b = b``, and a non-associative left-symmetric algebra with its opposite."""
    F = field
    out = {}
    for name, s in fixture_assoc_affgebras(F).items():
        out[f"{name}/left"] = HomPreLieAffgebra(s.mul, s.alpha, LEFT, plain=s.alpha.is_identity())
        out[f"{name}/right"] = HomPreLieAffgebra(s.mul, s.alpha, RIGHT, plain=s.alpha.is_identity())
    ident = AffineMap.identity(2, F)
    lsa = HomPreLieAffgebra(_from_table(_LSA2, F), ident, LEFT, plain=True)
    out["lsa2/left"] = lsa
    out["lsa2/hom"] = yau_twist_prelie(lsa, AffineMap.linear(Matrix.diag([F.one, F(3)], F)))
    opposite = [[_LSA2[j][i] for j in range(2)] for i in range(2)]
    out["lsa2op/right"] = HomPreLieAffgebra(_from_table(opposite, F), ident, RIGHT, plain=True)
    return out
