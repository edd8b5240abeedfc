"""Coordinate model of affine spaces: heap, action, affine and bi-affine maps.

Points are tuples of scalars (or of polynomials when lifted with
:func:`symbolic_args`).  In this model the heap operation is
``<a, b, c> = a - b + c`` and the action is ``xi |>_a b = xi*b + (1-xi)*a``.
"""
from __future__ import annotations

import random

from .errors import DimensionMismatch, InsufficientSamples, NotAffine
from .kernel import Matrix, Q, vadd, vscale, vsub, zero_vector, unit_vector
from .polyring import MultiPoly
from .verdict import Verdict

__all__ = [
    "AffineMap", "BiAffineMap", "heap_op", "heap", "action", "retract_add",
    "retract_inverse", "translation_iso", "affine_eval", "biaffine_eval",
    "interpolate_affine", "interpolate_biaffine", "validate_biaffine", "symbolic_args",
]


def _check_dims(*points):
    n = len(points[0])
    if any(len(p) != n for p in points):
        raise DimensionMismatch(f"point dimensions {[len(p) for p in points]}")


def heap_op(a, b, c):
    _check_dims(a, b, c)
    return tuple(x - y + z for x, y, z in zip(a, b, c))


def heap(*points):
    """Heap bracket of an odd number of points: alternating sum ``+ - + ... +``."""
    if len(points) % 2 == 0:
        raise ValueError("heap expressions take an odd number of entries")
    _check_dims(*points)
    out = list(points[0])
    for k, p in enumerate(points[1:], start=1):
        sign = -1 if k % 2 else 1
        out = [x + sign * y for x, y in zip(out, p)]
    return tuple(out)


def action(xi, a, b):
    """``xi |>_a b``: the point reached from ``a`` by ``xi`` times the vector ab."""
    _check_dims(a, b)
    return tuple(xi * y + (1 - xi) * x for x, y in zip(a, b))


def retract_add(o, a, b):
    return heap_op(a, o, b)


def retract_inverse(o, a):
    return heap_op(o, a, o)


class AffineMap:
    """``a -> M a + t``."""

    __slots__ = ("M", "t")

    def __init__(self, M: Matrix, t):
        if M.nrows != len(t):
            raise DimensionMismatch(f"linear part {M.shape} with translation of length {len(t)}")
        self.M = M
        self.t = tuple(M.field(x) for x in t)

    @classmethod
    def identity(cls, n, field=Q):
        return cls(Matrix.identity(n, field), zero_vector(n, field))

    @classmethod
    def constant(cls, value, field=None):
        field = field or (Matrix([list(value)]).field if value else Q)
        n = len(value)
        return cls(Matrix.zeros(n, n, field), value)

    @classmethod
    def linear(cls, M: Matrix):
        return cls(M, zero_vector(M.nrows, M.field))

    @property
    def dim(self):
        return self.M.ncols

    @property
    def field(self):
        return self.M.field

    def __call__(self, a):
        return tuple(x + s for x, s in zip(self.M.apply(a), self.t))

    def __matmul__(self, other):
        """Composition ``self o other``."""
        if not isinstance(other, AffineMap):
            return NotImplemented
        return AffineMap(self.M @ other.M, vadd(self.M.apply(other.t), self.t))

    def is_identity(self):
        return self.M.is_identity() and not any(self.t)

    def __eq__(self, other):
        if not isinstance(other, AffineMap):
            return NotImplemented
        return self.M == other.M and self.t == other.t

    def __hash__(self):
        return hash((self.M, self.t))

    def __repr__(self):
        return f"AffineMap(M={self.M!r}, t={list(map(str, self.t))})"


class BiAffineMap:
    """``(a, b) -> B(a, b) + L1 a + L2 b + c`` with ``B(a, b)_k = sum B[k][i][j] a_i b_j``."""

    __slots__ = ("B", "L1", "L2", "c")

    def __init__(self, B, L1: Matrix, L2: Matrix, c):
        n = len(c)
        field = L1.field
        B = tuple(b if isinstance(b, Matrix) else Matrix(b, field, ncols=n) for b in B)
        if len(B) != n or any(b.shape != (n, n) for b in B):
            raise DimensionMismatch("bilinear part must be n x n x n")
        if L1.shape != (n, n) or L2.shape != (n, n):
            raise DimensionMismatch("linear parts must be n x n")
        self.B = B
        self.L1 = L1
        self.L2 = L2
        self.c = tuple(field(x) for x in c)

    @classmethod
    def zero(cls, n, field=Q):
        Z = Matrix.zeros(n, n, field)
        return cls([Z] * n, Z, Z, zero_vector(n, field))

    @classmethod
    def from_bilinear(cls, sc, field=Q):
        """Pure bilinear map from a structure-constant tensor ``sc[k][i][j]``."""
        n = len(sc)
        Z = Matrix.zeros(n, n, field)
        return cls([Matrix(s, field, ncols=n) for s in sc], Z, Z, zero_vector(n, field))

    @property
    def dim(self):
        return len(self.c)

    @property
    def field(self):
        return self.L1.field

    def tensor(self):
        return [[list(r) for r in b.rows] for b in self.B]

    def __call__(self, a, b):
        n = self.dim
        if len(a) != n or len(b) != n:
            raise DimensionMismatch(f"bi-affine map on dim {n} applied to {len(a)}, {len(b)}")
        la = self.L1.apply(a)
        lb = self.L2.apply(b)
        out = []
        for k in range(n):
            Bk_b = self.B[k].apply(b)
            acc = la[k] + lb[k] + self.c[k]
            for x, y in zip(a, Bk_b):
                if isinstance(y, MultiPoly) or y:
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def swapped(self):
        """The map ``(a, b) -> self(b, a)``."""
        return BiAffineMap([b.T for b in self.B], self.L2, self.L1, self.c)

    def after(self, f: AffineMap):
        """Composite ``f o self``."""
        M = f.M
        n = self.dim
        F = self.field
        newB = []
        for k in range(n):
            newB.append(Matrix([[sum((M[k, l] * self.B[l][i, j] for l in range(n)), F.zero)
                                 for j in range(n)] for i in range(n)], F, ncols=n))
        return BiAffineMap(newB, M @ self.L1, M @ self.L2, f(self.c))

    def __add__(self, other):
        if not isinstance(other, BiAffineMap):
            return NotImplemented
        return BiAffineMap([x + y for x, y in zip(self.B, other.B)], self.L1 + other.L1,
                           self.L2 + other.L2, vadd(self.c, other.c))

    def __sub__(self, other):
        if not isinstance(other, BiAffineMap):
            return NotImplemented
        return BiAffineMap([x - y for x, y in zip(self.B, other.B)], self.L1 - other.L1,
                           self.L2 - other.L2, vsub(self.c, other.c))

    def __eq__(self, other):
        if not isinstance(other, BiAffineMap):
            return NotImplemented
        return (self.B == other.B and self.L1 == other.L1 and self.L2 == other.L2
                and self.c == other.c)

    def __hash__(self):
        return hash((self.B, self.L1, self.L2, self.c))

    def __repr__(self):
        return (f"BiAffineMap(B={self.tensor()}, L1={self.L1!r}, L2={self.L2!r}, "
                f"c={list(map(str, self.c))})")


def translation_iso(o, e):
    """``tau_o^e : a -> <a, o, e>``."""
    _check_dims(o, e)
    field = Matrix([list(o)]).field if o else Q
    return AffineMap(Matrix.identity(len(o), field), vsub(e, o))


def affine_eval(f: AffineMap, a):
    if len(a) != f.dim:
        raise DimensionMismatch(f"map on dim {f.dim} applied to point of dim {len(a)}")
    return f(a)


def biaffine_eval(m: BiAffineMap, a, b):
    return m(a, b)


def interpolate_affine(samples, dim, field=Q):
    """Recover ``M, t`` from values at ``0, e_1, ..., e_n``; other samples are checked."""
    table = {tuple(field(x) for x in p): tuple(field(y) for y in v) for p, v in samples}
    zero = zero_vector(dim, field)
    if zero not in table:
        raise InsufficientSamples("missing the value at the origin")
    t = table[zero]
    cols = []
    for i in range(dim):
        e = unit_vector(dim, i, field)
        if e not in table:
            raise InsufficientSamples(f"missing the value at e_{i + 1}")
        cols.append(vsub(table[e], t))
    f = AffineMap(Matrix.from_columns(cols, dim, field) if dim else Matrix.zeros(0, 0, field), t)
    for p, v in table.items():
        if f(p) != v:
            raise NotAffine(f"sample at {list(map(str, p))} contradicts the affine interpolant")
    return f


def interpolate_biaffine(evaluator, dim, field=Q):
    """Read off ``(B, L1, L2, c)`` from the probe grid ``{0, e_1, ..., e_n}^2``."""
    zero = zero_vector(dim, field)
    units = [unit_vector(dim, i, field) for i in range(dim)]

    def ev(a, b):
        return tuple(field(x) for x in evaluator(a, b))

    c = ev(zero, zero)
    L1cols = [vsub(ev(e, zero), c) for e in units]
    L2cols = [vsub(ev(zero, e), c) for e in units]
    B = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i, ei in enumerate(units):
        for j, ej in enumerate(units):
            v = vsub(vsub(vsub(ev(ei, ej), L1cols[i]), L2cols[j]), c)
            for k in range(dim):
                B[k][i][j] = v[k]
    return BiAffineMap(
        [Matrix(B[k], field, ncols=dim) for k in range(dim)],
        Matrix.from_columns(L1cols, dim, field),
        Matrix.from_columns(L2cols, dim, field),
        c,
    )


def validate_biaffine(m: BiAffineMap, evaluator, trials=20, seed=0):
    """Compare ``m`` with ``evaluator`` at ``trials`` points.

    The first probe is ``a = (2, ..., 2), b = (3, ..., 3)``; the rest are
    seeded random rationals (or residues).  A mismatch proves the black box
    is not bi-affine.
    """
    F = m.field
    n = m.dim
    rng = random.Random(seed)
    for t in range(trials):
        if t == 0:
            a = tuple(F(2) for _ in range(n))
            b = tuple(F(3) for _ in range(n))
        else:
            a = tuple(F.random(rng) for _ in range(n))
            b = tuple(F.random(rng) for _ in range(n))
        got = m(a, b)
        want = tuple(F(x) for x in evaluator(a, b))
        if got != want:
            return Verdict("biaffine", False, witness={"a": a, "b": b},
                           note=f"interpolant {list(map(str, got))} vs {list(map(str, want))}")
    return Verdict("biaffine", True)


def symbolic_args(dim, blocks, field=Q):
    """``blocks`` points of fresh variables; block k uses ``x_{k*dim} .. x_{k*dim+dim-1}``."""
    if blocks not in (1, 2, 3):
        raise ValueError("blocks must be 1, 2 or 3")
    nvars = dim * blocks
    return [tuple(MultiPoly.var(nvars, k * dim + i, field) for i in range(dim))
            for k in range(blocks)]
