"""Exact scalar fields (Q and F_p, p odd) and dense linear algebra over them.

Rationals are :class:`fractions.Fraction`; prime-field elements are
:class:`Fp`.  Vectors are plain tuples of scalars, so the same code paths
accept tuples of polynomials when a map is evaluated symbolically.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
import random

from .errors import DimensionMismatch, FieldError, FieldMismatch, NotSquare

__all__ = [
    "Q", "GF", "Fp", "Rationals", "PrimeField", "field_of", "field_inv",
    "Matrix", "rref", "rank", "mat_solve", "mat_kernel", "mat_inverse",
    "vadd", "vsub", "vneg", "vscale", "zero_vector", "unit_vector",
]


class Rationals:
    """The field Q; elements are ``Fraction`` in lowest terms."""

    characteristic = 0
    name = "Q"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, Fp):
            raise FieldMismatch(f"cannot coerce {x!r} into Q")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def parse(self, text):
        if isinstance(text, int) and not isinstance(text, bool):
            return Fraction(text)
        if not isinstance(text, str):
            raise FieldError(f"rational literal must be a string, got {text!r}")
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational literal {text!r}") from exc

    def format(self, x):
        x = self(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def descriptor(self):
        return "Q"

    def random(self, rng: random.Random, height=5):
        num = rng.randint(-height, height)
        den = rng.randint(1, height)
        return Fraction(num, den)

    def elements(self):
        raise ValueError("Q is infinite")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


Q = Rationals()


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Fp:
    """Element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            raise FieldMismatch(f"cannot mix F_{self.p} with Q")
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * Fp(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(v, self.p) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Fp(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class PrimeField:
    def __init__(self, p):
        if not isinstance(p, int) or isinstance(p, bool) or not _is_prime(p):
            raise FieldError(f"{p!r} is not a prime")
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"

    def __call__(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} element in F_{self.p}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Rational) and not isinstance(x, int):
            return Fp(x.numerator, self.p) / Fp(x.denominator, self.p)
        return Fp(int(x), self.p)

    @property
    def zero(self):
        return Fp(0, self.p)

    @property
    def one(self):
        return Fp(1, self.p)

    def parse(self, text):
        if isinstance(text, bool):
            raise FieldError(f"bad F_{self.p} literal {text!r}")
        if isinstance(text, int):
            return Fp(text, self.p)
        if isinstance(text, str):
            try:
                return self(Fraction(text.strip()))
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError(f"bad F_{self.p} literal {text!r}") from exc
        raise FieldError(f"bad F_{self.p} literal {text!r}")

    def format(self, x):
        return self(x).value

    def descriptor(self):
        return {"Fp": self.p}

    def random(self, rng: random.Random, height=None):
        return Fp(rng.randrange(self.p), self.p)

    def elements(self):
        return [Fp(v, self.p) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


def field_of(x):
    if isinstance(x, Fp):
        return GF(x.p)
    if isinstance(x, (Fraction, int)):
        return Q
    raise FieldMismatch(f"{x!r} is not a field element")


def field_inv(x):
    """Multiplicative inverse; raises ``ZeroDivisionError`` on zero."""
    if isinstance(x, Fp):
        return x.inverse()
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse")
    return 1 / x


# -- vectors ---------------------------------------------------------------

def _same_len(*vs):
    n = len(vs[0])
    if any(len(v) != n for v in vs):
        raise DimensionMismatch(f"vector lengths {[len(v) for v in vs]}")


def vadd(u, v):
    _same_len(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    _same_len(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(s, u):
    return tuple(s * a for a in u)


def zero_vector(n, field=Q):
    return (field.zero,) * n


def unit_vector(n, i, field=Q):
    return tuple(field.one if k == i else field.zero for k in range(n))


# -- matrices --------------------------------------------------------------

class Matrix:
    """Immutable dense matrix over a single field."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows, field=None, ncols=None):
        rows = [list(r) for r in rows]
        if field is None:
            field = Q
            for r in rows:
                if r:
                    field = field_of(r[0])
                    break
        self.field = field
        self.nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        self.ncols = ncols
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)

    @classmethod
    def identity(cls, n, field=Q):
        return cls([[field.one if i == j else field.zero for j in range(n)]
                    for i in range(n)], field, ncols=n)

    @classmethod
    def zeros(cls, r, c, field=Q):
        return cls([[field.zero] * c for _ in range(r)], field, ncols=c)

    @classmethod
    def from_columns(cls, cols, nrows, field=Q):
        return cls([[col[i] for col in cols] for i in range(nrows)], field,
                   ncols=len(cols))

    @classmethod
    def diag(cls, entries, field=Q):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)]
                    for i in range(n)], field, ncols=n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        if isinstance(ij, tuple):
            i, j = ij
            return self.rows[i][j]
        return self.rows[ij]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def _check_field(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.field, ncols=self.ncols)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.field, ncols=self.ncols)

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows], self.field, ncols=self.ncols)

    def __mul__(self, s):
        if isinstance(s, Matrix):
            return NotImplemented
        s = self.field(s)
        return Matrix([[s * a for a in r] for r in self.rows], self.field, ncols=self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check_field(other)
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            cols = [other.column(j) for j in range(other.ncols)]
            return Matrix([[sum((a * b for a, b in zip(r, c)), self.field.zero) for c in cols]
                           for r in self.rows], self.field, ncols=other.ncols)
        return self.apply(other)

    def apply(self, v):
        """Matrix-vector product; ``v`` may hold scalars or polynomials."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"{self.shape} applied to length {len(v)}")
        out = []
        for r in self.rows:
            acc = 0
            for a, x in zip(r, v):
                if a:
                    acc = acc + a * x
            out.append(acc if not isinstance(acc, int) else self.field(acc))
        return tuple(out)

    @property
    def T(self):
        return Matrix([self.column(j) for j in range(self.ncols)], self.field,
                      ncols=self.nrows)

    def flat(self):
        return tuple(x for r in self.rows for x in r)

    @classmethod
    def from_flat(cls, values, r, c, field=Q):
        values = list(values)
        return cls([values[i * c:(i + 1) * c] for i in range(r)], field, ncols=c)

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def is_identity(self):
        return self.nrows == self.ncols and all(
            (x == 1) if i == j else (not x)
            for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.rows, self.shape))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Matrix([{body}])"


def rref(A: Matrix):
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    rows = [list(r) for r in A.rows]
    pivots = []
    r = 0
    for c in range(A.ncols):
        if r == A.nrows:
            break
        piv = next((i for i in range(r, A.nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field_inv(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(A.nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix(rows, A.field, ncols=A.ncols), tuple(pivots)


def rank(A: Matrix):
    return len(rref(A)[1])


def mat_kernel(A: Matrix):
    """Basis of ``{x : A x = 0}``, one vector per free column."""
    R, pivots = rref(A)
    F = A.field
    free = [c for c in range(A.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * A.ncols
        v[f] = F.one
        for i, p in enumerate(pivots):
            v[p] = -R[i, f]
        basis.append(tuple(v))
    return basis


def mat_solve(A: Matrix, b):
    """One solution of ``A x = b`` (free variables set to zero), or ``None``."""
    if len(b) != A.nrows:
        raise DimensionMismatch(f"{A.shape} system with rhs of length {len(b)}")
    F = A.field
    b = [F(x) for x in b]
    aug = Matrix([list(r) + [x] for r, x in zip(A.rows, b)], F, ncols=A.ncols + 1)
    R, pivots = rref(aug)
    if A.ncols in pivots:
        return None
    x = [F.zero] * A.ncols
    for i, p in enumerate(pivots):
        x[p] = R[i, A.ncols]
    return tuple(x)


def mat_inverse(A: Matrix):
    """Inverse of a square matrix, or ``None`` when singular."""
    if A.nrows != A.ncols:
        raise NotSquare(f"{A.shape} is not square")
    n = A.nrows
    F = A.field
    aug = Matrix([list(r) + [F.one if i == j else F.zero for j in range(n)]
                  for i, r in enumerate(A.rows)], F, ncols=2 * n)
    R, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        return None
    return Matrix([r[n:] for r in R.rows], F, ncols=n)
