"""Sparse multivariate polynomials over Q or F_p.

The canonical form (no zero coefficients, exponent tuples as keys) makes
``p == 0`` a proof over Q.  Every identity verdict in the package goes
through :meth:`MultiPoly.is_zero`; evaluation is used only to extract
witnesses.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import ArityMismatch, FieldMismatch
from .kernel import Fp, Q

__all__ = ["MultiPoly", "poly_add", "poly_mul", "poly_eval", "find_nonzero_point",
           "grlex_key", "variables"]


def grlex_key(exp):
    """Sort key for graded-lex order, largest monomial first."""
    return (-sum(exp), tuple(-e for e in exp))


class MultiPoly:
    __slots__ = ("nvars", "terms", "field")

    def __init__(self, nvars, terms=None, field=Q):
        self.nvars = nvars
        self.field = field
        clean = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != nvars:
                    raise ArityMismatch(f"exponent {exp} in {nvars} variables")
                c = field(c)
                if c:
                    clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms, field):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p.field = field
        return p

    @classmethod
    def constant(cls, nvars, c, field=Q):
        return cls(nvars, {(0,) * nvars: c}, field)

    @classmethod
    def var(cls, nvars, i, field=Q):
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): field.one}, field)

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction, Fp)):
            return MultiPoly.constant(self.nvars, other, self.field)
        return None

    def __add__(self, other):
        q = self._lift(other)
        if q is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in q.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return MultiPoly._raw(self.nvars, terms, self.field)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        q = self._lift(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._lift(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Fp)):
            c = self.field(other)
            if not c:
                return MultiPoly._raw(self.nvars, {}, self.field)
            return MultiPoly._raw(self.nvars, {e: c * v for e, v in self.terms.items()},
                                  self.field)
        q = self._lift(other)
        if q is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in q.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in terms.items() if c}, self.field)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = MultiPoly.constant(self.nvars, 1, self.field)
        for _ in range(k):
            out = out * self
        return out

    # -- inspection -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (self.nvars == other.nvars and self.field == other.field
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction, Fp)):
            return self == MultiPoly.constant(self.nvars, other, self.field)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def serialize(self):
        """Term list in grlex order: ``[[exponents, coefficient], ...]``."""
        return [[list(e), self.field.format(c)] for e, c in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i}" + (f"^{k}" if k > 1 else "")
                            for i, k in enumerate(e) if k)
            coeff = str(c)
            if not mono:
                parts.append(coeff)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"

    # -- evaluation -----------------------------------------------------------

    def __call__(self, point):
        return poly_eval(self, point)

    def substitute(self, i, value):
        """Fix variable ``i`` to a scalar, keeping the variable count."""
        value = self.field(value)
        terms = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            v = c * value ** e[i] if e[i] else c
            terms[ne] = terms.get(ne, self.field.zero) + v
        return MultiPoly(self.nvars, terms, self.field)

    def coefficient_in(self, i, k):
        """Coefficient of ``x_i^k`` as a polynomial in the other variables."""
        terms = {e[:i] + (0,) + e[i + 1:]: c for e, c in self.terms.items() if e[i] == k}
        return MultiPoly._raw(self.nvars, terms, self.field)


def variables(nvars, field=Q):
    return [MultiPoly.var(nvars, i, field) for i in range(nvars)]


def poly_add(p, q):
    if p.nvars != q.nvars:
        raise ArityMismatch(f"{p.nvars} vs {q.nvars} variables")
    return p + q


def poly_mul(p, q):
    if p.nvars != q.nvars:
        raise ArityMismatch(f"{p.nvars} vs {q.nvars} variables")
    return p * q


def poly_eval(p, point):
    if len(point) != p.nvars:
        raise ArityMismatch(f"point of length {len(point)} for {p.nvars} variables")
    F = p.field
    point = [F(x) for x in point]
    total = F.zero
    for e, c in p.terms.items():
        t = c
        for x, k in zip(point, e):
            if k:
                t = t * x ** k
        total = total + t
    return total


def _candidates(field, degree):
    if field.characteristic == 0:
        return [field(k) for k in range(degree + 1)]
    return [field(k) for k in range(min(degree + 1, field.characteristic))]


def find_nonzero_point(p: MultiPoly):
    """A point where ``p`` does not vanish, or ``None``.

    Works variable by variable starting from ``x0``: pick a nonzero coefficient
    of the highest power, recurse on it, substitute, then scan ``deg + 1``
    values for the remaining variable.  Over Q this always succeeds for a
    nonzero ``p``.  Over F_p it succeeds when each variable's degree is below
    ``p`` (guaranteed if the total degree is); otherwise it falls back to an
    exhaustive search and may return ``None`` for a nonzero polynomial.
    """
    if p.is_zero():
        return None
    F = p.field
    # main variable is x0, so e.g. x0 - x1 yields (1, 0)
    rev = MultiPoly._raw(p.nvars, {e[::-1]: c for e, c in p.terms.items()}, F)
    point = _search(rev, p.nvars - 1)
    if point is not None:
        return tuple(point[::-1])
    if F.characteristic and p.nvars <= 6:
        for pt in product(F.elements(), repeat=p.nvars):
            if poly_eval(p, pt):
                return pt
    return None


def _search(p, i):
    # values for variables 0..i making p (free of variables > i) nonzero
    F = p.field
    if i < 0:
        return [] if p.constant_term() else None
    d = p.degree_in(i)
    if d <= 0:
        rest = _search(p, i - 1)
        return None if rest is None else rest + [F.zero]
    rest = _search(p.coefficient_in(i, d), i - 1)
    if rest is None:
        return None
    partial = p
    for j, v in enumerate(rest):
        partial = partial.substitute(j, v)
    for v in _candidates(F, d):
        if partial.substitute(i, v).constant_term():
            return rest + [v]
    return None
