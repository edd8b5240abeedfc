from fractions import Fraction as Fr
import random

from hypothesis import given, strategies as st
import pytest
import sympy as sp

from affgebra.errors import ArityMismatch
from affgebra.kernel import GF, Q
from affgebra.polyring import MultiPoly, find_nonzero_point, poly_add, poly_eval, poly_mul, variables


def test_add_examples():
    x0, x1 = variables(2)
    assert poly_add(x0 + 1, -x0) == MultiPoly.constant(2, 1)
    assert poly_add(x0 * x1, MultiPoly(2)) == x0 * x1
    assert poly_add(x0 * x1, x0 * x1) == 2 * x0 * x1


def test_mul_examples():
    x0, x1 = variables(2)
    assert poly_mul(x0 + x1, x0 - x1) == x0 ** 2 - x1 ** 2
    assert poly_mul(x0 + x1, MultiPoly.constant(2, 1)) == x0 + x1
    assert poly_mul(x0 + x1, MultiPoly(2)).is_zero()


def test_eval_examples():
    x0, x1 = variables(2)
    assert poly_eval(x0 ** 2 - x1 ** 2, (3, 2)) == 5
    p = 3 * x0 * x1 + x1 - 7
    assert poly_eval(p, (0, 0)) == p.constant_term() == -7
    assert poly_eval(2 * x0 * x1, (Fr(1, 2), 4)) == 4


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        poly_add(MultiPoly.var(2, 0), MultiPoly.var(3, 0))
    with pytest.raises(ArityMismatch):
        poly_mul(MultiPoly.var(2, 0), MultiPoly.var(1, 0))
    with pytest.raises(ArityMismatch):
        poly_eval(MultiPoly.var(2, 0), (1,))


def test_find_nonzero_point_examples():
    x0, x1, x2 = variables(3)
    assert find_nonzero_point(MultiPoly(3)) is None
    pt = find_nonzero_point(x0)
    assert pt[0] != 0 and tuple(pt) == (1, 0, 0)
    assert find_nonzero_point(x0 * x1 - x1 * x0) is None


def test_find_nonzero_point_witnesses_are_genuine():
    a, b, c = variables(3)
    p = 3 * a * b * c - a ** 3 - b ** 3 - c ** 3
    pt = find_nonzero_point(p)
    assert poly_eval(p, pt) != 0
    assert poly_eval(p, (1, 1, 2)) != 0


def test_small_field_policy():
    F = GF(3)
    (x,) = variables(1, F)
    p = x ** 3 - x  # vanishes on all of F_3 but is not the zero polynomial
    assert not p.is_zero()
    assert find_nonzero_point(p) is None
    q = x ** 2 + 1
    pt = find_nonzero_point(q)
    assert poly_eval(q, pt) != 0


def test_grlex_serialization_is_stable():
    x0, x1 = variables(2)
    p = x1 + x0 ** 2 + 3 * x0 * x1 + 5
    assert p.serialize() == [[[2, 0], "1"], [[1, 1], "3"], [[0, 1], "1"], [[0, 0], "5"]]
    assert (5 + x1 + 3 * x1 * x0 + x0 ** 2).serialize() == p.serialize()


exps = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
terms = st.dictionaries(exps, st.fractions(min_value=-5, max_value=5, max_denominator=3), max_size=4)


def to_sympy(p, syms):
    return sum((sp.Rational(c.numerator, c.denominator) * sp.Mul(*[s ** e for s, e in zip(syms, ex)])
                for ex, c in p.terms.items()), sp.Integer(0))


@given(terms, terms, terms)
def test_ring_laws(t1, t2, t3):
    p, q, r = (MultiPoly(3, t, Q) for t in (t1, t2, t3))
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) + r == p + (q + r)
    syms = sp.symbols("x0:3")
    assert sp.expand(to_sympy(p * q + r, syms) - (to_sympy(p, syms) * to_sympy(q, syms) + to_sympy(r, syms))) == 0


@given(terms, st.integers(0, 10 ** 6))
def test_zero_iff_vanishes_on_samples(t, seed):
    p = MultiPoly(3, t, Q)
    rng = random.Random(seed)
    points = [tuple(Q.random(rng, 4) for _ in range(3)) for _ in range(100)]
    vanishes = all(poly_eval(p, pt) == 0 for pt in points)
    assert vanishes == p.is_zero()


@given(terms.filter(bool))
def test_witness_search_over_q(t):
    p = MultiPoly(3, t, Q)
    if not p.is_zero():
        assert poly_eval(p, find_nonzero_point(p)) != 0
