"""Independent sympy reference computations used to freeze expected values.

Nothing here imports the library's linear algebra or polynomial code: the
oracle sees only raw structure constants and matrices as nested lists.
"""
from fractions import Fraction

import sympy as sp


def to_sympy(x):
    if isinstance(x, Fraction):
        return sp.Rational(x.numerator, x.denominator)
    return sp.sympify(int(x)) if not isinstance(x, sp.Basic) else x


def sc_lists(L):
    return [[[to_sympy(x) for x in row] for row in mat] for mat in L.sc]


def mat_lists(M):
    return [[to_sympy(x) for x in row] for row in M.rows]


def bracket_fn(sc):
    n = len(sc)

    def br(u, v):
        return [sp.expand(sum(sc[k][i][j] * u[i] * v[j] for i in range(n) for j in range(n)))
                for k in range(n)]
    return br


def apply(M, v):
    return [sum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(M))]


def _unknown_matrix(prefix, n):
    return [[sp.Symbol(f"{prefix}_{i}_{j}") for j in range(n)] for i in range(n)]


def solution_dim(n, mats, equations):
    """Dimension of the solution space of homogeneous linear ``equations`` in the entries of ``mats``."""
    unknowns = [x for M in mats for row in M for x in row]
    eqs = [sp.expand(e) for e in equations]
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return len(unknowns)
    A, _ = sp.linear_eq_to_matrix(eqs, unknowns)
    return len(unknowns) - A.rank()


def _comm(X, al):
    n = len(al)
    return [apply(X, apply(al, [1 if k == j else 0 for k in range(n)]))[i]
            - apply(al, apply(X, [1 if k == j else 0 for k in range(n)]))[i]
            for i in range(n) for j in range(n)]


def space_dims(L):
    """Dimensions of delta, qc, centroid, alphader and the compatible-pair space.

    Constraints are generated from generic symbolic vectors ``a, b`` and
    coefficient extraction, not from basis pairs.
    """
    n = L.dim
    sc = sc_lists(L)
    al = mat_lists(L.alpha)
    br = bracket_fn(sc)
    a = sp.symbols(f"a0:{n}")
    b = sp.symbols(f"b0:{n}")
    ab_monos = [a[i] * b[j] for i in range(n) for j in range(n)]

    def coeffs(exprs):
        out = []
        for e in exprs:
            poly = sp.Poly(sp.expand(e), *a, *b) if n else None
            if poly is None:
                continue
            out.extend(poly.coeffs())
        return out

    def delta_eqs(l1, l2, l3):
        lhs = [x + y for x, y in zip(br(apply(l1, a), apply(al, b)), br(apply(al, a), apply(l2, b)))]
        rhs = apply(l3, br(a, b))
        return coeffs([x - y for x, y in zip(lhs, rhs)]) + _comm(l1, al) + _comm(l2, al) + _comm(l3, al)

    X, Y, Z = (_unknown_matrix(p, n) for p in "XYZ")
    zero = [[0] * n for _ in range(n)]
    neg = [[-x for x in row] for row in X]
    dims = {
        "delta": solution_dim(n, (X, Y, Z), delta_eqs(X, Y, Z)),
        "qc": solution_dim(n, (X,), delta_eqs(X, neg, zero)),
        "alphader": solution_dim(n, (X,), delta_eqs(X, X, X)),
    }
    cen = [x - y for x, y in zip(apply(X, br(a, b)), br(apply(X, a), apply(al, b)))]
    cen += [x - y for x, y in zip(br(apply(X, a), apply(al, b)), br(apply(al, a), apply(X, b)))]
    dims["centroid"] = solution_dim(n, (X,), coeffs(cen) + _comm(X, al))
    K, M = X, Y
    rhs = [p - q + r for p, q, r in zip(br(apply(M, a), apply(al, b)), br(apply(al, a), apply(K, b)),
                                        br(apply(al, a), apply(M, b)))]
    pair = coeffs([x - y for x, y in zip(apply(M, br(a, b)), rhs)]) + _comm(K, al) + _comm(M, al)
    dims["pair17"] = solution_dim(n, (K, M), pair)
    return dims


def is_homlie(L):
    """Antisymmetry and Hom-Jacobi via sympy expansion."""
    n = L.dim
    sc = sc_lists(L)
    al = mat_lists(L.alpha)
    br = bracket_fn(sc)
    a, b, c = (sp.symbols(f"{p}0:{n}") for p in "abc")
    anti = [sp.expand(x + y) for x, y in zip(br(a, b), br(b, a))]
    jac = [sp.expand(x + y + z) for x, y, z in zip(br(apply(al, a), br(b, c)),
                                                    br(apply(al, b), br(c, a)),
                                                    br(apply(al, c), br(a, b)))]
    return all(e == 0 for e in anti + jac)


def data_valid(L, kappa, lam):
    """Compatibility condition and alpha-commutation checked with generic vectors."""
    n = L.dim
    sc = sc_lists(L)
    al = mat_lists(L.alpha)
    K, M = mat_lists(kappa), mat_lists(lam)
    br = bracket_fn(sc)
    a, b = sp.symbols(f"a0:{n}"), sp.symbols(f"b0:{n}")
    rhs = [p - q + r for p, q, r in zip(br(apply(M, a), apply(al, b)), br(apply(al, a), apply(K, b)),
                                        br(apply(al, a), apply(M, b)))]
    res = [sp.expand(x - y) for x, y in zip(apply(M, br(a, b)), rhs)]
    return all(e == 0 for e in res + _comm(K, al) + _comm(M, al))


def delta_member(L, d, l1, l2):
    n = L.dim
    sc = sc_lists(L)
    al = mat_lists(L.alpha)
    D, M1, M2 = mat_lists(d), mat_lists(l1), mat_lists(l2)
    br = bracket_fn(sc)
    a, b = sp.symbols(f"a0:{n}"), sp.symbols(f"b0:{n}")
    lhs = [x + y for x, y in zip(br(apply(D, a), apply(al, b)), br(apply(al, a), apply(M1, b)))]
    res = [sp.expand(x - y) for x, y in zip(lhs, apply(M2, br(a, b)))]
    return all(e == 0 for e in res + _comm(D, al) + _comm(M1, al) + _comm(M2, al))


def affgebra_axioms(bracket, alpha, n):
    """Anti-symmetry and Hom-Jacobi for a bracket given as a Python function on sympy vectors."""
    a, b, c = (list(sp.symbols(f"{p}0:{n}")) for p in "abc")
    br = lambda u, v: [sp.expand(x) for x in bracket(u, v)]  # noqa: E731
    anti = [sp.expand(p - q + r - s) for p, q, r, s in zip(br(a, b), br(a, a), br(b, a), br(b, b))]
    terms = [br(alpha(a), br(b, c)), br(alpha(a), br(a, a)), br(alpha(b), br(c, a)),
             br(alpha(b), br(b, b)), br(alpha(c), br(a, b)), br(alpha(c), br(c, c))]
    signs = [1, -1, 1, -1, 1, -1]
    jac = [sp.expand(sum(s * t[k] for s, t in zip(signs, terms))) for k in range(n)]
    return all(e == 0 for e in anti), all(e == 0 for e in jac)
