"""Small builders shared by the test modules."""
from affgebra.affine import AffineMap, BiAffineMap
from affgebra.kernel import Q, Matrix


def m1(x, field=Q):
    return Matrix([[x]], field)


def affine1(slope, shift=0, field=Q):
    return AffineMap(m1(slope, field), (shift,))


def bi1(B=0, L1=0, L2=0, c=0, field=Q):
    """The dimension-1 map ``(a, b) -> B ab + L1 a + L2 b + c``."""
    return BiAffineMap([[[B]]], m1(L1, field), m1(L2, field), (c,))


def evaluate_witness(residuals, witness, order="abc"):
    point = tuple(x for k in order if k in witness for x in witness[k])
    return [r(point) for r in residuals]
