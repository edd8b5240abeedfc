import random

import pytest

from affgebra.affine import AffineMap, BiAffineMap, interpolate_biaffine
from affgebra.errors import AlphaNotIdentity, DimensionMismatch
from affgebra.fixtures import classical_homlie, fixture_affgebras
from affgebra.kernel import GF, Q, Matrix, mat_inverse
from affgebra.structures import (LEFT, RIGHT, HomAssocAffgebra, HomLieAffgebra, HomLieAlgebra,
                                 HomPreLieAffgebra, check_affine_antisymmetry,
                                 check_affine_hom_jacobi, check_affine_jacobi,
                                 check_hom_associativity, check_hom_prelie, check_homlie_algebra,
                                 check_multiplicativity, homlie_algebra_verdicts)

from helpers import affine1, bi1, evaluate_witness
import oracle

ID1 = affine1(1)


def lie1(bracket, alpha=ID1):
    return HomLieAffgebra(bracket, alpha)


def assert_genuine_failure(v):
    assert not v
    assert v.witness is not None
    values = evaluate_witness(v.residual, v.witness)
    assert any(values)


class TestAntisymmetry:
    def test_constant_map_bracket(self):
        assert check_affine_antisymmetry(lie1(bi1(L1=2)))

    def test_shifted_projection(self):
        assert check_affine_antisymmetry(lie1(bi1(L2=1, c=5)))

    def test_a_plus_2b_passes(self):
        # every bracket with zero bilinear part satisfies affine anti-symmetry:
        # (a+2b) - 3a + (b+2a) - 3b = 0
        assert check_affine_antisymmetry(lie1(bi1(L1=1, L2=2)))

    def test_product_fails_with_witness(self):
        v = check_affine_antisymmetry(lie1(bi1(B=1)))
        assert_genuine_failure(v)
        assert v.witness == {"a": (1,), "b": (0,)}


class TestHomJacobi:
    def test_projection_with_identity(self):
        assert check_affine_hom_jacobi(lie1(bi1(L2=1)))

    def test_constant_map_with_scaling_alpha(self):
        assert check_affine_hom_jacobi(lie1(bi1(L1=2), affine1(3)))

    def test_product_fails(self):
        v = check_affine_hom_jacobi(lie1(bi1(B=1)))
        assert_genuine_failure(v)
        # the residual is 3abc - a^3 - b^3 - c^3; the alternative witness (1,1,2) is genuine too
        assert v.residual[0]((1, 1, 2)) != 0

    def test_jacobi_requires_identity(self):
        with pytest.raises(AlphaNotIdentity):
            check_affine_jacobi(lie1(bi1(L2=1), affine1(2)))
        assert check_affine_jacobi(lie1(bi1(L2=1)))
        assert not check_affine_jacobi(lie1(bi1(B=1)))


class TestHomAssociativity:
    def test_field_product(self):
        assert check_hom_associativity(HomAssocAffgebra(bi1(B=1), ID1))

    def test_scaling_alpha_still_passes(self):
        assert check_hom_associativity(HomAssocAffgebra(bi1(B=1), affine1(2)))

    def test_shifted_alpha_fails(self):
        v = check_hom_associativity(HomAssocAffgebra(bi1(B=1), affine1(1, 1)))
        assert_genuine_failure(v)
        assert v.residual[0]((0, 1, 1)) != 0


class TestPreLie:
    def test_left_commutative_product(self):
        assert check_hom_prelie(HomPreLieAffgebra(bi1(B=1), ID1, LEFT))

    def test_right_projection(self):
        assert check_hom_prelie(HomPreLieAffgebra(bi1(L2=1), ID1, RIGHT))

    def test_left_a_plus_ab_fails(self):
        assert_genuine_failure(check_hom_prelie(HomPreLieAffgebra(bi1(B=1, L1=1), ID1, LEFT)))

    def test_bad_side(self):
        with pytest.raises(ValueError):
            HomPreLieAffgebra(bi1(B=1), ID1, "middle")


class TestMultiplicativity:
    def test_identity_always(self):
        rng = random.Random(0)
        for _ in range(5):
            op = bi1(*(Q.random(rng) for _ in range(4)))
            assert check_multiplicativity(op, ID1)

    def test_scaling_breaks_product(self):
        assert_genuine_failure(check_multiplicativity(bi1(B=1), affine1(2)))

    def test_identity_in_disguise(self):
        assert check_multiplicativity(bi1(B=1), AffineMap(Matrix([[1]]), (0,)))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            check_multiplicativity(bi1(B=1), AffineMap.identity(2))


SL2_SWAP = [[1, 0, 0], [0, 0, 1], [0, 1, 0]]  # h fixed, e <-> f


class TestHomLieAlgebra:
    def test_abelian_any_alpha(self):
        L = classical_homlie("abelian", n=3)
        rng = random.Random(2)
        al = Matrix([[Q.random(rng) for _ in range(3)] for _ in range(3)])
        assert check_homlie_algebra(HomLieAlgebra(L.sc, al))

    def test_sl2_identity(self):
        assert check_homlie_algebra(classical_homlie("sl2"))

    def test_sl2_swap_passes(self):
        # in dimension 3 the Hom-Jacobi cyclic sum is an alternating trilinear map, and for sl2
        # it vanishes for every linear alpha; the independent oracle agrees
        L = HomLieAlgebra(classical_homlie("sl2").sc, Matrix(SL2_SWAP))
        assert check_homlie_algebra(L)
        assert oracle.is_homlie(L)
        assert not check_multiplicativity(L.op, L.alpha_map)

    def test_antisymmetry_failure_reports_indices(self):
        sc = [[[0, 1], [0, 0]], [[0, 0], [0, 0]]]
        anti, _ = homlie_algebra_verdicts(HomLieAlgebra(sc, Matrix.identity(2)))
        assert not anti and anti.witness == {"k": 0, "i": 0, "j": 1}

    def test_dimension_4_jacobi_failure_matches_oracle(self):
        # a 4-dim direct sum with an alpha mixing the summands
        L = classical_homlie("direct_sum", parts=[("sl2", None), ("abelian", 1)])
        al = Matrix([[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]])
        M = HomLieAlgebra(L.sc, al)
        assert bool(check_homlie_algebra(M)) == oracle.is_homlie(M)


def test_fixture_affgebras_pass_and_match_oracle():
    for name, s in fixture_affgebras().items():
        anti, jac = check_affine_antisymmetry(s), check_affine_hom_jacobi(s)
        assert anti and jac, name
        if s.dim <= 2:
            ref = oracle.affgebra_axioms(
                lambda u, v: [oracle.to_sympy(x) if not hasattr(x, "free_symbols") else x
                              for x in s.bracket(u, v)],
                lambda u: list(s.alpha(u)), s.dim)
            assert ref == (True, True), name


def test_pushforward_preserves_antisymmetry_verdict():
    rng = random.Random(5)
    T = AffineMap(Matrix([[1, 2], [1, 3]]), (1, -2))
    Ti = AffineMap(mat_inverse(T.M), tuple(-x for x in mat_inverse(T.M).apply(T.t)))
    for _ in range(6):
        B = [Matrix([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)]) for _ in range(2)]
        if rng.random() < 0.5:
            B = [Matrix([[0, x], [-x, 0]]) for x in (rng.randint(-2, 2), rng.randint(-2, 2))]
        br = BiAffineMap(B, Matrix([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)]),
                         Matrix([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)]), (1, 0))
        pushed = interpolate_biaffine(lambda a, b: T(br(Ti(a), Ti(b))), 2)
        s1 = HomLieAffgebra(br, AffineMap.identity(2))
        s2 = HomLieAffgebra(pushed, AffineMap.identity(2))
        assert bool(check_affine_antisymmetry(s1)) == bool(check_affine_antisymmetry(s2))


def test_prime_field_checks():
    F = GF(5)
    s = HomLieAffgebra(bi1(L2=1, c=3, field=F), affine1(1, field=F))
    assert check_affine_antisymmetry(s) and check_affine_hom_jacobi(s)
    v = check_affine_hom_jacobi(HomLieAffgebra(bi1(B=1, field=F), affine1(1, field=F)))
    assert not v
    assert v.witness is not None and any(evaluate_witness(v.residual, v.witness))
