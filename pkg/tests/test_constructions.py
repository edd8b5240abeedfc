import random

import pytest

from affgebra.affine import AffineMap, interpolate_biaffine, symbolic_args
from affgebra.constructions import (AffgebraData, affine_from_homlie, build_from_data,
                                    commutator_bracket, constant_bracket, data_verdicts,
                                    prelie_to_lie, scalar_action_bracket, yau_twist_assoc,
                                    yau_twist_lie, yau_twist_prelie)
from affgebra.errors import (AlphaNotMultiplicative, DataInvariantViolated, NotEndomorphism,
                             PreconditionFailed)
from affgebra.fixtures import build_sna, classical_homlie, fixture_algebras, sample_valid_data, \
    sna_structures
from affgebra.kernel import Q, Matrix, vsub
from affgebra.structures import (LEFT, RIGHT, HomAssocAffgebra, HomLieAffgebra, HomLieAlgebra,
                                 HomPreLieAffgebra, check_affine_antisymmetry,
                                 check_affine_hom_jacobi, check_hom_associativity,
                                 check_hom_prelie)

from helpers import affine1, bi1, m1

ID1 = affine1(1)


def is_homlie(s):
    return bool(check_affine_antisymmetry(s)) and bool(check_affine_hom_jacobi(s))


class TestCommutator:
    def test_commutative_product_gives_projection(self):
        s = commutator_bracket(HomAssocAffgebra(bi1(B=1), ID1, plain=True))
        assert s.bracket == bi1(L2=1)
        assert is_homlie(s)

    def test_rejects_non_associative(self):
        with pytest.raises(PreconditionFailed):
            commutator_bracket(HomAssocAffgebra(bi1(B=1), affine1(1, 1)))

    def test_rejects_non_multiplicative(self):
        with pytest.raises(PreconditionFailed):
            commutator_bracket(HomAssocAffgebra(bi1(B=1), affine1(2)))

    def test_upper_triangular_matrices(self):
        # 2x2 upper triangular matrices (x, y, z) -> [[x, y], [0, z]] under the matrix product
        def mul(a, b):
            return (a[0] * b[0], a[0] * b[1] + a[1] * b[2], a[2] * b[2])
        mu = interpolate_biaffine(mul, 3)
        s = commutator_bracket(HomAssocAffgebra(mu, AffineMap.identity(3), plain=True))
        assert is_homlie(s)
        a, b = symbolic_args(3, 2)
        want = [x - y + z for x, y, z in zip(mul(a, b), mul(b, a), b)]
        assert vsub(s.bracket(a, b), want) == (0, 0, 0)


class TestPreLieToLie:
    def test_commutative(self):
        s = prelie_to_lie(HomPreLieAffgebra(bi1(B=1), ID1, LEFT))
        assert s.bracket == bi1(L2=1) and is_homlie(s)

    def test_projection_product(self):
        s = prelie_to_lie(HomPreLieAffgebra(bi1(L2=1), ID1, LEFT))
        assert s.bracket == bi1(L1=-1, L2=2)
        assert is_homlie(s)

    def test_right_side_too(self):
        s = prelie_to_lie(HomPreLieAffgebra(bi1(L2=1), ID1, RIGHT))
        assert is_homlie(s)

    def test_rejects_non_prelie(self):
        with pytest.raises(PreconditionFailed):
            prelie_to_lie(HomPreLieAffgebra(bi1(B=1, L1=1), ID1, LEFT))


class TestScalarAction:
    def test_xi_zero_and_one(self):
        assert scalar_action_bracket(1, 0, ID1).bracket == bi1(L1=1)
        assert scalar_action_bracket(1, 1, ID1).bracket == bi1(L2=1)

    def test_xi_two_with_affine_alpha(self):
        s = scalar_action_bracket(1, 2, affine1(3, 1))
        assert s.bracket == bi1(L1=-1, L2=2)
        assert is_homlie(s)

    @pytest.mark.parametrize("xi", [0, 1, 2, -1, "1/2", 7])
    def test_any_alpha_dim2(self, xi):
        rng = random.Random(3)
        al = AffineMap(Matrix([[Q.random(rng) for _ in range(2)] for _ in range(2)]),
                       (Q.random(rng), Q.random(rng)))
        assert is_homlie(scalar_action_bracket(2, Q(xi), al))


class TestConstantBracket:
    def test_identity_phi(self):
        s = constant_bracket(1, ID1, ID1)
        assert s.bracket == bi1(L1=1) and is_homlie(s)

    def test_scaled(self):
        assert is_homlie(constant_bracket(1, affine1(2), affine1(5)))

    def test_constant_phi(self):
        s = constant_bracket(1, affine1(0, 4), affine1(3, 1))
        assert s.bracket == bi1(c=4) and is_homlie(s)


class TestYauTwists:
    def test_identity_twist_assoc(self):
        s = HomAssocAffgebra(bi1(B=1), ID1, plain=True)
        t = yau_twist_assoc(s, ID1)
        assert t.mul == s.mul and t.alpha == s.alpha

    def test_trivial_twist_lie(self):
        s = HomLieAffgebra(bi1(L2=1), ID1, plain=True)
        t = yau_twist_lie(s, ID1)
        assert t.bracket == s.bracket

    def test_lie_projection_scaled(self):
        s = HomLieAffgebra(bi1(L2=1), ID1, plain=True)
        t = yau_twist_lie(s, affine1(2))
        assert t.bracket == bi1(L2=2) and t.alpha == affine1(2)
        assert is_homlie(t)

    def test_prelie_rejects_non_endomorphism(self):
        s = HomPreLieAffgebra(bi1(B=1), ID1, LEFT, plain=True)
        with pytest.raises(NotEndomorphism):
            yau_twist_prelie(s, affine1(2))

    def test_prelie_shift(self):
        s = HomPreLieAffgebra(bi1(L2=1), ID1, LEFT, plain=True)
        t = yau_twist_prelie(s, affine1(1, 1))
        assert t.prod == bi1(L2=1, c=1)
        assert check_hom_prelie(t)

    def test_sna_twists(self):
        bundle = sna_structures(build_sna(2))
        al = bundle.hom_lie.alpha
        t = yau_twist_lie(bundle.lie, al)
        assert is_homlie(t)

    def test_twist_composition(self):
        L = classical_homlie("heisenberg3")
        s = affine_from_homlie(L, (0, 0, 0))
        s = HomLieAffgebra(s.bracket, s.alpha, plain=True)
        f = AffineMap.linear(Matrix.diag([1, 2, 2]))
        g = AffineMap.linear(Matrix.diag([3, 1, 3]))
        once = yau_twist_lie(yau_twist_lie(s, f), g)
        both = yau_twist_lie(s, g @ f)
        # twisting by f then g composes the brackets and multiplies the alphas
        assert once.alpha == both.alpha
        assert once.bracket == s.bracket.after(f).after(g)

    def test_twist_preserves_axioms_for_hom_input(self):
        L = classical_homlie("aff1")
        s = build_from_data(sample_valid_data(L, 4))
        t = yau_twist_lie(HomLieAffgebra(s.bracket, s.alpha), AffineMap.identity(2))
        assert is_homlie(t)


class TestBuildFromData:
    def test_constant_five(self):
        L = classical_homlie("abelian", n=1)
        s = build_from_data(AffgebraData(L, m1(0), m1(0), (5,)))
        assert s.bracket == bi1(c=5) and is_homlie(s)

    def test_projection(self):
        L = classical_homlie("abelian", n=1)
        s = build_from_data(AffgebraData(L, m1(1), m1(1), (0,)))
        assert s.bracket == bi1(L2=1) and is_homlie(s)

    def test_sl2_identity_data(self):
        L = classical_homlie("sl2")
        I3 = Matrix.identity(3)
        s = build_from_data(AffgebraData(L, I3, I3, (0, 0, 0)))
        a, b = symbolic_args(3, 2)
        assert vsub(s.bracket(a, b), [x + y for x, y in zip(L.bracket(a, b), b)]) == (0, 0, 0)
        assert is_homlie(s)

    def test_closed_form_matches_formula(self):
        L = classical_homlie("heisenberg3", Matrix.diag([1, 2, 2]))
        d = sample_valid_data(L, 9)
        s = build_from_data(d)
        a, b = symbolic_args(3, 2)
        formula = [p + q + r + t for p, q, r, t in zip(L.bracket(a, b), d.kappa.apply(a),
                                                       d.lam.apply(vsub(b, a)), d.r)]
        assert vsub(s.bracket(a, b), formula) == (0, 0, 0)

    def test_invalid_data_reports_pair(self):
        L = classical_homlie("sl2")
        bad = Matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
        with pytest.raises(DataInvariantViolated, match="basis pair"):
            build_from_data(AffgebraData(L, bad, bad, (0, 0, 0)))

    def test_all_fixtures_sampled(self):
        for name, L in fixture_algebras().items():
            for seed in range(3):
                d = sample_valid_data(L, seed)
                assert all(data_verdicts(d)), name
                assert is_homlie(build_from_data(d)), name


class TestAffineFromHomLie:
    def test_abelian(self):
        L = classical_homlie("abelian", n=1)
        assert affine_from_homlie(L, (5,)).bracket == bi1(L2=1, c=5)

    def test_sl2(self):
        s = affine_from_homlie(classical_homlie("sl2"), (0, 0, 0))
        assert is_homlie(s)

    def test_not_multiplicative(self):
        L = HomLieAlgebra(classical_homlie("sl2").sc, Matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]]))
        with pytest.raises(AlphaNotMultiplicative):
            affine_from_homlie(L, (0, 0, 0))


def test_hom_assoc_twist_of_matrices():
    def mul(a, b):
        return (a[0] * b[0], a[0] * b[1] + a[1] * b[2], a[2] * b[2])
    s = HomAssocAffgebra(interpolate_biaffine(mul, 3), AffineMap.identity(3), plain=True)
    # conjugation by diag(1, 2): (x, y, z) -> (x, 2y, z) is an algebra automorphism
    t = yau_twist_assoc(s, AffineMap.linear(Matrix.diag([1, 2, 1])))
    assert check_hom_associativity(t)
    with pytest.raises(NotEndomorphism):
        yau_twist_assoc(s, AffineMap.linear(Matrix.diag([2, 1, 1])))
