"""Exact computer algebra for affine spaces, affgebras and their Hom-twisted
variants (Hom-associative, Hom-Lie and Hom-pre-Lie).

Points are tuples of exact scalars (``fractions.Fraction`` or :class:`Fp`);
every axiom is checked by expanding both sides as polynomials in the
coordinates of generic points.
"""
from .errors import *  # noqa: F401,F403
from .kernel import (Q, GF, Fp, Matrix, field_inv, mat_inverse, mat_kernel, mat_solve, rank,
                     rref, unit_vector, vadd, vsub, zero_vector)
from .polyring import MultiPoly, find_nonzero_point, poly_add, poly_eval, poly_mul, variables
from .verdict import Verdict
from .affine import (AffineMap, BiAffineMap, action, affine_eval, biaffine_eval, heap, heap_op,
                     interpolate_affine, interpolate_biaffine, retract_add, retract_inverse,
                     translation_iso, validate_biaffine)
from .structures import (LEFT, RIGHT, HomAssocAffgebra, HomAssocAlgebra, HomLieAffgebra,
                         HomLieAlgebra, HomPreLieAffgebra, check_affine_antisymmetry,
                         check_affine_hom_jacobi, check_affine_jacobi, check_hom_assoc_algebra,
                         check_hom_associativity, check_hom_prelie, check_homlie_algebra,
                         check_multiplicativity)
from .constructions import (AffgebraData, affine_from_homlie, build_from_data, commutator_bracket,
                            constant_bracket, data_verdicts, prelie_to_lie, scalar_action_bracket,
                            yau_twist_assoc, yau_twist_lie, yau_twist_prelie)
from .fiber import (FiberResult, FixedPoints, alpha_fixed_points, basepoint_change, extract_data,
                    fiber_assoc, fiber_lie, recentre)
from .derivations import (SolutionSpace, alpha_derivation_space, centroid_space,
                          delta_lambda_space, delta_space, derivation_to_pair, is_subspace,
                          compatible_pair_space, pair_to_derivation, qc_space)
from .morphisms import (AffgebraHom, DataHom, assemble_hom, check_affgebra_hom, check_data_hom,
                        check_iso_data, enumerate_data_homs, equivalence_check, linear_psi_space,
                        linearize_hom)
from .fixtures import (build_sna, classical_homlie, fixture_affgebras, fixture_algebras,
                       sample_valid_data, sna_structures, standard_alpha)
from .structfile import StructureFile, parse, serialize

__version__ = "0.1.0"
