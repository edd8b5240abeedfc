"""Homomorphisms checked twice: directly on the affgebras and through their data."""
from affgebra import AffineMap, Matrix, build_from_data, equivalence_check
from affgebra.constructions import AffgebraData
from affgebra.fixtures import classical_homlie, fixture_algebras
from affgebra.kernel import GF, mat_inverse
from affgebra.morphisms import enumerate_data_homs

L = classical_homlie("abelian", n=1)
s = build_from_data(AffgebraData(L, Matrix([[0]]), Matrix([[0]]), (0,)))
for phi in (AffineMap.identity(1), AffineMap(Matrix([[1]]), (1,)), AffineMap(Matrix([[3]]), (0,))):
    v = equivalence_check(s, s, phi, (0,), (0,))
    print(f"phi(a) = {phi.M.rows[0][0]}a + {phi.t[0]}:", "homomorphism" if v else f"not a homomorphism ({v.note})")

print("\nOver F_3, every data homomorphism between abelian(2) and aff1 is singular,")
print("because no invertible map carries the zero bracket onto a nonzero one:")
F = GF(3)
algs = fixture_algebras(F, max_dim=2)
zero = Matrix.zeros(2, 2, F)
d = AffgebraData(algs["abelian2/id"], zero, zero, (0, 0))
d2 = AffgebraData(algs["aff1/id"], zero, zero, (0, 0))
homs = enumerate_data_homs(d, d2) + enumerate_data_homs(d2, d)
print(f"  {len(homs)} data homomorphisms found, "
      f"{sum(mat_inverse(h.psi) is not None for h in homs)} of them invertible")
