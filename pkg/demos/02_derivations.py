"""Generalized derivations as exact kernels.

Every space below is the kernel of one linear system over the flattened
matrix unknowns, so the dimensions are exact, not numerical ranks.
"""
from affgebra import (alpha_derivation_space, centroid_space, compatible_pair_space,
                      delta_space, derivation_to_pair, pair_to_derivation, qc_space)
from affgebra.fixtures import fixture_algebras
from affgebra.morphisms import ad_matrix

spaces = [("Delta", delta_space), ("QC", qc_space), ("C", centroid_space),
          ("alpha-Der", alpha_derivation_space), ("pairs", compatible_pair_space)]
print(f"{'algebra':<18}" + "".join(f"{n:>10}" for n, _ in spaces))
for name, L in fixture_algebras().items():
    print(f"{name:<18}" + "".join(f"{f(L).dim:>10}" for _, f in spaces))

L = fixture_algebras()["sl2/id"]
ad_h = ad_matrix(L, (1, 0, 0))
print("\nad_h on sl2:", [[str(x) for x in row] for row in ad_h.rows])
kappa, cert = derivation_to_pair(ad_h, ad_h, L)
print("(delta, lambda) = (ad_h, ad_h) gives kappa = lambda - delta =", [[str(x) for x in row] for row in kappa.rows])
print("  certificate:", ", ".join(v.report_line() for v in cert))
delta, _ = pair_to_derivation(kappa, ad_h, L)
print("and the way back recovers delta:", delta == ad_h)
