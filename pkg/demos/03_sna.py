"""The affine space sna(n) of trace-free matrices with unit row and column sums.

The summation range in the membership condition admits two readings. The
builder tries both and keeps the one under which the most matrix operations
stay inside the space.
"""
from affgebra.fixtures import build_sna, sna_structures

s = build_sna(2)
print("intrinsic dimension:", s.d)
print("closure probe:", s.closure_report)

bundle = sna_structures(s)
print("\ndefault twisting matrix P:")
for row in bundle.P:
    print("  ", [str(x) for x in row])

for key, verdicts in bundle.verdicts.items():
    print(f"{key:>10}:", ", ".join(v.report_line() for v in verdicts))
for key, exc in bundle.failures.items():
    out = exc.witness["result"]
    trace = sum(out[i][i] for i in range(len(out)))
    print(f"{key:>10}: does not close ({exc}); the witness product has trace {trace}")

print("\nThe matrix product keeps unit row and column sums but not the zero trace,")
print("so sna(2) carries a Lie affgebra and a Hom-Lie affgebra but no associative one.")
