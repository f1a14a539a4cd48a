"""Ascending and relative endosocle series.

The ascending series iterates socles of quotients; term k is the
annihilator of the k-th power of the radical, so its length is the
nilpotency index of J(End M).

The relative series is the family-level refinement: record the
endosocle of the current direct sum, drop the members it lives on,
recompute on the remainder.  For the preinjectives this peels off
{1, 2} first and then one member at a time, so the relative length of
the first N preinjectives is N - 1.
"""

from endoscope import (
    direct_sum,
    endosocle_series,
    kronecker_preinjective,
    kronecker_preprojective,
    kronecker_regular,
    relative_endosocle_series,
)

total, _, _ = direct_sum([kronecker_preinjective(1), kronecker_preinjective(2)])
series = endosocle_series(total)
print("ascending series of I1 + I2:")
for k, term in enumerate(series.terms, start=1):
    print(f"  soc_{k}: dim {term.dim}")
print("  length:", series.stabilization_index)

series = endosocle_series(kronecker_regular(3, 0))
print("\nascending series of R3(0) (End is K[x]/x^3):")
print("  dims:", [t.dim for t in series.terms], "length", series.stabilization_index)

for N in (5, 8):
    fam = [kronecker_preinjective(n) for n in range(1, N + 1)]
    rel = relative_endosocle_series(fam, labels=list(range(1, N + 1)))
    print(f"\nrelative series of preinjectives 1..{N}:")
    for k, term in enumerate(rel.terms, start=1):
        print(f"  step {k}: support {term.support}, dim {term.dim}")
    print("  relative length:", rel.stabilization_index, f"(= {N} - 1)")

fam = [kronecker_preprojective(n) for n in range(1, 5)]
rel = relative_endosocle_series(fam, labels=[1, 2, 3, 4], boundary=(4,))
print("\nrelative series of truncated preprojectives 1..4 peels from the boundary:")
print("  supports:", [t.support for t in rel.terms])
print("  (every step is a truncation artifact; the untruncated family has no endosocle)")
