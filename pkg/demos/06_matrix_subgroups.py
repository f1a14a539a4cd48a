"""Finite matrix subgroups and endo-invariance.

A pointed matrix is a grid of algebra elements with a marked column.
On a representation M it cuts out the marked-column projection of the
solution set of its homogeneous system: a subgroup of M that is
always stable under End(M), which we can check directly.
"""

import random

from endoscope import (
    PointedMatrix,
    Subspace,
    act,
    check_endo_invariant,
    direct_sum,
    evaluate,
    image_subgroup,
    kronecker,
    kronecker_preinjective,
    meet,
    random_pointed_matrix,
)

pres = kronecker()
i2 = kronecker_preinjective(2)
alpha = pres.arrow_element("alpha")
beta = pres.arrow_element("beta")

ann_alpha = evaluate(PointedMatrix.of([[alpha]], 0), i2)
print("annihilator of alpha on I2: dimension", ann_alpha.dim, "inside K^3")

img = image_subgroup(alpha, i2)
print("image subgroup alpha.I2 via the pointed matrix [[1, -alpha]]:", img.dim)
print("  equals the column space of the action:", img == Subspace(i2.total_dim, act(alpha, i2)))

both = meet([ann_alpha, evaluate(PointedMatrix.of([[beta]], 0), i2)])
print("meet of the two arrow annihilators:", both.dim)

chain = PointedMatrix.of([[alpha]], 0)
print("\nappending rows only shrinks the subgroup:")
prev = evaluate(chain, i2)
for el in (beta, pres.trivial("1")):
    chain = chain.append_row([el])
    cur = evaluate(chain, i2)
    print(f"  rows={chain.shape[0]}: dim {prev.dim} -> {cur.dim},",
          "descending" if prev.contains_subspace(cur) else "NOT descending")
    prev = cur

total, _, _ = direct_sum([kronecker_preinjective(1), i2])
rng = random.Random(0)
print("\n40 random pointed matrices on I1 + I2, all endo-invariant:")
all_ok = all(
    check_endo_invariant(evaluate(random_pointed_matrix(pres, rng), total), total)
    for _ in range(40)
)
print("  invariant:", all_ok)

from fractions import Fraction
line = Subspace.span(total.total_dim, [[Fraction(1), Fraction(1), Fraction(0), Fraction(0)]])
print("a hand-picked diagonal line, by contrast:", check_endo_invariant(line, total))
