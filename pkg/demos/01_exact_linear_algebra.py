"""Tour of the exact linear algebra layer.

Every computation in this package reduces to row reduction of matrices
with exact rational entries, so there is no floating point anywhere;
a kernel really is a kernel.
"""

from fractions import Fraction

from endoscope import Mat, Subspace, intersect, kernel_basis, rref, solve

F = Fraction

m = Mat([[F(1), F(2)], [F(2), F(4)]])
print("m =", m)

red, pivots = rref(m)
print("rref(m) =", red, "with pivot columns", pivots)

ker = kernel_basis(m)
print("kernel of m:", ker, "spanned by", ker.vectors())

print("solve m x = (1, 2):", solve(m, (F(1), F(2))))
print("solve m x = (1, 3):", solve(m, (F(1), F(3))), "(inconsistent)")

# Subspaces carry a canonical column basis, so equality is exact and
# deterministic no matter how a subspace was produced.
a = Subspace.span(3, [(F(1), F(0), F(0)), (F(0), F(1), F(0))])
b = Subspace.span(3, [(F(0), F(1), F(0)), (F(0), F(0), F(1))])
meet = intersect(a, b)
print("intersection of two planes in K^3:", meet, "=", meet.vectors())

scaled = Subspace.span(3, [(F(2), F(2), F(0)), (F(0), F(0), F(-5))])
other = Subspace.span(3, [(F(1), F(1), F(0)), (F(0), F(0), F(1))])
print("same span, different generators, equal?", scaled == other)
