"""The Kronecker quiver and its three families of indecomposables.

The Kronecker algebra is the path algebra of 1 ===> 2 (two parallel
arrows alpha, beta).  Its finite-dimensional indecomposables split
into preprojectives (dim vectors (n-1, n)), regulars ((n, n)), and
preinjectives ((n, n-1)).  The preinjectives are zig-zag string
modules; the preprojectives are duals of preinjective right modules.
"""

from endoscope import (
    INFINITY,
    dual,
    hom_dim,
    kronecker,
    kronecker_preinjective,
    kronecker_preinjective_right,
    kronecker_preprojective,
    kronecker_regular,
    socle,
)

pres = kronecker()
print("algebra dimension (paths):", pres.dimension())

print("\npreinjectives (string modules):")
for n in range(1, 5):
    rep = kronecker_preinjective(n)
    print(f"  I{n}: dim vector {rep.dim_vector}, length {rep.length()}, "
          f"alpha = {rep.matrix('alpha')}, beta = {rep.matrix('beta')}")

print("\npreprojectives (duals of right preinjectives):")
for n in range(1, 5):
    rep = kronecker_preprojective(n)
    right = kronecker_preinjective_right(n)
    print(f"  P{n}: dim vector {rep.dim_vector} = dual of right module with dims {right.dim_vector}")

print("\nregular modules R_n(lam): alpha identity, beta a Jordan block")
for lam in (0, 1, INFINITY):
    rep = kronecker_regular(1, lam)
    print(f"  R1({lam}): alpha = {rep.matrix('alpha')}, beta = {rep.matrix('beta')}")

print("\nsocles (largest semisimple subrepresentation):")
for n in (1, 2, 3):
    rep = kronecker_preinjective(n)
    print(f"  soc I{n}: dims {socle(rep).dims()}")

print("\nhom dimension table for preinjectives, dim Hom(I_i, I_j):")
size = 6
header = "      " + " ".join(f"j={j}" for j in range(1, size + 1))
print(header)
for i in range(1, size + 1):
    row = [hom_dim(kronecker_preinjective(i), kronecker_preinjective(j)) for j in range(1, size + 1)]
    print(f"  i={i} " + "   ".join(str(v) for v in row))

print("\nduality swaps the classes and preserves hom dimensions:")
i3, p2 = kronecker_preinjective(3), kronecker_preprojective(2)
print("  dim Hom(I3, I2)            =", hom_dim(i3, kronecker_preinjective(2)))
print("  dim Hom(D I2, D I3)        =", hom_dim(dual(kronecker_preinjective(2)), dual(i3)))
print("  dual(dual(P2)) == P2       =", dual(dual(p2)) == p2)
