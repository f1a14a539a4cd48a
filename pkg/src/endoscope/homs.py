"""Hom spaces, endomorphism rings, radicals, and decomposition.

The homomorphisms M -> N are exactly the solutions of the linear system
"f_target(a) . M_a = N_a . f_source(a) for every arrow a", so a basis
of Hom(M, N) is one kernel computation.  Endomorphism rings come with
structure constants, and their Jacobson radical is the kernel of the
trace form of the left regular representation (valid in characteristic
zero, the only supported mode for radical-dependent operations).

Hom and End computations are cached by value, so repeated family-level
invariants reuse the underlying kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
import random
from typing import Iterable, Literal, Sequence

from .linalg import Mat, Subspace, invert, kernel_basis, rref
from .reps import Morphism, Representation


class HomalgError(ValueError):
    pass


class UnsupportedFieldError(HomalgError):
    """Raised when a radical-dependent operation meets positive characteristic."""


class LocalityUnverified(HomalgError):
    """Raised when an operation requires verified-local endomorphism rings."""


class DecompositionInconclusive(HomalgError):
    """No splitting was found, but the ring data does not certify indecomposability."""


class IsoUndecided(HomalgError):
    """An isomorphism test came back 'presumed no' where a certificate was needed."""


class HomSpace:
    """A subspace of Hom(source, target) spanned by a basis of morphisms.

    ``hom_basis`` returns the full hom space; operations like
    ``noniso_subspace`` return proper subspaces with the same carrier.
    """

    __slots__ = ("source", "target", "basis", "_coord")

    def __init__(self, source: Representation, target: Representation, basis: Sequence[Morphism]):
        self.source = source
        self.target = target
        self.basis = tuple(basis)
        self._coord = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _coordinatizer(self):
        # pivot coordinate positions + inverse of the corresponding square block
        if self._coord is None:
            flats = [f.flatten() for f in self.basis]
            k = len(flats)
            ambient = len(flats[0]) if flats else 0
            bt = Mat(flats, k, ambient)
            _, pivots = rref(bt)
            block = Mat([[flats[j][p] for j in range(k)] for p in pivots], k, k)
            inv = invert(block)
            if inv is None:
                raise HomalgError("basis of hom space is linearly dependent")
            self._coord = (pivots, inv, bt.transpose())
        return self._coord

    def coordinates(self, f: Morphism) -> tuple:
        """Coefficients of f in this basis; raises if f is outside the span."""
        coords = self.try_coordinates(f)
        if coords is None:
            raise HomalgError("morphism does not lie in this hom space")
        return coords

    def try_coordinates(self, f: Morphism) -> tuple | None:
        if f.source != self.source or f.target != self.target:
            raise HomalgError("morphism has different ends")
        flat = f.flatten()
        if self.dim == 0:
            return () if not any(flat) else None
        pivots, inv, bmat = self._coordinatizer()
        coords = inv.apply([flat[p] for p in pivots])
        if bmat.apply(coords) != flat:
            return None
        return coords

    def contains(self, f: Morphism) -> bool:
        return self.try_coordinates(f) is not None

    def from_coordinates(self, coords: Sequence) -> Morphism:
        if len(coords) != self.dim:
            raise HomalgError("coordinate length mismatch")
        out = Morphism.zero(self.source, self.target)
        for c, f in zip(coords, self.basis):
            if c:
                out = out + f.scale(c)
        return out

    def __repr__(self):
        return f"HomSpace(dim {self.dim})"


def compose(f: Morphism, g: Morphism) -> Morphism:
    """The composite "f after g"."""
    return f.compose(g)


@lru_cache(maxsize=None)
def hom_basis(m: Representation, n: Representation) -> HomSpace:
    """A basis of Hom(m, n): the kernel of the commuting-square system."""
    if m.presentation != n.presentation:
        raise HomalgError("hom between different presentations")
    quiver = m.presentation.quiver
    field = m.field
    offsets = {}
    run = 0
    for v in quiver.vertices:
        offsets[v] = run
        run += n.dim(v) * m.dim(v)
    unknowns = run

    rows = []
    zero = field.zero
    for a in quiver.arrows:
        s, t = a.source, a.target
        ma = m.matrix(a.name)
        na = n.matrix(a.name)
        for r in range(n.dim(t)):
            for c in range(m.dim(s)):
                row = [zero] * unknowns
                # (f_t @ ma)[r, c]: couples f_t[r, k] with ma[k, c]
                base_t = offsets[t] + r * m.dim(t)
                for k in range(m.dim(t)):
                    x = ma[k, c]
                    if x:
                        row[base_t + k] = row[base_t + k] + x
                # (na @ f_s)[r, c]: couples na[r, k] with f_s[k, c]
                base_s = offsets[s]
                for k in range(n.dim(s)):
                    x = na[r, k]
                    if x:
                        idx = base_s + k * m.dim(s) + c
                        row[idx] = row[idx] - x
                if any(row):
                    rows.append(row)

    ker = kernel_basis(Mat(rows, len(rows), unknowns))
    basis = []
    for vec in ker.vectors():
        blocks = {}
        for v in quiver.vertices:
            r, c = n.dim(v), m.dim(v)
            off = offsets[v]
            blocks[v] = Mat([[vec[off + i * c + j] for j in range(c)] for i in range(r)], r, c)
        basis.append(Morphism(m, n, blocks, _validate=False))
    return HomSpace(m, n, basis)


def hom_dim(m: Representation, n: Representation) -> int:
    return hom_basis(m, n).dim


class EndoRing:
    """End(M) with a fixed basis (identity first) and structure constants."""

    __slots__ = ("module", "hom", "structure", "_radical", "_radical_morphisms")

    def __init__(self, module: Representation, hom: HomSpace, structure):
        self.module = module
        self.hom = hom
        self.structure = structure
        self._radical = None
        self._radical_morphisms = None

    @property
    def basis(self) -> tuple[Morphism, ...]:
        return self.hom.basis

    @property
    def dim(self) -> int:
        return self.hom.dim

    def multiply_coords(self, x: Sequence, y: Sequence) -> tuple:
        """Product in basis coordinates via the structure constants."""
        k = self.dim
        out = [Fraction(0)] * k
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.structure[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                cij = row[j]
                f = xi * yj
                for l, c in enumerate(cij):
                    if c:
                        out[l] = out[l] + f * c
        return tuple(out)

    @property
    def radical(self) -> Subspace:
        if self._radical is None:
            self._radical = _trace_form_radical(self)
        return self._radical

    @property
    def dim_over_radical(self) -> int:
        return self.dim - self.radical.dim

    def radical_morphisms(self) -> list[Morphism]:
        if self._radical_morphisms is None:
            self._radical_morphisms = [self.hom.from_coordinates(v) for v in self.radical.vectors()]
        return self._radical_morphisms

    def __repr__(self):
        return f"EndoRing(dim {self.dim} of {self.module!r})"


@lru_cache(maxsize=None)
def end_ring(m: Representation) -> EndoRing:
    """End(m) with identity-first basis and verified structure constants."""
    full = hom_basis(m, m)
    if m.total_dim == 0:
        return EndoRing(m, full, ())
    ident = Morphism.identity(m)
    flats = [ident.flatten()] + [f.flatten() for f in full.basis]
    cols = Mat([[flats[j][i] for j in range(len(flats))] for i in range(len(flats[0]))])
    # column-select a basis that keeps the identity in front
    _, col_pivots = rref(cols)
    chosen = [ident if p == 0 else full.basis[p - 1] for p in col_pivots]
    if chosen[0] is not ident:
        raise HomalgError("identity endomorphism unexpectedly dependent")
    hom = HomSpace(m, m, chosen)
    if hom.dim != full.dim:
        raise HomalgError("re-based endomorphism basis has wrong dimension")
    structure = tuple(
        tuple(hom.coordinates(fi.compose(fj)) for fj in hom.basis) for fi in hom.basis
    )
    return EndoRing(m, hom, structure)


def _trace_form_radical(ring: EndoRing) -> Subspace:
    """J(End M) as the kernel of (x, y) -> trace(L_x L_y); checked nilpotent."""
    if ring.module.field.characteristic != 0:
        raise UnsupportedFieldError("radical computation requires characteristic zero")
    k = ring.dim
    if k == 0:
        return Subspace.zero(0)
    # L_i[l][j] = structure[i][j][l]
    left = [
        Mat([[ring.structure[i][j][l] for j in range(k)] for l in range(k)], k, k)
        for i in range(k)
    ]
    gram = Mat(
        [
            [
                sum(
                    (left[i][u, w] * left[j][w, u] for u in range(k) for w in range(k)),
                    Fraction(0),
                )
                for j in range(k)
            ]
            for i in range(k)
        ],
        k,
        k,
    )
    radical = kernel_basis(gram)
    _check_nilpotent(ring, radical)
    return radical


def _check_nilpotent(ring: EndoRing, radical: Subspace):
    current = radical.vectors()
    gens = radical.vectors()
    steps = 0
    while current:
        steps += 1
        if steps > ring.dim + 1:
            raise HomalgError("trace-form radical failed the nilpotency check")
        products = [ring.multiply_coords(x, y) for x in current for y in gens]
        current = Subspace.span(ring.dim, products).vectors()


def jacobson_radical(ring: EndoRing) -> Subspace:
    """The Jacobson radical, as a subspace of the basis-coordinate space."""
    return ring.radical


def is_isomorphism(f: Morphism) -> bool:
    """True iff every vertex block is square and invertible."""
    for v, m in f.blocks.items():
        if m.rows != m.cols or m.rank() != m.rows:
            return False
    return True


@dataclass(frozen=True)
class IsoCertificate:
    status: Literal["iso", "certified_no", "presumed_no"]
    witness: Morphism | None = None
    inverse: Morphism | None = None

    def __bool__(self):
        return self.status == "iso"


def _coefficient_sweep(k: int, limit: int = 120) -> Iterable[tuple[int, ...]]:
    """A fixed low-discrepancy sweep of small integer coefficient vectors."""
    primes = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    yield (1,) * k
    count = 0
    for t in range(1, 4 * limit):
        vec = tuple(((t * primes[i % len(primes)] + (t >> (i % 3))) % 7) - 3 for i in range(k))
        if any(vec):
            yield vec
            count += 1
            if count >= limit:
                return


def inverse_morphism(f: Morphism) -> Morphism | None:
    blocks = {}
    for v, m in f.blocks.items():
        if m.rows != m.cols:
            return None
        inv = invert(m)
        if inv is None:
            return None
        blocks[v] = inv
    return Morphism(f.target, f.source, blocks, _validate=False)


def are_isomorphic(m: Representation, n: Representation, seed: int = 0, trials: int = 200) -> IsoCertificate:
    """Search Hom(m, n) for an invertible element.

    Returns a verified isomorphism, a certified no (dimension vectors
    differ or a hom space vanishes), or a presumed no after the
    deterministic sweep and the seeded random trials are exhausted.
    """
    if m.presentation != n.presentation:
        raise HomalgError("isomorphism test across different presentations")
    if m.dim_vector != n.dim_vector:
        return IsoCertificate("certified_no")
    if m.total_dim == 0:
        ident = Morphism.zero(m, n)
        return IsoCertificate("iso", ident, Morphism.zero(n, m))
    if m == n:
        ident = Morphism.identity(m)
        return IsoCertificate("iso", ident, ident)
    forward = hom_basis(m, n)
    if forward.dim == 0 or hom_basis(n, m).dim == 0:
        return IsoCertificate("certified_no")

    def verified(f: Morphism) -> IsoCertificate | None:
        if not is_isomorphism(f):
            return None
        g = inverse_morphism(f)
        if g is None:
            return None
        if f.compose(g) != Morphism.identity(n) or g.compose(f) != Morphism.identity(m):
            return None
        return IsoCertificate("iso", f, g)

    for f in forward.basis:
        cert = verified(f)
        if cert:
            return cert
    for coeffs in _coefficient_sweep(forward.dim):
        cert = verified(forward.from_coordinates([Fraction(c) for c in coeffs]))
        if cert:
            return cert
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [Fraction(rng.randint(-9, 9)) for _ in range(forward.dim)]
        if not any(coeffs):
            continue
        cert = verified(forward.from_coordinates(coeffs))
        if cert:
            return cert
    return IsoCertificate("presumed_no")


# -- Fitting decomposition -----------------------------------------------------


def _charpoly(m: Mat) -> list[Fraction]:
    """Monic characteristic polynomial coefficients [c_0, ..., c_{n-1}, 1]."""
    n = m.rows
    if n == 0:
        return [Fraction(1)]
    work = Mat.identity(n)
    cs = [Fraction(1)]
    for k in range(1, n + 1):
        work = m @ work
        c = -work.trace() / k
        cs.append(c)
        if k < n:
            work = work + Mat.identity(n).scale(c)
    # cs = [1, c_1, ..., c_n] for x^n + c_1 x^{n-1} + ... + c_n
    return list(reversed(cs))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots of a polynomial given by [c_0, ..., c_n]."""
    if all(c == 0 for c in coeffs):
        return [Fraction(0)]
    from math import lcm

    den = lcm(*(c.denominator for c in coeffs)) if len(coeffs) > 1 else coeffs[0].denominator
    ints = [int(c * den) for c in coeffs]
    roots = set()
    while ints and ints[0] == 0:
        roots.add(Fraction(0))
        ints = ints[1:]
    if not ints or len(ints) == 1:
        return sorted(roots)
    a0, an = ints[0], ints[-1]

    def value(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(ints):
            acc = acc * x + c
        return acc

    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and value(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _rational_eigenvalues(f: Morphism) -> list[Fraction]:
    eigs: set[Fraction] = set()
    for v, block in f.blocks.items():
        if block.rows:
            eigs.update(_rational_roots(_charpoly(block)))
    return sorted(eigs)


def _fitting_split(m: Representation, g: Morphism, lam: Fraction):
    """Try M = ker(h^s) + im(h^s) for h = g - lam id; None if h is nilpotent or invertible."""
    from .reps import SubspaceFamily, sub_from_family

    quiver = m.presentation.quiver
    shifted = {
        v: g.blocks[v] - Mat.identity(m.dim(v), m.field).scale(lam) for v in quiver.vertices
    }
    powers = dict(shifted)
    prev_dims = None
    for _ in range(m.total_dim + 1):
        ker = SubspaceFamily({v: kernel_basis(powers[v]) for v in quiver.vertices})
        dims = ker.total_dim
        if dims == prev_dims:
            break
        prev_dims = dims
        powers = {v: shifted[v] @ powers[v] for v in quiver.vertices}
    if prev_dims in (0, m.total_dim):
        return None
    image = SubspaceFamily({v: Subspace(powers[v].rows, powers[v]) for v in quiver.vertices})
    part_k = sub_from_family(m, ker)
    part_i = sub_from_family(m, image)
    if part_k.total_dim + part_i.total_dim != m.total_dim:
        raise HomalgError("Fitting split dimensions are inconsistent")
    return part_k, part_i


def _find_split(m: Representation, ring: EndoRing):
    candidates = list(ring.basis)
    candidates += [a + b for a, b in combinations(ring.basis, 2)]
    for g in candidates:
        for lam in _rational_eigenvalues(g):
            split = _fitting_split(m, g, lam)
            if split is not None:
                return split
    return None


def indecompose(m: Representation) -> list[Representation]:
    """Indecomposable summands of m, by iterated Fitting splits.

    Candidate endomorphisms are the End basis elements and their
    pairwise sums, split along their rational eigenvalues.  When no
    candidate splits and End/J has dimension one, m is certified
    indecomposable; otherwise the decomposition is reported
    inconclusive rather than guessed.
    """
    if m.total_dim == 0:
        return []
    ring = end_ring(m)
    if ring.dim_over_radical == 1:
        return [m]
    split = _find_split(m, ring)
    if split is None:
        raise DecompositionInconclusive(
            "no Fitting split found but End/J has dimension > 1"
        )
    a, b = split
    return indecompose(a) + indecompose(b)


def is_local(ring: EndoRing) -> bool | None:
    """True if End/J is one-dimensional, False if a splitting idempotent
    exists, None when neither could be certified."""
    if ring.dim == 0:
        return False
    if ring.dim_over_radical == 1:
        return True
    if _find_split(ring.module, ring) is not None:
        return False
    return None


def noniso_subspace(m: Representation, n: Representation, seed: int = 0) -> HomSpace:
    """The subspace of Hom(m, n) consisting of the non-isomorphisms.

    For non-isomorphic ends this is all of Hom(m, n); for isomorphic
    ends it is phi . J(End m) for a fixed isomorphism phi, which is
    exactly the set of non-invertible homomorphisms when both rings
    are local.
    """
    for rep in (m, n):
        if is_local(end_ring(rep)) is not True:
            raise LocalityUnverified(f"endomorphism ring of {rep!r} is not verified local")
    cert = are_isomorphic(m, n, seed=seed)
    if cert.status == "certified_no":
        return hom_basis(m, n)
    if cert.status == "presumed_no":
        raise IsoUndecided("isomorphism status could not be certified")
    phi = cert.witness
    ring = end_ring(m)
    basis = [phi.compose(r) for r in ring.radical_morphisms()]
    sub = HomSpace(m, n, basis)
    if sub.dim != hom_basis(m, n).dim - 1:
        raise HomalgError("non-isomorphism subspace has unexpected dimension")
    for f in sub.basis:
        if is_isomorphism(f):
            raise HomalgError("non-isomorphism subspace contains an isomorphism")
    return sub


def clear_caches():
    """Drop the memoized hom spaces and endomorphism rings."""
    hom_basis.cache_clear()
    end_ring.cache_clear()
