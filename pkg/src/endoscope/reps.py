"""Finite-dimensional representations of bound quiver presentations.

A representation assigns a dimension to every vertex and an exact
matrix to every arrow (target dim x source dim).  The total space is
the direct sum of the vertex spaces, concatenated in declared vertex
order; that convention fixes all block layouts used elsewhere.

Besides the carrier types this module provides the Kronecker example
families (preinjective / preprojective / regular strings), direct sums
with their embeddings and projections, vector-space duality onto the
opposite presentation, and socles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import Mat, QQ, Subspace, kernel_basis, solve
from .quiver import AlgebraPresentation, QuiverError, act, kronecker


class RepresentationError(ValueError):
    pass


class _Infinity:
    """Marker for the regular-family parameter at infinity."""

    def __repr__(self):
        return "infinity"

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash("infinity")


INFINITY = _Infinity()


class Representation:
    """Vertex dimensions plus one exact matrix per arrow."""

    __slots__ = ("presentation", "dims_by_vertex", "matrices", "field", "_offsets", "_key", "_hash")

    def __init__(
        self,
        presentation: AlgebraPresentation,
        dims: Mapping[str, int],
        matrices: Mapping[str, Mat],
        field=QQ,
        _validate: bool = True,
    ):
        self.presentation = presentation
        quiver = presentation.quiver
        self.dims_by_vertex = {v: int(dims.get(v, 0)) for v in quiver.vertices}
        if any(d < 0 for d in self.dims_by_vertex.values()):
            raise RepresentationError("negative dimension")
        mats = {}
        for a in quiver.arrows:
            m = matrices.get(a.name)
            if m is None:
                m = Mat.zeros(self.dims_by_vertex[a.target], self.dims_by_vertex[a.source], field)
            if m.shape != (self.dims_by_vertex[a.target], self.dims_by_vertex[a.source]):
                raise RepresentationError(
                    f"arrow {a.name}: matrix shape {m.shape} does not match dims "
                    f"({self.dims_by_vertex[a.target]}, {self.dims_by_vertex[a.source]})"
                )
            mats[a.name] = m
        self.matrices = mats
        self.field = field
        offsets = {}
        run = 0
        for v in quiver.vertices:
            offsets[v] = run
            run += self.dims_by_vertex[v]
        self._offsets = offsets
        self._key = None
        self._hash = None
        if _validate:
            for rel in presentation.relations:
                if not act(rel, self).is_zero():
                    raise RepresentationError("a relation does not act as zero")

    # -- geometry ------------------------------------------------------------

    def dim(self, vertex: str) -> int:
        return self.dims_by_vertex[vertex]

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims_by_vertex[v] for v in self.presentation.quiver.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims_by_vertex.values())

    def offset(self, vertex: str) -> int:
        return self._offsets[vertex]

    def matrix(self, arrow_name: str) -> Mat:
        return self.matrices[arrow_name]

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def length(self) -> int:
        """Composition length; every simple is one-dimensional here."""
        return self.total_dim

    # -- identity ------------------------------------------------------------

    def key(self):
        if self._key is None:
            self._key = (
                self.presentation.key(),
                tuple(sorted(self.dims_by_vertex.items())),
                tuple(sorted((n, m.entries) for n, m in self.matrices.items())),
            )
        return self._key

    def __eq__(self, other):
        return isinstance(other, Representation) and self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self):
        return f"Representation(dims {self.dim_vector})"


class SubspaceFamily:
    """One subspace per vertex; the carrier for vertexwise submodules."""

    __slots__ = ("spaces", "_hash")

    def __init__(self, spaces: Mapping[str, Subspace]):
        self.spaces = dict(spaces)
        self._hash = None

    @classmethod
    def zero_for(cls, rep: Representation) -> "SubspaceFamily":
        return cls({v: Subspace.zero(rep.dim(v)) for v in rep.presentation.quiver.vertices})

    @classmethod
    def full_for(cls, rep: Representation) -> "SubspaceFamily":
        return cls(
            {v: Subspace.full(rep.dim(v), rep.field) for v in rep.presentation.quiver.vertices}
        )

    def space(self, vertex: str) -> Subspace:
        return self.spaces[vertex]

    def dims(self) -> dict[str, int]:
        return {v: s.dim for v, s in self.spaces.items()}

    @property
    def total_dim(self) -> int:
        return sum(s.dim for s in self.spaces.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def add(self, other: "SubspaceFamily") -> "SubspaceFamily":
        return SubspaceFamily({v: s.add(other.spaces[v]) for v, s in self.spaces.items()})

    def contains(self, other: "SubspaceFamily") -> bool:
        return all(self.spaces[v].contains_subspace(s) for v, s in other.spaces.items())

    def to_total(self, rep: Representation) -> Subspace:
        """Embed as a subspace of the representation's total space."""
        n = rep.total_dim
        vectors = []
        for v in rep.presentation.quiver.vertices:
            off = rep.offset(v)
            for col in self.spaces[v].vectors():
                vec = [rep.field.zero] * n
                for i, x in enumerate(col):
                    vec[off + i] = x
                vectors.append(vec)
        return Subspace.span(n, vectors)

    def is_arrow_closed(self, rep: Representation) -> bool:
        for a in rep.presentation.quiver.arrows:
            img = self.spaces[a.source].image(rep.matrix(a.name))
            if not self.spaces[a.target].contains_subspace(img):
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, SubspaceFamily) and self.spaces == other.spaces

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.spaces.items())))
        return self._hash

    def __repr__(self):
        dims = {v: s.dim for v, s in sorted(self.spaces.items())}
        return f"SubspaceFamily(dims {dims})"


class Morphism:
    """A representation homomorphism: one matrix per vertex, commuting with arrows."""

    __slots__ = ("source", "target", "blocks", "_hash")

    def __init__(
        self,
        source: Representation,
        target: Representation,
        blocks: Mapping[str, Mat],
        _validate: bool = True,
    ):
        if source.presentation != target.presentation:
            raise RepresentationError("morphism between different presentations")
        self.source = source
        self.target = target
        quiver = source.presentation.quiver
        blk = {}
        for v in quiver.vertices:
            m = blocks.get(v)
            if m is None:
                m = Mat.zeros(target.dim(v), source.dim(v), source.field)
            if m.shape != (target.dim(v), source.dim(v)):
                raise RepresentationError(f"block at {v} has shape {m.shape}")
            blk[v] = m
        self.blocks = blk
        self._hash = None
        if _validate:
            for a in quiver.arrows:
                lhs = blk[a.target] @ source.matrix(a.name)
                rhs = target.matrix(a.name) @ blk[a.source]
                if lhs != rhs:
                    raise RepresentationError(f"square at arrow {a.name} does not commute")

    @classmethod
    def identity(cls, rep: Representation) -> "Morphism":
        return cls(
            rep,
            rep,
            {v: Mat.identity(rep.dim(v), rep.field) for v in rep.presentation.quiver.vertices},
            _validate=False,
        )

    @classmethod
    def zero(cls, source: Representation, target: Representation) -> "Morphism":
        return cls(source, target, {}, _validate=False)

    def block(self, vertex: str) -> Mat:
        return self.blocks[vertex]

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.blocks.values())

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other."""
        if other.target != self.source:
            raise RepresentationError("composition mismatch")
        blocks = {v: self.blocks[v] @ other.blocks[v] for v in self.blocks}
        return Morphism(other.source, self.target, blocks, _validate=False)

    def __add__(self, other: "Morphism") -> "Morphism":
        if other.source != self.source or other.target != self.target:
            raise RepresentationError("sum of morphisms with different ends")
        return Morphism(
            self.source,
            self.target,
            {v: self.blocks[v] + other.blocks[v] for v in self.blocks},
            _validate=False,
        )

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "Morphism":
        return Morphism(
            self.source, self.target, {v: m.scale(c) for v, m in self.blocks.items()}, _validate=False
        )

    def flatten(self) -> tuple:
        """Coordinates in the fixed (vertex order, row-major) layout."""
        out = []
        for v in self.source.presentation.quiver.vertices:
            for row in self.blocks[v].entries:
                out.extend(row)
        return tuple(out)

    def total_mat(self) -> Mat:
        """The block-diagonal action on total spaces."""
        n, m = self.target.total_dim, self.source.total_dim
        field = self.source.field
        rows = [[field.zero] * m for _ in range(n)]
        for v in self.source.presentation.quiver.vertices:
            roff, coff = self.target.offset(v), self.source.offset(v)
            for i, row in enumerate(self.blocks[v].entries):
                for j, x in enumerate(row):
                    if x:
                        rows[roff + i][coff + j] = x
        return Mat(rows, n, m)

    def kernel_family(self) -> SubspaceFamily:
        return SubspaceFamily({v: kernel_basis(m) for v, m in self.blocks.items()})

    def image_family(self) -> SubspaceFamily:
        return SubspaceFamily(
            {v: Subspace(m.rows, m) for v, m in self.blocks.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, Morphism)
            and self.source == other.source
            and self.target == other.target
            and self.blocks == other.blocks
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.source, self.target, tuple(sorted(self.blocks.items()))))
        return self._hash

    def __repr__(self):
        return f"Morphism({self.source!r} -> {self.target!r})"


# -- construction ------------------------------------------------------------


def zero_representation(presentation: AlgebraPresentation, field=QQ) -> Representation:
    return Representation(presentation, {}, {}, field)


def simple(presentation: AlgebraPresentation, vertex: str, field=QQ) -> Representation:
    if vertex not in presentation.quiver.vertices:
        raise QuiverError(f"no vertex {vertex!r}")
    return Representation(presentation, {vertex: 1}, {}, field)


def direct_sum(
    parts: Sequence[Representation],
    presentation: AlgebraPresentation | None = None,
) -> tuple[Representation, list[Morphism], list[Morphism]]:
    """Blockwise direct sum with its embeddings and projections.

    ``presentation`` is only needed for an empty summand list.
    """
    if not parts:
        if presentation is None:
            raise RepresentationError("empty direct sum needs an explicit presentation")
        return zero_representation(presentation), [], []
    pres = parts[0].presentation
    field = parts[0].field
    for p in parts[1:]:
        if p.presentation != pres:
            raise RepresentationError("direct sum across different presentations")
        if p.field != field:
            raise RepresentationError("direct sum across different fields")
    quiver = pres.quiver
    dims = {v: sum(p.dim(v) for p in parts) for v in quiver.vertices}
    offsets = []
    run = {v: 0 for v in quiver.vertices}
    for p in parts:
        offsets.append(dict(run))
        for v in quiver.vertices:
            run[v] += p.dim(v)

    matrices = {}
    for a in quiver.arrows:
        rows_total, cols_total = dims[a.target], dims[a.source]
        rows = [[field.zero] * cols_total for _ in range(rows_total)]
        for p, off in zip(parts, offsets):
            block = p.matrix(a.name)
            ro, co = off[a.target], off[a.source]
            for i, row in enumerate(block.entries):
                for j, x in enumerate(row):
                    if x:
                        rows[ro + i][co + j] = x
        matrices[a.name] = Mat(rows, rows_total, cols_total)
    total = Representation(pres, dims, matrices, field, _validate=False)

    embeddings, projections = [], []
    for p, off in zip(parts, offsets):
        emb, prj = {}, {}
        for v in quiver.vertices:
            d_part, d_tot = p.dim(v), dims[v]
            e = [[field.zero] * d_part for _ in range(d_tot)]
            q = [[field.zero] * d_tot for _ in range(d_part)]
            for i in range(d_part):
                e[off[v] + i][i] = field.one
                q[i][off[v] + i] = field.one
            emb[v] = Mat(e, d_tot, d_part)
            prj[v] = Mat(q, d_part, d_tot)
        embeddings.append(Morphism(p, total, emb, _validate=False))
        projections.append(Morphism(total, p, prj, _validate=False))
    return total, embeddings, projections


def dual(rep: Representation) -> Representation:
    """The vector-space dual over the opposite presentation.

    Vertex dimensions are kept; every arrow matrix is transposed.
    Applying it twice returns a representation equal to the original.
    """
    opp = rep.presentation.opposite()
    matrices = {name: m.transpose() for name, m in rep.matrices.items()}
    return Representation(opp, dict(rep.dims_by_vertex), matrices, rep.field, _validate=False)


def socle(rep: Representation) -> SubspaceFamily:
    """The largest semisimple subrepresentation.

    At each vertex this is the common kernel of all outgoing arrow
    matrices (vertices without outgoing arrows contribute fully).
    """
    spaces = {}
    for v in rep.presentation.quiver.vertices:
        outgoing = rep.presentation.quiver.arrows_from(v)
        if not outgoing:
            spaces[v] = Subspace.full(rep.dim(v), rep.field)
            continue
        stacked = rep.matrix(outgoing[0].name)
        for a in outgoing[1:]:
            stacked = stacked.vstack(rep.matrix(a.name))
        spaces[v] = kernel_basis(stacked)
    return SubspaceFamily(spaces)


def sub_from_family(rep: Representation, fam: SubspaceFamily) -> Representation:
    """The subrepresentation carried by an arrow-closed subspace family."""
    if not fam.is_arrow_closed(rep):
        raise RepresentationError("family is not closed under the arrow actions")
    quiver = rep.presentation.quiver
    dims = {v: fam.space(v).dim for v in quiver.vertices}
    matrices = {}
    for a in quiver.arrows:
        src = fam.space(a.source).basis
        tgt = fam.space(a.target).basis
        mapped = rep.matrix(a.name) @ src
        cols = []
        for j in range(mapped.cols):
            x = solve(tgt, mapped.col(j))
            if x is None:
                raise RepresentationError("family is not closed under the arrow actions")
            cols.append(x)
        matrices[a.name] = Mat(
            [[cols[j][i] for j in range(len(cols))] for i in range(tgt.cols)],
            tgt.cols,
            len(cols),
        )
    return Representation(rep.presentation, dims, matrices, rep.field, _validate=False)


def sub_inclusion(rep: Representation, fam: SubspaceFamily) -> tuple[Representation, Morphism]:
    """The subrepresentation together with its inclusion morphism."""
    sub = sub_from_family(rep, fam)
    blocks = {v: fam.space(v).basis for v in rep.presentation.quiver.vertices}
    return sub, Morphism(sub, rep, blocks)


# -- Kronecker families ------------------------------------------------------


_KRONECKER = kronecker()
_KRONECKER_OP = _KRONECKER.opposite()


def kronecker_presentation() -> AlgebraPresentation:
    return _KRONECKER


def kronecker_preinjective(n: int, field=QQ) -> Representation:
    """The n-th preinjective string module, dim vector (n, n-1).

    Basis: the n top vectors at vertex 1 in left-to-right string order
    and the n-1 valleys at vertex 2; beta joins top j to valley j,
    alpha joins top j+1 to valley j.  Length is 2n-1.
    """
    if n < 1:
        raise RepresentationError("index must be >= 1")
    alpha = Mat.zeros(n - 1, n, field)
    beta = Mat.zeros(n - 1, n, field)
    a_rows = [list(r) for r in alpha.entries]
    b_rows = [list(r) for r in beta.entries]
    for j in range(n - 1):
        a_rows[j][j + 1] = field.one
        b_rows[j][j] = field.one
    return Representation(
        _KRONECKER,
        {"1": n, "2": n - 1},
        {"alpha": Mat(a_rows, n - 1, n), "beta": Mat(b_rows, n - 1, n)},
        field,
        _validate=False,
    )


def kronecker_preinjective_right(n: int, field=QQ) -> Representation:
    """The n-th preinjective right module, as a representation of the
    opposite quiver: n tops at vertex 2, n-1 valleys at vertex 1."""
    if n < 1:
        raise RepresentationError("index must be >= 1")
    alpha = [[field.zero] * n for _ in range(n - 1)]
    beta = [[field.zero] * n for _ in range(n - 1)]
    for j in range(n - 1):
        alpha[j][j + 1] = field.one
        beta[j][j] = field.one
    return Representation(
        _KRONECKER_OP,
        {"1": n - 1, "2": n},
        {"alpha": Mat(alpha, n - 1, n), "beta": Mat(beta, n - 1, n)},
        field,
        _validate=False,
    )


def kronecker_preprojective(n: int, field=QQ) -> Representation:
    """The n-th preprojective module: the dual of the n-th right preinjective.

    Dim vector (n-1, n); length 2n-1.
    """
    return dual(kronecker_preinjective_right(n, field))


def kronecker_regular(n: int, lam, field=QQ) -> Representation:
    """The regular module of size n on the tube parameter lam.

    Dim vector (n, n): alpha acts as the identity and beta as the
    Jordan block J_n(lam); for lam = INFINITY the roles are swapped
    (alpha nilpotent Jordan, beta identity).
    """
    if n < 1:
        raise RepresentationError("index must be >= 1")
    if isinstance(lam, _Infinity):
        alpha = _jordan(n, field.zero, field)
        beta = Mat.identity(n, field)
    else:
        alpha = Mat.identity(n, field)
        beta = _jordan(n, field.of(lam), field)
    return Representation(
        _KRONECKER, {"1": n, "2": n}, {"alpha": alpha, "beta": beta}, field, _validate=False
    )


def _jordan(n: int, eig, field) -> Mat:
    rows = [[field.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = eig
        if i + 1 < n:
            rows[i][i + 1] = field.one
    return Mat(rows, n, n)
