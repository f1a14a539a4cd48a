from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from endoscope.linalg import (
    GFElement,
    LinalgError,
    Mat,
    PrimeField,
    Subspace,
    field_from_name,
    intersect,
    intersect_all,
    kernel_basis,
    rref,
    scalar_from_str,
    scalar_to_str,
    solve,
)


def F(x, y=1):
    return Fraction(x, y)


def mat(rows):
    return Mat([[Fraction(x) for x in r] for r in rows])


small_entries = st.integers(min_value=-5, max_value=5).map(Fraction)
small_mats = st.integers(min_value=1, max_value=5).flatmap(
    lambda r: st.integers(min_value=1, max_value=5).flatmap(
        lambda c: st.lists(
            st.lists(small_entries, min_size=c, max_size=c), min_size=r, max_size=r
        ).map(Mat)
    )
)


def test_rref_identity():
    m = Mat.identity(2)
    red, pivots = rref(m)
    assert red == m
    assert pivots == [0, 1]


def test_rref_rank_one():
    red, pivots = rref(mat([[1, 2], [2, 4]]))
    assert red == mat([[1, 2], [0, 0]])
    assert pivots == [0]


def test_rref_zero():
    m = Mat.zeros(3, 3)
    red, pivots = rref(m)
    assert red == m
    assert pivots == []


def test_kernel_identity_is_zero():
    assert kernel_basis(Mat.identity(2)).dim == 0


def test_kernel_rank_one():
    ker = kernel_basis(mat([[1, 2], [2, 4]]))
    assert ker.dim == 1
    assert ker == Subspace.span(2, [(F(-2), F(1))])


def test_kernel_zero_matrix_is_full():
    ker = kernel_basis(Mat.zeros(2, 3))
    assert ker == Subspace.full(3)


def test_solve_identity():
    b = (F(3), F(-7))
    assert solve(Mat.identity(2), b) == b


def test_solve_consistent_underdetermined():
    m = mat([[1, 2], [2, 4]])
    x = solve(m, (F(1), F(2)))
    assert x is not None
    assert m.apply(x) == (F(1), F(2))


def test_solve_inconsistent():
    assert solve(mat([[1, 2], [2, 4]]), (F(1), F(3))) is None


def test_intersect_self():
    x = Subspace.span(3, [(F(1), F(0), F(2)), (F(0), F(1), F(1))])
    assert intersect(x, x) == x


def test_intersect_transverse_lines():
    e1 = Subspace.span(2, [(F(1), F(0))])
    e2 = Subspace.span(2, [(F(0), F(1))])
    assert intersect(e1, e2).dim == 0


def test_intersect_planes():
    a = Subspace.span(3, [(F(1), F(0), F(0)), (F(0), F(1), F(0))])
    b = Subspace.span(3, [(F(0), F(1), F(0)), (F(0), F(0), F(1))])
    assert intersect(a, b) == Subspace.span(3, [(F(0), F(1), F(0))])


def test_intersect_ambient_mismatch():
    with pytest.raises(LinalgError):
        intersect(Subspace.full(2), Subspace.full(3))


def test_intersect_all():
    full = Subspace.full(3)
    x = Subspace.span(3, [(F(1), F(1), F(0))])
    assert intersect_all([full, x]) == x
    assert intersect_all([x]) == x


@given(small_mats)
@settings(max_examples=60, deadline=None)
def test_rank_nullity(m):
    assert m.rank() + kernel_basis(m).dim == m.cols


@given(small_mats)
@settings(max_examples=60, deadline=None)
def test_rref_idempotent(m):
    red, _ = rref(m)
    red2, _ = rref(red)
    assert red == red2


@given(small_mats)
@settings(max_examples=60, deadline=None)
def test_kernel_vectors_annihilated(m):
    ker = kernel_basis(m)
    for v in ker.vectors():
        assert not any(m.apply(v))


@given(small_mats, st.lists(small_entries, min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_solve_recovers_exact_solution(m, x):
    x = (x * m.cols)[: m.cols]
    b = m.apply(x)
    got = solve(m, b)
    assert got is not None
    assert m.apply(got) == b


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_intersection_dimension_bound(data):
    n = data.draw(st.integers(min_value=1, max_value=4))
    vecs = st.lists(st.lists(small_entries, min_size=n, max_size=n), min_size=0, max_size=4)
    a = Subspace.span(n, data.draw(vecs))
    b = Subspace.span(n, data.draw(vecs))
    meet = intersect(a, b)
    assert intersect(b, a) == meet
    assert meet.dim >= a.dim + b.dim - n
    assert a.contains_subspace(meet) and b.contains_subspace(meet)


def test_subspace_canonical_equality():
    a = Subspace.span(3, [(F(1), F(1), F(0)), (F(0), F(0), F(1))])
    b = Subspace.span(3, [(F(2), F(2), F(2)), (F(0), F(0), F(-3))])
    assert a == b
    assert hash(a) == hash(b)


def test_subspace_sum_and_preimage():
    line = Subspace.span(2, [(F(1), F(0))])
    other = Subspace.span(2, [(F(0), F(1))])
    assert line.add(other) == Subspace.full(2)
    m = mat([[1, 0], [0, 0]])
    assert line.preimage(m) == Subspace.full(2)
    assert Subspace.zero(2).preimage(m) == Subspace.span(2, [(F(0), F(1))])


def test_scalar_round_trip():
    assert scalar_to_str(F(3)) == "3"
    assert scalar_to_str(F(-1, 2)) == "-1/2"
    assert scalar_from_str("-1/2") == F(-1, 2)


def test_prime_field_rank_and_kernel():
    gf = field_from_name("fp:5")
    m = Mat([[gf.of(1), gf.of(2)], [gf.of(2), gf.of(4)]])
    assert m.rank() == 1
    ker = kernel_basis(m)
    assert ker.dim == 1
    v = ker.vectors()[0]
    assert not any(m.apply(v))


def test_prime_field_rejects_composite():
    with pytest.raises(LinalgError):
        field_from_name("fp:6")


def test_gf_element_arithmetic():
    a = GFElement(3, 7)
    b = GFElement(5, 7)
    assert a + b == GFElement(1, 7)
    assert a * b == GFElement(1, 7)
    assert (a / b).value == (3 * pow(5, -1, 7)) % 7
    assert PrimeField(7).of(Fraction(1, 2)) == GFElement(4, 7)


def test_zero_shape_matrices():
    empty = Mat([[] for _ in range(3)], 3, 0)
    assert empty.shape == (3, 0)
    wide = Mat.zeros(0, 4)
    assert kernel_basis(wide) == Subspace.full(4)
    assert (wide @ Mat.zeros(4, 2)).shape == (0, 2)
