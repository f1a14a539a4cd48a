import pytest

from endoscope.endosocle import (
    endosocle,
    endosocle_series,
    family_endosocle,
    power_endosocle,
    relative_endosocle_series,
)
from endoscope.homs import LocalityUnverified
from endoscope.reps import (
    INFINITY,
    SubspaceFamily,
    direct_sum,
    kronecker_preinjective,
    kronecker_preprojective,
    kronecker_regular,
    socle,
)


def preinjectives(lo, hi):
    return [kronecker_preinjective(n) for n in range(lo, hi + 1)], list(range(lo, hi + 1))


def test_endosocle_of_modules_with_trivial_radical():
    s1 = kronecker_preinjective(1)
    assert endosocle(s1) == SubspaceFamily.full_for(s1)
    i2 = kronecker_preinjective(2)
    assert endosocle(i2) == SubspaceFamily.full_for(i2)


def test_endosocle_of_small_sum_matches_socle_formula():
    s1 = kronecker_preinjective(1)
    i2 = kronecker_preinjective(2)
    total, embs, _ = direct_sum([s1, i2])
    es = endosocle(total)
    assert es.total_dim == 2
    # equals the first summand plus the socle of the second, embedded
    expected = {}
    for v in total.presentation.quiver.vertices:
        acc = SubspaceFamily.full_for(s1).space(v).image(embs[0].block(v))
        acc = acc.add(socle(i2).space(v).image(embs[1].block(v)))
        expected[v] = acc
    assert es == SubspaceFamily(expected)


def test_endosocle_of_dual_numbers_module():
    r2 = kronecker_regular(2, 0)
    es = endosocle(r2)
    assert es.dims() == {"1": 1, "2": 1}


def test_family_endosocle_preinjectives():
    members, labels = preinjectives(1, 8)
    report = family_endosocle(members, labels=labels, boundary=(8,))
    assert report.support == (1, 2)
    dims = report.component_dims()
    assert dims[1] == 1 and dims[2] == 1
    assert all(dims[i] == 0 for i in range(3, 9))
    # B_2 is the socle of the second member
    assert report.components[2] == socle(members[1])


def test_family_endosocle_trimmed_preinjectives():
    for m in (2, 3, 4):
        members, labels = preinjectives(m, m + 5)
        report = family_endosocle(members, labels=labels, boundary=(m + 5,))
        assert report.support == (m,)
        assert report.component_dims()[m] == 2 * m - 1
        assert report.components[m] == SubspaceFamily.full_for(members[0])


def test_family_endosocle_preprojectives_vanish_off_boundary():
    for hi in (4, 6):
        members = [kronecker_preprojective(n) for n in range(1, hi + 1)]
        labels = list(range(1, hi + 1))
        report = family_endosocle(members, labels=labels, boundary=(hi,))
        assert report.support_excluding_boundary() == ()
        assert report.dim_excluding_boundary() == 0
        # the flagged boundary member keeps its full component
        assert report.component_dims()[hi] == 2 * hi - 1


def test_family_endosocle_orthogonal_regulars():
    members = [kronecker_regular(1, lam) for lam in (0, 1, 2, 3, INFINITY)]
    report = family_endosocle(members, labels=[0, 1, 2, 3, "inf"])
    assert len(report.support) == 5
    assert report.total_dim == sum(m.total_dim for m in members)


def test_family_endosocle_with_duplicates_is_homogeneous():
    i2 = kronecker_preinjective(2)
    report = family_endosocle([i2, i2], labels=["a", "b"])
    assert report.support == ("a", "b")
    assert report.components["a"].total_dim == report.components["b"].total_dim == endosocle(i2).total_dim


def test_family_endosocle_splits_decomposable_members():
    total, _, _ = direct_sum([kronecker_preinjective(1), kronecker_preinjective(2)])
    report = family_endosocle([total])
    assert report.labels == ("0.0", "0.1")
    assert report.total_dim == 2


def test_family_endosocle_refuses_uncertified_locality():
    # End is the field Q(i): two-dimensional over the radical, no
    # rational eigenvalues to split along, so locality is inconclusive
    from fractions import Fraction as F

    from endoscope.linalg import Mat
    from endoscope.quiver import kronecker
    from endoscope.reps import Representation

    gauss = Representation(
        kronecker(),
        {"1": 2, "2": 2},
        {
            "alpha": Mat.identity(2),
            "beta": Mat([[F(0), F(-1)], [F(1), F(0)]]),
        },
    )
    with pytest.raises(LocalityUnverified):
        family_endosocle([gauss])


def test_trim_monotonicity():
    # removing members can only enlarge the surviving components
    members, labels = preinjectives(1, 6)
    full = family_endosocle(members, labels=labels)
    for drop in range(1, 4):
        trimmed = family_endosocle(members[drop:], labels=labels[drop:])
        for lab in labels[drop:]:
            assert trimmed.components[lab].contains(full.components[lab])


def test_power_endosocle_duplicates_components():
    i2 = kronecker_preinjective(2)
    assert power_endosocle(i2, 1) == endosocle(i2)
    pe = power_endosocle(i2, 3)
    assert pe.total_dim == 3 * endosocle(i2).total_dim == 9
    r2 = kronecker_regular(2, 0)
    for k in (2, 3):
        pe = power_endosocle(r2, k)
        assert pe.total_dim == k * endosocle(r2).total_dim


def test_power_endosocle_requires_indecomposable():
    total, _, _ = direct_sum([kronecker_preinjective(1), kronecker_preinjective(2)])
    with pytest.raises(LocalityUnverified):
        power_endosocle(total, 2)


def test_endosocle_series_simple():
    report = endosocle_series(kronecker_preinjective(1))
    assert report.stabilization_index == 1
    assert report.terms[0].dim == 1


def test_endosocle_series_of_radical_free_module_has_length_one():
    report = endosocle_series(kronecker_preinjective(3))
    assert report.stabilization_index == 1
    assert report.terms[0].dim == kronecker_preinjective(3).total_dim


def test_endosocle_series_two_steps():
    total, _, _ = direct_sum([kronecker_preinjective(1), kronecker_preinjective(2)])
    report = endosocle_series(total)
    assert [t.dim for t in report.terms] == [2, 4]
    assert report.stabilization_index == 2
    # ascending and exhaustive
    assert report.terms[1].family.contains(report.terms[0].family)
    assert report.terms[-1].family == SubspaceFamily.full_for(total)


def test_endosocle_series_matches_radical_nilpotency():
    r2 = kronecker_regular(2, 0)
    report = endosocle_series(r2)
    assert [t.dim for t in report.terms] == [2, 4]


def test_relative_series_preinjectives():
    members, labels = preinjectives(1, 5)
    report = relative_endosocle_series(members, labels=labels)
    assert [t.support for t in report.terms] == [(1, 2), (3,), (4,), (5,)]
    assert report.stabilization_index == 4


def test_relative_series_singleton():
    report = relative_endosocle_series([kronecker_preinjective(2)], labels=["only"])
    assert report.stabilization_index == 1
    assert report.terms[0].support == ("only",)


def test_relative_series_preprojectives_peel_from_boundary():
    members = [kronecker_preprojective(n) for n in range(1, 5)]
    report = relative_endosocle_series(members, labels=[1, 2, 3, 4], boundary=(4,))
    assert [t.support for t in report.terms] == [(4,), (3,), (2,), (1,)]


def test_relative_series_terms_are_direct():
    members, labels = preinjectives(1, 5)
    report = relative_endosocle_series(members, labels=labels)
    total_dim = sum(t.dim for t in report.terms)
    summed = None
    for t in report.terms:
        summed = t.family if summed is None else summed.add(t.family)
    assert summed.total_dim == total_dim


def test_two_route_consistency_small():
    from endoscope.harness import two_route_endosocle_agree

    members = [kronecker_preinjective(1), kronecker_preinjective(2), kronecker_regular(1, 0)]
    assert two_route_endosocle_agree(members)


def test_components_are_annihilated_by_every_noniso():
    from endoscope.homs import end_ring, noniso_subspace

    members, labels = preinjectives(1, 5)
    report = family_endosocle(members, labels=labels)
    for i, m in enumerate(members):
        comp = report.components[labels[i]]
        annihilators = list(end_ring(m).radical_morphisms())
        for n in members:
            if n is not m:
                annihilators.extend(noniso_subspace(m, n).basis)
        for f in annihilators:
            for v in m.presentation.quiver.vertices:
                assert comp.space(v).image(f.block(v)).dim == 0


def test_embedding_chain_kills_interior_components():
    # the preprojectives embed consecutively; every non-final component vanishes
    from endoscope.homs import hom_basis

    members = [kronecker_preprojective(n) for n in range(1, 6)]
    for a, b in zip(members, members[1:]):
        hom = hom_basis(a, b)
        found_mono = any(
            all(f.block(v).rank() == a.dim(v) for v in ("1", "2")) for f in hom.basis
        )
        assert found_mono
    report = family_endosocle(members, labels=[1, 2, 3, 4, 5])
    assert all(report.component_dims()[i] == 0 for i in range(1, 5))
