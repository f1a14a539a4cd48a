import random
from fractions import Fraction

import pytest

from endoscope.linalg import Subspace
from endoscope.matsub import (
    MatrixSubgroupError,
    PointedMatrix,
    check_endo_invariant,
    evaluate,
    image_subgroup,
    meet,
    random_pointed_matrix,
)
from endoscope.quiver import act, kronecker
from endoscope.reps import direct_sum, kronecker_preinjective, kronecker_preprojective


@pytest.fixture(scope="module")
def pres():
    return kronecker()


@pytest.fixture(scope="module")
def carrier():
    total, _, _ = direct_sum([kronecker_preinjective(1), kronecker_preinjective(2)])
    return total


def test_evaluate_identity_element_gives_zero(pres):
    i2 = kronecker_preinjective(2)
    pm = PointedMatrix.of([[pres.one()]], 0)
    assert evaluate(pm, i2).dim == 0


def test_evaluate_zero_element_gives_everything(pres):
    i2 = kronecker_preinjective(2)
    pm = PointedMatrix.of([[pres.zero()]], 0)
    assert evaluate(pm, i2) == Subspace.full(3)


def test_evaluate_arrow_annihilator(pres):
    i2 = kronecker_preinjective(2)
    pm = PointedMatrix.of([[pres.arrow_element("alpha")]], 0)
    sub = evaluate(pm, i2)
    assert sub.dim == 2
    # kernel of the alpha action: one dimension at each vertex block
    mat = act(pres.arrow_element("alpha"), i2)
    for v in sub.vectors():
        assert not any(mat.apply(v))


def test_image_subgroup_two_routes(pres):
    i2 = kronecker_preinjective(2)
    for el in (pres.one(), pres.zero(), pres.arrow_element("alpha"),
               pres.arrow_element("alpha") + pres.arrow_element("beta")):
        via_pm = image_subgroup(el, i2)
        column_space = Subspace(i2.total_dim, act(el, i2))
        assert via_pm == column_space
    assert image_subgroup(pres.one(), i2) == Subspace.full(3)
    assert image_subgroup(pres.zero(), i2).dim == 0
    assert image_subgroup(pres.arrow_element("alpha"), i2).dim == 1


def test_random_subgroups_are_endo_invariant(pres, carrier):
    rng = random.Random(11)
    for _ in range(100):
        pm = random_pointed_matrix(pres, rng)
        sub = evaluate(pm, carrier)
        assert check_endo_invariant(sub, carrier)


def test_non_invariant_line_detected(carrier):
    v = [Fraction(1), Fraction(1), Fraction(0), Fraction(0)]
    line = Subspace.span(carrier.total_dim, [v])
    assert not check_endo_invariant(line, carrier)
    assert check_endo_invariant(Subspace.full(carrier.total_dim), carrier)


def test_evaluate_distributes_over_direct_sums(pres):
    parts = [kronecker_preprojective(2), kronecker_preinjective(2)]
    total, embs, _ = direct_sum(parts)
    rng = random.Random(23)
    for _ in range(40):
        pm = random_pointed_matrix(pres, rng)
        expected = Subspace.zero(total.total_dim)
        for part, emb in zip(parts, embs):
            expected = expected.add(evaluate(pm, part).image(emb.total_mat()))
        assert expected == evaluate(pm, total)


def test_meet(pres):
    i2 = kronecker_preinjective(2)
    full = Subspace.full(3)
    ann_a = evaluate(PointedMatrix.of([[pres.arrow_element("alpha")]], 0), i2)
    ann_b = evaluate(PointedMatrix.of([[pres.arrow_element("beta")]], 0), i2)
    assert meet([ann_a]) == ann_a
    assert meet([full, ann_a]) == ann_a
    both = meet([ann_a, ann_b])
    # common kernel of both arrow actions: only the vertex-2 block survives
    assert both.dim == 1
    with pytest.raises(MatrixSubgroupError):
        meet([])


def test_descending_chain_by_appending_rows(pres):
    i2 = kronecker_preinjective(2)
    pm = PointedMatrix.of([[pres.arrow_element("alpha")]], 0)
    previous = evaluate(pm, i2)
    for el in (pres.arrow_element("beta"), pres.trivial("1")):
        pm = pm.append_row([el])
        current = evaluate(pm, i2)
        assert previous.contains_subspace(current)
        previous = current


def test_pointed_matrix_validation(pres):
    with pytest.raises(MatrixSubgroupError):
        PointedMatrix.of([[pres.one()]], 5)
    with pytest.raises(MatrixSubgroupError):
        PointedMatrix.of([[pres.one()], [pres.one(), pres.zero()]], 0)


def test_random_generator_is_seed_deterministic(pres):
    a = random_pointed_matrix(pres, random.Random(5))
    b = random_pointed_matrix(pres, random.Random(5))
    assert a == b
