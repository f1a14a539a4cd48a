"""Acceptance suite.

Each test implements one acceptance criterion at its stated tolerance
(exact equality unless noted) and prints a single pass/fail line; run
with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
Stated runtime budgets are asserted as wall-clock bounds.
"""

import random
import time
from fractions import Fraction

import pytest

from endoscope.endosocle import (
    endosocle,
    family_endosocle,
    power_endosocle,
    relative_endosocle_series,
)
from endoscope.harness import length_bounded_kronecker_family, two_route_endosocle_agree
from endoscope.homs import clear_caches, hom_dim
from endoscope.linalg import Subspace
from endoscope.matsub import check_endo_invariant, evaluate, random_pointed_matrix
from endoscope.quiver import kronecker
from endoscope.radical import harada_sai_check
from endoscope.reps import (
    INFINITY,
    SubspaceFamily,
    direct_sum,
    dual,
    kronecker_preinjective,
    kronecker_preinjective_right,
    kronecker_preprojective,
    kronecker_regular,
)


@pytest.fixture(scope="module", autouse=True)
def _cold_caches():
    clear_caches()
    yield


def _report(number: int, description: str, passed: bool):
    print(f"ACCEPTANCE {number:02d} {description}: {'PASS' if passed else 'FAIL'}")
    assert passed, f"criterion {number} failed: {description}"


class _Budget:
    def __init__(self, seconds: float):
        self.seconds = seconds
        self.start = time.perf_counter()

    def check(self) -> bool:
        return (time.perf_counter() - self.start) < self.seconds


def test_criterion_01_preinjective_endosocle_support():
    budget = _Budget(10.0)
    ok = True
    for N in range(4, 13):
        members = [kronecker_preinjective(n) for n in range(1, N + 1)]
        report = family_endosocle(members, labels=list(range(1, N + 1)), boundary=(N,))
        dims = report.component_dims()
        ok &= report.support == (1, 2)
        ok &= dims[1] == 1 and dims[2] == 1
        ok &= all(dims[i] == 0 for i in range(3, N + 1))
    ok &= budget.check()
    _report(1, "preinjective family endosocle has support {1,2} with unit components", ok)


def test_criterion_02_trimmed_preinjectives():
    budget = _Budget(10.0)
    ok = True
    for m in range(2, 7):
        N = m + 6
        members = [kronecker_preinjective(n) for n in range(m, N + 1)]
        report = family_endosocle(members, labels=list(range(m, N + 1)), boundary=(N,))
        ok &= report.boundary == (N,)
        ok &= report.support_excluding_boundary() == (m,)
        ok &= report.component_dims()[m] == 2 * m - 1
        ok &= report.components[m] == SubspaceFamily.full_for(members[0])
    ok &= budget.check()
    _report(2, "trimmed preinjective endosocle is exactly the lowest member", ok)


def test_criterion_03_preprojective_vanishing():
    budget = _Budget(10.0)
    ok = True
    for N in range(3, 11):
        members = [kronecker_preprojective(n) for n in range(1, N + 1)]
        report = family_endosocle(members, labels=list(range(1, N + 1)), boundary=(N,))
        dims = report.component_dims()
        ok &= all(dims[i] == 0 for i in range(1, N))
    ok &= budget.check()
    _report(3, "preprojective endosocle components vanish off the truncation boundary", ok)


def test_criterion_04_relative_series_of_preinjectives():
    ok = True
    for N in (5, 8):
        members = [kronecker_preinjective(n) for n in range(1, N + 1)]
        series = relative_endosocle_series(members, labels=list(range(1, N + 1)))
        expected = [(1, 2)] + [(k,) for k in range(3, N + 1)]
        ok &= [t.support for t in series.terms] == expected
        ok &= series.stabilization_index == N - 1
    _report(4, "relative endosocle series peels {1,2} then singletons", ok)


def test_criterion_05_power_endosocle_homogeneity():
    ok = True
    for rep in (kronecker_preinjective(2), kronecker_regular(2, 0)):
        single = endosocle(rep)
        for k in (2, 3):
            power = power_endosocle(rep, k)  # verifies block equality internally
            ok &= power.total_dim == k * single.total_dim
            total, embeddings, _ = direct_sum([rep] * k)
            expected = {}
            for v in rep.presentation.quiver.vertices:
                acc = Subspace.zero(total.dim(v))
                for emb in embeddings:
                    acc = acc.add(single.space(v).image(emb.block(v)))
                expected[v] = acc
            ok &= SubspaceFamily(expected) == power
    _report(5, "endosocle of a power is the power of the endosocle", ok)


def test_criterion_06_duality():
    ok = True
    mods = [kronecker_preinjective(n) for n in range(1, 6)]
    mods += [kronecker_preprojective(n) for n in range(1, 6)]
    mods += [kronecker_regular(n, 0) for n in range(1, 6)]
    for m in mods:
        ok &= dual(dual(m)) == m
    for a in mods:
        for b in mods:
            ok &= hom_dim(a, b) == hom_dim(dual(b), dual(a))
    for n in range(1, 6):
        ok &= dual(kronecker_preinjective_right(n)).dim_vector == (n - 1, n)
    _report(6, "duality is involutive and contravariant on hom dimensions", ok)


# -- criterion 7: independent oracle ------------------------------------------


def _oracle_rref_nullity(rows, ncols):
    """Textbook row reduction over Fractions, written independently of
    the library's elimination path."""
    mat = [list(map(Fraction, r)) for r in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [x / pv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return ncols - rank


def _oracle_hom_dim(m, n):
    """Nullity of the commuting system, assembled entry by entry."""
    d1m, d2m = m.dim("1"), m.dim("2")
    d1n, d2n = n.dim("1"), n.dim("2")
    unknowns = d1n * d1m + d2n * d2m

    def f1_index(r, c):
        return r * d1m + c

    def f2_index(r, c):
        return d1n * d1m + r * d2m + c

    rows = []
    for arrow in ("alpha", "beta"):
        ma, na = m.matrix(arrow), n.matrix(arrow)
        for r in range(d2n):
            for c in range(d1m):
                row = [Fraction(0)] * unknowns
                for k in range(d2m):
                    row[f2_index(r, k)] += ma[k, c]
                for k in range(d1n):
                    row[f1_index(k, c)] -= na[r, k]
                rows.append(row)
    return _oracle_rref_nullity(rows, unknowns)


def test_criterion_07_hom_dimension_table_against_oracle():
    ok = True
    for i in range(1, 7):
        for j in range(1, 7):
            expected = max(0, i - j + 1)
            mi, mj = kronecker_preinjective(i), kronecker_preinjective(j)
            ok &= hom_dim(mi, mj) == expected
            ok &= _oracle_hom_dim(mi, mj) == expected
    _report(7, "hom dimension table matches the independent nullspace oracle", ok)


def test_criterion_08_harada_sai_bound():
    budget = _Budget(60.0)
    members, labels = length_bounded_kronecker_family(5)
    report = harada_sai_check(members, 5, labels=labels)
    ok = report.passed and report.depth is not None and report.depth <= 31
    ok &= budget.check()
    _report(
        8,
        f"radical profile of length-<=5 modules vanishes at depth {report.depth} <= 31",
        ok,
    )


def test_criterion_09_regular_support_growth():
    ok = True
    for N in range(3, 11):
        members = [kronecker_regular(1, lam) for lam in range(N)]
        report = family_endosocle(members, labels=list(range(N)))
        ok &= len(report.support) == N
    _report(9, "regular one-parameter families have full (growing) support", ok)


def test_criterion_10_matrix_subgroup_invariance():
    budget = _Budget(30.0)
    pres = kronecker()
    carriers = [
        direct_sum([kronecker_preinjective(1), kronecker_preinjective(2)])[0],
        direct_sum([kronecker_preprojective(2), kronecker_preinjective(2)])[0],
    ]
    rng = random.Random(2024)
    ok = True
    for _ in range(100):
        pm = random_pointed_matrix(pres, rng)
        for rep in carriers:
            ok &= check_endo_invariant(evaluate(pm, rep), rep)
    parts = [kronecker_preinjective(1), kronecker_preinjective(2)]
    total, embeddings, _ = direct_sum(parts)
    rng = random.Random(4096)
    for _ in range(40):
        pm = random_pointed_matrix(pres, rng)
        expected = Subspace.zero(total.total_dim)
        for part, emb in zip(parts, embeddings):
            expected = expected.add(evaluate(pm, part).image(emb.total_mat()))
        ok &= expected == evaluate(pm, total)
    ok &= budget.check()
    _report(10, "matrix subgroups are endo-invariant and respect direct sums", ok)


def test_criterion_11_two_route_endosocle_consistency():
    families = [
        [kronecker_preinjective(1), kronecker_preinjective(2)],
        [kronecker_preinjective(1), kronecker_preinjective(2), kronecker_preinjective(3)],
        [kronecker_regular(1, 0), kronecker_regular(1, 1), kronecker_regular(1, INFINITY)],
        [kronecker_preprojective(2), kronecker_regular(1, 0), kronecker_preinjective(2)],
        [
            kronecker_preprojective(1),
            kronecker_preprojective(2),
            kronecker_regular(2, 0),
            kronecker_preinjective(1),
        ],
    ]
    ok = all(two_route_endosocle_agree(members) for members in families)
    _report(11, "member-wise and direct-sum endosocle routes agree", ok)
