"""Exit criteria.  Each test records a PASS/FAIL line printed at the end of the run."""

import random
import time

import pytest

from monideal.classify import Verdict, classify
from monideal.covers import brute_force_covers, dim_quotient, minimal_vertex_covers
from monideal.enumeration import (EnumSpec, enumerate_ideals, path_failures,
                                  verify_classification)
from monideal.exchange import is_matroidal, is_polymatroidal, product
from monideal.families import (counterexample, principal_ideal,
                               squarefree_veronese, veronese)
from monideal.quotients import (all_linear_orderings, depth_quotient,
                                is_cohen_macaulay, linear_quotients_revlex)

MATROIDAL_SWEEPS = [EnumSpec(4, 2, 1), EnumSpec(5, 2, 1), EnumSpec(6, 2, 1), EnumSpec(5, 3, 1)]
EXPONENT_SWEEPS = [EnumSpec(3, 2, 2), EnumSpec(2, 3, 3)]
CM_FAMILIES = {Verdict.PRINCIPAL.value, Verdict.VERONESE.value,
               Verdict.SQUAREFREE_VERONESE.value}


def _run(specs):
    start = time.perf_counter()
    reports = [verify_classification(s, keep_rows=True) for s in specs]
    return reports, time.perf_counter() - start


@pytest.fixture(scope="module")
def matroidal_sweeps():
    return _run(MATROIDAL_SWEEPS)


@pytest.fixture(scope="module")
def exponent_sweeps():
    return _run(EXPONENT_SWEEPS)


def test_c1_counterexample(criterion):
    start = time.perf_counter()
    I = counterexample()
    report = minimal_vertex_covers(I)
    assert is_matroidal(I)
    assert report.unmixed
    assert not is_cohen_macaulay(I)
    assert report.h == 4
    assert {len(c) for c in brute_force_covers(I)} == {4}
    assert report.minimal_covers == brute_force_covers(I)
    elapsed = time.perf_counter() - start
    criterion.append(f"h=4 q={linear_quotients_revlex(I).q} {elapsed:.3f}s")
    assert elapsed < 1.0


def test_c2_matroidal_sweeps(criterion, matroidal_sweeps):
    reports, elapsed = matroidal_sweeps
    assert [r.ideals for r in reports] == [63, 1023, 32767, 1023]
    for r in reports:
        assert r.violations == 0
        for row in r.rows:
            if row.is_polymatroidal:
                assert row.linear
                assert (row.verdict in CM_FAMILIES) == row.cm
    criterion.append(" ".join(f"n={r.spec.n},d={r.spec.d}:{r.polymatroidal}" for r in reports))
    criterion.append(f"{elapsed:.1f}s")
    assert elapsed < 300


def test_c3_exponent_sweeps(criterion, exponent_sweeps):
    reports, elapsed = exponent_sweeps
    assert all(r.violations == 0 for r in reports)
    survivors = {row.ideal for r in reports for row in r.rows
                 if row.is_polymatroidal and row.cm}
    assert veronese(2, 3) in survivors
    assert veronese(3, 2) in survivors
    assert veronese(2, 3, [0, 2]) in survivors
    criterion.append(f"CM survivors={len(survivors)} {elapsed:.2f}s")
    assert elapsed < 60


def test_c4_formula_consistency(criterion, matroidal_sweeps, exponent_sweeps):
    checked = 0
    for r in matroidal_sweeps[0] + exponent_sweeps[0]:
        for row in r.rows:
            if not row.linear:
                continue
            checked += 1
            n = row.ideal.n
            assert row.dim == n - row.h
            assert row.depth == n - row.q - 1
            assert row.depth <= row.dim
            assert (row.depth == row.dim) == row.cm
            if row.is_polymatroidal:
                assert (row.depth == row.dim) == (row.verdict in CM_FAMILIES)
    criterion.append(f"{checked} ideals with linear quotients")
    assert checked > 0


def test_c5_named_examples(criterion):
    sv = squarefree_veronese(2, 4)
    assert minimal_vertex_covers(sv).h == 3
    assert linear_quotients_revlex(sv).q == 2
    assert is_cohen_macaulay(sv)

    v = veronese(2, 2)
    assert minimal_vertex_covers(v).h == 2
    assert linear_quotients_revlex(v).q == 1
    assert is_cohen_macaulay(v)
    assert dim_quotient(v) == depth_quotient(v) == 0

    for exps in [(1, 0), (2, 1), (0, 1, 3), (1, 1, 1, 0)]:
        p = principal_ideal(exps)
        assert minimal_vertex_covers(p).h == 1
        assert linear_quotients_revlex(p).q == 0
        assert is_cohen_macaulay(p)
        assert classify(p).verdict is Verdict.PRINCIPAL


def test_c6_exchange_paths(criterion, matroidal_sweeps):
    triples = 0
    for r in matroidal_sweeps[0]:
        for row in r.rows:
            if not row.is_polymatroidal:
                continue
            gens = row.ideal.gens
            triples += sum(u[i] < v[i] for u in gens for v in gens for i in range(len(u)))
            assert path_failures(row.ideal) == []
    criterion.append(f"{triples} paths")


def _random_factor(rnd, n):
    kind = rnd.choice(["veronese", "sqfree", "principal"])
    if kind == "sqfree":
        d = rnd.randint(1, min(3, n))
        t = rnd.randint(d, n)
        return squarefree_veronese(d, n, sorted(rnd.sample(range(n), t)))
    d = rnd.randint(1, 3)
    if kind == "veronese":
        t = rnd.randint(1, n)
        return veronese(d, n, sorted(rnd.sample(range(n), t)))
    u = [0] * n
    for _ in range(d):
        u[rnd.randrange(n)] += 1
    return principal_ideal(tuple(u))


def _random_member(rnd, n):
    """A family member or a product of two."""
    I = _random_factor(rnd, n)
    if rnd.random() < 0.5:
        return product(I, _random_factor(rnd, n))
    return I


def test_c7_product_closure(criterion):
    rnd = random.Random(20261018)
    start = time.perf_counter()
    for _ in range(200):
        n = rnd.randint(2, 5)
        I, J = _random_member(rnd, n), _random_member(rnd, n)
        assert is_polymatroidal(product(I, J)), (I, J)
    elapsed = time.perf_counter() - start
    criterion.append(f"200 pairs {elapsed:.2f}s")
    assert elapsed < 60


def test_c8_q_invariance(criterion):
    pool = []
    for spec in (EnumSpec(4, 2, 1, min_gens=2, max_gens=6),
                 EnumSpec(3, 2, 2, min_gens=2, max_gens=6),
                 EnumSpec(5, 3, 1, min_gens=2, max_gens=6)):
        pool.extend(I for I in enumerate_ideals(spec) if linear_quotients_revlex(I).linear)
    sample = random.Random(8).sample(pool, 50)
    orderings = 0
    for I in sample:
        qs = set()
        for rep in all_linear_orderings(I, max_gens=6):
            qs.add(rep.q)
            orderings += 1
        assert qs == {linear_quotients_revlex(I).q}
    criterion.append(f"50 ideals, {orderings} linear orderings")
