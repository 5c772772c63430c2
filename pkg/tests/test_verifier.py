import random

import pytest

from fstype.core import ONE, HighestWeight, Monomial, Polynomial, monomials, var
from fstype.relations import generators, leading_terms
from fstype.verifier import (
    graded_component,
    report_csv,
    report_dict,
    standard_monomials,
    verify_presentation,
)
from oracles import dense_pivots, gap_partitions


def x(i, j, n, e=1):
    return Monomial({var(i, j, n): e})


def P(*pairs):
    return Polynomial(pairs)


ORBIT = [
    P((x(1, 1, 1, 2), 1)),
    P((x(1, 1, 1) * x(1, 2, 1), 4)),
    P((x(1, 2, 1, 2), 8), (x(1, 1, 1) * x(2, 2, 1), 4)),
    P((x(1, 2, 1) * x(2, 2, 1), 24)),
    P((x(2, 2, 1, 2), 24)),
]


def test_graded_component_examples():
    g = generators(HighestWeight.of(1, 0), 3)
    assert graded_component(g, 1) == []
    comp = graded_component(g, 3)
    assert len(comp) == 2
    assert set(map(str, comp)) == {"1*x[1,1](-1)^3", "1*x[1,1](-2) x[1,1](-1)"}

    g = generators(HighestWeight.of(1, 0, 0), 2)
    comp = graded_component(g, 2, (2, 2))
    assert comp == [P((x(1, 2, 1, 2), 2), (x(1, 1, 1) * x(2, 2, 1), 1))]


def test_standard_monomials_examples():
    pivots, standard = standard_monomials(ORBIT, 2, None, ell=2)
    depth1 = [m for m in monomials(2, 2) if m.max_depth == 1]
    assert len(depth1) == 6
    assert set(pivots) == {lt for lt, _ in leading_terms(ORBIT)}
    assert [m for m in standard if m.max_depth == 1] == [x(1, 1, 1) * x(2, 2, 1)]

    pivots, standard = standard_monomials([], 2, (2, 2), ell=2)
    assert pivots == [] and standard == monomials(2, 2, (2, 2))

    rows = [P((x(1, 1, 1, 3), 1)), P((x(1, 1, 2) * x(1, 1, 1), 2))]
    pivots, standard = standard_monomials(rows, 3, ell=1)
    assert pivots == [x(1, 1, 2) * x(1, 1, 1), x(1, 1, 1, 3)]
    assert standard == [x(1, 1, 3)]


def test_standard_monomials_rejects_wrong_grade():
    with pytest.raises(ValueError):
        standard_monomials([P((x(1, 1, 1), 1))], 2, ell=2)


def test_elimination_agrees_with_dense_oracle():
    rng = random.Random(5)
    for _ in range(40):
        cols = monomials(2, 4, (3, 3))
        rows = [Polynomial((m, rng.randint(-3, 3)) for m in rng.sample(cols, 3)) for _ in range(rng.randint(0, 8))]
        pivots, standard = standard_monomials(rows, 4, (3, 3), ell=2)
        assert pivots == dense_pivots(rows, cols)
        assert len(pivots) + len(standard) == len(cols)


def test_verify_examples():
    reports = verify_presentation(HighestWeight.of(1, 0), 6)
    assert all(r.match for r in reports)
    assert [r.standard_count for r in reports] == [len(gap_partitions(d)) for d in range(7)]

    reports = verify_presentation(HighestWeight.of(0, 0, 1), 1)
    assert reports[1].standard_count == 0 and reports[1].basis_count == 0
    assert sum(b.ideal_rank for b in reports[1].blocks) == 3
    assert all(r.match for r in reports)

    for hw in [(1, 0), (0, 1, 0), (0, 0, 0, 1)]:
        (r0,) = verify_presentation(HighestWeight.of(*hw), 0)
        assert r0.match and r0.blocks[0].standard == (ONE,)


def test_report_invariants():
    hw = HighestWeight.of(1, 0, 1)
    reports = verify_presentation(hw, 4)
    g = generators(hw, 4)
    for r in reports:
        for b in r.blocks:
            assert b.num_monomials == b.ideal_rank + len(b.standard)
            assert b.match == (b.standard == b.basis)
            # leading terms of generators of this grade are pivots
            for p in g.polys():
                if p.grade(2) == (r.degree, b.weight):
                    assert p.leading_term() in b.pivots
            # standard sets are closed under division
            std = set(b.standard)
            for m in std:
                for v, _ in m.factors:
                    q = m.divided_by(Monomial.of(v))
                    w = q.weight(2)
                    blk = next(bb for bb in reports[q.degree].blocks if bb.weight == w)
                    assert q in blk.standard


def test_parallel_matches_serial():
    hw = HighestWeight.of(0, 1, 0)
    assert verify_presentation(hw, 4, workers=1) == verify_presentation(hw, 4, workers=2)


def test_serializations():
    hw = HighestWeight.of(1, 0, 0)
    reports = verify_presentation(hw, 2)
    doc = report_dict(hw, 2, reports)
    assert doc["match"] is True and doc["ell"] == 2 and doc["weights"] == [1, 0, 0]
    assert [d["degree"] for d in doc["degrees"]] == [0, 1, 2]
    text = report_csv(reports)
    head, *rows = text.strip().splitlines()
    assert head == "degree,weight,numMonomials,idealRank,standardCount,basisCount,match"
    assert len(rows) == sum(len(r.blocks) for r in reports)
