import itertools

import pytest

from redlab.errors import BadRank
from redlab.groebner import RingSpec, ideal_contains, ideal_equal
from redlab.localred import check_reduction
from redlab.redsearch import (
    CandidateMatrix,
    candidate_ideal,
    construct_counterexample,
    enumerate_candidates,
    find_r_generated_reduction,
    gaussian_binomial,
    minimal_generator_count,
)

F2 = RingSpec(2, ("x", "y"), equidimensional=True)


def _rank(rows, q):
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(len(rows[0])):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % q), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, q)
        rows[rank] = [v * inv % q for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(a - c * b) % q for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _span(rows, q):
    out = set()
    for coeffs in itertools.product(range(q), repeat=len(rows)):
        out.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q for j in range(len(rows[0]))))
    return frozenset(out)


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("g", range(1, 6))
def test_enumeration_counts_and_distinct_spans(g, q):
    for r in range(1, g + 1):
        cands = list(enumerate_candidates(g, r, q))
        assert len(cands) == gaussian_binomial(g, r, q)
        assert all(_rank(c.rows, q) == r for c in cands)
        if q ** g <= 81:
            assert len({_span(c.rows, q) for c in cands}) == len(cands)


def test_gaussian_binomial_values():
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(3, 2, 2) == 7
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(4, 2, 3) == 130
    assert gaussian_binomial(3, 4, 2) == 0


def test_principal_candidates_of_plane():
    m = F2.maximal
    names = {str(candidate_ideal(m, c).gens[0]) for c in enumerate_candidates(2, 1, 2)}
    assert names == {"x", "y", "x + y"}


def test_candidate_validation():
    with pytest.raises(BadRank):
        list(enumerate_candidates(2, 3, 2))
    with pytest.raises(ValueError):
        CandidateMatrix(2, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        CandidateMatrix(2, ((1, 1), (0, 1)))
    assert CandidateMatrix(2, ((1, 0, 1), (0, 1, 1))).pivots == (0, 1)


def test_minimal_generator_count():
    assert minimal_generator_count(F2.ideal("x^2", "x*y", "y^2", "x^2+y^2")) == 3
    assert minimal_generator_count(F2.maximal) == 2
    assert minimal_generator_count(F2.ideal("x+x*y", "y")) == 2


def test_search_examples():
    I = F2.ideal("x^2", "x*y", "y^2")
    rep = find_r_generated_reduction(I, 2)
    assert rep.found is not None
    J = candidate_ideal(I, rep.found[0])
    assert check_reduction(J, I).is_reduction
    rep = find_r_generated_reduction(F2.maximal, 1, exhaustive=True)
    assert rep.examined == 3 and rep.found is None and rep.conclusive_none
    assert all(v.certificate.kind == "DimensionMismatch" for _, v in rep.results)


def test_search_deterministic_across_jobs():
    I = F2.ideal("x^3", "x^2*y", "x*y^2", "y^3")
    a = find_r_generated_reduction(I, 2, exhaustive=True, jobs=1)
    b = find_r_generated_reduction(I, 2, exhaustive=True, jobs=2)
    assert a.to_json() == b.to_json()


def _found(ring, gens, r):
    rep = find_r_generated_reduction(ring.ideal(*gens), r, exhaustive=True)
    assert not rep.inconclusive
    return [c.to_json() for c, _ in rep.reductions]


@pytest.mark.parametrize("gens, r", [
    (("x", "y"), 1),
    (("x^2", "y^2"), 1),
    (("x^2", "x*y+y^2"), 1),
    (("x", "y^2"), 1),
    (("x+y", "y^2"), 1),
])
def test_reductions_unchanged_modulo_nilpotents(gens, r):
    # x^2(x+y) and x(x+y) have the same radical; the reduced ring sees the same answers
    R = RingSpec(2, ("x", "y"), ("x^3+x^2*y",), equidimensional=True)
    R_red = RingSpec(2, ("x", "y"), ("x^2+x*y",), equidimensional=True)
    assert _found(R, gens, r) == _found(R_red, gens, r)


@pytest.mark.parametrize("p, n", [(2, 2), (2, 3), (3, 2)])
def test_constructed_ideals_have_no_smaller_reduction(p, n):
    res = construct_counterexample(p, n)
    I = res.ideal
    assert minimal_generator_count(I) == n
    assert res.report.conclusive_none
    assert res.report.examined == sum(gaussian_binomial(n, k, p) for k in range(1, n))
    for f in I.gens:
        assert ideal_contains(I, f)


def test_construction_seed_is_reproducible():
    a = construct_counterexample(2, 2, seed=5)
    b = construct_counterexample(2, 2, seed=5)
    assert ideal_equal(a.ideal, b.ideal) and a.to_json() == b.to_json()


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        construct_counterexample(4, 2)
    with pytest.raises(ValueError):
        construct_counterexample(2, 1)
    with pytest.raises(ValueError):
        construct_counterexample(2, 11)
