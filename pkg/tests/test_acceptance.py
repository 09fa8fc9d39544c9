"""One check per acceptance criterion; each prints a PASS/FAIL line.

Criteria are asserted exactly as stated, including where the stated numbers
disagree with what the computation finds.
"""

import subprocess
import sys
import time
from pathlib import Path

from redlab.bound import admits_principal, capacity, min_generators
from redlab.groebner import RingSpec, ideal_contains, is_locally_m_primary, local_dimension
from redlab.localred import check_reduction, is_integral_over, multiplicity
from redlab.onedim import build_model, construct_elements, verify_converse, verify_counterexample
from redlab.polyfield import PolyRing, monic_irreducibles
from redlab.redsearch import (
    candidate_ideal,
    construct_counterexample,
    enumerate_candidates,
    find_r_generated_reduction,
    gaussian_binomial,
    minimal_generator_count,
)
from redlab.reproduce import EX56_EXTRA, _random_unit_spanning, closure_ideal, example_ideal

TESTS = Path(__file__).parent


def report(capsys, number, title, checks, started):
    ok = all(v for _, v in checks)
    failed = [k for k, v in checks if not v]
    detail = "" if ok else "  failed: " + "; ".join(failed)
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({time.time() - started:.1f}s){detail}")
    assert ok, detail


def test_criterion_01_three_generated_example(capsys):
    t0 = time.time()
    I = example_ideal()
    rep = find_r_generated_reduction(I, 2, exhaustive=True, jobs=1)
    f = I.ring(EX56_EXTRA)
    checks = [
        ("mu = 3", minimal_generator_count(I) == 3),
        ("m-primary", is_locally_m_primary(I)),
        (f"examined 10 (observed {rep.examined})", rep.examined == 10),
        (f"no 2-generated reduction (observed {len(rep.reductions)}, first {rep.found and rep.found[0].to_json()})",
         not rep.reductions),
        ("inconclusive list empty", not rep.inconclusive),
        ("x^3+xy^2 integral over I", is_integral_over(f, I).is_reduction),
        ("x^3+xy^2 not in I", not ideal_contains(I, f)),
    ]
    checks.append(("runtime <= 300s", time.time() - t0 <= 300))
    report(capsys, 1, "three-generated m-primary ideal has no 2-generated reduction", checks, t0)


def test_criterion_02_closure_example(capsys):
    t0 = time.time()
    Ib = closure_ideal()
    mu = minimal_generator_count(Ib)
    rep = find_r_generated_reduction(Ib, 2, exhaustive=True, jobs=1)
    expected = 3 + 35 if mu == 4 else gaussian_binomial(mu, 1, 2) + gaussian_binomial(mu, 2, 2)
    checks = [
        (f"mu = 4 (observed {mu})", mu == 4),
        ("m-primary", is_locally_m_primary(Ib)),
        (f"examined {expected} (observed {rep.examined})", rep.examined == expected),
        (f"no 2-generated reduction (observed {len(rep.reductions)})", not rep.reductions),
        ("inconclusive list empty", not rep.inconclusive),
    ]
    checks.append(("runtime <= 900s", time.time() - t0 <= 900))
    report(capsys, 2, "its integral-closure step has no 2-generated reduction", checks, t0)


def test_criterion_03_three_lines(capsys):
    t0 = time.time()
    R = RingSpec(2, ("x", "y"), ("x^2*y+x*y^2",), equidimensional=True)
    m = R.maximal
    rep = find_r_generated_reduction(m, 1, exhaustive=True, jobs=1)
    names = sorted(str(candidate_ideal(m, c).gens[0]) for c, _ in rep.results)
    kinds = {v.certificate.kind for _, v in rep.results if v.is_negative}
    checks = [
        ("multiplicity(m) = 3", multiplicity(m).e == 3),
        ("candidates are x, y, x+y", names == ["x", "x + y", "y"]),
        ("none is a reduction", not rep.reductions and rep.not_reduction == 3),
        ("certified by dimension or primary mismatch", kinds <= {"DimensionMismatch", "NotPrimaryMismatch"}),
    ]
    report(capsys, 3, "three lines in the plane", checks, t0)


def test_criterion_04_three_lines_on_cone(capsys):
    t0 = time.time()
    R = RingSpec(2, ("x", "y", "z"), ("z^2-x*y", "x^2*y+x*y^2"), equidimensional=True)
    m = R.maximal
    rep = find_r_generated_reduction(m, 1, exhaustive=True, jobs=1)
    found = [str(candidate_ideal(m, c).gens[0]) for c, _ in rep.reductions]
    J2 = R.ideal("x", "y")
    rep2 = find_r_generated_reduction(J2, 1, exhaustive=True, jobs=1)
    checks = [
        ("7 linear candidates", rep.examined == 7),
        (f"exactly x+y+z is a reduction (observed {found})", found == ["x + y + z"]),
        ("(x, y) is a reduction of m", check_reduction(J2, m).is_reduction),
        ("3 candidates inside (x, y)", rep2.examined == 3),
        ("none inside (x, y)", not rep2.reductions and not rep2.inconclusive),
    ]
    report(capsys, 4, "cone with three lines", checks, t0)


def test_criterion_05_four_lines_on_cone(capsys):
    t0 = time.time()
    R = RingSpec(2, ("x", "y", "z"), ("z^2-x*y", "x^3*y+x*y^3+x^2*y*z+x*y^2*z"), equidimensional=True)
    rep = find_r_generated_reduction(R.maximal, 1, exhaustive=True, jobs=1)
    checks = [
        ("7 linear candidates", rep.examined == 7),
        ("no principal reduction", not rep.reductions and not rep.inconclusive),
    ]
    report(capsys, 5, "cone with four lines", checks, t0)


def test_criterion_06_four_planes(capsys):
    t0 = time.time()
    R = RingSpec(2, ("x", "y", "z"), ("x^3*y+x*y^3+x^2*y*z+x*y^2*z",), equidimensional=True)
    m = R.maximal
    cands = list(enumerate_candidates(3, 2, 2))
    dims = [local_dimension(candidate_ideal(m, c)) for c in cands]
    verdicts = [check_reduction(candidate_ideal(m, c), m) for c in cands]
    checks = [
        ("7 two-dimensional subspaces", len(cands) == 7),
        (f"each quotient is one-dimensional (observed {dims})", dims == [1] * 7),
        ("each is NotReduction", all(v.is_negative for v in verdicts)),
    ]
    report(capsys, 6, "four planes in 3-space", checks, t0)


def test_criterion_07_bound_tables(capsys):
    t0 = time.time()
    checks = [
        ("capacities", (capacity(2, 1), capacity(2, 2), capacity(3, 2)) == (2, 6, 12)),
        ("min generators", [min_generators(2, M) for M in (2, 3, 4)] == [1, 2, 2]),
        ("principal iff M <= q", all(admits_principal(q, M) == (M <= q) and (min_generators(q, M) == 1) == (M <= q)
                                     for q in range(2, 12) for M in range(1, 11))),
        ("boundary tight", all(min_generators(q, capacity(q, n)) == n for q in range(2, 17) for n in range(1, 9))),
    ]
    report(capsys, 7, "generator bounds", checks, t0)


def test_criterion_08_semilocal_demos(capsys):
    t0 = time.time()
    import random

    checks = []
    for p, n, t in ((2, 1, 3), (2, 2, 7), (3, 1, 4)):
        uni = PolyRing(p, ("y",))
        model = build_model(p, [f for _, f in zip(range(t), monic_irreducibles(uni))])
        rep = verify_counterexample(model, construct_elements(model, n), n)
        total = sum(gaussian_binomial(n + 1, k, p) for k in range(1, n + 1))
        checks.append((f"every span survives for {(p, n, t)}", len(rep.covers) == total))
    uni = PolyRing(2, ("y",))
    model = build_model(2, [uni("y"), uni("y+1")])
    rng = random.Random(0)
    good = 0
    for _ in range(50):
        rep = verify_converse(model, _random_unit_spanning(model, rng), 1)
        good += bool(rep.non_surviving)
    checks.append(("converse on 50 random inputs", good == 50))
    report(capsys, 8, "semilocal construction and converse", checks, t0)


def test_criterion_09_constructed_ideals(capsys):
    t0 = time.time()
    checks = []
    for n in (2, 3):
        s = time.time()
        res = construct_counterexample(2, n)
        checks.append((f"n={n}: no {n - 1}-generated reduction", res.report.conclusive_none))
        checks.append((f"n={n}: mu = {n}", minimal_generator_count(res.ideal) == n))
        checks.append((f"n={n}: runtime <= 600s", time.time() - s <= 600))
    report(capsys, 9, "constructed ideals over F_2", checks, t0)


PROPERTY_TESTS = [
    "test_groebner.py::test_basis_idempotent",
    "test_groebner.py::test_monomial_colength_grid",
    "test_localred.py::test_reflexive",
    "test_localred.py::test_transitive_on_subspaces_of_cube",
    "test_localred.py::test_power_check_monotone_after_positive_verdict",
    "test_redsearch.py::test_enumeration_counts_and_distinct_spans",
    "test_polyfield.py::test_frobenius_identity",
    "test_polyfield.py::test_crt_round_trip",
    "test_redsearch.py::test_reductions_unchanged_modulo_nilpotents",
]


def test_criterion_10_property_suites(capsys):
    t0 = time.time()
    out = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", *[str(TESTS / t) for t in PROPERTY_TESTS]],
        capture_output=True, text=True, cwd=TESTS.parent,
    )
    elapsed = time.time() - t0
    summary = out.stdout.strip().splitlines()[-1] if out.stdout.strip() else out.stderr
    checks = [(f"suites green ({summary})", out.returncode == 0), ("runtime <= 120s", elapsed <= 120)]
    report(capsys, 10, "property suites", checks, t0)
