"""Worked examples: rings, ideals and the facts checked about them.

Each target returns a JSON-ready dict with a list of claims, each carrying
the expected value, the observed value and whether they agree.
"""

from __future__ import annotations

import random
from typing import Callable

from .bound import admits_principal, capacity, index_set_size, min_generators
from .groebner import (
    IdealHandle,
    RingSpec,
    ideal_contains,
    ideal_product,
    is_locally_m_primary,
    local_dimension,
)
from .localred import check_reduction, is_integral_over, multiplicity
from .onedim import (
    build_model,
    construct_elements,
    survives,
    verify_converse,
    verify_counterexample,
)
from .polyfield import PolyRing, monic_irreducibles
from .redsearch import (
    candidate_ideal,
    construct_counterexample,
    enumerate_candidates,
    find_r_generated_reduction,
    gaussian_binomial,
    minimal_generator_count,
)

__all__ = ["TARGETS", "run_target", "example_ideal", "closure_ideal", "LINEAR_FORMS"]

EX56 = ("x^2*y+x*y^2", "x*y^5+x*y^4+x*y^3+x^3", "y^8+x*y^3+x^3+x*y^2")
EX56_EXTRA = "x^3+x*y^2"
THREE_LINES = "x^2*y+x*y^2"
FOUR_PLANES = "x^3*y+x*y^3+x^2*y*z+x*y^2*z"
LINEAR_FORMS = ("x", "y", "z", "x+y", "x+z", "y+z", "x+y+z")


class _Claims:
    def __init__(self):
        self.items = []

    def add(self, claim: str, expected, observed):
        self.items.append({"claim": claim, "expected": expected, "observed": observed,
                           "ok": expected == observed})

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.items)


def example_ideal() -> IdealHandle:
    ring = RingSpec(2, ("x", "y"), equidimensional=True)
    return ring.ideal(*EX56)


def closure_ideal() -> IdealHandle:
    I = example_ideal()
    return I.ring.ideal(*I.gens, EX56_EXTRA)


def _listed_primes_check(ring: RingSpec, primes, cfg) -> bool:
    """Each listed ideal of R is one-dimensional and a power of their product is 0 in R.

    Primality itself is not checked.
    """
    dim = local_dimension(ring.zero_ideal(), cfg["cap_colength"], cfg["window"])
    handles = [ring.ideal(*P) for P in primes]
    if any(local_dimension(P, cfg["cap_colength"], cfg["window"]) != dim for P in handles):
        return False
    prod = handles[0]
    for P in handles[1:]:
        prod = ideal_product(prod, P)
    zero = ring.zero_ideal()
    power = prod
    for _ in range(3):
        if all(ideal_contains(zero, g) for g in power.gens):
            return True
        power = ideal_product(power, prod)
    return False


def _every_form_in_some_prime(ring: RingSpec, primes) -> bool:
    handles = [ring.ideal(*P) for P in primes]
    return all(any(ideal_contains(P, ring(f)) for P in handles) for f in LINEAR_FORMS)


def ex42(cfg) -> dict:
    ring = RingSpec(2, ("x", "y"), (THREE_LINES,), equidimensional=True)
    m = ring.maximal
    c = _Claims()
    mult = multiplicity(m, cfg["cap_s"], cap_colength=cfg["cap_colength"], window=cfg["window"])
    c.add("multiplicity of m", 3, mult.e)
    c.add("(x), (y), (x+y) are one-dimensional with nilpotent product", True,
          _listed_primes_check(ring, [["x"], ["y"], ["x+y"]], cfg))
    rep = _search(m, 1, cfg, exhaustive=True)
    c.add("principal candidates examined", 3, rep.examined)
    c.add("principal reductions of m", [], [r.to_json() for r, _ in rep.reductions])
    kinds = sorted({v.certificate.kind for _, v in rep.results if v.is_negative})
    c.add("certificates used", ["DimensionMismatch"], kinds)
    c.add("three minimal primes exceed |k| = 2", False, admits_principal(2, 3))
    return {"claims": c.items, "ok": c.ok, "multiplicity": mult.to_json(), "search": rep.to_json()}


def ex44(cfg) -> dict:
    ring = RingSpec(2, ("x", "y", "z"), ("z^2+x*y", FOUR_PLANES), equidimensional=True)
    primes = [["x", "z"], ["y", "z"], ["x+z", "y+z"], ["x+y+z"]]
    c = _Claims()
    c.add("listed primes are one-dimensional with nilpotent product", True, _listed_primes_check(ring, primes, cfg))
    c.add("every linear form lies in a listed prime", True, _every_form_in_some_prime(ring, primes))
    rep = _search(ring.maximal, 1, cfg, exhaustive=True)
    c.add("principal candidates examined", 7, rep.examined)
    c.add("principal reductions of m", [], [r.to_json() for r, _ in rep.reductions])
    c.add("inconclusive candidates", 0, len(rep.inconclusive))
    c.add("generators needed for four maximals over F_2", 2, min_generators(2, 4))
    return {"claims": c.items, "ok": c.ok, "search": rep.to_json()}


def ex45(cfg) -> dict:
    ring = RingSpec(2, ("x", "y", "z"), ("z^2+x*y", THREE_LINES), equidimensional=True)
    primes = [["x", "z"], ["y", "z"], ["x+z", "y+z"]]
    c = _Claims()
    c.add("listed primes are one-dimensional with nilpotent product", True, _listed_primes_check(ring, primes, cfg))
    m = ring.maximal
    rep = _search(m, 1, cfg, exhaustive=True)
    found = [str(candidate_ideal(m, cand).gens[0]) for cand, _ in rep.reductions]
    c.add("principal candidates examined", 7, rep.examined)
    c.add("principal reductions of m", ["x + y + z"], found)
    c.add("inconclusive candidates", 0, len(rep.inconclusive))
    J2 = ring.ideal("x", "y")
    v = check_reduction(J2, m, cfg["cap_s"], cap_colength=cfg["cap_colength"], window=cfg["window"])
    c.add("(x, y) is a reduction of m", True, v.is_reduction)
    rep2 = _search(J2, 1, cfg, exhaustive=True)
    c.add("principal reductions of (x, y)", [], [r.to_json() for r, _ in rep2.reductions])
    c.add("inconclusive candidates inside (x, y)", 0, len(rep2.inconclusive))
    return {"claims": c.items, "ok": c.ok, "search_m": rep.to_json(), "check_J2": v.to_json(),
            "search_J2": rep2.to_json()}


def ex51(cfg) -> dict:
    ring = RingSpec(2, ("x", "y", "z"), (FOUR_PLANES,), equidimensional=True)
    m = ring.maximal
    c = _Claims()
    c.add("dimension of the ring", 2, local_dimension(ring.zero_ideal(), cfg["cap_colength"], cfg["window"]))
    dims = []
    for cand in enumerate_candidates(3, 2, 2):
        dims.append(local_dimension(candidate_ideal(m, cand), cfg["cap_colength"], cfg["window"]))
    c.add("dimensions of R/(two linear forms)", [1] * 7, dims)
    rep = _search(m, 2, cfg, exhaustive=True)
    c.add("candidates examined", 7 + 7, rep.examined)
    c.add("2-generated reductions of m", [], [r.to_json() for r, _ in rep.reductions])
    c.add("inconclusive candidates", 0, len(rep.inconclusive))
    return {"claims": c.items, "ok": c.ok, "search": rep.to_json()}


def ex56(cfg) -> dict:
    I = example_ideal()
    ring = I.ring
    c = _Claims()
    c.add("minimal number of generators", 3, minimal_generator_count(I, cfg["cap_colength"]))
    c.add("m-primary", True, is_locally_m_primary(I))
    rep = _search(I, 2, cfg, exhaustive=True)
    c.add("candidates examined", gaussian_binomial(3, 1, 2) + gaussian_binomial(3, 2, 2), rep.examined)
    c.add("2-generated reductions", [], [r.to_json() for r, _ in rep.reductions])
    c.add("inconclusive candidates", 0, len(rep.inconclusive))
    f = ring(EX56_EXTRA)
    v = is_integral_over(f, I, cfg["cap_s"], cap_colength=cfg["cap_colength"], window=cfg["window"])
    c.add("x^3 + x*y^2 integral over I", True, v.is_reduction)
    c.add("x^3 + x*y^2 in I", False, ideal_contains(I, f))
    return {"claims": c.items, "ok": c.ok, "search": rep.to_json(), "integral": v.to_json()}


def ex58(cfg) -> dict:
    Ib = closure_ideal()
    c = _Claims()
    mu = minimal_generator_count(Ib, cfg["cap_colength"])
    c.add("minimal number of generators", 4, mu)
    c.add("m-primary", True, is_locally_m_primary(Ib))
    rep = _search(Ib, 2, cfg, exhaustive=True)
    c.add("candidates examined", gaussian_binomial(mu, 1, 2) + gaussian_binomial(mu, 2, 2), rep.examined)
    c.add("2-generated reductions", [], [r.to_json() for r, _ in rep.reductions])
    c.add("inconclusive candidates", 0, len(rep.inconclusive))
    return {"claims": c.items, "ok": c.ok, "search": rep.to_json()}


def _random_unit_spanning(model, rng: random.Random):
    ring = model.ring
    while True:
        xs = []
        for _ in range(2):
            f = ring.zero()
            for k in range(4):
                a = rng.randrange(model.p)
                if a:
                    f = f + ring.monomial((k,), a)
            xs.append(f)
        if survives(model, xs) is None:
            return xs


def thm31(cfg) -> dict:
    c = _Claims()
    demos = []
    for p, n, t in ((2, 1, 3), (2, 2, 7), (3, 1, 4)):
        uni = PolyRing(p, ("y",))
        maximals = [f for _, f in zip(range(t), monic_irreducibles(uni))]
        model = build_model(p, maximals)
        x = construct_elements(model, n)
        rep = verify_counterexample(model, x, n)
        expected = sum(gaussian_binomial(n + 1, k, p) for k in range(1, n + 1))
        c.add(f"every span survives (p={p}, n={n}, t={t})", expected, len(rep.covers))
        demos.append({"p": p, "n": n, "t": t, "elements": x.to_json(), "report": rep.to_json()})
    uni = PolyRing(2, ("y",))
    model = build_model(2, [uni("y"), uni("y+1")])
    rng = random.Random(cfg.get("seed") or 0)
    hits = 0
    for _ in range(50):
        xs = _random_unit_spanning(model, rng)
        verify_converse(model, xs, 1)
        hits += 1
    c.add("converse with t = 2 on random unit-spanning pairs", 50, hits)
    c.add("index set size equals capacity + 1", index_set_size(2, 2), capacity(2, 2) + 1)
    return {"claims": c.items, "ok": c.ok, "demos": demos}


def thm37(cfg) -> dict:
    c = _Claims()
    res = construct_counterexample(2, 3, seed=cfg.get("seed"), cap_s=cfg["cap_s"], jobs=cfg["jobs"])
    c.add("generators", 3, len(res.ideal.gens))
    c.add("2-generated reductions", [], [r.to_json() for r, _ in res.report.reductions])
    c.add("inconclusive candidates", 0, len(res.report.inconclusive))
    return {"claims": c.items, "ok": c.ok, "result": res.to_json()}


def _search(I, r, cfg, exhaustive=False):
    return find_r_generated_reduction(I, r, cfg["cap_s"], exhaustive=exhaustive, jobs=cfg["jobs"],
                                      cap_colength=cfg["cap_colength"], window=cfg["window"])


TARGETS: dict = {
    "4.2": ex42,
    "4.4": ex44,
    "4.5": ex45,
    "5.1": ex51,
    "5.6": ex56,
    "5.8": ex58,
    "thm31": thm31,
    "thm37": thm37,
}


def run_target(name: str, cap_s: int = 12, cap_colength: int = 64, window: int = 3, jobs: int = 1,
               seed=None) -> dict:
    cfg = {"cap_s": cap_s, "cap_colength": cap_colength, "window": window, "jobs": jobs, "seed": seed}
    fn: Callable = TARGETS[name]
    out = {"target": name}
    out.update(fn(cfg))
    return out
