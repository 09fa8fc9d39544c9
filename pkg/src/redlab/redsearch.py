"""Exhaustive search for reductions spanned by constant combinations.

Over a finite residue field a reduction generated by r elements can be
assumed, up to the choices that do not matter, to be spanned by F_q-linear
combinations of a minimal generating set.  The search space is therefore the
set of subspaces of F_q^g of dimension at most r, each visited once through
its reduced row echelon form.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .bound import index_set_size
from .errors import BadRank, NotMinimalGenerators, NotPrimary, RetriesExhausted
from .groebner import IdealHandle, RingSpec, ideal_product, local_colength
from .localred import ReductionVerdict, check_reduction
from .polyfield import PolyRing, Polynomial, is_prime, monic_irreducibles

__all__ = [
    "CandidateMatrix",
    "SearchReport",
    "gaussian_binomial",
    "minimal_generator_count",
    "enumerate_candidates",
    "candidate_ideal",
    "find_r_generated_reduction",
    "construct_counterexample",
    "CounterexampleResult",
]


@dataclass(frozen=True)
class CandidateMatrix:
    """A full-rank r x g matrix over F_q in reduced row echelon form."""

    q: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise BadRank("a candidate needs at least one row")
        last = -1
        for r in rows:
            piv = next((j for j, v in enumerate(r) if v), None)
            if piv is None or piv <= last or r[piv] != 1:
                raise ValueError(f"not in reduced row echelon form: {rows}")
            if any(other[piv] for other in rows if other is not r):
                raise ValueError(f"not in reduced row echelon form: {rows}")
            last = piv

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def g(self) -> int:
        return len(self.rows[0])

    @property
    def pivots(self) -> tuple:
        return tuple(next(j for j, v in enumerate(r) if v) for r in self.rows)

    def to_json(self) -> list:
        return [list(r) for r in self.rows]


def gaussian_binomial(g: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^g."""
    if r < 0 or r > g:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (g - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_candidates(g: int, r: int, q: int) -> Iterator[CandidateMatrix]:
    """Every r-dimensional subspace of F_q^g, once, as an RREF matrix.

    Pivot sets are visited in lexicographic order; for each, the free entries
    (right of the pivot and outside pivot columns) run through F_q^k in
    lexicographic order.
    """
    if r <= 0 or r > g:
        raise BadRank(f"rank {r} is impossible for {g} columns")
    for pivots in itertools.combinations(range(g), r):
        pivset = set(pivots)
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, g) if j not in pivset]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * g for _ in range(r)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield CandidateMatrix(q, tuple(map(tuple, rows)))


def minimal_generator_count(I: IdealHandle, cap: int = 64) -> int:
    """mu(I) = dim_k I/mI, as ell(R/mI) - ell(R/I)."""
    mI = ideal_product(I.ring.maximal, I)
    return local_colength(mI, cap) - local_colength(I, cap)


def candidate_ideal(I: IdealHandle, cand: CandidateMatrix) -> IdealHandle:
    gens = []
    for row in cand.rows:
        f = I.ring.poly_ring.zero()
        for c, g in zip(row, I.gens):
            if c:
                f = f + g * c
        gens.append(f)
    return IdealHandle(I.ring, gens)


@dataclass
class SearchReport:
    """Outcome of a sweep over candidate subspaces.

    ``results`` lists every examined candidate with its verdict, in canonical
    enumeration order.
    """

    found: Optional[tuple] = None
    examined: int = 0
    not_reduction: int = 0
    inconclusive: list = field(default_factory=list)
    results: list = field(default_factory=list)
    per_dimension: dict = field(default_factory=dict)

    @property
    def reductions(self) -> list:
        return [(c, v) for c, v in self.results if v.is_reduction]

    @property
    def conclusive_none(self) -> bool:
        """True when no candidate is a reduction and every negative is certified."""
        return self.found is None and not self.inconclusive

    def to_json(self) -> dict:
        return {
            "found": None if self.found is None else {
                "matrix": self.found[0].to_json(), "verdict": self.found[1].to_json()},
            "examined": self.examined,
            "not_reduction": self.not_reduction,
            "inconclusive": [c.to_json() for c in self.inconclusive],
            "per_dimension": {str(k): v for k, v in sorted(self.per_dimension.items())},
            "candidates": [{"matrix": c.to_json(), "verdict": v.to_json()} for c, v in self.results],
        }


def _check_one(args) -> ReductionVerdict:
    I, cand, cap_s, config = args
    return check_reduction(candidate_ideal(I, cand), I, cap_s, **config)


def find_r_generated_reduction(I: IdealHandle, r: int, cap_s: int = 12, *, exhaustive: bool = False,
                               jobs: int = 1, cap_colength: int = 64, window: int = 3,
                               check_minimal: bool = True) -> SearchReport:
    """Search the subspaces of dimension 1..r of the span of I's generators.

    Stops at the first reduction in canonical order unless ``exhaustive``.
    With ``jobs > 1`` candidates are checked by a process pool in ordered
    batches, so the report is identical to a sequential run.
    """
    g = len(I.gens)
    if check_minimal:
        mu = minimal_generator_count(I, cap_colength)
        if mu != g:
            raise NotMinimalGenerators(f"{g} generators given but mu(I) = {mu}")
    q = I.ring.char
    config = {"cap_colength": cap_colength, "window": window}
    cands = [c for k in range(1, min(r, g) + 1) for c in enumerate_candidates(g, k, q)]
    report = SearchReport()

    def record(cand, verdict) -> bool:
        report.examined += 1
        report.per_dimension[cand.r] = report.per_dimension.get(cand.r, 0) + 1
        report.results.append((cand, verdict))
        if verdict.is_negative:
            report.not_reduction += 1
        elif verdict.is_reduction:
            if report.found is None:
                report.found = (cand, verdict)
            return not exhaustive
        else:
            report.inconclusive.append(cand)
        return False

    if jobs <= 1:
        for cand in cands:
            if record(cand, _check_one((I, cand, cap_s, config))):
                break
        return report

    batch = 2 * jobs
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for start in range(0, len(cands), batch):
            chunk = cands[start:start + batch]
            verdicts = list(pool.map(_check_one, [(I, c, cap_s, config) for c in chunk]))
            stop = False
            for cand, verdict in zip(chunk, verdicts):
                if record(cand, verdict):
                    stop = True
                    break
            if stop:
                break
    return report


# ---------------------------------------------------------------------------
# ideals with no (n-1)-generated reduction


@dataclass
class CounterexampleResult:
    ideal: IdealHandle
    report: SearchReport
    maximals: list
    attempt: int

    def to_json(self) -> dict:
        return {
            "generators": [str(f) for f in self.ideal.gens],
            "maximals": [str(m) for m in self.maximals],
            "attempt": self.attempt,
            "report": self.report.to_json(),
        }


def _homogenize(phi: Polynomial, D: int, pr: PolyRing) -> Polynomial:
    """x^D * phi(y/x) for a univariate phi in y of degree <= D."""
    return Polynomial(pr, {(D - e[0], e[0]): c for e, c in phi.terms.items()}, _clean=True)


def construct_counterexample(p: int, n: int, *, retries: int = 8, seed: Optional[int] = None,
                             cap_s: int = 12, jobs: int = 1) -> CounterexampleResult:
    """An n-generated m-primary ideal of F_p[x,y] with no (n-1)-generated reduction.

    Take t = 1 + q + ... + q^(n-1) monic irreducibles m_i(y), build elements
    phi_1..phi_n of F_p[y] with the residue pattern that forces every
    (n-1)-dimensional span to sit inside some (m_i), and homogenize.  Each
    homogenized span then lies in a height-one prime (x^deg m_i * m_i(y/x)),
    so it cannot be a reduction of the m-primary ideal they generate.  The
    result is verified by exhaustive search, never trusted.
    """
    from .onedim import build_model, construct_elements

    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 2:
        raise ValueError("n must be at least 2")
    if p ** n > 1 << 10:
        raise ValueError("p^n exceeds the desk-scale limit 2^10")
    t = index_set_size(p, n - 1)
    uni = PolyRing(p, ("y",))
    pr = PolyRing(p, ("x", "y"))
    ring = RingSpec(p, ("x", "y"), equidimensional=True)
    pool_size = t + retries
    irr = list(itertools.islice(monic_irreducibles(uni), pool_size))
    if seed is not None:
        import random

        random.Random(seed).shuffle(irr)
    for attempt in range(retries):
        maximals = irr[attempt:attempt + t]
        model = build_model(p, maximals)
        x = construct_elements(model, n - 1).x
        D = max(f.degree() for f in x)
        gens = [_homogenize(f, D, pr) for f in x]
        I = IdealHandle(ring, gens)
        try:
            if minimal_generator_count(I) != n:
                continue
        except NotPrimary:  # the phi share a root: not m-primary
            continue
        report = find_r_generated_reduction(I, n - 1, cap_s, jobs=jobs, check_minimal=False)
        if report.conclusive_none:
            return CounterexampleResult(I, report, maximals, attempt)
    raise RetriesExhausted(f"no verified ideal for p={p}, n={n} within {retries} attempts")
