"""A semilocal principal ideal domain with finitely many chosen maximals.

The ring is modelled by ``F_p[y]`` together with t monic irreducibles
``m_1, ..., m_t``; its elements are represented by polynomials, and every
question asked here (membership in some ``(m_i)``, whether a list of elements
generates a proper ideal) only depends on residues modulo the ``m_i``.

When t is at least ``1 + p + ... + p^n`` the Chinese remainder theorem
produces n+1 elements such that every span of n constant combinations of
them lies inside one of the maximals.  When t is at most
``(p^(n+1) - p)/(p - 1)`` no such configuration exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bound import capacity, index_set_size
from .errors import (
    ConverseFails,
    CounterexampleFails,
    Duplicate,
    NotEnoughMaximals,
    NotIrreducible,
    RedlabError,
)
from .polyfield import PolyRing, Polynomial, crt_univariate, is_irreducible, poly_divmod

__all__ = [
    "SemilocalModel",
    "IndexedMaximal",
    "ElementVector",
    "build_model",
    "index_set",
    "construct_elements",
    "survives",
    "family_Iiu",
    "verify_counterexample",
    "verify_converse",
]


@dataclass(frozen=True)
class SemilocalModel:
    p: int
    maximals: tuple

    @property
    def ring(self) -> PolyRing:
        return self.maximals[0].ring

    @property
    def t(self) -> int:
        return len(self.maximals)

    @property
    def residues(self) -> range:
        return range(self.p)


@dataclass(frozen=True)
class IndexedMaximal:
    i: int
    u: tuple
    maximal: Polynomial


@dataclass(frozen=True)
class ElementVector:
    x: tuple
    assignment: tuple = ()

    def to_json(self) -> dict:
        return {
            "x": [str(f) for f in self.x],
            "assignment": [{"i": a.i, "u": list(a.u), "maximal": str(a.maximal)} for a in self.assignment],
        }


def build_model(p: int, maximal_polys: Sequence) -> SemilocalModel:
    ring = PolyRing(p, ("y",))
    polys = []
    for k, m in enumerate(maximal_polys):
        f = ring(m) if isinstance(m, str) else m
        if f.ring.p != p or f.ring.nvars != 1:
            raise NotIrreducible(k)
        f = Polynomial(ring, f.terms, _clean=True) if f.ring != ring else f
        if f.lead()[1] != 1 or not is_irreducible(f):
            raise NotIrreducible(k)
        if f in polys:
            raise Duplicate(k)
        polys.append(f)
    if not polys:
        raise NotEnoughMaximals("a model needs at least one maximal ideal")
    return SemilocalModel(p, tuple(polys))


def index_set(p: int, n: int) -> list:
    """Pairs (i, u), i in 1..n+1, u in F_p^n with u_j = 0 for j >= i; lexicographic."""
    out = []
    for i in range(1, n + 2):
        for head in itertools.product(range(p), repeat=i - 1):
            out.append((i, tuple(head) + (0,) * (n - i + 1)))
    return out


def _pattern(i: int, u: tuple, j: int) -> int:
    if i < j:
        return 0
    if i == j:
        return 1
    return u[j - 1]


def _residue(f: Polynomial, m: Polynomial) -> Polynomial:
    return poly_divmod(f, m)[1]


def construct_elements(model: SemilocalModel, n: int) -> ElementVector:
    """x_1..x_(n+1) with x_j = 0, 1 or u_j modulo the maximal assigned to (i, u).

    Maximals beyond the index set get residues (1, 0, ..., 0) so that the
    elements still generate the unit ideal.
    """
    idx = index_set(model.p, n)
    if model.t < len(idx):
        raise NotEnoughMaximals(f"need {len(idx)} maximals for n = {n}, model has {model.t}")
    ring = model.ring
    assignment = tuple(IndexedMaximal(i, u, m) for (i, u), m in zip(idx, model.maximals))
    extra = model.maximals[len(idx):]
    xs = []
    for j in range(1, n + 2):
        residues = [ring.const(_pattern(a.i, a.u, j)) for a in assignment]
        residues += [ring.const(1 if j == 1 else 0) for _ in extra]
        xs.append(crt_univariate(list(model.maximals), residues))
    for a in assignment:
        for j, xj in enumerate(xs, start=1):
            if _residue(xj - _pattern(a.i, a.u, j), a.maximal):
                raise RedlabError(f"residue of x_{j} modulo {a.maximal} is wrong")
    return ElementVector(tuple(xs), assignment)


def survives(model: SemilocalModel, gens: Sequence[Polynomial]) -> Optional[Polynomial]:
    """First maximal containing every generator, or None if they span the unit ideal."""
    for m in model.maximals:
        if all(not _residue(g, m) for g in gens):
            return m
    return None


def family_Iiu(model: SemilocalModel, x: ElementVector, n: int) -> list:
    """The n-element lists (x_j - u_j x_i for j < i) + (x_(i+1), ..., x_(n+1))."""
    xs = x.x
    if len(xs) != n + 1:
        raise ValueError(f"expected {n + 1} elements, got {len(xs)}")
    out = []
    for i, u in index_set(model.p, n):
        gens = [xs[j - 1] - xs[i - 1] * u[j - 1] for j in range(1, i)]
        gens += list(xs[i:])
        out.append(((i, u), gens))
    return out


@dataclass
class CoverReport:
    """Each candidate span of the elements with the maximal that contains it."""

    covers: list = field(default_factory=list)
    per_dimension: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "examined": len(self.covers),
            "per_dimension": {str(k): v for k, v in sorted(self.per_dimension.items())},
            "covers": [{"matrix": c.to_json(), "maximal": str(m)} for c, m in self.covers],
        }


def verify_counterexample(model: SemilocalModel, x: ElementVector, n: int) -> CoverReport:
    """Check that every span of at most n constant combinations survives."""
    from .redsearch import enumerate_candidates

    if model.t < index_set_size(model.p, n):
        raise NotEnoughMaximals(f"t = {model.t} < {index_set_size(model.p, n)}")
    xs = x.x
    report = CoverReport()
    ring = model.ring
    for k in range(1, n + 1):
        for cand in enumerate_candidates(n + 1, k, model.p):
            gens = []
            for row in cand.rows:
                f = ring.zero()
                for c, xj in zip(row, xs):
                    f = f + xj * c
                gens.append(f)
            m = survives(model, gens)
            if m is None:
                raise CounterexampleFails(cand.to_json())
            report.covers.append((cand, m))
            report.per_dimension[k] = report.per_dimension.get(k, 0) + 1
    return report


@dataclass
class ConverseReport:
    non_surviving: list
    containing: dict

    def to_json(self) -> dict:
        return {
            "non_surviving": [{"i": i, "u": list(u)} for i, u in self.non_surviving],
            "separated": True,
        }


def verify_converse(model: SemilocalModel, x: Sequence[Polynomial], n: int) -> ConverseReport:
    """With few maximals, some I_(i,u) must generate the unit ideal.

    Also checks that two distinct members never share a maximal ideal.
    """
    xs = tuple(x.x if isinstance(x, ElementVector) else x)
    if model.t > capacity(model.p, n):
        raise ValueError(f"t = {model.t} exceeds capacity {capacity(model.p, n)}")
    if survives(model, xs) is not None:
        raise ValueError("the elements must generate the unit ideal")
    family = family_Iiu(model, ElementVector(xs), n)
    containing = {}
    for key, gens in family:
        containing[key] = [m for m in model.maximals if all(not _residue(g, m) for g in gens)]
    for (k1, c1), (k2, c2) in itertools.combinations(containing.items(), 2):
        if set(c1) & set(c2):
            raise ConverseFails(f"members {k1} and {k2} share a maximal ideal")
    non_surviving = [k for k, c in containing.items() if not c]
    if not non_surviving:
        raise ConverseFails("every member of the family survives")
    return ConverseReport(non_surviving, containing)
