"""Reduction checks, Hilbert-Samuel multiplicities and integral dependence.

Everything happens in the local ring at the origin.  For m-primary ideals
the powers ``I^s`` are carried as truncated local bases, so a single step of
the power chain costs one small standard-basis computation regardless of how
many generators ``I^s`` would have as a raw product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import CapExceeded, NotPrimary
from .groebner import (
    IdealHandle,
    LocalBasis,
    RingSpec,
    _check_same,
    ideal_power,
    ideal_product,
    ideal_sum,
    local_dimension,
    local_kind,
    locally_contains,
    monomials_of_degree,
)
from .polyfield import Polynomial

__all__ = [
    "Certificate",
    "ReductionVerdict",
    "MultiplicityReport",
    "PowerChain",
    "check_reduction",
    "multiplicity",
    "is_integral_over",
    "power_check",
]

WITNESS_MISSING = "certified-reduction-witness-missing"


@dataclass(frozen=True)
class Certificate:
    """Why J is not a reduction of I."""

    kind: str  # NotContained | DimensionMismatch | MultiplicityMismatch | NotPrimaryMismatch
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind == "DimensionMismatch" and not self.data["dim_J"] > self.data["dim_I"]:
            raise ValueError("dimension certificate needs dim_J > dim_I")
        if self.kind == "MultiplicityMismatch" and not self.data["e_J"] > self.data["e_I"]:
            raise ValueError("multiplicity certificate needs e_J > e_I")

    def to_json(self) -> dict:
        data = {k: (_json_num(v)) for k, v in self.data.items()}
        return {"kind": self.kind, "data": data}


def _json_num(v):
    if isinstance(v, float) and math.isinf(v):
        return "-inf" if v < 0 else "inf"
    return v


@dataclass(frozen=True)
class ReductionVerdict:
    kind: str  # reduction | not_reduction | inconclusive
    s: Optional[int] = None
    certificate: Optional[Certificate] = None
    cap: Optional[int] = None
    flag: Optional[str] = None

    @classmethod
    def reduction(cls, s: int) -> "ReductionVerdict":
        return cls("reduction", s=s)

    @classmethod
    def not_reduction(cls, kind: str, **data) -> "ReductionVerdict":
        return cls("not_reduction", certificate=Certificate(kind, data))

    @classmethod
    def inconclusive(cls, cap: int, flag: Optional[str] = None) -> "ReductionVerdict":
        return cls("inconclusive", cap=cap, flag=flag)

    @property
    def is_reduction(self) -> bool:
        return self.kind == "reduction"

    @property
    def is_negative(self) -> bool:
        return self.kind == "not_reduction"

    def to_json(self) -> dict:
        out = {"verdict": self.kind}
        if self.s is not None:
            out["s"] = self.s
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.cap is not None:
            out["cap"] = self.cap
        if self.flag is not None:
            out["flag"] = self.flag
        return out

    def __str__(self):
        if self.kind == "reduction":
            return f"Reduction(s={self.s})"
        if self.kind == "not_reduction":
            args = ", ".join(f"{k}={_json_num(v)}" for k, v in self.certificate.data.items())
            return f"NotReduction({self.certificate.kind}{'(' + args + ')' if args else ''})"
        return f"Inconclusive(cap={self.cap}{', ' + self.flag if self.flag else ''})"


@dataclass(frozen=True)
class MultiplicityReport:
    e: int
    d: int
    colengths: tuple

    def to_json(self) -> dict:
        return {"e": self.e, "d": self.d, "colengths": list(self.colengths)}


# ---------------------------------------------------------------------------
# power chains of m-primary ideals


def _stable_basis(ring: RingSpec, gens, cap: int) -> LocalBasis:
    T = 8
    while True:
        lb = LocalBasis(ring, gens, T)
        if lb.stable_index is not None:
            return lb
        if T > cap:
            raise CapExceeded(f"colength did not stabilize below N = {cap}", cap)
        T = min(2 * T, cap + 1)


class PowerChain:
    """Local presentations of I, I^2, I^3, ... for a locally m-primary I.

    ``level(s)`` is a truncated local basis of ``I^s``; its stable index
    ``N_s`` is the least N with ``m^N`` inside ``I^s`` locally.  Truncations
    are chosen with ``T_s >= N_s + N_1``, which bounds ``N_{s+1}``, so
    products of the stored bases with the generators of I are exact enough
    to present the next power and to form ``J I^s + m I^(s+1)``.
    """

    def __init__(self, I: IdealHandle, cap_colength: int = 64):
        self.ideal = I
        self.ring = I.ring
        self.cap_colength = cap_colength
        first = _stable_basis(I.ring, I.gens, cap_colength)
        self.n1 = first.stable_index
        if self.n1 == 0:
            raise NotPrimary(f"{I} is the unit ideal locally")
        self._levels = [None, LocalBasis(I.ring, I.gens, 2 * self.n1)]
        self._bounds = [0, self.n1]
        self._basis_cache = [None, None]

    def index(self, s: int) -> int:
        return self.level(s).stable_index if s else 0

    def colength(self, s: int) -> int:
        if s == 0:
            return 0
        lb = self.level(s)
        return lb.colength(lb.stable_index)

    def basis(self, s: int) -> list:
        self.level(s)
        if self._basis_cache[s] is None:
            self._basis_cache[s] = self._levels[s].basis()
        return self._basis_cache[s]

    def level(self, s: int) -> LocalBasis:
        pr = self.ring.poly_ring
        while len(self._levels) <= s:
            k = len(self._levels) - 1
            prev = self._levels[k]
            bound = prev.stable_index + self.n1
            gens = []
            for g in self.basis(k):
                for f in self.ideal.gens:
                    h = (g * f).truncate(bound)
                    if h:
                        gens.append(h)
            gens.extend(monomials_of_degree(pr, bound))
            lb = LocalBasis(self.ring, gens, bound + self.n1)
            self._levels.append(lb)
            self._basis_cache.append(None)
            self._bounds.append(bound)
        return self._levels[s]


def _nakayama_step(chain: PowerChain, J: IdealHandle, s: int) -> bool:
    """I^(s+1) == J I^s locally, via I^(s+1) == J I^s + m I^(s+1)."""
    pr = chain.ring.poly_ring
    N = chain.index(s + 1)
    K = N + 1
    gens = []
    lower = chain.basis(s) if s else [pr.one()]
    for g in lower:
        for f in J.gens:
            h = (g * f).truncate(K)
            if h:
                gens.append(h)
    for g in chain.basis(s + 1):
        for v in pr.gens:
            h = (g * v).truncate(K)
            if h:
                gens.append(h)
    gens.extend(monomials_of_degree(pr, K))
    lb = LocalBasis(chain.ring, gens, K + 1)
    return lb.colength(K) == chain.colength(s + 1)


def power_check(J: IdealHandle, I: IdealHandle, s: int, chain: PowerChain | None = None) -> bool:
    """Is I^(s+1) contained in J I^s after localizing?  (J inside I assumed.)"""
    if chain is not None:
        return _nakayama_step(chain, J, s)
    return locally_contains(ideal_product(J, ideal_power(I, s)), ideal_power(I, s + 1))


# ---------------------------------------------------------------------------
# multiplicity


_DIM_CACHE: dict = {}


def _ring_dimension(ring: RingSpec, cap: int, window: int):
    key = (ring, cap, window)
    if key not in _DIM_CACHE:
        _DIM_CACHE[key] = local_dimension(ring.zero_ideal(), cap=cap, window=window)
    return _DIM_CACHE[key]


def _differences(seq):
    return [b - a for a, b in zip(seq, seq[1:])]


def multiplicity(I: IdealHandle, cap_s: int = 12, *, cap_colength: int = 64, window: int = 3,
                 chain: PowerChain | None = None) -> MultiplicityReport:
    """Hilbert-Samuel multiplicity of a locally m-primary ideal.

    The colengths ``c_s = ell(R/I^s)`` are sampled for s = 0, 1, ...; with
    ``d = dim R`` the d-th difference of ``c`` is eventually the constant
    ``e(I)``, accepted once it holds over ``window`` consecutive values.
    """
    if local_kind(I) != "primary":
        raise NotPrimary(f"{I} is not primary to the maximal ideal")
    d = _ring_dimension(I.ring, cap_colength, window)
    chain = chain or PowerChain(I, cap_colength)
    c = [0]
    for s in range(1, cap_s + 1):
        c.append(chain.colength(s))
        diff = c
        for _ in range(d):
            diff = _differences(diff)
        tail = diff[-window:]
        if len(diff) >= window and len(set(tail)) == 1:
            return MultiplicityReport(tail[0], d, tuple(c))
    raise CapExceeded(f"multiplicity of {I} not stable for s <= {cap_s}", cap_s)


# ---------------------------------------------------------------------------
# reduction checks


def _contains_for_kind(I: IdealHandle, J: IdealHandle, kind_I: str, cap: int) -> bool:
    if kind_I == "unit":
        return True
    if kind_I == "primary":
        lb = _stable_basis(I.ring, I.gens, cap)
        return all(lb.contains(g) for g in J.gens)
    return locally_contains(I, J)


def _dimension_or_none(A: IdealHandle, cap: int, window: int):
    try:
        return local_dimension(A, cap=cap, window=window)
    except CapExceeded:
        return None


def check_reduction(J: IdealHandle, I: IdealHandle, cap_s: int = 12, *, cap_colength: int = 64,
                    window: int = 3) -> ReductionVerdict:
    """Decide whether J is a reduction of I in the local ring.

    Positive answers come from an explicit power identity
    ``I^(s+1) = J I^s``; negative answers always carry a certificate.
    """
    _check_same(J, I)
    kind_I = local_kind(I)
    if not _contains_for_kind(I, J, kind_I, cap_colength):
        return ReductionVerdict.not_reduction("NotContained")

    if kind_I == "primary":
        kind_J = local_kind(J)
        if kind_J != "primary":
            dim_J = _dimension_or_none(J, cap_colength, window)
            if dim_J is None:
                return ReductionVerdict.not_reduction("NotPrimaryMismatch")
            return ReductionVerdict.not_reduction("DimensionMismatch", dim_J=dim_J, dim_I=0)
        chain = PowerChain(I, cap_colength)
        equal_e = False
        if I.ring.equidimensional:
            try:
                e_I = multiplicity(I, cap_s, cap_colength=cap_colength, window=window, chain=chain).e
                e_J = multiplicity(J, cap_s, cap_colength=cap_colength, window=window).e
            except CapExceeded:
                e_I = e_J = None  # too few powers to compare; fall back to the power check
            if e_I is not None and e_J > e_I:
                return ReductionVerdict.not_reduction("MultiplicityMismatch", e_J=e_J, e_I=e_I)
            equal_e = e_I is not None and e_J == e_I
        for s in range(cap_s + 1):
            if power_check(J, I, s, chain):
                return ReductionVerdict.reduction(s)
        if equal_e:
            for s in range(cap_s + 1, 2 * cap_s + 1):
                if power_check(J, I, s, chain):
                    return ReductionVerdict.reduction(s)
            return ReductionVerdict.inconclusive(2 * cap_s, WITNESS_MISSING)
        return ReductionVerdict.inconclusive(cap_s)

    for s in range(cap_s + 1):
        if power_check(J, I, s):
            return ReductionVerdict.reduction(s)
    dim_J = _dimension_or_none(J, cap_colength, window)
    dim_I = _dimension_or_none(I, cap_colength, window)
    if dim_J is not None and dim_I is not None and dim_J > dim_I:
        return ReductionVerdict.not_reduction("DimensionMismatch", dim_J=dim_J, dim_I=dim_I)
    return ReductionVerdict.inconclusive(cap_s)


def is_integral_over(f: Polynomial, I: IdealHandle, cap_s: int = 12, **config) -> ReductionVerdict:
    """f lies in the integral closure of I iff I is a reduction of I + (f)."""
    return check_reduction(I, ideal_sum(I, IdealHandle(I.ring, (f,))), cap_s, **config)
