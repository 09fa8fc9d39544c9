"""Buchberger kernel and ideal calculus in the local ring at the origin.

Two engines share one implementation:

* global bases (degrevlex, lex, block elimination) answer membership,
  equality, intersections, quotients and saturations in the ambient
  polynomial ring;
* truncated local bases use the negative degree reverse lexicographic
  order modulo ``m^T``.  Leading terms are then lowest-degree terms, so the
  count of standard monomials of degree ``k`` is the Hilbert function of the
  tangent cone of ``R_m/A_m`` for every ``k < T``.  One basis therefore
  yields every colength ``ell(R/(A + m^N))`` with ``N <= T``.

Quotient rings ``P/D`` are handled by adding the defining ideal ``D`` to
every computation.  Localization is never represented symbolically.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CapExceeded, NotPrimary, RingMismatch
from .polyfield import MonomialOrder, PolyRing, Polynomial, polys_from_text

__all__ = [
    "RingSpec",
    "IdealHandle",
    "LocalBasis",
    "groebner_basis",
    "normal_form",
    "ideal_contains",
    "ideal_equal",
    "ideal_sum",
    "ideal_product",
    "ideal_power",
    "ideal_intersection",
    "ideal_quotient",
    "saturate_m",
    "saturate_var",
    "locally_contains",
    "local_colength",
    "local_dimension",
    "local_kind",
    "is_locally_m_primary",
    "local_basis",
    "staircase_count",
]

_W = 24
_MASK = (1 << _W) - 1
_TOP = _MASK  # degree offset for the local order


# ---------------------------------------------------------------------------
# monomial packing


class _Packer:
    """Encodes exponent tuples as ints; int order == monomial order.

    Every field of the encoding is a linear function of the exponents (up to
    a constant in the top field for the local order), so adding packed keys
    and subtracting a packed key multiplies and divides monomials.
    """

    def __init__(self, nvars: int, kind: str, block: int = 0):
        self.n = nvars
        self.kind = kind
        self.block = block
        self.top_shift = _W * (nvars - 1)

    @staticmethod
    def _drl_fields(exps):
        d = sum(exps)
        fields = [d]
        acc = d
        for e in reversed(exps[1:]):
            acc -= e
            fields.append(acc)
        return fields

    @staticmethod
    def _drl_exps(fields):
        n = len(fields)
        exps = [0] * n
        exps[0] = fields[-1]
        for k in range(1, n):
            # fields[k-1] - fields[k] is the exponent of variable n-k
            exps[n - k] = fields[k - 1] - fields[k]
        return exps

    def _fields(self, exps):
        if self.kind == "lex":
            return list(exps)
        if self.kind == "drl":
            return self._drl_fields(exps)
        if self.kind == "ds":
            f = self._drl_fields(exps)
            f[0] = _TOP - f[0]
            return f
        # elimination: block of the first `block` variables, then the rest
        return self._drl_fields(exps[: self.block]) + self._drl_fields(exps[self.block:])

    def pack(self, exps) -> int:
        key = 0
        for f in self._fields(exps):
            key = (key << _W) | f
        return key

    def unpack(self, key: int) -> tuple:
        n = self.n
        fields = [(key >> (_W * (n - 1 - i))) & _MASK for i in range(n)]
        if self.kind == "lex":
            return tuple(fields)
        if self.kind == "drl":
            return tuple(self._drl_exps(fields))
        if self.kind == "ds":
            fields[0] = _TOP - fields[0]
            return tuple(self._drl_exps(fields))
        b = self.block
        return tuple(self._drl_exps(fields[:b]) + self._drl_exps(fields[b:]))

    def truncation_limit(self, T: int) -> int:
        """Local order only: keys below the limit have total degree >= T."""
        return (_TOP - T + 1) << self.top_shift


_KIND = {MonomialOrder.DEGREVLEX: "drl", MonomialOrder.LEX: "lex"}


# ---------------------------------------------------------------------------
# the engine


class _Elt:
    __slots__ = ("lkey", "lexp", "tail")

    def __init__(self, lkey, lexp, tail):
        self.lkey = lkey
        self.lexp = lexp
        self.tail = tail  # list of (key, coeff), descending


class _DivisorIndex:
    """Finds a basis element whose leading monomial divides a given one."""

    def __init__(self, elts: Sequence[_Elt], nvars: int):
        self.elts = list(elts)
        self.two = nvars == 2
        if self.two and self.elts:
            # best[a] = (least b, index) over leading monomials x^a' y^b' with a' <= a
            top = max(e.lexp[0] for e in self.elts)
            best = [None] * (top + 1)
            for i, e in enumerate(self.elts):
                a, b = e.lexp
                cur = best[a]
                if cur is None or b < cur[0]:
                    best[a] = (b, i)
            run = None
            for a in range(top + 1):
                if best[a] is not None and (run is None or best[a][0] < run[0]):
                    run = best[a]
                best[a] = run
            self.best = best
            self.top = top

    def find(self, exps):
        if not self.elts:
            return None
        if self.two:
            a, b = exps
            hit = self.best[a if a <= self.top else self.top]
            if hit is not None and hit[0] <= b:
                return self.elts[hit[1]]
            return None
        for e in self.elts:
            for x, y in zip(e.lexp, exps):
                if x > y:
                    break
            else:
                return e
        return None


class _Engine:
    def __init__(self, nvars: int, p: int, kind: str, block: int = 0, trunc: int | None = None):
        if trunc is not None and kind != "ds":
            raise ValueError("truncation requires the local order")
        self.n = nvars
        self.p = p
        self.packer = _Packer(nvars, kind, block)
        self.trunc = trunc
        self.limit = self.packer.truncation_limit(trunc) if trunc is not None else None

    # conversion -------------------------------------------------------------

    def to_terms(self, exps_coeffs: Iterable) -> dict:
        pack = self.packer.pack
        p = self.p
        out = {}
        limit = self.limit
        for e, c in exps_coeffs:
            k = pack(e)
            if limit is not None and k < limit:
                continue
            v = (out.get(k, 0) + c) % p
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return out

    def make_elt(self, terms: dict) -> _Elt:
        keys = sorted(terms, reverse=True)
        lkey = keys[0]
        inv = pow(terms[lkey], -1, self.p)
        p = self.p
        tail = [(k, terms[k] * inv % p) for k in keys[1:]]
        return _Elt(lkey, self.packer.unpack(lkey), tail)

    def elt_terms(self, elt: _Elt):
        unpack = self.packer.unpack
        yield unpack(elt.lkey), 1
        for k, c in elt.tail:
            yield unpack(k), c

    # reduction --------------------------------------------------------------

    def reduce(self, terms: dict, index: _DivisorIndex) -> dict:
        """Full reduction of ``terms`` (consumed) modulo the indexed basis."""
        p = self.p
        unpack = self.packer.unpack
        limit = self.limit
        find = index.find
        heap = [-k for k in terms]
        heapq.heapify(heap)
        out = {}
        pop = heapq.heappop
        push = heapq.heappush
        get = terms.get
        while heap:
            k = -pop(heap)
            c = terms.pop(k, 0)
            if not c:
                continue
            elt = find(unpack(k))
            if elt is None:
                out[k] = c
                continue
            shift = k - elt.lkey
            for bk, bc in elt.tail:
                nk = bk + shift
                if limit is not None and nk < limit:
                    continue
                old = get(nk)
                if old is None:
                    terms[nk] = (-c * bc) % p
                    push(heap, -nk)
                else:
                    terms[nk] = (old - c * bc) % p
        return out

    def spoly(self, a: _Elt, b: _Elt) -> dict:
        lcm = tuple(max(x, y) for x, y in zip(a.lexp, b.lexp))
        lk = self.packer.pack(lcm)
        sa, sb = lk - a.lkey, lk - b.lkey
        p = self.p
        limit = self.limit
        out = {}
        for k, c in a.tail:
            nk = k + sa
            if limit is None or nk >= limit:
                out[nk] = c
        for k, c in b.tail:
            nk = k + sb
            if limit is not None and nk < limit:
                continue
            v = (out.get(nk, 0) - c) % p
            if v:
                out[nk] = v
            else:
                out.pop(nk, None)
        return out

    # Buchberger -------------------------------------------------------------

    def groebner(self, inputs: Sequence[dict]) -> list:
        """Reduced basis (leading coefficients 1), ascending by leading key."""
        elts: list = []
        active: list = []
        pairs: dict = {}
        heap: list = []
        seq = 0
        n = self.n
        pack = self.packer.pack

        def lcm(a, b):
            return tuple(max(x, y) for x, y in zip(a, b))

        def divides(a, b):
            return all(x <= y for x, y in zip(a, b))

        def coprime(a, b):
            return all(x == 0 or y == 0 for x, y in zip(a, b))

        def update(h):
            nonlocal seq, active
            eh = elts[h].lexp
            cand = [(g, lcm(eh, elts[g].lexp)) for g in active]
            kept = []
            for pos, (g1, l1) in enumerate(cand):
                if coprime(eh, elts[g1].lexp):
                    kept.append((g1, l1))
                    continue
                redundant = any(divides(l2, l1) for _, l2 in cand[pos + 1:]) or any(
                    divides(l2, l1) for _, l2 in kept)
                if not redundant:
                    kept.append((g1, l1))
            for (i, j) in list(pairs):
                lij = pairs[(i, j)][1]
                if divides(eh, lij) and lcm(elts[i].lexp, eh) != lij and lcm(elts[j].lexp, eh) != lij:
                    del pairs[(i, j)]
            for g, l in kept:
                if coprime(eh, elts[g].lexp):
                    continue
                key = (sum(l), pack(l))
                pairs[(g, h)] = (key, l)
                seq += 1
                heapq.heappush(heap, (key[0], -key[1] if self.packer.kind == "ds" else key[1], seq, g, h))
            active = [g for g in active if not divides(eh, elts[g].lexp)] + [h]

        def add(terms):
            elt = self.make_elt(terms)
            elts.append(elt)
            update(len(elts) - 1)

        start = sorted((t for t in inputs if t), key=lambda t: self._sel_key(t))
        for t in start:
            r = self.reduce(dict(t), _DivisorIndex([elts[g] for g in active], n))
            if r:
                add(r)
        while heap:
            _, _, _, i, j = heapq.heappop(heap)
            if pairs.pop((i, j), None) is None:
                continue
            s = self.spoly(elts[i], elts[j])
            if not s:
                continue
            r = self.reduce(s, _DivisorIndex([elts[g] for g in active], n))
            if r:
                add(r)
        basis = sorted((elts[g] for g in active), key=lambda e: e.lkey)
        out = []
        for pos, e in enumerate(basis):
            others = _DivisorIndex(basis[:pos] + basis[pos + 1:], n)
            tail = self.reduce(dict(e.tail), others)
            out.append(_Elt(e.lkey, e.lexp, sorted(tail.items(), reverse=True)))
        return out

    def _sel_key(self, terms):
        lk = max(terms)
        e = self.packer.unpack(lk)
        return (sum(e), lk if self.packer.kind != "ds" else -lk)


# ---------------------------------------------------------------------------
# rings and ideals


@dataclass(frozen=True)
class RingSpec:
    """The local ring (F_p[vars]/D) localized at the origin."""

    char: int
    vars: tuple
    defining: tuple = ()
    local_at_origin: bool = True
    equidimensional: bool = False
    poly_ring: PolyRing = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        ring = PolyRing(self.char, self.vars)
        object.__setattr__(self, "poly_ring", ring)
        defining = []
        for f in self.defining:
            if isinstance(f, str):
                defining.extend(polys_from_text(ring, f))
                continue
            if f.ring != ring:
                raise RingMismatch(f"defining polynomial {f} is not in {ring}")
            defining.append(f)
        for f in defining:
            if f.constant_term():
                raise ValueError(f"defining polynomial {f} does not vanish at the origin")
        object.__setattr__(self, "defining", tuple(f for f in defining if f))

    def __call__(self, text: str) -> Polynomial:
        return self.poly_ring(text)

    def ideal(self, *gens) -> "IdealHandle":
        return IdealHandle(self, gens)

    @property
    def maximal(self) -> "IdealHandle":
        return IdealHandle(self, self.poly_ring.gens)

    def zero_ideal(self) -> "IdealHandle":
        return IdealHandle(self, ())

    def unit_ideal(self) -> "IdealHandle":
        return IdealHandle(self, (self.poly_ring.one(),))


class IdealHandle:
    """An ideal of the local ring, given by generators in the ambient ring.

    The reduced degrevlex basis of ``(gens) + D`` is computed once, on first
    use.
    """

    def __init__(self, ring: RingSpec, gens: Iterable = ()):
        self.ring = ring
        out = []
        for g in gens:
            if isinstance(g, str):
                out.extend(polys_from_text(ring.poly_ring, g))
                continue
            if isinstance(g, int):
                g = ring.poly_ring.const(g)
            if g.ring != ring.poly_ring:
                raise RingMismatch(f"generator {g} is not in {ring.poly_ring}")
            out.append(g)
        self.gens = tuple(out)

    @property
    def all_gens(self) -> tuple:
        """Generators together with the defining ideal of the ring."""
        return self.gens + self.ring.defining

    @cached_property
    def gb(self) -> tuple:
        return tuple(groebner_basis(self.gens, self.ring))

    def __repr__(self):
        return f"IdealHandle({', '.join(map(str, self.gens))})"

    def __reduce__(self):
        return (IdealHandle, (self.ring, self.gens))


def _check_same(*ideals: IdealHandle) -> RingSpec:
    ring = ideals[0].ring
    for I in ideals[1:]:
        if I.ring != ring:
            raise RingMismatch(f"ideals live in different rings: {ring} vs {I.ring}")
    return ring


def _engine_for(ring: PolyRing, order) -> _Engine:
    order = MonomialOrder(order)
    return _Engine(ring.nvars, ring.p, _KIND[order])


def _to_polys(engine: _Engine, elts, ring: PolyRing) -> list:
    return [Polynomial(ring, dict(engine.elt_terms(e)), _clean=True) for e in elts]


def groebner_basis(gens: Sequence[Polynomial], ring: RingSpec, order=MonomialOrder.DEGREVLEX) -> list:
    """Reduced Groebner basis of ``gens`` plus the defining ideal of ``ring``."""
    pr = ring.poly_ring
    eng = _engine_for(pr, order)
    inputs = [eng.to_terms(g.terms.items()) for g in tuple(gens) + ring.defining]
    return _to_polys(eng, eng.groebner(inputs), pr)


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order=MonomialOrder.DEGREVLEX) -> Polynomial:
    """Remainder of ``f`` modulo a Groebner basis."""
    pr = f.ring
    eng = _engine_for(pr, order)
    elts = []
    for g in basis:
        t = eng.to_terms(g.terms.items())
        if t:
            elts.append(eng.make_elt(t))
    r = eng.reduce(eng.to_terms(f.terms.items()), _DivisorIndex(elts, pr.nvars))
    unpack = eng.packer.unpack
    return Polynomial(pr, {unpack(k): c for k, c in r.items()}, _clean=True)


def ideal_contains(I: IdealHandle, f: Polynomial) -> bool:
    return not normal_form(f, I.gb)


def ideal_equal(I: IdealHandle, J: IdealHandle) -> bool:
    _check_same(I, J)
    return I.gb == J.gb


def ideal_sum(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    ring = _check_same(I, J)
    return IdealHandle(ring, I.gens + J.gens)


def _products(fs, gs):
    seen = {}
    for f in fs:
        for g in gs:
            h = f * g
            if h:
                seen.setdefault(h, None)
    return list(seen)


def ideal_product(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    ring = _check_same(I, J)
    return IdealHandle(ring, _products(I.gens, J.gens))


def ideal_power(I: IdealHandle, s: int) -> IdealHandle:
    if s < 0:
        raise ValueError("negative power")
    out = I.ring.unit_ideal()
    for _ in range(s):
        out = IdealHandle(I.ring, _products(out.gens, I.gens))
    return out


# -- elimination ------------------------------------------------------------


def _eliminate_first(polys_with_t: Sequence[dict], pr: PolyRing) -> list:
    """Basis of the ideal of ``pr`` obtained by eliminating a leading variable t.

    Inputs are dicts mapping (t, *exps) to coefficients.
    """
    eng = _Engine(pr.nvars + 1, pr.p, "elim", block=1)
    inputs = [eng.to_terms(d.items()) for d in polys_with_t]
    out = []
    for e in eng.groebner(inputs):
        terms = dict(eng.elt_terms(e))
        if all(k[0] == 0 for k in terms):
            out.append(Polynomial(pr, {k[1:]: c for k, c in terms.items()}, _clean=True))
    return out


def _lift(f: Polynomial, t: int = 0) -> dict:
    return {(t,) + e: c for e, c in f.terms.items()}


def ideal_intersection(A: IdealHandle, B: IdealHandle) -> IdealHandle:
    ring = _check_same(A, B)
    pr = ring.poly_ring
    p = pr.p
    polys = []
    for f in A.all_gens:
        polys.append(_lift(f, 1))
    for f in B.all_gens:
        d = _lift(f, 0)
        for e, c in f.terms.items():
            d[(1,) + e] = (-c) % p
        polys.append(d)
    return IdealHandle(ring, _eliminate_first(polys, pr))


def _exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g for g dividing f in the ambient ring."""
    pr = f.ring
    eng = _engine_for(pr, MonomialOrder.DEGREVLEX)
    ge = eng.make_elt(eng.to_terms(g.terms.items()))
    lc_inv = pow(g.lead()[1], -1, pr.p)
    rem = eng.to_terms(f.terms.items())
    quot = {}
    p = pr.p
    while rem:
        k = max(rem)
        c = rem.pop(k) * lc_inv % p
        qe = tuple(a - b for a, b in zip(eng.packer.unpack(k), ge.lexp))
        if any(x < 0 for x in qe):
            raise ArithmeticError(f"{g} does not divide {f}")
        shift = k - ge.lkey
        quot[qe] = c
        for bk, bc in ge.tail:
            nk = bk + shift
            v = (rem.get(nk, 0) - c * bc) % p
            if v:
                rem[nk] = v
            else:
                rem.pop(nk, None)
    return Polynomial(pr, quot, _clean=True)


def _quotient_by(A: IdealHandle, b: Polynomial) -> IdealHandle:
    ring = A.ring
    if not normal_form(b, A.gb):
        return ring.unit_ideal()
    inter = ideal_intersection(A, IdealHandle(ring, (b,)))
    return IdealHandle(ring, [_exact_divide(f, b) for f in inter.gb])


def ideal_quotient(A: IdealHandle, B: IdealHandle) -> IdealHandle:
    """(A : B), the intersection of (A : b) over the generators b of B."""
    ring = _check_same(A, B)
    out = ring.unit_ideal()
    for b in B.gens:
        q = _quotient_by(A, b)
        out = q if _is_unit(out) else ideal_intersection(out, q)
    return IdealHandle(ring, out.gb)


def saturate_var(A: IdealHandle, i: int) -> IdealHandle:
    """(A : x_i^infinity) via the Rabinowitsch trick."""
    ring = A.ring
    pr = ring.poly_ring
    polys = [_lift(f) for f in A.all_gens]
    unit = [0] * (pr.nvars + 1)
    unit[0] = 1
    unit[1 + i] = 1
    polys.append({tuple(unit): 1, (0,) * (pr.nvars + 1): pr.p - 1})
    return IdealHandle(ring, _eliminate_first(polys, pr))


def saturate_m(A: IdealHandle) -> IdealHandle:
    """(A : m^infinity), computed as the intersection of the (A : x_i^infinity)."""
    ring = A.ring
    out = None
    for i in range(ring.poly_ring.nvars):
        s = saturate_var(A, i)
        out = s if out is None else ideal_intersection(out, s)
    return IdealHandle(ring, out.gb)


def _is_unit(A: IdealHandle) -> bool:
    return any(g.constant_term() for g in A.gb) and len(A.gb) == 1


def _escapes_m(A: IdealHandle) -> bool:
    """True iff A is not contained in m, i.e. A is the unit ideal locally."""
    return any(g.constant_term() for g in A.gb)


def local_kind(A: IdealHandle) -> str:
    """'unit', 'primary' (m-primary after localizing) or 'other'."""
    if _escapes_m(A):
        return "unit"
    for i in range(A.ring.poly_ring.nvars):
        if not _escapes_m(saturate_var(A, i)):
            return "other"
    return "primary"


def is_locally_m_primary(A: IdealHandle) -> bool:
    return local_kind(A) == "primary"


def locally_contains(A: IdealHandle, B: IdealHandle) -> bool:
    """B is contained in the localization A R_m; decided by (A : B) escaping m."""
    _check_same(A, B)
    if all(not normal_form(b, A.gb) for b in B.gens):
        return True
    return _escapes_m(ideal_quotient(A, B))


# -- truncated local bases --------------------------------------------------


def staircase_count(lead_exps: Sequence[tuple], nvars: int, T: int) -> list:
    """Standard monomials of each degree < T for a monomial ideal.

    Returns ``H`` with ``H[k]`` the number of monomials of degree ``k`` not
    divisible by any of ``lead_exps``.
    """
    H = [0] * T
    if nvars == 0:
        if T:
            H[0] = 0 if any(True for _ in lead_exps) else 1
        return H
    leads = list(lead_exps)

    def rec(prefix, budget):
        # prefix fixes all but the last variable; budget = T - deg(prefix)
        k = len(prefix)
        if k == nvars - 1:
            cap = budget
            for e in leads:
                if all(e[i] <= prefix[i] for i in range(k)):
                    cap = min(cap, e[-1])
            d0 = sum(prefix)
            for c in range(cap):
                H[d0 + c] += 1
            return
        for a in range(budget):
            rec(prefix + (a,), budget - a)

    rec((), T)
    return H


class LocalBasis:
    """Truncated local basis of ``A + m^T`` with its Hilbert function."""

    def __init__(self, ring: RingSpec, gens: Sequence[Polynomial], T: int):
        pr = ring.poly_ring
        self.ring = ring
        self.T = T
        self.engine = _Engine(pr.nvars, pr.p, "ds", trunc=T)
        inputs = [self.engine.to_terms(g.terms.items()) for g in tuple(gens) + ring.defining]
        self.elts = self.engine.groebner(inputs)
        self.index_ = _DivisorIndex(self.elts, pr.nvars)
        self.hilbert = staircase_count([e.lexp for e in self.elts], pr.nvars, T)

    @property
    def stable_index(self):
        """Least N < T with m^N inside A_m, or None if not visible below T."""
        for k, h in enumerate(self.hilbert):
            if h == 0:
                return k
        return None

    def colength(self, N: int | None = None) -> int:
        """ell(R/(A + m^N)) for N <= T (default T)."""
        N = self.T if N is None else N
        return sum(self.hilbert[:N])

    def contains(self, f: Polynomial) -> bool:
        """Membership of f in A + m^T."""
        t = self.engine.to_terms(f.terms.items())
        return not self.engine.reduce(t, self.index_)

    def basis(self) -> list:
        return _to_polys(self.engine, self.elts, self.ring.poly_ring)

    def truncated_generators(self, N: int) -> list:
        """Generators of A + m^N (N <= T): basis elements cut at degree N plus m^N."""
        pr = self.ring.poly_ring
        out = []
        for f in self.basis():
            g = f.truncate(N)
            if g:
                out.append(g)
        out.extend(monomials_of_degree(pr, N))
        return out


def monomials_of_degree(pr: PolyRing, d: int) -> list:
    out = []

    def rec(prefix, left):
        if len(prefix) == pr.nvars - 1:
            out.append(pr.monomial(prefix + (left,)))
            return
        for a in range(left, -1, -1):
            rec(prefix + (a,), left - a)

    if pr.nvars:
        rec((), d)
    return out


def local_basis(A: IdealHandle, T: int) -> LocalBasis:
    return LocalBasis(A.ring, A.gens, T)


def _probe_sizes(cap: int, start: int = 8):
    T = min(start, cap + 1)
    while True:
        yield T
        if T >= cap + 1:
            return
        T = min(2 * T, cap + 1)


def local_colength(A: IdealHandle, cap: int = 64) -> int:
    """dim_k R_m/A_m, or NotPrimary when it is infinite."""
    if _escapes_m(A):
        return 0
    for T in _probe_sizes(cap):
        lb = local_basis(A, T)
        N = lb.stable_index
        if N is not None:
            return lb.colength(N)
    if not is_locally_m_primary(A):
        raise NotPrimary(f"{A} is not primary to the maximal ideal")
    raise CapExceeded(f"colength of {A} did not stabilize below N = {cap}", cap)


def _differences(seq):
    return [b - a for a, b in zip(seq, seq[1:])]


def local_dimension(A: IdealHandle, cap: int = 64, window: int = 3):
    """Krull dimension of R_m/A_m; -inf for the unit ideal.

    m-primary ideals are recognised by saturation.  Otherwise the degree of
    the eventual polynomial N -> ell(R/(A + m^N)) is read off the tail of the
    difference table.
    """
    kind = local_kind(A)
    if kind == "unit":
        return -math.inf
    if kind == "primary":
        return 0
    n = A.ring.poly_ring.nvars
    for T in _probe_sizes(cap, start=16):
        lb = local_basis(A, T)
        c = [lb.colength(N) for N in range(1, T + 1)]
        diff = c
        for d in range(0, n + 1):
            diff = _differences(diff)
            if d >= 1 and len(diff) >= window and all(v == 0 for v in diff[-window:]):
                return d
    raise CapExceeded(f"dimension of {A} not determined below N = {cap}", cap)
