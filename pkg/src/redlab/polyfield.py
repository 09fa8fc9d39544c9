"""Prime-field scalars and sparse multivariate polynomials.

A :class:`PolyRing` fixes the characteristic and the variable names; every
:class:`Polynomial` carries a reference to its ring and a dict mapping
exponent tuples to nonzero coefficients in ``range(p)``.  Polynomials are
immutable and hashable, so they can be shared freely between worker
processes.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .errors import (
    LengthMismatch,
    NotCoprime,
    PolynomialSyntaxError,
    RingMismatch,
    VariableMismatch,
    ZeroInverse,
)

__all__ = [
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "ff_inv",
    "poly_mul",
    "constant_term",
    "poly_divmod",
    "poly_gcd",
    "poly_gcdex",
    "crt_univariate",
    "is_irreducible",
    "monic_irreducibles",
    "is_prime",
]

MAX_CHARACTERISTIC = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def ff_inv(a: int, p: int) -> int:
    """Multiplicative inverse of ``a`` modulo the prime ``p``."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse modulo {p}")
    return pow(a, -1, p)


class MonomialOrder(str, Enum):
    DEGREVLEX = "degrevlex"
    LEX = "lex"

    def key(self, exps: Sequence[int]):
        """Sort key on exponent tuples: larger key means larger monomial."""
        if self is MonomialOrder.LEX:
            return tuple(exps)
        return (sum(exps), tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class PolyRing:
    """The ambient ring F_p[names]."""

    p: int
    names: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not is_prime(self.p) or self.p > MAX_CHARACTERISTIC:
            raise ValueError(f"characteristic must be a prime <= 2^31, got {self.p}")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for name in self.names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"bad variable name {name!r}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def gens(self) -> tuple:
        return tuple(self.monomial(tuple(int(i == j) for j in range(self.nvars)))
                     for i in range(self.nvars))

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: int) -> "Polynomial":
        return self.monomial((0,) * self.nvars, c)

    def monomial(self, exps, c: int = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise VariableMismatch(f"expected {self.nvars} exponents, got {len(exps)}")
        return Polynomial(self, {exps: c})

    def __call__(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def __str__(self):
        return f"F_{self.p}[{','.join(self.names)}]"


class Polynomial:
    """Sparse polynomial over a prime field; immutable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict, _clean: bool = False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            p = ring.p
            n = ring.nvars
            clean = {}
            for e, c in terms.items():
                if len(e) != n:
                    raise VariableMismatch(f"exponent vector {e} has length {len(e)}, ring has {n} variables")
                c %= p
                if c:
                    clean[tuple(e)] = c
            self.terms = clean
        self._hash = None

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def order(self) -> int:
        """Least total degree of a term; -1 for the zero polynomial."""
        return min((sum(e) for e in self.terms), default=-1)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def lead(self, order: MonomialOrder = MonomialOrder.DEGREVLEX):
        """(exponents, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.lead(order)
        return self * ff_inv(c, self.ring.p)

    def truncate(self, degree: int) -> "Polynomial":
        """Drop every term of total degree >= ``degree``."""
        return Polynomial(self.ring, {e: c for e, c in self.terms.items() if sum(e) < degree}, _clean=True)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                if other.ring.nvars != self.ring.nvars:
                    raise VariableMismatch(f"{self.ring} vs {other.ring}")
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {e: p - c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {e: v * c % self.ring.p for e, v in self.terms.items()}, _clean=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __reduce__(self):
        return (Polynomial, (self.ring, self.terms, True))

    # -- display -----------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r} in {self.ring})"


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.ring.nvars != g.ring.nvars:
        raise VariableMismatch(f"{f.ring} vs {g.ring}")
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    p = f.ring.p
    out: dict = {}
    get = out.get
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = (get(e, 0) + c1 * c2) % p
    return Polynomial(f.ring, {e: c for e, c in out.items() if c}, _clean=True)


def constant_term(f: Polynomial) -> int:
    return f.constant_term()


# ---------------------------------------------------------------------------
# text grammar

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break  # trailing whitespace
        num, name, sym = m.groups()
        col = m.start(m.lastindex) + 1
        if num is not None:
            tokens.append(("num", int(num), col))
        elif name is not None:
            tokens.append(("var", name, col))
        else:
            if sym not in "+-*^":
                raise PolynomialSyntaxError(f"unexpected character {sym!r}", col)
            tokens.append((sym, sym, col))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` with the grammar ``poly := ['-'] term {('+'|'-') term}``."""
    tokens = _tokenize(text)
    index = {name: i for i, name in enumerate(ring.names)}
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {kind}, found {what}", tok[2])
        pos += 1
        return tok

    def varpow(exps):
        tok = take("var")
        if tok[1] not in index:
            raise PolynomialSyntaxError(f"undeclared variable {tok[1]!r}", tok[2])
        k = 1
        if peek()[0] == "^":
            take("^")
            k = take("num")[1]
        exps[index[tok[1]]] += k

    def term():
        exps = [0] * ring.nvars
        coeff = 1
        kind = peek()[0]
        if kind == "num":
            coeff = take("num")[1]
            if peek()[0] != "*":
                return tuple(exps), coeff
            take("*")
        elif kind != "var":
            tok = peek()
            what = "end of input" if kind == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected a term, found {what}", tok[2])
        varpow(exps)
        while peek()[0] == "*":
            take("*")
            varpow(exps)
        return tuple(exps), coeff

    terms: dict = {}
    sign = 1
    if peek()[0] == "-":
        take("-")
        sign = -1
    while True:
        e, c = term()
        terms[e] = terms.get(e, 0) + sign * c
        kind = peek()[0]
        if kind == "end":
            break
        if kind not in "+-":
            tok = peek()
            raise PolynomialSyntaxError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
        sign = 1 if take(kind)[0] == "+" else -1
    return Polynomial(ring, terms)


def format_poly(f: Polynomial, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> str:
    if not f.terms:
        return "0"
    parts = []
    for e in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[e]
        factors = []
        for name, k in zip(f.ring.names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# univariate arithmetic


def _require_univariate(*fs: Polynomial):
    for f in fs:
        if f.ring.nvars != 1:
            raise VariableMismatch(f"expected a univariate ring, got {f.ring}")


def _coeffs(f: Polynomial) -> list:
    """Dense coefficient list, lowest degree first."""
    if not f.terms:
        return []
    out = [0] * (f.degree() + 1)
    for (k,), c in f.terms.items():
        out[k] = c
    return out


def _from_coeffs(ring: PolyRing, coeffs) -> Polynomial:
    return Polynomial(ring, {(k,): c for k, c in enumerate(coeffs) if c}, _clean=True)


def poly_divmod(f: Polynomial, g: Polynomial):
    """Quotient and remainder of univariate ``f`` by nonzero ``g``."""
    _require_univariate(f, g)
    if not g.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    p = f.ring.p
    r = _coeffs(f)
    d = _coeffs(g)
    inv = ff_inv(d[-1], p)
    q = [0] * max(len(r) - len(d) + 1, 0)
    for k in range(len(r) - len(d), -1, -1):
        c = r[k + len(d) - 1] * inv % p
        q[k] = c
        if c:
            for i, dc in enumerate(d):
                r[k + i] = (r[k + i] - c * dc) % p
    return _from_coeffs(f.ring, q), _from_coeffs(f.ring, r)


def poly_gcdex(f: Polynomial, g: Polynomial):
    """Return (d, s, t) with s*f + t*g = d = monic gcd(f, g)."""
    _require_univariate(f, g)
    ring = f.ring
    r0, r1 = f, g
    s0, s1 = ring.one(), ring.zero()
    t0, t1 = ring.zero(), ring.one()
    while r1.terms:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.terms:
        return r0, s0, t0
    inv = ff_inv(r0.lead()[1], ring.p)
    return r0 * inv, s0 * inv, t0 * inv


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    return poly_gcdex(f, g)[0]


def crt_univariate(moduli: Sequence[Polynomial], residues: Sequence[Polynomial]) -> Polynomial:
    """The unique f with deg f < sum(deg m_i) and f = r_i mod m_i for every i."""
    if len(moduli) != len(residues):
        raise LengthMismatch(f"{len(moduli)} moduli but {len(residues)} residues")
    if not moduli:
        raise LengthMismatch("no moduli given")
    _require_univariate(*moduli, *residues)
    ring = moduli[0].ring
    for i, j in itertools.combinations(range(len(moduli)), 2):
        if poly_gcd(moduli[i], moduli[j]).degree() != 0:
            raise NotCoprime(i, j)
    total = ring.one()
    for m in moduli:
        total = total * m
    result = ring.zero()
    for m, r in zip(moduli, residues):
        cofactor = poly_divmod(total, m)[0]
        _, s, _ = poly_gcdex(cofactor, m)
        result = result + r * s * cofactor
    return poly_divmod(result, total)[1]


def _monic_polys(ring: PolyRing, degree: int) -> Iterator[Polynomial]:
    """All monic polynomials of a given degree, in lexicographic coefficient order."""
    for low in itertools.product(range(ring.p), repeat=degree):
        yield _from_coeffs(ring, tuple(reversed(low)) + (1,))


def is_irreducible(f: Polynomial) -> bool:
    """Trial division by monic polynomials of degree up to deg(f) / 2."""
    _require_univariate(f)
    n = f.degree()
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for g in _monic_polys(f.ring, d):
            if not poly_divmod(f, g)[1].terms:
                return False
    return True


def monic_irreducibles(ring: PolyRing) -> Iterator[Polynomial]:
    """Monic irreducibles of a univariate ring by degree, then coefficient order.

    For F_2 this starts y, y + 1, y^2 + y + 1, y^3 + y + 1, y^3 + y^2 + 1, ...
    """
    _require_univariate(ring.one())
    for d in itertools.count(1):
        for f in _monic_polys(ring, d):
            if is_irreducible(f):
                yield f


def polys_from_text(ring: PolyRing, text: str, sep: str = ";") -> list:
    """Split on ``sep`` and parse each non-empty piece."""
    out = []
    offset = 0
    for piece in text.split(sep):
        if piece.strip():
            try:
                out.append(parse_poly(piece, ring))
            except PolynomialSyntaxError as exc:
                raise PolynomialSyntaxError(str(exc).split(": ", 1)[1], exc.column + offset) from None
        offset += len(piece) + len(sep)
    return out


def ring_of(polys: Iterable[Polynomial]) -> PolyRing:
    rings = {f.ring for f in polys}
    if len(rings) != 1:
        raise RingMismatch(f"polynomials from {len(rings)} different rings")
    return rings.pop()
