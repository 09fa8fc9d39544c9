"""Line-oriented ring/ideal description files.

    # comments and blank lines are ignored
    [ring] char=2 vars=x,y defining=x^2*y+x*y^2 equidimensional=true
    [ideal I] gens=x;y
    [ideal J] gens=x+y
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import InputFormatError, PolynomialSyntaxError, RedlabError
from .groebner import IdealHandle, RingSpec
from .polyfield import PolyRing, polys_from_text

__all__ = ["RingFile", "parse_ring_file", "load_ring_file"]

_HEADER = re.compile(r"\s*\[(ring|ideal)(?:\s+([A-Za-z_][A-Za-z_0-9]*))?\]")
_RING_KEYS = ("char", "vars", "defining", "equidimensional")
_IDEAL_KEYS = ("gens",)


@dataclass
class RingFile:
    ring: RingSpec
    ideals: dict = field(default_factory=dict)

    def ideal(self, name: str) -> IdealHandle:
        try:
            return self.ideals[name]
        except KeyError:
            known = ", ".join(self.ideals) or "none"
            raise InputFormatError(f"no ideal named {name!r} (known: {known})", 0) from None


def _fields(text: str, start: int, keys, lineno: int) -> dict:
    """Split ``key=value`` pairs; values may contain spaces, so split on known keys."""
    pattern = re.compile(r"(?:^|\s)(%s)=" % "|".join(keys))
    matches = list(pattern.finditer(text, start))
    rest = text[start:matches[0].start()] if matches else text[start:]
    if rest.strip():
        col = start + len(rest) - len(rest.lstrip()) + 1
        raise InputFormatError(f"unexpected text {rest.strip()!r}", lineno, col)
    out = {}
    for k, m in enumerate(matches):
        end = matches[k + 1].start() if k + 1 < len(matches) else len(text)
        key = m.group(1)
        if key in out:
            raise InputFormatError(f"duplicate key {key!r}", lineno, m.start(1) + 1)
        out[key] = (text[m.end():end], m.end() + 1)
    return out


def _polys(ring: PolyRing, value: str, col: int, lineno: int) -> list:
    try:
        return polys_from_text(ring, value)
    except PolynomialSyntaxError as exc:
        raise InputFormatError(str(exc).split(": ", 1)[1], lineno, col + exc.column - 1) from None


def parse_ring_file(text: str) -> RingFile:
    ring = None
    ideals = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        head = _HEADER.match(line)
        if head is None:
            col = len(line) - len(line.lstrip()) + 1
            raise InputFormatError("expected '[ring]' or '[ideal NAME]'", lineno, col)
        kind, name = head.groups()
        if kind == "ring":
            if ring is not None:
                raise InputFormatError("second [ring] section", lineno, 1)
            if name:
                raise InputFormatError("[ring] takes no name", lineno, head.start(2) + 1)
            f = _fields(line, head.end(), _RING_KEYS, lineno)
            for key in ("char", "vars"):
                if key not in f:
                    raise InputFormatError(f"[ring] needs {key}=", lineno, head.end() + 1)
            value, col = f["char"]
            try:
                p = int(value.strip())
            except ValueError:
                raise InputFormatError(f"char must be an integer, got {value.strip()!r}", lineno, col) from None
            value, col = f["vars"]
            names = tuple(v.strip() for v in value.split(",") if v.strip())
            try:
                pr = PolyRing(p, names)
            except (ValueError, RedlabError) as exc:
                raise InputFormatError(str(exc), lineno, col) from None
            defining = []
            if "defining" in f:
                value, col = f["defining"]
                defining = _polys(pr, value, col, lineno)
            equi = False
            if "equidimensional" in f:
                value, col = f["equidimensional"]
                flag = value.strip().lower()
                if flag not in ("true", "false"):
                    raise InputFormatError(f"equidimensional must be true or false, got {flag!r}", lineno, col)
                equi = flag == "true"
            try:
                ring = RingSpec(p, names, tuple(defining), equidimensional=equi)
            except ValueError as exc:
                raise InputFormatError(str(exc), lineno, 1) from None
            continue
        if ring is None:
            raise InputFormatError("[ideal] before [ring]", lineno, 1)
        if not name:
            raise InputFormatError("[ideal] needs a name", lineno, head.end())
        if name in ideals:
            raise InputFormatError(f"ideal {name!r} defined twice", lineno, head.start(2) + 1)
        f = _fields(line, head.end(), _IDEAL_KEYS, lineno)
        if "gens" not in f:
            raise InputFormatError("[ideal] needs gens=", lineno, head.end() + 1)
        value, col = f["gens"]
        ideals[name] = IdealHandle(ring, _polys(ring.poly_ring, value, col, lineno))
    if ring is None:
        raise InputFormatError("no [ring] section", 1, 1)
    return RingFile(ring, ideals)


def load_ring_file(path) -> RingFile:
    with open(path, encoding="utf-8") as fh:
        return parse_ring_file(fh.read())
