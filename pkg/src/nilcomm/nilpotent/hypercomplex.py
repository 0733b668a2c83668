"""Exact quaternions and octonions over the rationals.

Octonions are built by Cayley-Dickson doubling of the quaternions,

    (a, b) * (c, d) = (a c - conj(d) b,  d a + b conj(c)),

with ``e0..e3 = (1, i, j, k)`` in the first slot and ``e4..e7`` the same
units in the second slot, so ``e4 = (0, 1)`` is the doubling unit.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import NotationError

__all__ = [
    "Quaternion",
    "Octonion",
    "quaternion_mul",
    "octonion_mul",
    "quaternion_table",
    "octonion_table",
    "parse_quaternion",
]


def _frac4(values) -> tuple[Fraction, ...]:
    out = tuple(Fraction(v) for v in values)
    if len(out) != 4:
        raise ValueError("a quaternion has 4 coordinates")
    return out


@dataclass(frozen=True)
class Quaternion:
    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "coords", _frac4((a, b, c, d)))

    @classmethod
    def unit(cls, k: int) -> "Quaternion":
        c = [0, 0, 0, 0]
        c[k] = 1
        return cls(*c)

    def __add__(self, other):
        return Quaternion(*(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Quaternion(*(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return Quaternion(*(-x for x in self.coords))

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a1, b1, c1, d1 = self.coords
            a2, b2, c2, d2 = other.coords
            return Quaternion(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            )
        s = Fraction(other)
        return Quaternion(*(x * s for x in self.coords))

    def __rmul__(self, scalar):
        s = Fraction(scalar)
        return Quaternion(*(s * x for x in self.coords))

    def conj(self) -> "Quaternion":
        a, b, c, d = self.coords
        return Quaternion(a, -b, -c, -d)

    def norm2(self) -> Fraction:
        return sum(x * x for x in self.coords)

    @property
    def real(self) -> Fraction:
        return self.coords[0]

    def imag(self) -> "Quaternion":
        return Quaternion(0, *self.coords[1:])

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return _format_units(self.coords, ("", "i", "j", "k"))


@dataclass(frozen=True)
class Octonion:
    coords: tuple[Fraction, ...]

    def __init__(self, *values):
        if len(values) == 1 and not isinstance(values[0], (int, Fraction, str)):
            values = tuple(values[0])
        out = tuple(Fraction(v) for v in values)
        if len(out) != 8:
            raise ValueError("an octonion has 8 coordinates")
        object.__setattr__(self, "coords", out)

    @classmethod
    def unit(cls, k: int) -> "Octonion":
        c = [0] * 8
        c[k] = 1
        return cls(c)

    @classmethod
    def from_pair(cls, a: Quaternion, b: Quaternion) -> "Octonion":
        return cls(a.coords + b.coords)

    def halves(self) -> tuple[Quaternion, Quaternion]:
        return Quaternion(*self.coords[:4]), Quaternion(*self.coords[4:])

    def __add__(self, other):
        return Octonion([x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return Octonion([x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self):
        return Octonion([-x for x in self.coords])

    def __mul__(self, other):
        if isinstance(other, Octonion):
            a, b = self.halves()
            c, d = other.halves()
            return Octonion.from_pair(a * c - d.conj() * b, d * a + b * c.conj())
        s = Fraction(other)
        return Octonion([x * s for x in self.coords])

    def __rmul__(self, scalar):
        s = Fraction(scalar)
        return Octonion([s * x for x in self.coords])

    def conj(self) -> "Octonion":
        return Octonion([self.coords[0]] + [-x for x in self.coords[1:]])

    def norm2(self) -> Fraction:
        return sum(x * x for x in self.coords)

    def is_imaginary(self) -> bool:
        return self.coords[0] == 0

    def __str__(self):
        return _format_units(self.coords, tuple(f"e{k}" for k in range(8)))


def quaternion_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def octonion_mul(p: Octonion, q: Octonion) -> Octonion:
    return p * q


def _signed_unit(coords, names) -> str:
    nz = [(k, c) for k, c in enumerate(coords) if c]
    assert len(nz) == 1 and abs(nz[0][1]) == 1
    k, c = nz[0]
    return ("+" if c > 0 else "-") + names[k]


@lru_cache(maxsize=None)
def quaternion_table() -> tuple[tuple[str, ...], ...]:
    """Products of basis units as signed labels, row times column."""
    names = ("1", "i", "j", "k")
    return tuple(
        tuple(_signed_unit((Quaternion.unit(a) * Quaternion.unit(b)).coords, names) for b in range(4))
        for a in range(4)
    )


@lru_cache(maxsize=None)
def octonion_table() -> tuple[tuple[str, ...], ...]:
    names = tuple(f"e{k}" for k in range(8))
    return tuple(
        tuple(_signed_unit((Octonion.unit(a) * Octonion.unit(b)).coords, names) for b in range(8))
        for a in range(8)
    )


def _format_units(coords, names) -> str:
    parts = []
    for c, name in zip(coords, names):
        if c == 0:
            continue
        if name and abs(c) == 1:
            mag = ""
        else:
            mag = str(abs(c))
        parts.append(("-" if c < 0 else "+") + mag + name)
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([ijk]?)")


def parse_quaternion(text: str) -> Quaternion:
    """Parse expressions such as ``j``, ``i+j``, ``-3/2k``, ``1/2 + 2i``."""
    s = text.replace(" ", "")
    if not s:
        raise NotationError("empty quaternion literal")
    coords = [Fraction(0)] * 4
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)) or ("*" in m.group(0) and not m.group(3)):
            raise NotationError(f"bad quaternion literal {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        slot = " ijk".index(m.group(3)) if m.group(3) else 0
        coords[slot] += sign * mag
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise NotationError(f"bad quaternion literal {text!r}")
    return Quaternion(*coords)
