"""Dominant weights of the classical compact Lie algebras.

Weights are stored in the orthonormal ``L_i`` basis with every coordinate
doubled, so spin weights such as ``(3/2, 1/2, -1/2)`` become the integer
vector ``(3, 1, -1)``.  Roots and the Weyl vector use the same doubled
convention; every formula below is homogeneous, so the factor of two
cancels.

Family ``A`` of rank ``n`` means ``u(n)`` with ``n`` coordinates (not the
``sl``-reduced ``A_{n-1}``), so determinant characters ``(k, ..., k)`` are
expressible.
"""
from __future__ import annotations

import os
import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering

from .errors import (
    AlgebraMismatchError,
    CeilingExceededError,
    DomainError,
    NonDominantError,
    NotationError,
)

__all__ = [
    "AlgebraType",
    "HighestWeight",
    "Decomposition",
    "DEFAULT_DIMENSION_CEILING",
    "CEILING_ENV_VAR",
    "dimension_ceiling",
    "validate_dominant",
    "weyl_dimension",
    "freudenthal_multiplicities",
    "reflect_to_dominant",
    "simple_reflection",
    "dominates",
    "parse_weight",
    "format_coords2",
]

DEFAULT_DIMENSION_CEILING = 10**6
CEILING_ENV_VAR = "NILCOMM_DIM_CEILING"

Vec = tuple[int, ...]


def dimension_ceiling(override: int | None = None) -> int:
    """Resolve the dimension ceiling: explicit value, then environment, then default."""
    if override is not None:
        value = int(override)
    else:
        raw = os.environ.get(CEILING_ENV_VAR)
        value = int(raw) if raw else DEFAULT_DIMENSION_CEILING
    if value < 1:
        raise DomainError(f"dimension ceiling must be >= 1, got {value}")
    return value


_TAG = re.compile(r"^\s*([ABCDabcd])\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class AlgebraType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B", "C", "D"):
            raise DomainError(f"unknown family {self.family!r}")
        if self.rank < 1 or (self.family == "D" and self.rank < 2):
            raise DomainError(f"invalid rank {self.rank} for family {self.family}")

    @classmethod
    def parse(cls, tag: str) -> "AlgebraType":
        m = _TAG.match(tag)
        if not m:
            raise NotationError(f"bad algebra tag {tag!r}; expected e.g. 'C2', 'D3'")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def allows_spin(self) -> bool:
        return self.family in ("B", "D")

    @property
    def n_simple(self) -> int:
        return self.rank - 1 if self.family == "A" else self.rank

    def zero(self) -> "HighestWeight":
        return HighestWeight(self, (0,) * self.rank)

    def one_row(self, j: int) -> "HighestWeight":
        """The weight ``(j, 0, ..., 0)``."""
        return HighestWeight(self, (2 * j,) + (0,) * (self.rank - 1))


# -- root data (doubled coordinates) ---------------------------------------


@lru_cache(maxsize=None)
def _simple_roots(alg: AlgebraType) -> tuple[Vec, ...]:
    n = alg.rank
    roots = []
    for i in range(alg.n_simple):
        a = [0] * n
        if i < n - 1:
            a[i], a[i + 1] = 2, -2
        elif alg.family == "B":
            a[-1] = 2
        elif alg.family == "C":
            a[-1] = 4
        else:
            a[-2], a[-1] = 2, 2
        roots.append(tuple(a))
    return tuple(roots)


@lru_cache(maxsize=None)
def _positive_roots(alg: AlgebraType) -> tuple[Vec, ...]:
    n, fam = alg.rank, alg.family
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            a = [0] * n
            a[i], a[j] = 2, -2
            roots.append(tuple(a))
            if fam != "A":
                a = [0] * n
                a[i], a[j] = 2, 2
                roots.append(tuple(a))
        if fam in ("B", "C"):
            a = [0] * n
            a[i] = 2 if fam == "B" else 4
            roots.append(tuple(a))
    return tuple(roots)


@lru_cache(maxsize=None)
def _rho2(alg: AlgebraType) -> Vec:
    n = alg.rank
    if alg.family == "A":
        return tuple(n - 1 - 2 * i for i in range(n))
    if alg.family == "B":
        return tuple(2 * (n - i) - 1 for i in range(n))
    if alg.family == "C":
        return tuple(2 * (n - i) for i in range(n))
    return tuple(2 * (n - i - 1) for i in range(n))


def _dot(a: Vec, b: Vec) -> int:
    return sum(x * y for x, y in zip(a, b))


def _add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def _simple_pairing(alg: AlgebraType, v: Vec, i: int) -> int:
    # sign of <v, alpha_i>, scaled; all that matters is the sign
    if i < alg.rank - 1:
        return v[i] - v[i + 1]
    if alg.family in ("B", "C"):
        return v[-1]
    return v[-2] + v[-1]


def simple_reflection(alg: AlgebraType, v: Vec, i: int) -> Vec:
    """Apply the ``i``-th simple reflection to a doubled-coordinate vector."""
    out = list(v)
    if i < alg.rank - 1:
        out[i], out[i + 1] = out[i + 1], out[i]
    elif alg.family in ("B", "C"):
        out[-1] = -out[-1]
    else:
        out[-2], out[-1] = -out[-1], -out[-2]
    return tuple(out)


def reflect_to_dominant(alg: AlgebraType, v: Vec) -> tuple[Vec, int, bool]:
    """Move ``v`` into the closed dominant chamber.

    Returns ``(w·v, det(w), regular)`` where ``regular`` is False when the
    image lies on a chamber wall.
    """
    sign = 1
    v = tuple(v)
    while True:
        for i in range(alg.n_simple):
            if _simple_pairing(alg, v, i) < 0:
                v = simple_reflection(alg, v, i)
                sign = -sign
                break
        else:
            regular = all(_simple_pairing(alg, v, i) != 0 for i in range(alg.n_simple))
            return v, sign, regular


def _simple_root_coefficients(alg: AlgebraType, x: Vec) -> list[Fraction] | None:
    """Coefficients of ``x`` (doubled) on the simple roots, or None if off the span."""
    n = alg.rank
    partial = []
    acc = 0
    for c in x:
        acc += c
        partial.append(acc)
    if alg.family == "A":
        if partial[-1] != 0:
            return None
        coeffs = partial[: n - 1]
    elif alg.family == "B":
        coeffs = partial
    elif alg.family == "C":
        coeffs = partial[: n - 1] + [Fraction(partial[-1], 2)]
    else:
        coeffs = partial[: n - 2] + [
            Fraction(partial[n - 2] - x[-1], 2),
            Fraction(partial[-1], 2),
        ]
    # roots are doubled, so halve
    return [Fraction(c, 2) for c in coeffs]


def dominates(alg: AlgebraType, lam: Vec, mu: Vec) -> bool:
    """True iff ``lam - mu`` is a non-negative combination of simple roots."""
    coeffs = _simple_root_coefficients(alg, _sub(lam, mu))
    return coeffs is not None and all(c >= 0 for c in coeffs)


def _height(alg: AlgebraType, lam: Vec, mu: Vec) -> Fraction:
    return sum(_simple_root_coefficients(alg, _sub(lam, mu)))


# -- weights -----------------------------------------------------------------


def format_coords2(coords2: Iterable[int], brackets: str = "()") -> str:
    parts = [str(Fraction(c, 2)) for c in coords2]
    return brackets[0] + ",".join(parts) + brackets[1]


@total_ordering
@dataclass(frozen=True)
class HighestWeight:
    """A weight over ``algebra`` given by doubled coordinates ``coords2``."""

    algebra: AlgebraType
    coords2: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords2)
        object.__setattr__(self, "coords2", coords)
        if len(coords) != self.algebra.rank:
            raise DomainError(
                f"{self.algebra} weights need {self.algebra.rank} coordinates, got {len(coords)}"
            )

    @classmethod
    def from_coords(cls, algebra: AlgebraType | str, coords: Iterable) -> "HighestWeight":
        if isinstance(algebra, str):
            algebra = AlgebraType.parse(algebra)
        doubled = []
        for c in coords:
            f = Fraction(c) * 2
            if f.denominator != 1:
                raise NotationError(f"coordinate {c} is not a half-integer")
            doubled.append(int(f))
        return cls(algebra, tuple(doubled))

    def __lt__(self, other):
        if not isinstance(other, HighestWeight):
            return NotImplemented
        return (self.algebra, self.coords2) < (other.algebra, other.coords2)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.coords2)

    @property
    def is_spin(self) -> bool:
        return bool(self.coords2) and self.coords2[0] % 2 == 1

    @property
    def is_trivial(self) -> bool:
        return not any(self.coords2)

    def notation(self) -> str:
        """Bracketed literal used by the CLI and JSON, e.g. ``[3/2,1/2,-1/2]``."""
        return format_coords2(self.coords2, "[]")

    def __str__(self):
        return format_coords2(self.coords2)

    def dual(self) -> "HighestWeight":
        """Highest weight of the contragredient module."""
        fam, c = self.algebra.family, self.coords2
        if fam == "A":
            return HighestWeight(self.algebra, tuple(-x for x in reversed(c)))
        if fam == "D" and self.algebra.rank % 2 == 1:
            return HighestWeight(self.algebra, c[:-1] + (-c[-1],))
        return self


def validate_dominant(w: HighestWeight) -> bool:
    """Check parity and dominance conditions for ``w``'s family."""
    c = w.coords2
    parities = {x % 2 for x in c}
    if len(parities) > 1:
        return False
    if 1 in parities and not w.algebra.allows_spin:
        return False
    return all(_simple_pairing(w.algebra, c, i) >= 0 for i in range(w.algebra.n_simple))


def _require_dominant(w: HighestWeight) -> None:
    if not validate_dominant(w):
        raise NonDominantError(f"{w} is not a dominant weight of {w.algebra}")


@lru_cache(maxsize=4096)
def _weyl_dimension(alg: AlgebraType, lam: Vec) -> int:
    r = _rho2(alg)
    shifted = _add(lam, r)
    num = den = 1
    for a in _positive_roots(alg):
        num *= _dot(shifted, a)
        den *= _dot(r, a)
    dim = Fraction(num, den)
    assert dim.denominator == 1 and dim > 0
    return int(dim)


def weyl_dimension(w: HighestWeight) -> int:
    """Dimension of the irreducible module with highest weight ``w``.

    >>> weyl_dimension(HighestWeight.from_coords("D3", [1, 0, 0]))
    6
    """
    _require_dominant(w)
    return _weyl_dimension(w.algebra, w.coords2)


@lru_cache(maxsize=1024)
def _freudenthal(alg: AlgebraType, lam: Vec) -> tuple[tuple[Vec, int], ...]:
    simple = _simple_roots(alg)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in simple:
                nu = _sub(mu, a)
                if nu in seen:
                    continue
                dom, _, _ = reflect_to_dominant(alg, nu)
                if dominates(alg, lam, dom):
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt

    dominant = [mu for mu in seen if reflect_to_dominant(alg, mu)[0] == mu]
    dominant.sort(key=lambda mu: _height(alg, lam, mu))
    rho = _rho2(alg)
    pos = _positive_roots(alg)
    top = _dot(_add(lam, rho), _add(lam, rho))

    mult: dict[Vec, int] = {}
    for mu in dominant:
        if mu == lam:
            mult[mu] = 1
            continue
        total = 0
        for a in pos:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                if nu not in seen:
                    break
                total += mult[reflect_to_dominant(alg, nu)[0]] * _dot(nu, a)
                k += 1
        shifted = _add(mu, rho)
        denom = top - _dot(shifted, shifted)
        value, rem = divmod(2 * total, denom)
        assert rem == 0, "Freudenthal recursion produced a non-integer"
        mult[mu] = value

    out = []
    for mu in seen:
        m = mult[reflect_to_dominant(alg, mu)[0]]
        if m > 0:
            out.append((mu, m))
    out.sort(reverse=True)
    return tuple(out)


def freudenthal_multiplicities(w: HighestWeight, ceiling: int | None = None) -> dict[Vec, int]:
    """Full weight multiplicity function of the irreducible module ``w``.

    Keys are doubled-coordinate tuples; only weights with positive
    multiplicity are present.  Raises :class:`CeilingExceededError` when
    ``weyl_dimension(w)`` is above the configured ceiling.
    """
    dim = weyl_dimension(w)
    limit = dimension_ceiling(ceiling)
    if dim > limit:
        raise CeilingExceededError(f"dim {w} = {dim} exceeds ceiling {limit}")
    return dict(_freudenthal(w.algebra, w.coords2))


# -- decompositions ----------------------------------------------------------


class Decomposition(Mapping):
    """Immutable multiset ``{HighestWeight: multiplicity}`` over one algebra."""

    __slots__ = ("_terms", "_algebra")

    def __init__(self, terms=(), algebra: AlgebraType | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[HighestWeight, int] = {}
        for w, m in items:
            if not isinstance(m, int) or isinstance(m, bool) or m < 0:
                raise DomainError(f"multiplicity of {w} must be a non-negative integer, got {m!r}")
            if m == 0:
                continue
            if algebra is None:
                algebra = w.algebra
            elif w.algebra != algebra:
                raise AlgebraMismatchError(f"{w} is over {w.algebra}, expected {algebra}")
            _require_dominant(w)
            acc[w] = acc.get(w, 0) + m
        self._terms = dict(sorted(acc.items(), reverse=True))
        self._algebra = algebra

    @property
    def algebra(self) -> AlgebraType | None:
        return self._algebra

    def __getitem__(self, w):
        return self._terms[w]

    def __iter__(self) -> Iterator[HighestWeight]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return dict(self.items()) == dict(other.items())
        return NotImplemented

    def multiplicity(self, w: HighestWeight) -> int:
        return self._terms.get(w, 0)

    def dimension(self) -> int:
        return sum(m * weyl_dimension(w) for w, m in self._terms.items())

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for m in self._terms.values())

    def is_trivial_isotypic(self) -> bool:
        return bool(self._terms) and all(w.is_trivial for w in self._terms)

    def __add__(self, other: "Decomposition") -> "Decomposition":
        merged = dict(self._terms)
        for w, m in other.items():
            merged[w] = merged.get(w, 0) + m
        return Decomposition(merged, algebra=self._algebra or other.algebra)

    def __repr__(self):
        return f"Decomposition({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            str(w) if m == 1 else f"{m}*{w}" for w, m in self._terms.items()
        )


# -- notation ----------------------------------------------------------------

_NUM = r"[+-]?\d+(?:/\d+)?"
_WEIGHT = re.compile(rf"^\s*[\[(]\s*({_NUM}(?:\s*,\s*{_NUM})*)?\s*,?\s*[\])]\s*$")


def parse_weight(algebra: AlgebraType | str, text: str) -> HighestWeight:
    """Parse ``[2,1,0]``, ``(2,1,0)`` or ``[3/2,1/2,-1/2]`` over ``algebra``."""
    if isinstance(algebra, str):
        algebra = AlgebraType.parse(algebra)
    m = _WEIGHT.match(text)
    if not m:
        raise NotationError(f"bad weight literal {text!r}")
    body = m.group(1) or ""
    coords = [Fraction(tok.strip()) for tok in body.split(",") if tok.strip()]
    if len(coords) != algebra.rank:
        raise NotationError(
            f"weight {text!r} has {len(coords)} coordinates, {algebra} needs {algebra.rank}"
        )
    return HighestWeight.from_coords(algebra, coords)
