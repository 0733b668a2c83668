"""Exact matrix routines over the rationals."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..errors import DomainError

__all__ = ["SkewForm", "pfaffian", "determinant", "rank"]

Matrix = tuple[tuple[Fraction, ...], ...]


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


class SkewForm:
    """An exactly skew-symmetric rational matrix."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        m = _as_matrix(rows)
        n = len(m)
        if any(len(r) != n for r in m):
            raise DomainError("skew form must be square")
        for i in range(n):
            for j in range(i, n):
                if m[i][j] != -m[j][i]:
                    raise DomainError(f"not skew-symmetric at ({i}, {j})")
        self.rows = m

    @property
    def size(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, SkewForm) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SkewForm({[[str(x) for x in r] for r in self.rows]})"


def pfaffian(M) -> Fraction:
    """Pfaffian by cofactor expansion along the first remaining index.

    Normalised so that ``pfaffian([[0, 1], [-1, 0]]) == 1``.  Sub-Pfaffians
    are memoised on the set of remaining indices; zero entries are skipped.
    """
    form = M if isinstance(M, SkewForm) else SkewForm(M)
    a = form.rows
    n = len(a)
    if n % 2:
        raise DomainError(f"Pfaffian needs an even-size matrix, got {n}")

    @lru_cache(maxsize=None)
    def pf(remaining: tuple[int, ...]) -> Fraction:
        if not remaining:
            return Fraction(1)
        i, rest = remaining[0], remaining[1:]
        total = Fraction(0)
        for k, j in enumerate(rest):
            if a[i][j] == 0:
                continue
            sub = rest[:k] + rest[k + 1:]
            term = a[i][j] * pf(sub)
            total += term if k % 2 == 0 else -term
        return total

    return pf(tuple(range(n)))


def _domain(rows) -> DomainMatrix:
    m = _as_matrix(rows)
    ncols = len(m[0]) if m else 0
    return DomainMatrix([[QQ(x.numerator, x.denominator) for x in r] for r in m], (len(m), ncols), QQ)


def determinant(rows) -> Fraction:
    if isinstance(rows, SkewForm):
        rows = rows.rows
    if not rows:
        return Fraction(1)
    d = _domain(rows).det()
    return Fraction(int(d.numerator), int(d.denominator))


def rank(rows) -> int:
    rows = list(rows)
    if not rows or not rows[0]:
        return 0
    return int(_domain(rows).rank())
