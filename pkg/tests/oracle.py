"""Reference computations used to derive the frozen expectations in the tests.

Everything here is deliberately naive and shares no code with ``nilcomm``:
characters come from the Weyl character formula, evaluated as an exact
polynomial division ``A_{lambda+rho} / A_rho`` with sympy, and tensor
products / restrictions are obtained by multiplying characters and peeling
off highest weights.  Weights are tuples of doubled coordinates throughout.
"""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache

import sympy


def positive_roots(family: str, n: int) -> list[tuple[int, ...]]:
    def e(i, c=1):
        v = [0] * n
        v[i] = c
        return v

    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            a, b = e(i), e(j)
            roots.append(tuple(x - y for x, y in zip(a, b)))
            if family != "A":
                roots.append(tuple(x + y for x, y in zip(a, b)))
        if family == "B":
            roots.append(tuple(e(i)))
        if family == "C":
            roots.append(tuple(e(i, 2)))
    return roots


def rho2(family: str, n: int) -> tuple[int, ...]:
    """Sum of positive roots, i.e. twice the Weyl vector."""
    return tuple(sum(col) for col in zip(*positive_roots(family, n)))


def _perm_sign(p) -> int:
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign *= -1 if length % 2 == 0 else 1
    return sign


@lru_cache(maxsize=None)
def weyl_group(family: str, n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """Elements ``(perm, signs, det)`` acting by ``v -> (signs[i] * v[perm[i]])``."""
    out = []
    sign_choices = [(1,) * n] if family == "A" else list(itertools.product((1, -1), repeat=n))
    for perm in itertools.permutations(range(n)):
        for signs in sign_choices:
            if family == "D" and signs.count(-1) % 2:
                continue
            det = _perm_sign(perm)
            if family in ("B", "C"):
                det *= (-1) ** signs.count(-1)
            out.append((perm, signs, det))
    return tuple(out)


def _act(g, v):
    perm, signs, _ = g
    return tuple(s * v[p] for s, p in zip(signs, perm))


def _alternant(family, n, v) -> Counter:
    out = Counter()
    for g in weyl_group(family, n):
        out[_act(g, v)] += g[2]
    return out


def _to_poly(counter: Counter, xs):
    shift = [min(k[i] for k in counter) for i in range(len(xs))]
    expr = sum(c * sympy.prod([x ** (k[i] - shift[i]) for i, x in enumerate(xs)]) for k, c in counter.items() if c)
    return sympy.Poly(expr, *xs), shift


@lru_cache(maxsize=None)
def character(family: str, n: int, lam2: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Weight multiplicities of the irreducible with doubled highest weight ``lam2``."""
    r = rho2(family, n)
    # exponents are in units of 1/2 after doubling; rho2 is 2*rho so use lam2 + rho2
    num = _alternant(family, n, tuple(a + b for a, b in zip(lam2, r)))
    den = _alternant(family, n, r)
    xs = sympy.symbols(f"x0:{n}")
    pn, sn = _to_poly(num, xs)
    pd, sd = _to_poly(den, xs)
    q, rem = sympy.div(pn, pd)
    assert rem.is_zero, "Weyl character formula division was not exact"
    out = {}
    for monom, coeff in q.terms():
        w = tuple(monom[i] + sn[i] - sd[i] for i in range(n))
        out[w] = int(coeff)
    assert all(v > 0 for v in out.values())
    return tuple(sorted(out.items()))


def dimension(family, n, lam2) -> int:
    return sum(m for _, m in character(family, n, tuple(lam2)))


def peel(family: str, n: int, char: Counter) -> dict[tuple[int, ...], int]:
    """Decompose a character (Counter of doubled weights) into irreducibles."""
    remaining = Counter({k: v for k, v in char.items() if v})
    r = rho2(family, n)
    out: dict[tuple[int, ...], int] = {}
    while remaining:
        top = max(remaining, key=lambda v: (sum(a * b for a, b in zip(v, r)), v))
        c = remaining[top]
        assert c > 0, "not a genuine character"
        out[top] = c
        for w, m in character(family, n, top):
            remaining[w] -= c * m
            if remaining[w] == 0:
                del remaining[w]
    return out


def tensor(family: str, n: int, a2, b2) -> dict[tuple[int, ...], int]:
    prod = Counter()
    for w1, m1 in character(family, n, tuple(a2)):
        for w2, m2 in character(family, n, tuple(b2)):
            prod[tuple(x + y for x, y in zip(w1, w2))] += m1 * m2
    return peel(family, n, prod)


def branch_b_to_d(n: int, lam2) -> dict[tuple[int, ...], int]:
    return peel("D", n, Counter(dict(character("B", n, tuple(lam2)))))


def restrict_u2n_to_sp(n: int, lam2) -> dict[tuple[int, ...], int]:
    """Restrict along ``Sp(n) < U(2n)`` with the form pairing ``e_i`` and ``e_{n+i}``."""
    out = Counter()
    for w, m in character("A", 2 * n, tuple(lam2)):
        out[tuple(w[i] - w[n + i] for i in range(n))] += m
    return peel("C", n, out)


# -- linear algebra -------------------------------------------------------------


def pfaffian_by_matchings(m) -> Fraction:
    """Sum over perfect matchings with crossing-number signs."""
    size = len(m)

    def rec(rest):
        if not rest:
            return Fraction(1)
        i, others = rest[0], rest[1:]
        total = Fraction(0)
        for k, j in enumerate(others):
            total += (-1) ** k * Fraction(m[i][j]) * rec(others[:k] + others[k + 1:])
        return total

    return rec(tuple(range(size)))


def det_by_elimination(m) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return det


def rank_by_elimination(rows) -> int:
    a = [[Fraction(x) for x in row] for row in rows]
    rank, cols = 0, len(a[0]) if a else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(a)) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][c] != 0:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank
