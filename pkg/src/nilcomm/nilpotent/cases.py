"""The three two-step nilpotent algebras ``n = z ⊕ V`` and their compact symmetry groups.

All vectors are real coordinate tuples of :class:`~fractions.Fraction` in a
fixed labelled basis:

* case A, ``V = C^{2n}``: pairs ``(Re u_m, Im u_m)``; center
  ``Λ²(C^{2n}) ⊕ iR`` with labels ``w{p}{q}``, ``iw{p}{q}`` (real and
  imaginary part of ``W_pq``, ``p < q``) and ``s``.
* case B, ``V = H^n``: blocks ``(1, i, j, k)``; center ``H_0(H^n) ⊕ Im H``
  with labels ``a{p}{q}{unit}`` (off-diagonal entry ``(p, q)``),
  ``d{k}`` (diagonal ``diag(1,..,1,-k,0,..)``, ``k`` ones) and ``i, j, k``.
* case C, ``V = O`` with ``e0..e7``; center ``Im O`` with ``e1..e7``.

Center inner products: ``Re tr(A B*) / 2`` on ``Λ²``, ``Re tr(A B*)`` on
``H_0``, Euclidean elsewhere.  Case A and C bases are orthonormal; the case
B basis is orthogonal with Gram diagonal :attr:`CaseAlgebra.gram`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable

from ..errors import DomainError, NotationError
from .hypercomplex import Octonion, Quaternion, parse_quaternion
from .linalg import SkewForm, pfaffian, rank

__all__ = [
    "CaseAlgebra",
    "CenterElement",
    "Generator",
    "case_algebra",
    "bracket",
    "b_lambda_matrix",
    "square_integrable",
    "stabilizer_dimension",
    "lie_algebra_generators",
    "left_multiplication",
]

Vec = tuple[Fraction, ...]
ZERO = Fraction(0)
_UNITS = ("", "i", "j", "k")


@dataclass(frozen=True)
class Generator:
    """A basis element of Lie(K) with its infinitesimal actions on ``V`` and on the center."""

    label: str
    act_v: Callable[[Vec], Vec]
    act_center: Callable[[Vec], Vec]


@dataclass(frozen=True)
class CaseAlgebra:
    tag: str
    n: int | None = None

    def __post_init__(self):
        if self.tag not in ("A", "B", "C"):
            raise DomainError(f"unknown case {self.tag!r}")
        if self.tag == "C":
            if self.n not in (None, 1):
                raise DomainError("case C has no rank parameter")
            object.__setattr__(self, "n", None)
        elif not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"case {self.tag} needs a rank n >= 1")
        elif self.tag == "A" and self.n > 4:
            raise DomainError("case A labels support n <= 4")
        elif self.tag == "B" and self.n > 9:
            raise DomainError("case B labels support n <= 9")

    def __str__(self):
        return self.tag if self.n is None else f"{self.tag}(n={self.n})"

    # -- dimensions and labels ------------------------------------------

    @property
    def dim_v(self) -> int:
        return 8 if self.tag == "C" else 4 * self.n

    @cached_property
    def v_labels(self) -> tuple[str, ...]:
        if self.tag == "A":
            return tuple(f"{part}e{m + 1}" for m in range(2 * self.n) for part in ("", "i"))
        if self.tag == "B":
            return tuple(f"{u or '1'}@{p + 1}" for p in range(self.n) for u in _UNITS)
        return tuple(f"e{k}" for k in range(8))

    @cached_property
    def center_labels(self) -> tuple[str, ...]:
        if self.tag == "A":
            m = 2 * self.n
            out = []
            for p in range(m):
                for q in range(p + 1, m):
                    out += [f"w{p + 1}{q + 1}", f"iw{p + 1}{q + 1}"]
            return tuple(out) + ("s",)
        if self.tag == "B":
            out = []
            for p in range(self.n):
                for q in range(p + 1, self.n):
                    out += [f"a{p + 1}{q + 1}{u}" for u in _UNITS]
            out += [f"d{k}" for k in range(1, self.n)]
            return tuple(out) + ("i", "j", "k")
        return tuple(f"e{k}" for k in range(1, 8))

    @property
    def dim_center(self) -> int:
        return len(self.center_labels)

    @cached_property
    def gram(self) -> tuple[Fraction, ...]:
        if self.tag != "B":
            return (Fraction(1),) * self.dim_center
        n = self.n
        return (
            (Fraction(2),) * (4 * n * (n - 1) // 2)
            + tuple(Fraction(k + k * k) for k in range(1, n))
            + (Fraction(1),) * 3
        )

    def center_inner(self, x: Vec, y: Vec) -> Fraction:
        return sum(g * a * b for g, a, b in zip(self.gram, x, y))

    # -- conveniences for building V vectors ----------------------------

    def v_from_complex(self, entries) -> Vec:
        """Case A: ``entries`` are ``(re, im)`` pairs or plain rationals."""
        self._expect("A")
        out = []
        for z in entries:
            re_, im_ = (z, 0) if not isinstance(z, tuple) else z
            out += [Fraction(re_), Fraction(im_)]
        return self._vec(out, self.dim_v)

    def v_from_quaternions(self, entries) -> Vec:
        self._expect("B")
        out = []
        for q in entries:
            out += list(q.coords)
        return self._vec(out, self.dim_v)

    def v_from_octonion(self, x: Octonion) -> Vec:
        self._expect("C")
        return x.coords

    def basis_vector(self, k: int, dim: int | None = None) -> Vec:
        dim = self.dim_v if dim is None else dim
        return tuple(Fraction(int(i == k)) for i in range(dim))

    def _expect(self, tag):
        if self.tag != tag:
            raise DomainError(f"operation needs case {tag}, this is case {self.tag}")

    @staticmethod
    def _vec(values, dim) -> Vec:
        v = tuple(Fraction(x) for x in values)
        if len(v) != dim:
            raise DomainError(f"expected {dim} coordinates, got {len(v)}")
        return v

    # -- distinguished centre element -----------------------------------

    def generic_center(self) -> "CenterElement":
        """Representative of the generic square-integrable stratum.

        A: the standard complex symplectic form pairing ``e_i`` with
        ``e_{n+i}``; B: ``(0, j)``; C: ``e1``.
        """
        if self.tag == "A":
            labels = {f"w{i + 1}{self.n + i + 1}": 1 for i in range(self.n)}
        elif self.tag == "B":
            labels = {"j": 1}
        else:
            labels = {"e1": 1}
        return CenterElement.from_labels(self, labels)


def case_algebra(tag: str, n: int | None = None) -> CaseAlgebra:
    return CaseAlgebra(tag.upper(), n)


@dataclass(frozen=True)
class CenterElement:
    algebra: CaseAlgebra
    coords: Vec

    def __post_init__(self):
        c = tuple(Fraction(x) for x in self.coords)
        if len(c) != self.algebra.dim_center:
            raise DomainError(
                f"case {self.algebra} center has dimension {self.algebra.dim_center}, got {len(c)}"
            )
        object.__setattr__(self, "coords", c)

    @classmethod
    def from_labels(cls, algebra: CaseAlgebra, labels: dict) -> "CenterElement":
        index = {name: k for k, name in enumerate(algebra.center_labels)}
        coords = [Fraction(0)] * algebra.dim_center
        for name, value in labels.items():
            if name not in index:
                raise NotationError(f"unknown center label {name!r} for case {algebra}")
            coords[index[name]] += Fraction(value)
        return cls(algebra, tuple(coords))

    @classmethod
    def zero(cls, algebra: CaseAlgebra) -> "CenterElement":
        return cls(algebra, (ZERO,) * algebra.dim_center)

    @classmethod
    def parse(cls, algebra: CaseAlgebra, text: str) -> "CenterElement":
        return _parse_center(algebra, text)

    def scaled(self, t) -> "CenterElement":
        t = Fraction(t)
        return CenterElement(self.algebra, tuple(t * x for x in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        parts = []
        for name, c in zip(self.algebra.center_labels, self.coords):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(("-" if c < 0 else "+") + mag + name)
        s = "".join(parts) or "0"
        return s[1:] if s.startswith("+") else s


# -- complex helpers (pairs of rationals) -----------------------------------


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _csub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _cconj(a):
    return (a[0], -a[1])


_C0 = (ZERO, ZERO)


def _complex_entries(v: Vec):
    return [(v[2 * m], v[2 * m + 1]) for m in range(len(v) // 2)]


def _quaternion_entries(v: Vec):
    return [Quaternion(*v[4 * p: 4 * p + 4]) for p in range(len(v) // 4)]


# -- case A -------------------------------------------------------------------


def _a_center_from_matrix(alg: CaseAlgebra, W, s) -> Vec:
    m = 2 * alg.n
    out = []
    for p in range(m):
        for q in range(p + 1, m):
            out += [W[p][q][0], W[p][q][1]]
    return tuple(out) + (Fraction(s),)


def _a_matrix_from_center(alg: CaseAlgebra, x: Vec):
    m = 2 * alg.n
    W = [[_C0] * m for _ in range(m)]
    k = 0
    for p in range(m):
        for q in range(p + 1, m):
            W[p][q] = (x[k], x[k + 1])
            W[q][p] = (-x[k], -x[k + 1])
            k += 2
    return W, x[-1]


def _a_bracket(alg: CaseAlgebra, u: Vec, v: Vec) -> Vec:
    uc, vc = _complex_entries(u), _complex_entries(v)
    m = len(uc)
    W = [[_csub(_cmul(uc[p], vc[q]), _cmul(vc[p], uc[q])) for q in range(m)] for p in range(m)]
    herm = _C0
    for a, b in zip(uc, vc):
        herm = _cadd(herm, _cmul(_cconj(a), b))
    return _a_center_from_matrix(alg, W, herm[1])


def _a_generators(alg: CaseAlgebra) -> list[Generator]:
    m = 2 * alg.n
    one, i_ = (Fraction(1), ZERO), (ZERO, Fraction(1))
    mats = []
    for p in range(m):
        xi = [[_C0] * m for _ in range(m)]
        xi[p][p] = i_
        mats.append((f"iE{p + 1}{p + 1}", xi))
        for q in range(p + 1, m):
            xi = [[_C0] * m for _ in range(m)]
            xi[p][q], xi[q][p] = one, (-one[0], ZERO)
            mats.append((f"E{p + 1}{q + 1}-E{q + 1}{p + 1}", xi))
            xi = [[_C0] * m for _ in range(m)]
            xi[p][q] = xi[q][p] = i_
            mats.append((f"i(E{p + 1}{q + 1}+E{q + 1}{p + 1})", xi))

    def make(xi):
        def act_v(v):
            uc = _complex_entries(v)
            out = []
            for p in range(m):
                acc = _C0
                for q in range(m):
                    acc = _cadd(acc, _cmul(xi[p][q], uc[q]))
                out += list(acc)
            return tuple(out)

        def act_center(x):
            W, _ = _a_matrix_from_center(alg, x)
            # W -> xi W + W xi^t ; the iR part is fixed
            new = [[_C0] * m for _ in range(m)]
            for p in range(m):
                for q in range(m):
                    acc = _C0
                    for r in range(m):
                        acc = _cadd(acc, _cmul(xi[p][r], W[r][q]))
                        acc = _cadd(acc, _cmul(W[p][r], xi[q][r]))
                    new[p][q] = acc
            return _a_center_from_matrix(alg, new, 0)

        return act_v, act_center

    return [Generator(label, *make(xi)) for label, xi in mats]


# -- case B -------------------------------------------------------------------

_Q0 = Quaternion()
_QUNITS = tuple(Quaternion.unit(k) for k in range(4))
_QI = _QUNITS[1]


def _b_center_from_matrix(alg: CaseAlgebra, A, q: Quaternion) -> Vec:
    n = alg.n
    out = []
    for p in range(n):
        for r in range(p + 1, n):
            out += list(A[p][r].coords)
    diag = [A[p][p].real for p in range(n)]
    for k in range(1, n):
        out.append((sum(diag[:k]) - k * diag[k]) / (k + k * k))
    return tuple(out) + tuple(q.coords[1:])


def _b_matrix_from_center(alg: CaseAlgebra, x: Vec):
    n = alg.n
    A = [[_Q0] * n for _ in range(n)]
    pos = 0
    for p in range(n):
        for r in range(p + 1, n):
            A[p][r] = Quaternion(*x[pos: pos + 4])
            A[r][p] = A[p][r].conj()
            pos += 4
    diag = [Fraction(0)] * n
    for k in range(1, n):
        c = x[pos]
        pos += 1
        for p in range(k):
            diag[p] += c
        diag[k] -= k * c
    for p in range(n):
        A[p][p] = Quaternion(diag[p])
    return A, Quaternion(0, *x[pos: pos + 3])


def _b_bracket(alg: CaseAlgebra, u: Vec, v: Vec) -> Vec:
    uq, vq = _quaternion_entries(u), _quaternion_entries(v)
    n = alg.n
    M = [[uq[p] * _QI * vq[r].conj() - vq[p] * _QI * uq[r].conj() for r in range(n)] for p in range(n)]
    trace = sum((M[p][p].real for p in range(n)), Fraction(0))
    for p in range(n):
        M[p][p] = M[p][p] - Quaternion(trace / n)
    q = _Q0
    for a, b in zip(uq, vq):
        q = q + a.conj() * b - b.conj() * a
    return _b_center_from_matrix(alg, M, q)


def _qmatmul(X, Y):
    n = len(X)
    return [[sum((X[p][k] * Y[k][r] for k in range(n)), _Q0) for r in range(n)] for p in range(n)]


def _b_generators(alg: CaseAlgebra) -> list[Generator]:
    n = alg.n
    mats = []
    for p in range(n):
        for u in range(1, 4):
            xi = [[_Q0] * n for _ in range(n)]
            xi[p][p] = _QUNITS[u]
            mats.append((f"{_UNITS[u]}E{p + 1}{p + 1}", xi))
        for r in range(p + 1, n):
            for u in range(4):
                xi = [[_Q0] * n for _ in range(n)]
                xi[p][r] = _QUNITS[u]
                xi[r][p] = -_QUNITS[u].conj()
                mats.append((f"{_UNITS[u] or '1'}E{p + 1}{r + 1}-h.c.", xi))

    def make(xi):
        def act_v(v):
            vq = _quaternion_entries(v)
            out = []
            for p in range(n):
                acc = sum((xi[p][r] * vq[r] for r in range(n)), _Q0)
                out += list(acc.coords)
            return tuple(out)

        def act_center(x):
            A, _ = _b_matrix_from_center(alg, x)
            XA, AX = _qmatmul(xi, A), _qmatmul(A, xi)
            new = [[XA[p][r] - AX[p][r] for r in range(n)] for p in range(n)]
            return _b_center_from_matrix(alg, new, _Q0)

        return act_v, act_center

    gens = [Generator(label, *make(xi)) for label, xi in mats]

    def circle_v(v):
        out = []
        for q in _quaternion_entries(v):
            out += list((-(q * _QI)).coords)
        return tuple(out)

    def circle_center(x):
        _, q = _b_matrix_from_center(alg, x)
        zero = [[_Q0] * n for _ in range(n)]
        return _b_center_from_matrix(alg, zero, _QI * q - q * _QI)

    gens.append(Generator("S1", circle_v, circle_center))
    return gens


# -- case C -------------------------------------------------------------------

_OUNITS = tuple(Octonion.unit(k) for k in range(8))


def left_multiplication(z: Octonion) -> tuple[Vec, ...]:
    """Matrix of ``x -> z x`` on ``O`` (column ``b`` is ``z e_b``)."""
    cols = [(z * e).coords for e in _OUNITS]
    return tuple(tuple(cols[b][a] for b in range(8)) for a in range(8))


def _c_bracket(u: Vec, v: Vec) -> Vec:
    uo = Octonion(u)
    return tuple(sum((a * b for a, b in zip((_OUNITS[c] * uo).coords, v)), ZERO) for c in range(1, 8))


def _c_generators() -> list[Generator]:
    gens = []
    for a in range(1, 8):
        for b in range(a + 1, 8):
            def act_v(v, a=a, b=b):
                return tuple(c / 2 for c in (_OUNITS[a] * (_OUNITS[b] * Octonion(v))).coords)

            def act_center(x, a=a, b=b):
                out = list(Fraction(0) for _ in range(7))
                # rotation e_a -> e_b, e_b -> -e_a
                out[b - 1] += x[a - 1]
                out[a - 1] -= x[b - 1]
                return tuple(out)

            gens.append(Generator(f"L{a}L{b}/2", act_v, act_center))
    return gens


# -- public operations ----------------------------------------------------------


def bracket(alg: CaseAlgebra, u, v) -> Vec:
    """Lie bracket of two ``V`` vectors, in center coordinates."""
    u = CaseAlgebra._vec(u, alg.dim_v)
    v = CaseAlgebra._vec(v, alg.dim_v)
    if alg.tag == "A":
        return _a_bracket(alg, u, v)
    if alg.tag == "B":
        return _b_bracket(alg, u, v)
    return _c_bracket(u, v)


@lru_cache(maxsize=None)
def _basis_brackets(alg: CaseAlgebra) -> tuple[tuple[Vec, ...], ...]:
    d = alg.dim_v
    basis = [alg.basis_vector(k) for k in range(d)]
    return tuple(tuple(bracket(alg, basis[a], basis[b]) for b in range(d)) for a in range(d))


@lru_cache(maxsize=None)
def lie_algebra_generators(alg: CaseAlgebra) -> tuple[Generator, ...]:
    """A real basis of Lie(K): ``u(2n)``, ``R ⊕ sp(n)`` or ``spin(7)``."""
    if alg.tag == "A":
        return tuple(_a_generators(alg))
    if alg.tag == "B":
        return tuple(_b_generators(alg))
    return tuple(_c_generators())


def _check_center(alg: CaseAlgebra, X: CenterElement) -> None:
    if X.algebra != alg:
        raise DomainError(f"center element belongs to {X.algebra}, not {alg}")


def b_lambda_matrix(alg: CaseAlgebra, X: CenterElement) -> SkewForm:
    """Matrix of ``(u, v) -> <[u, v], X>`` on the labelled basis of ``V``."""
    _check_center(alg, X)
    table = _basis_brackets(alg)
    rows = [[alg.center_inner(table[a][b], X.coords) for b in range(alg.dim_v)] for a in range(alg.dim_v)]
    return SkewForm(rows)


def square_integrable(alg: CaseAlgebra, X: CenterElement) -> bool:
    return pfaffian(b_lambda_matrix(alg, X)) != 0


def stabilizer_dimension(alg: CaseAlgebra, X: CenterElement) -> int:
    """``dim {xi in Lie(K) : xi . X = 0}`` as an exact kernel dimension."""
    _check_center(alg, X)
    gens = lie_algebra_generators(alg)
    images = [g.act_center(X.coords) for g in gens]
    return len(gens) - rank(images)


# -- center literal grammar ---------------------------------------------------

_COEF = r"(\d+(?:/\d+)?)?"


def _parse_label_sum(text: str, labels, what: str) -> dict[str, Fraction]:
    s = text.replace(" ", "")
    if s in ("", "0"):
        return {}
    alts = "|".join(re.escape(x) for x in sorted(labels, key=len, reverse=True))
    term = re.compile(rf"([+-]?){_COEF}\*?({alts})")
    out: dict[str, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = term.match(s, pos)
        if not m:
            raise NotationError(f"cannot parse {what} {text!r} at {s[pos:]!r}")
        if pos > 0 and not m.group(1):
            raise NotationError(f"missing sign between terms in {text!r}")
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coef = -coef
        out[m.group(3)] = out.get(m.group(3), Fraction(0)) + coef
        pos = m.end()
    return out


def _split_pair(text: str):
    inner = text.strip()[1:-1]
    depth = 0
    for k, ch in enumerate(inner):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            return inner[:k], inner[k + 1:]
    raise NotationError(f"expected a pair '(first, second)', got {text!r}")


def _parse_center(alg: CaseAlgebra, text: str) -> CenterElement:
    t = text.strip()
    labels = alg.center_labels
    if alg.tag in ("A", "B") and t.startswith("(") and t.endswith(")"):
        first, second = _split_pair(t)
        tail = labels[-1:] if alg.tag == "A" else labels[-3:]
        head = labels[: len(labels) - len(tail)]
        coeffs = _parse_label_sum(first, head, "center component")
        second = second.strip()
        if alg.tag == "A":
            try:
                coeffs["s"] = Fraction(second)
            except ValueError:
                coeffs.update(_parse_label_sum(second, tail, "iR component"))
        else:
            q = parse_quaternion(second)
            if q.real != 0:
                raise NotationError(f"{second!r} is not an imaginary quaternion")
            for name, c in zip("ijk", q.coords[1:]):
                if c:
                    coeffs[name] = c
        return CenterElement.from_labels(alg, coeffs)
    return CenterElement.from_labels(alg, _parse_label_sum(t, labels, "center element"))
