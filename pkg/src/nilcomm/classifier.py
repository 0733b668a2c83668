"""Decision pipeline for cases A, B and C.

For each case one square-integrable stratum is fixed (its centre
representative comes from :meth:`CaseAlgebra.generic_center`), ``tau`` is
restricted to the stabilizer ``K_lambda`` and the metaplectic scan decides
whether ``omega ⊗ tau|`` repeats an irreducible.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import (
    DomainError,
    NonDominantError,
    UnsupportedAlgebraError,
)
from .metaplectic import (
    COMMUTATIVE,
    Verdict,
    default_scan_bound,
    multiplicity_free_scan,
)
from .nilpotent import (
    CenterElement,
    b_lambda_matrix,
    case_algebra,
    pfaffian,
    stabilizer_dimension,
)
from .weights import (
    AlgebraType,
    Decomposition,
    HighestWeight,
    dimension_ceiling,
    freudenthal_multiplicities,
    reflect_to_dominant,
    validate_dominant,
    weyl_dimension,
)

__all__ = [
    "UNRESOLVED_DET",
    "TripleSpec",
    "Stratum",
    "branch_so_odd_to_even",
    "branch_so7_to_so6",
    "restrict_u2n_to_spn",
    "restrict_case_B",
    "restriction",
    "stratum",
    "classify_triple",
    "circle_stratum_is_free",
]

UNRESOLVED_DET = "UNRESOLVED-BY-PAPER"
SUPPORTED_RESTRICTION_RANKS = (1, 2)


@dataclass(frozen=True)
class TripleSpec:
    """A case tag with its rank and a ``tau`` label.

    * A: ``tau`` is a ``u(2n)`` weight (family A, rank ``2n``).
    * B: ``tau`` is ``(r, eta)``, a circle character index and an ``sp(n)`` weight.
    * C: ``tau`` is a ``B3`` weight or a ``D3`` :class:`Decomposition`.
    """

    case: str
    tau: object
    n: int | None = None

    def __post_init__(self):
        case = self.case.upper()
        object.__setattr__(self, "case", case)
        if case == "A":
            w = self.tau
            if not isinstance(w, HighestWeight) or w.algebra != AlgebraType("A", 2 * (self.n or 0)):
                raise DomainError(f"case A tau must be a u({2 * (self.n or 0)}) weight")
            if not validate_dominant(w):
                raise NonDominantError(f"{w} is not dominant for u({2 * self.n})")
        elif case == "B":
            r, eta = self.tau
            if not isinstance(r, int) or isinstance(r, bool):
                raise DomainError("case B circle character index must be an integer")
            if eta.algebra != AlgebraType("C", self.n or 0):
                raise DomainError(f"case B tau needs an sp({self.n}) weight, got {eta.algebra}")
            if not validate_dominant(eta):
                raise NonDominantError(f"{eta} is not dominant for sp({self.n})")
        elif case == "C":
            if self.n is not None:
                raise DomainError("case C has no rank parameter")
            t = self.tau
            if isinstance(t, HighestWeight):
                if t.algebra != AlgebraType("B", 3) or not validate_dominant(t):
                    raise NonDominantError(f"case C tau must be a dominant so(7) weight, got {t}")
            elif isinstance(t, Decomposition):
                if t.algebra != AlgebraType("D", 3) or not t:
                    raise DomainError("case C restriction must be a non-empty so(6) decomposition")
            else:
                raise DomainError("case C tau must be a B3 weight or a D3 decomposition")
        else:
            raise DomainError(f"unknown case {self.case!r}")


# -- branching ----------------------------------------------------------------


def branch_so_odd_to_even(lam: HighestWeight) -> Decomposition:
    """Restrict an ``so(2m+1)`` module to ``so(2m)`` by interlacing.

    ``lam_1 >= mu_1 >= lam_2 >= ... >= lam_m >= |mu_m|`` with ``mu - lam``
    integral; every constituent has multiplicity one.
    """
    if lam.algebra.family != "B":
        raise UnsupportedAlgebraError(f"expected an so(2m+1) weight, got {lam.algebra}")
    if not validate_dominant(lam):
        raise NonDominantError(f"{lam} is not dominant for {lam.algebra}")
    m = lam.algebra.rank
    target = AlgebraType("D", m)
    c = lam.coords2
    parity = c[0] % 2
    # doubled coordinates: steps of 2 keep the parity class
    ranges = []
    for i in range(m - 1):
        ranges.append(range(c[i + 1], c[i] + 1, 2))
    ranges.append(range(-c[-1], c[-1] + 1, 2))
    terms = {}

    def rec(prefix, i):
        if i == m:
            terms[HighestWeight(target, tuple(prefix))] = 1
            return
        for x in ranges[i]:
            if x % 2 == parity:
                rec(prefix + [x], i + 1)

    rec([], 0)
    out = Decomposition(terms, algebra=target)
    assert out.dimension() == weyl_dimension(lam)
    return out


def branch_so7_to_so6(lam: HighestWeight) -> Decomposition:
    if lam.algebra != AlgebraType("B", 3):
        raise UnsupportedAlgebraError(f"expected a B3 weight, got {lam.algebra}")
    return branch_so_odd_to_even(lam)


def restrict_u2n_to_spn(tau: HighestWeight, n: int, ceiling: int | None = None) -> Decomposition:
    """Restrict a ``u(2n)`` module to ``sp(n)`` by weight restriction and peeling.

    ``Sp(n)`` is the stabilizer of the form pairing ``e_i`` with ``e_{n+i}``,
    so a ``u(2n)`` weight ``x`` restricts to ``(x_i - x_{n+i})_i``.
    """
    if n not in SUPPORTED_RESTRICTION_RANKS:
        raise UnsupportedAlgebraError(f"restriction implemented for n in {SUPPORTED_RESTRICTION_RANKS}")
    if tau.algebra != AlgebraType("A", 2 * n):
        raise DomainError(f"expected a u({2 * n}) weight, got {tau.algebra}")
    limit = dimension_ceiling(ceiling)
    weights = freudenthal_multiplicities(tau, ceiling=limit)
    target = AlgebraType("C", n)
    remaining: Counter = Counter()
    for x, m in weights.items():
        remaining[tuple(x[i] - x[n + i] for i in range(n))] += m

    rho = tuple(2 * (n - i) for i in range(n))
    terms: dict[HighestWeight, int] = {}
    while remaining:
        dominant = [w for w in remaining if reflect_to_dominant(target, w)[0] == w]
        top = max(dominant, key=lambda w: (sum(a * b for a, b in zip(w, rho)), w))
        count = remaining[top]
        assert count > 0
        hw = HighestWeight(target, top)
        terms[hw] = count
        for mu, mm in freudenthal_multiplicities(hw, ceiling=limit).items():
            remaining[mu] -= count * mm
            assert remaining[mu] >= 0, "weight restriction is not a character"
            if remaining[mu] == 0:
                del remaining[mu]
    out = Decomposition(terms, algebra=target)
    assert out.dimension() == weyl_dimension(tau)
    return out


def restrict_case_B(tau) -> Decomposition:
    """At the ``(0, j)`` stratum the circle factor drops out and ``tau|`` is ``eta``."""
    _r, eta = tau
    return Decomposition({eta: 1})


def restriction(spec: TripleSpec, ceiling: int | None = None) -> Decomposition:
    if spec.case == "A":
        return restrict_u2n_to_spn(spec.tau, spec.n, ceiling=ceiling)
    if spec.case == "B":
        return restrict_case_B(spec.tau)
    if isinstance(spec.tau, Decomposition):
        return spec.tau
    return branch_so7_to_so6(spec.tau)


# -- strata -------------------------------------------------------------------


@dataclass(frozen=True)
class Stratum:
    """The centre representative consulted for a case, with its checks."""

    center: CenterElement
    pfaffian: object
    stabilizer_dimension: int
    expected_stabilizer: str

    def to_json(self) -> dict:
        return {
            "center": str(self.center),
            "pfaffian": str(self.pfaffian),
            "squareIntegrable": self.pfaffian != 0,
            "stabilizerDimension": self.stabilizer_dimension,
            "stabilizer": self.expected_stabilizer,
        }


def stratum(case: str, n: int | None = None) -> Stratum:
    alg = case_algebra(case, n)
    X = alg.generic_center()
    pf = pfaffian(b_lambda_matrix(alg, X))
    dim = stabilizer_dimension(alg, X)
    if alg.tag in ("A", "B"):
        name, expected = f"sp({n})", n * (2 * n + 1)
    else:
        name, expected = "spin(6)", 15
    if pf == 0 or dim != expected:
        raise AssertionError(f"stratum check failed for {alg}: pf={pf}, dim={dim}")
    return Stratum(X, pf, dim, name)


def circle_stratum_is_free(n: int) -> bool:
    """At ``X = (0, i)`` the stabilizer is all of ``S^1 x Sp(n)``.

    A circle character then leaves ``omega`` untouched as an ``Sp(n)``
    module, and the one-row components ``(j)`` are pairwise distinct.
    """
    alg = case_algebra("B", n)
    X = CenterElement.parse(alg, "(0, i)")
    if stabilizer_dimension(alg, X) != n * (2 * n + 1) + 1:
        return False
    comps = [AlgebraType("C", n).one_row(j) for j in range(13)]
    return len(set(comps)) == len(comps)


def classify_triple(
    spec: TripleSpec, J: int | None = None, workers: int = 1, ceiling: int | None = None
) -> Verdict:
    """``Commutative`` / ``NonCommutative`` verdict for a triple, bounded by the scan depth."""
    stratum(spec.case, spec.n)
    restricted = restriction(spec, ceiling=ceiling)
    if J is None:
        J = default_scan_bound(restricted)
    if J < 0:
        raise DomainError("scan bound must be non-negative")

    flags: tuple[str, ...] = ()
    trivial = restricted.algebra.zero()
    if dict(restricted) == {trivial: 1}:
        if spec.case == "A" and not spec.tau.is_trivial:
            flags = (UNRESOLVED_DET,)
        if spec.case == "B" and not circle_stratum_is_free(spec.n):
            raise AssertionError("circle stratum check failed")
        return Verdict(COMMUTATIVE, J, None, flags)

    algebra = restricted.algebra
    return multiplicity_free_scan(algebra, restricted, J, workers=workers, ceiling=ceiling).as_classification(flags)

