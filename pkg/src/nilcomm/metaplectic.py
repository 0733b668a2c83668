"""Truncated metaplectic spectra and the multiplicity-freeness scan.

The metaplectic module of ``Sp(n)`` (or of ``Spin(6)``, through the one-row
identification) is ``⊕_j (j, 0, ..., 0)``.  A scan tensors the first ``J+1``
components with a restricted module and looks for an irreducible that
shows up twice.  A ``MultiplicityFree`` verdict only covers ``j <= J``.
"""
from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .errors import CeilingExceededError, DomainError, UnsupportedAlgebraError
from .tensor import okada_row_tensor, tensor_klimyk
from .weights import AlgebraType, Decomposition, HighestWeight, dimension_ceiling, weyl_dimension

__all__ = [
    "MULTIPLICITY_FREE",
    "DUPLICATE",
    "COMMUTATIVE",
    "NON_COMMUTATIVE",
    "MetaplecticSpectrum",
    "Certificate",
    "Verdict",
    "metaplectic_components",
    "default_scan_bound",
    "row_tensor",
    "multiplicity_free_scan",
    "dimension_report",
]

MULTIPLICITY_FREE = "MultiplicityFree"
DUPLICATE = "Duplicate"
COMMUTATIVE = "Commutative"
NON_COMMUTATIVE = "NonCommutative"

_KINDS = (MULTIPLICITY_FREE, DUPLICATE, COMMUTATIVE, NON_COMMUTATIVE)


def _check_algebra(algebra: AlgebraType) -> None:
    if algebra.family == "C" or (algebra.family == "D" and algebra.rank == 3):
        return
    raise UnsupportedAlgebraError(f"metaplectic spectra are defined for C_n and D_3, not {algebra}")


@dataclass(frozen=True)
class MetaplecticSpectrum:
    algebra: AlgebraType
    truncation: int
    components: tuple[HighestWeight, ...]

    def __post_init__(self):
        expected = tuple(self.algebra.one_row(j) for j in range(self.truncation + 1))
        if self.components != expected:
            raise DomainError("components must be the one-row weights (j,0,...,0), j <= J")


def metaplectic_components(algebra: AlgebraType | str, J: int) -> MetaplecticSpectrum:
    if isinstance(algebra, str):
        algebra = AlgebraType.parse(algebra)
    _check_algebra(algebra)
    if J < 0:
        raise DomainError(f"truncation must be non-negative, got {J}")
    return MetaplecticSpectrum(algebra, J, tuple(algebra.one_row(j) for j in range(J + 1)))


@dataclass(frozen=True)
class Certificate:
    """A weight ``sigma`` seen with total multiplicity >= 2, with its ``(j, mult)`` occurrences."""

    sigma: HighestWeight
    occurrences: tuple[tuple[int, int], ...]

    @property
    def total(self) -> int:
        return sum(m for _, m in self.occurrences)

    @property
    def js(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.occurrences)

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma.notation(),
            "occurrences": [{"j": j, "mult": m} for j, m in self.occurrences],
        }


@dataclass(frozen=True)
class Verdict:
    kind: str
    scanned_j: int
    certificate: Certificate | None = None
    flags: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown verdict kind {self.kind!r}")
        duplicate = self.kind in (DUPLICATE, NON_COMMUTATIVE)
        if duplicate != (self.certificate is not None):
            raise ValueError("a certificate is required exactly for duplicate verdicts")
        if self.certificate is not None and self.certificate.total < 2:
            raise ValueError("certificate must witness total multiplicity >= 2")

    @property
    def is_multiplicity_free(self) -> bool:
        return self.certificate is None

    def as_classification(self, flags: tuple[str, ...] = ()) -> "Verdict":
        kind = COMMUTATIVE if self.is_multiplicity_free else NON_COMMUTATIVE
        return Verdict(kind, self.scanned_j, self.certificate, tuple(self.flags) + tuple(flags))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "scannedJ": self.scanned_j,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "flags": list(self.flags),
        }


def default_scan_bound(components) -> int:
    """``max(12, 2 * spread + 2)`` with ``spread = first - last`` coordinate over all components."""
    spread = 0
    for w in components:
        c = w.coords2
        spread = max(spread, (c[0] - c[-1]) // 2)
    return max(12, 2 * spread + 2)


def row_tensor(eta: HighestWeight, j: int, ceiling: int | None = None) -> Decomposition:
    """``eta ⊗ (j, 0, ..., 0)``: interlacing rule for integral so(6), Klimyk otherwise."""
    row = eta.algebra.one_row(j)
    limit = dimension_ceiling(ceiling)
    if weyl_dimension(eta) * weyl_dimension(row) > limit:
        raise CeilingExceededError(f"dim {eta} * dim {row} exceeds ceiling {limit}")
    if eta.algebra.family == "D" and not eta.is_spin:
        return okada_row_tensor(eta, j)
    return tensor_klimyk(eta, row, ceiling=limit)


def _layer(args) -> dict[HighestWeight, int]:
    j, terms, ceiling = args
    acc: dict[HighestWeight, int] = defaultdict(int)
    for eta, c in terms:
        for sigma, m in row_tensor(eta, j, ceiling).items():
            acc[sigma] += c * m
    return dict(acc)


def multiplicity_free_scan(
    algebra: AlgebraType | str,
    tau_components: Decomposition,
    J: int,
    workers: int = 1,
    ceiling: int | None = None,
) -> Verdict:
    """Look for a repeated irreducible in ``(⊕_{j<=J} (j)) ⊗ tau``.

    The selected duplicate is deterministic: the smallest ``j`` at which some
    weight reaches total multiplicity 2, then the lexicographically smallest
    such weight.  Its occurrences are listed up to that ``j``.
    """
    spectrum = metaplectic_components(algebra, J)
    if not tau_components:
        raise DomainError("tau restriction must be non-empty")
    if tau_components.algebra != spectrum.algebra:
        raise DomainError(f"tau is over {tau_components.algebra}, scan is over {spectrum.algebra}")
    terms = tuple(tau_components.items())
    limit = dimension_ceiling(ceiling)
    jobs = [(j, terms, limit) for j in range(J + 1)]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            layers = iter(pool.map(_layer, jobs))
            return _merge(layers, J)
    return _merge(map(_layer, jobs), J)


def _merge(layers, J: int) -> Verdict:
    seen: dict[HighestWeight, list[tuple[int, int]]] = defaultdict(list)
    for j, layer in enumerate(layers):
        hits = []
        for sigma, m in layer.items():
            seen[sigma].append((j, m))
            if sum(mm for _, mm in seen[sigma]) >= 2:
                hits.append(sigma)
        if hits:
            sigma = min(hits, key=lambda w: w.coords2)
            return Verdict(DUPLICATE, J, Certificate(sigma, tuple(seen[sigma])))
    return Verdict(MULTIPLICITY_FREE, J)


def dimension_report(algebra: AlgebraType | str, J: int) -> list[dict]:
    """Compare ``dim (j,0,...)`` with ``dim P_j(C^m)`` for the spectrum's ambient ``C^m``.

    Informational only.  For ``C_n`` the two agree (``m = 2n``).  For ``D_3``
    the ambient space is ``C^4`` and the one-row so(6) dimensions differ
    from ``dim P_j(C^4)`` once ``j >= 1``.
    """
    spectrum = metaplectic_components(algebra, J)
    alg = spectrum.algebra
    m = 2 * alg.rank if alg.family == "C" else 4
    rows = []
    for j, w in enumerate(spectrum.components):
        d_weight = weyl_dimension(w)
        d_poly = comb(j + m - 1, m - 1)
        rows.append({"j": j, "weylDimension": d_weight, "polynomialDimension": d_poly,
                     "consistent": d_weight == d_poly})
    return rows
