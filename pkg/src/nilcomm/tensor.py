"""Tensor product decompositions.

Two independent routes:

* :func:`tensor_klimyk` -- Brauer-Klimyk over the Freudenthal weights of one
  factor.  Works for every classical family and parity and serves as the
  oracle.
* :func:`okada_row_tensor` -- the interlacing rule for ``so(2m)`` modules
  tensored with a one-row module ``(s, 0, ..., 0)``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from .errors import (
    AlgebraMismatchError,
    CeilingExceededError,
    DomainError,
    NonDominantError,
    ParityError,
    UnsupportedAlgebraError,
)
from .weights import (
    AlgebraType,
    Decomposition,
    HighestWeight,
    _rho2,
    dimension_ceiling,
    freudenthal_multiplicities,
    reflect_to_dominant,
    validate_dominant,
    weyl_dimension,
)

__all__ = [
    "InterlacingWitness",
    "tensor_klimyk",
    "okada_witnesses",
    "okada_row_multiplicity",
    "okada_row_tensor",
    "verify_row2_selfcontainment",
]


@dataclass(frozen=True)
class InterlacingWitness:
    """A sequence ``varsigma`` counted by the one-row rule, with its degree ``s``."""

    varsigma: tuple[int, ...]
    s: int

    def __post_init__(self):
        v = self.varsigma
        if self.s < 0:
            raise DomainError("s must be non-negative")
        ok = all(v[i] >= v[i + 1] for i in range(len(v) - 2)) and v[-2] >= abs(v[-1])
        if not ok:
            raise DomainError(f"{v} violates the so(2m) dominance pattern")


def tensor_klimyk(a: HighestWeight, b: HighestWeight, ceiling: int | None = None) -> Decomposition:
    """Decompose ``a ⊗ b`` by reflecting ``a + rho + mu`` over the weights ``mu`` of one factor."""
    if a.algebra != b.algebra:
        raise AlgebraMismatchError(f"{a.algebra} vs {b.algebra}")
    for w in (a, b):
        if not validate_dominant(w):
            raise NonDominantError(f"{w} is not dominant for {w.algebra}")
    limit = dimension_ceiling(ceiling)
    da, db = weyl_dimension(a), weyl_dimension(b)
    if da * db > limit:
        raise CeilingExceededError(f"dim {a} * dim {b} = {da * db} exceeds ceiling {limit}")

    # expand the smaller factor into weights
    if db > da:
        a, b = b, a
    alg = a.algebra
    rho = _rho2(alg)
    acc: Counter = Counter()
    for mu, m in freudenthal_multiplicities(b, ceiling=limit).items():
        shifted = tuple(x + r + y for x, r, y in zip(a.coords2, rho, mu))
        dom, sign, regular = reflect_to_dominant(alg, shifted)
        if not regular:
            continue
        acc[tuple(x - r for x, r in zip(dom, rho))] += sign * m

    terms = {}
    for coords, m in acc.items():
        if m == 0:
            continue
        assert m > 0, f"negative Klimyk coefficient {m} at {coords}"
        terms[HighestWeight(alg, coords)] = m
    result = Decomposition(terms, algebra=alg)
    assert result.dimension() == da * db
    return result


def _check_okada_input(w: HighestWeight) -> None:
    if w.algebra.family != "D":
        raise UnsupportedAlgebraError(f"one-row rule is for so(2m); got {w.algebra}")
    if not validate_dominant(w):
        raise NonDominantError(f"{w} is not dominant for {w.algebra}")
    if w.is_spin:
        raise ParityError(f"one-row rule covers integral weights only; got {w}")


def _halve(w: HighestWeight) -> tuple[int, ...]:
    return tuple(c // 2 for c in w.coords2)


def _witnesses(eta: tuple[int, ...], s: int, sigma: tuple[int, ...]):
    m = len(eta)
    # condition (ii) read as two simultaneous interlacings; (iv) then pins the last entry
    ranges = [
        range(max(eta[i + 1], sigma[i + 1]), min(eta[i], sigma[i]) + 1) for i in range(m - 1)
    ]
    last = min(eta[-1], sigma[-1])
    target = sum(eta) + sum(sigma) - s
    for head in product(*ranges):
        v = head + (last,)
        if any(v[i] < v[i + 1] for i in range(m - 2)) or v[m - 2] < abs(v[m - 1]):
            continue
        if 2 * sum(v) != target:
            continue
        if v[-1] not in (eta[-1], sigma[-1]):
            continue
        yield v


def okada_witnesses(eta: HighestWeight, s: int, sigma: HighestWeight) -> list[InterlacingWitness]:
    """All sequences ``varsigma`` certifying ``sigma`` inside ``eta ⊗ (s)``."""
    if s < 0:
        raise ValueError("s must be non-negative")
    _check_okada_input(eta)
    _check_okada_input(sigma)
    if eta.algebra != sigma.algebra:
        raise AlgebraMismatchError(f"{eta.algebra} vs {sigma.algebra}")
    return [InterlacingWitness(v, s) for v in _witnesses(_halve(eta), s, _halve(sigma))]


def okada_row_multiplicity(eta: HighestWeight, s: int, sigma: HighestWeight) -> int:
    """Multiplicity of ``sigma`` in ``eta ⊗ (s, 0, ..., 0)`` over ``so(2m)``."""
    return len(okada_witnesses(eta, s, sigma))


def _dominant_candidates(eta: tuple[int, ...], s: int):
    """Dominant integral sigma in the box ``|sigma_i| <= eta_1 + s``.

    Two consequences of the interlacing conditions prune the box without
    changing the result: ``sigma_{i+1} <= eta_i`` and the parity of
    ``sum(sigma)`` is fixed by ``s - sum(eta)``.
    """
    m = len(eta)
    bound = eta[0] + s
    parity = (s - sum(eta)) % 2

    def rec(prefix):
        i = len(prefix)
        if i == m:
            if sum(prefix) % 2 == parity:
                yield tuple(prefix)
            return
        hi = bound if i == 0 else min(prefix[-1], eta[i - 1])
        if i == m - 1:
            lo = -hi
        else:
            lo = 0
        for x in range(hi, lo - 1, -1):
            yield from rec(prefix + [x])

    yield from rec([])


def okada_row_tensor(eta: HighestWeight, s: int) -> Decomposition:
    """Decompose ``eta ⊗ (s, 0, ..., 0)`` over ``so(2m)`` by counting interlacing witnesses."""
    if s < 0:
        raise ValueError("s must be non-negative")
    _check_okada_input(eta)
    alg = eta.algebra
    e = _halve(eta)
    terms = {}
    for sigma in _dominant_candidates(e, s):
        count = sum(1 for _ in _witnesses(e, s, sigma))
        if count:
            terms[HighestWeight(alg, tuple(2 * x for x in sigma))] = count
    return Decomposition(terms, algebra=alg)


def verify_row2_selfcontainment(eta: HighestWeight, ceiling: int | None = None) -> bool:
    """Does ``eta`` occur in ``eta ⊗ (2, 0, ..., 0)`` over ``sp(n)``?

    False for the trivial weight, since ``(0) ⊗ (2) = (2)``.
    """
    if eta.algebra.family != "C":
        raise UnsupportedAlgebraError(f"expected an sp(n) weight, got {eta.algebra}")
    alg: AlgebraType = eta.algebra
    return tensor_klimyk(eta, alg.one_row(2), ceiling=ceiling).multiplicity(eta) >= 1
