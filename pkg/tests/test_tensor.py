"""Tensor products: reflection algorithm, interlacing rule and the row-2 containment check."""
import pytest
from hypothesis import given, strategies as st

from nilcomm.errors import AlgebraMismatchError, CeilingExceededError, DomainError, NonDominantError, ParityError
from nilcomm.tensor import (
    InterlacingWitness,
    okada_row_multiplicity,
    okada_row_tensor,
    okada_witnesses,
    tensor_klimyk,
    verify_row2_selfcontainment,
)
from nilcomm.weights import AlgebraType, Decomposition, HighestWeight, weyl_dimension

from test_weights import dominant_weights

# Character-formula products (tests/oracle.py), doubled coordinates.
FROZEN_TENSORS = {
    ("C", 1, (2,), (2,)): {(4,): 1, (0,): 1},
    ("C", 1, (2,), (4,)): {(6,): 1, (2,): 1},
    ("D", 3, (2, 0, 0), (2, 0, 0)): {(4, 0, 0): 1, (2, 2, 0): 1, (0, 0, 0): 1},
    ("C", 2, (2, 0), (2, 2)): {(4, 2): 1, (2, 0): 1},
    ("C", 2, (4, 2), (4, 0)): {(8, 2): 1, (6, 4): 1, (6, 0): 1, (4, 2): 2, (2, 0): 1},
    ("B", 3, (1, 1, 1), (1, 1, 1)): {(2, 2, 2): 1, (2, 2, 0): 1, (2, 0, 0): 1, (0, 0, 0): 1},
    ("D", 3, (2, 2, 2), (4, 0, 0)): {(6, 2, 2): 1, (4, 2, 0): 1, (2, 2, -2): 1},
    ("D", 3, (4, 2, 0), (8, 0, 0)): {
        (12, 2, 0): 1, (10, 4, 0): 1, (10, 2, 2): 1, (10, 2, -2): 1, (10, 0, 0): 1,
        (8, 4, 2): 1, (8, 4, -2): 1, (8, 2, 0): 2, (6, 4, 0): 1, (6, 2, 2): 1,
        (6, 2, -2): 1, (6, 0, 0): 1, (4, 2, 0): 1,
    },
    ("D", 3, (2, 2, -2), (4, 0, 0)): {(6, 2, -2): 1, (4, 2, 0): 1, (2, 2, 2): 1},
    ("A", 3, (4, 2, 0), (2, 0, 0)): {(6, 2, 0): 1, (4, 4, 0): 1, (4, 2, 2): 1},
    ("D", 3, (1, 1, 1), (2, 0, 0)): {(3, 1, 1): 1, (1, 1, -1): 1},
    ("B", 2, (1, 1), (2, 0)): {(3, 1): 1, (1, 1): 1},
    ("D", 3, (1, 1, 1), (3, 1, -1)): {(4, 2, 0): 1, (2, 2, -2): 1, (2, 0, 0): 1},
}

D3 = AlgebraType("D", 3)


def d3(*coords):
    return HighestWeight.from_coords(D3, coords)


def as_dict(d: Decomposition):
    return {w.coords2: m for w, m in d.items()}


@pytest.mark.parametrize("key, expected", list(FROZEN_TENSORS.items()), ids=lambda k: str(k))
def test_klimyk_matches_character_products(key, expected):
    family, rank, a, b = key
    alg = AlgebraType(family, rank)
    assert as_dict(tensor_klimyk(HighestWeight(alg, a), HighestWeight(alg, b))) == expected


def test_small_named_products():
    c1 = AlgebraType("C", 1)
    one = HighestWeight.from_coords(c1, (1,))
    assert str(tensor_klimyk(one, one)) == "(2) + (0)"
    d = tensor_klimyk(d3(1, 0, 0), d3(1, 0, 0))
    assert [weyl_dimension(w) for w in d] == [20, 15, 1]


@given(dominant_weights(max_coord=2))
def test_trivial_is_the_unit(w):
    assert tensor_klimyk(w.algebra.zero(), w) == Decomposition({w: 1})


@given(st.data())
def test_klimyk_is_symmetric_and_preserves_dimension(data):
    a = data.draw(dominant_weights(families="BCD", max_coord=2))
    b = data.draw(dominant_weights(families=a.algebra.family, max_coord=2).filter(lambda w: w.algebra == a.algebra))
    ab, ba = tensor_klimyk(a, b), tensor_klimyk(b, a)
    assert ab == ba
    assert ab.dimension() == weyl_dimension(a) * weyl_dimension(b)


def test_klimyk_errors():
    with pytest.raises(AlgebraMismatchError):
        tensor_klimyk(d3(1, 0, 0), HighestWeight.from_coords("C3", (1, 0, 0)))
    with pytest.raises(NonDominantError):
        tensor_klimyk(d3(0, 1, 0), d3(1, 0, 0))
    with pytest.raises(CeilingExceededError):
        tensor_klimyk(d3(3, 2, 1), d3(3, 2, 1), ceiling=1000)


# -- interlacing rule ---------------------------------------------------------------

def test_witness_for_equal_eta_and_sigma():
    assert okada_witnesses(d3(2, 1, 0), 4, d3(2, 1, 0)) == [InterlacingWitness((1, 0, 0), 4)]
    assert okada_row_multiplicity(d3(2, 1, 0), 4, d3(2, 1, 0)) == 1


def test_witness_for_constant_partition():
    assert okada_witnesses(d3(1, 1, 1), 2, d3(2, 1, 0)) == [InterlacingWitness((1, 1, 0), 2)]
    assert okada_witnesses(d3(1, 1, 1), 2, d3(3, 1, 1)) == [InterlacingWitness((1, 1, 1), 2)]


def test_row_tensor_of_constant_partition():
    d = okada_row_tensor(d3(1, 1, 1), 2)
    assert d.multiplicity(d3(3, 1, 1)) == 1
    assert d.multiplicity(d3(2, 1, 0)) == 1
    assert as_dict(d) == {(6, 2, 2): 1, (4, 2, 0): 1, (2, 2, -2): 1}


def test_diagonal_occurrence_at_twice_the_spread():
    assert okada_row_tensor(d3(2, 1, 0), 4).multiplicity(d3(2, 1, 0)) == 1


@pytest.mark.parametrize("s", range(5))
def test_trivial_eta_gives_one_row(s):
    assert okada_row_tensor(D3.zero(), s) == Decomposition({D3.one_row(s): 1})


@given(
    st.integers(0, 3).flatmap(lambda a: st.tuples(st.just(a), st.integers(0, a))).flatmap(
        lambda ab: st.tuples(st.just(ab[0]), st.just(ab[1]), st.integers(-ab[1], ab[1]))
    ),
    st.integers(0, 5),
)
def test_interlacing_agrees_with_reflection_algorithm(eta, s):
    e = d3(*eta)
    assert okada_row_tensor(e, s) == tensor_klimyk(e, D3.one_row(s))


def test_interlacing_rejects_spin_and_other_families():
    with pytest.raises(ParityError):
        okada_row_tensor(d3("1/2", "1/2", "1/2"), 2)
    with pytest.raises(DomainError):
        okada_row_tensor(HighestWeight.from_coords("C3", (1, 0, 0)), 2)
    with pytest.raises(DomainError):
        okada_row_tensor(d3(0, 1, 0), 2)


def test_witness_validation():
    with pytest.raises(DomainError):
        InterlacingWitness((1, 0), -1)


# -- row-2 containment over sp(n) ---------------------------------------------------------

@pytest.mark.parametrize("tag, coords", [("C1", (1,)), ("C2", (1, 1)), ("C2", (3, 1)), ("C3", (2, 1, 1))])
def test_row2_contains_nontrivial_eta(tag, coords):
    assert verify_row2_selfcontainment(HighestWeight.from_coords(tag, coords))


def test_row2_trivial_eta_is_not_contained():
    # (0) x (2) = (2) has no trivial summand
    assert verify_row2_selfcontainment(AlgebraType("C", 2).zero()) is False


def test_row2_only_for_symplectic():
    with pytest.raises(DomainError):
        verify_row2_selfcontainment(d3(1, 0, 0))
