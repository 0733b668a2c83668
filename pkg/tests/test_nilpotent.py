"""Hypercomplex arithmetic, exact Pfaffians and the three case algebras."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracle
from nilcomm.catalog import load_multiplication_tables
from nilcomm.errors import DomainError, NotationError
from nilcomm.nilpotent import (
    CenterElement,
    Octonion,
    Quaternion,
    SkewForm,
    b_lambda_matrix,
    bracket,
    case_algebra,
    determinant,
    left_multiplication,
    lie_algebra_generators,
    octonion_table,
    parse_quaternion,
    pfaffian,
    quaternion_table,
    rank,
    square_integrable,
    stabilizer_dimension,
)

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)
ALGEBRAS = [case_algebra("A", 1), case_algebra("A", 2), case_algebra("B", 1), case_algebra("B", 2), case_algebra("C")]


def quaternions():
    return st.tuples(rationals, rationals, rationals, rationals).map(lambda c: Quaternion(*c))


def octonions(imaginary=False):
    head = st.just(Fraction(0)) if imaginary else rationals
    return st.tuples(head, *[rationals] * 7).map(Octonion)


@st.composite
def skew_matrices(draw, sizes=(2, 4, 6, 8)):
    n = draw(st.sampled_from(sizes))
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = draw(rationals)
            m[i][j], m[j][i] = x, -x
    return m


def vectors(dim):
    return st.lists(rationals, min_size=dim, max_size=dim).map(tuple)


# -- quaternions and octonions ---------------------------------------------------------

def test_quaternion_units():
    i, j, k = (Quaternion.unit(t) for t in (1, 2, 3))
    assert i * j == k and j * k == i and k * i == j
    assert j * i == -k and i * i == Quaternion(-1)


def test_octonion_convention():
    e = [Octonion.unit(t) for t in range(8)]
    assert e[1] * e[2] == e[3]
    assert octonion_table()[1][2] == "+e3"
    assert (e[1] * e[2]) * e[4] != e[1] * (e[2] * e[4])


def test_tables_match_packaged_fixture():
    fixture = load_multiplication_tables()
    assert [tuple(r) for r in fixture["quaternion"]["table"]] == list(quaternion_table())
    assert [tuple(r) for r in fixture["octonion"]["table"]] == list(octonion_table())


def test_octonion_table_is_a_signed_latin_square():
    table = octonion_table()
    for row in table:
        assert sorted(x[1:] for x in row) == [f"e{k}" for k in range(8)]
    for a in range(1, 8):
        assert table[a][a] == "-e0"


@given(quaternions(), quaternions())
def test_quaternion_norm_is_multiplicative(p, q):
    assert (p * q).norm2() == p.norm2() * q.norm2()
    assert (p * q).conj() == q.conj() * p.conj()


@given(octonions(), octonions())
def test_octonions_are_alternative_and_normed(x, y):
    assert (x * x) * y == x * (x * y)
    assert (y * x) * x == y * (x * x)
    assert (x * y).norm2() == x.norm2() * y.norm2()


@given(octonions(imaginary=True))
def test_h_type_identity(z):
    L = left_multiplication(z)
    square = [[sum(L[i][k] * L[k][j] for k in range(8)) for j in range(8)] for i in range(8)]
    assert square == [[-z.norm2() if i == j else 0 for j in range(8)] for i in range(8)]


@pytest.mark.parametrize(
    "text, coords",
    [("j", (0, 0, 1, 0)), ("i+j", (0, 1, 1, 0)), ("-3/2k", (0, 0, 0, Fraction(-3, 2))), ("1/2 + 2i", (Fraction(1, 2), 2, 0, 0))],
)
def test_parse_quaternion(text, coords):
    assert parse_quaternion(text) == Quaternion(*coords)


@pytest.mark.parametrize("text", ["", "x", "i j", "2*"])
def test_parse_quaternion_rejects(text):
    with pytest.raises(NotationError):
        parse_quaternion(text)


# -- Pfaffians ---------------------------------------------------------------------------

def test_pfaffian_base_cases():
    a = Fraction(7, 3)
    assert pfaffian([[0, a], [-a, 0]]) == a
    block = [[0] * 6 for _ in range(6)]
    for t in range(3):
        block[2 * t][2 * t + 1], block[2 * t + 1][2 * t] = 1, -1
    assert pfaffian(block) == 1
    assert pfaffian([]) == 1


def test_pfaffian_domain():
    with pytest.raises(DomainError):
        pfaffian([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    with pytest.raises(DomainError):
        SkewForm([[0, 1], [1, 0]])
    with pytest.raises(DomainError):
        SkewForm([[1, 0], [0, 0]])


@given(skew_matrices())
def test_pfaffian_matches_matching_expansion(m):
    assert pfaffian(m) == oracle.pfaffian_by_matchings(m)


@given(skew_matrices())
def test_pfaffian_squares_to_determinant(m):
    det = determinant(m)
    assert det == oracle.det_by_elimination(m)
    assert pfaffian(m) ** 2 == det


@given(st.lists(st.lists(rationals, min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_matches_elimination(rows):
    assert rank(rows) == oracle.rank_by_elimination(rows)


# -- case algebras -------------------------------------------------------------------------

def test_case_shapes():
    assert [a.dim_v for a in ALGEBRAS] == [4, 8, 4, 8, 8]
    assert [a.dim_center for a in ALGEBRAS] == [3, 13, 3, 8, 7]
    assert [len(lie_algebra_generators(a)) for a in ALGEBRAS] == [4, 16, 4, 11, 21]
    with pytest.raises(DomainError):
        case_algebra("C", 2)
    with pytest.raises(DomainError):
        case_algebra("A", None)
    with pytest.raises(DomainError):
        case_algebra("E", 1)


def test_case_a_bracket_of_standard_basis():
    a = case_algebra("A", 1)
    u, v = a.v_from_complex([1, 0]), a.v_from_complex([0, 1])
    # u v^t - v u^t = [[0, 1], [-1, 0]] and Im(u* v) = 0
    assert bracket(a, u, v) == (1, 0, 0)
    # Im(u* (i u)) = |u|^2
    assert bracket(a, u, a.v_from_complex([(0, 1), 0])) == (0, 0, 1)


def test_case_b_bracket_of_one_and_i():
    b = case_algebra("B", 1)
    u, v = b.v_from_quaternions([Quaternion(1)]), b.v_from_quaternions([Quaternion(0, 1)])
    assert dict(zip(b.center_labels, bracket(b, u, v))) == {"i": 2, "j": 0, "k": 0}


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
@given(data=st.data())
def test_bracket_is_antisymmetric(alg, data):
    u = data.draw(vectors(alg.dim_v))
    v = data.draw(vectors(alg.dim_v))
    assert bracket(alg, u, u) == (0,) * alg.dim_center
    assert bracket(alg, u, v) == tuple(-x for x in bracket(alg, v, u))


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
@given(data=st.data())
def test_generators_act_by_derivations(alg, data):
    gens = lie_algebra_generators(alg)
    g = gens[data.draw(st.integers(0, len(gens) - 1))]
    u = data.draw(vectors(alg.dim_v))
    v = data.draw(vectors(alg.dim_v))
    lhs = g.act_center(bracket(alg, u, v))
    rhs = tuple(x + y for x, y in zip(bracket(alg, g.act_v(u), v), bracket(alg, u, g.act_v(v))))
    assert lhs == rhs


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
@given(data=st.data())
def test_generators_preserve_the_centre_inner_product(alg, data):
    gens = lie_algebra_generators(alg)
    g = gens[data.draw(st.integers(0, len(gens) - 1))]
    x = data.draw(vectors(alg.dim_center))
    y = data.draw(vectors(alg.dim_center))
    assert alg.center_inner(g.act_center(x), y) == -alg.center_inner(x, g.act_center(y))


# -- B_lambda, square integrability, stabilizers ---------------------------------------------

def test_zero_centre_gives_zero_form():
    for alg in ALGEBRAS:
        X = CenterElement.zero(alg)
        assert all(x == 0 for row in b_lambda_matrix(alg, X).rows for x in row)
        assert not square_integrable(alg, X)


def test_case_b_form_at_j():
    b = case_algebra("B", 1)
    X = CenterElement.parse(b, "(0, j)")
    B = b_lambda_matrix(b, X)
    assert B.size == 4 and pfaffian(B) != 0
    assert square_integrable(b, X)


def test_case_c_form_is_left_multiplication():
    c = case_algebra("C")
    B = b_lambda_matrix(c, CenterElement.parse(c, "e1")).rows
    L = left_multiplication(Octonion.unit(1))
    assert B == tuple(zip(*L))
    assert pfaffian(B) == -1


@pytest.mark.parametrize("n, ratio", [(1, -4), (2, 16)])
@pytest.mark.parametrize("q", ["i", "j", "k", "i+j", "2i-k", "1/2j", "i+j+k"])
def test_case_b_pfaffian_is_a_multiple_of_norm_power(n, ratio, q):
    b = case_algebra("B", n)
    pf = pfaffian(b_lambda_matrix(b, CenterElement.parse(b, f"(0, {q})")))
    assert pf == ratio * parse_quaternion(q).norm2() ** n


def test_case_a_rank_two_wedge_is_degenerate_for_n2():
    a = case_algebra("A", 2)
    u, v = a.v_from_complex([1, 0, 0, 0]), a.v_from_complex([0, 0, 1, 0])
    X = CenterElement(a, bracket(a, u, v)[:-1] + (0,))
    assert not square_integrable(a, X)
    assert square_integrable(a, a.generic_center())


@pytest.mark.parametrize(
    "tag, n, center, dim",
    [("B", 1, "(0, j)", 3), ("B", 1, "(0, i)", 4), ("B", 2, "(0, j)", 10), ("B", 2, "(0, i)", 11),
     ("C", None, "e1", 15), ("C", None, "e3-e5", 15), ("A", 1, "(w12, 0)", 3), ("A", 2, "(w13+w24, 0)", 10)],
)
def test_stabilizer_dimensions(tag, n, center, dim):
    alg = case_algebra(tag, n)
    X = CenterElement.parse(alg, center)
    assert stabilizer_dimension(alg, X) == dim
    images = [g.act_center(X.coords) for g in lie_algebra_generators(alg)]
    assert len(images) - oracle.rank_by_elimination(images) == dim


def test_centre_literals():
    a2 = case_algebra("A", 2)
    assert str(CenterElement.parse(a2, "(w12+2iw34, 1/2)")) == "w12+2iw34+1/2s"
    assert str(CenterElement.parse(case_algebra("B", 2), "(a12i+d1, i+j)")) == "a12i+d1+i+j"
    assert CenterElement.parse(case_algebra("C"), "e1+2e3").coords == (1, 0, 2, 0, 0, 0, 0)
    with pytest.raises(NotationError):
        CenterElement.parse(case_algebra("C"), "e8")
    with pytest.raises(NotationError):
        CenterElement.parse(case_algebra("B", 1), "(0, 1+i)")
    with pytest.raises(DomainError):
        CenterElement(case_algebra("C"), (1, 2))
