"""Polynomials, characters, and exact linear algebra."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exocone import (
    LaurentChar,
    Matrix,
    MultiPoly,
    graded_pieces,
    jordan_type,
    kernel_basis,
    linear_form,
    lowest_term,
    pfaffian,
    rank,
    row_reduce,
    solve_linear,
)
from exocone.verify import pfaffian_term_sum


def poly_strategy(nvars=2, maxdeg=3):
    exps = st.tuples(*(st.integers(0, maxdeg) for _ in range(nvars)))
    coeffs = st.integers(-4, 4)
    return st.dictionaries(exps, coeffs, max_size=5).map(
        lambda d: MultiPoly(nvars, d)
    )


@settings(max_examples=80, deadline=None, derandomize=True)
@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_poly_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + MultiPoly.zero(2) == f
    assert f * MultiPoly.one(2) == f
    assert f - f == MultiPoly.zero(2)


def test_poly_basics():
    x = MultiPoly.variable(1, 2)
    y = MultiPoly.variable(2, 2)
    f = (x + y) * (x - y)
    assert f == x**2 - y**2
    assert f.degree() == 2
    assert f.is_homogeneous()
    assert (x + x * y).homogeneous_component(1) == x
    assert not MultiPoly.zero(2)
    with pytest.raises(ValueError):
        MultiPoly.zero(2).degree()


def test_poly_scalar_and_cross_rank_eq():
    assert MultiPoly.constant(3, 7) == 7
    assert MultiPoly.zero(1) == 0
    assert MultiPoly.variable(1, 1) != MultiPoly.variable(1, 2)


def test_poly_evaluate():
    x = MultiPoly.variable(1, 2)
    y = MultiPoly.variable(2, 2)
    f = x**2 - y**2
    assert f.evaluate([3, 1]) == 8
    assert f.evaluate([Fraction(1, 2), Fraction(1, 3)]) == Fraction(5, 36)
    # polynomial values compose
    assert f.evaluate([y, x]) == y**2 - x**2


def test_poly_text_rendering():
    x = MultiPoly.variable(1, 2)
    y = MultiPoly.variable(2, 2)
    assert (x**2 - y**2).text() == "e1^2 - e2^2"
    assert (x * y * (x**2 - y**2)).text() == "e1^3*e2 - e1*e2^3"
    assert MultiPoly.one(2).text() == "1"
    assert MultiPoly.zero(2).text() == "0"
    assert (2 * x - 3 * y).text() == "2*e1 - 3*e2"
    assert (x - y).text("t") == "t1 - t2"


def test_poly_sorted_terms_graded_lex():
    x = MultiPoly.variable(1, 2)
    y = MultiPoly.variable(2, 2)
    f = x * y + x**2 + y + 1
    assert [e for e, _ in f.sorted_terms()] == [
        (2, 0),
        (1, 1),
        (0, 1),
        (0, 0),
    ]


def test_poly_json_round_trip():
    f = MultiPoly(2, {(3, 1): 1, (1, 3): Fraction(-1, 2)})
    data = f.to_json()
    assert data["vars"] == 2
    assert data["terms"][0] == {"c": "1", "e": [3, 1]}
    assert MultiPoly.from_json(data) == f


def test_linear_form():
    assert linear_form((1, -1)) == MultiPoly(2, {(1, 0): 1, (0, 1): -1})
    assert linear_form((0, 2, 0)) == MultiPoly(3, {(0, 1, 0): 2})


def test_euler_factor_and_graded_pieces():
    # 1 - e^{-eps1} opens with eps1
    ch = LaurentChar.euler_factor((1, 0))
    pieces = graded_pieces(ch, 2)
    assert pieces[0] == MultiPoly.zero(2)
    assert pieces[1] == MultiPoly.variable(1, 2)
    # 2 - e^{-eps1} - e^{-eps2} opens with eps1 + eps2
    ch2 = LaurentChar.euler_factor((1, 0)) + LaurentChar.euler_factor((0, 1))
    assert lowest_term(ch2) == linear_form((1, 1))


def test_lowest_term_multiplicative_on_factors():
    f1 = LaurentChar.euler_factor((1, 0))
    f2 = LaurentChar.euler_factor((1, 1))
    f3 = LaurentChar.euler_factor((0, 1))
    prod = f1 * f2 * f3
    expect = linear_form((1, 0)) * linear_form((1, 1)) * linear_form((0, 1))
    assert lowest_term(prod) == expect


def test_lowest_term_rejects_zero_character():
    ch = LaurentChar.euler_factor((1, 0)) - LaurentChar.euler_factor((1, 0))
    with pytest.raises(ValueError):
        lowest_term(ch)


def test_char_exp_weight_algebra():
    a = LaurentChar.exp_weight((1, 0))
    b = LaurentChar.exp_weight((-1, 0))
    assert a * b == LaurentChar.one(2)
    assert LaurentChar.one(2) - LaurentChar.exp_weight((0, 0)) == 0


def test_matrix_arithmetic():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[0, 1], [1, 0]])
    assert a @ b == Matrix([[2, 1], [4, 3]])
    assert a + b - b == a
    assert 2 * a == a * 2
    assert a ** 0 == Matrix.identity(2)
    assert a ** 3 == a @ a @ a
    assert a.transpose().transpose() == a
    assert a.apply((1, 0)) == (1, 3)


def test_matrix_det_and_pfaffian():
    rng = random.Random(11)
    for size in (2, 4, 6):
        for _ in range(5):
            upper = {
                (i, j): Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                for i in range(size)
                for j in range(i + 1, size)
            }
            ent = dict(upper)
            ent.update({(j, i): -c for (i, j), c in upper.items()})
            m = Matrix.from_entries(size, size, ent)
            pf = pfaffian(m)
            assert pf * pf == m.det()
            assert pf == pfaffian_term_sum(m)


def test_pfaffian_rejects_non_alternating():
    with pytest.raises(ValueError):
        pfaffian(Matrix([[1, 0], [0, 1]]))
    with pytest.raises(ValueError):
        pfaffian(Matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]))  # odd size


def test_rank_kernel_solve():
    m = Matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(m) == 2
    ker = kernel_basis(m)
    assert len(ker) == 1
    assert all(c == 0 for c in m.apply(ker[0]))
    sol = solve_linear(m, (6, 12, 2))
    assert sol is not None
    particular, null = sol
    assert m.apply(particular) == (6, 12, 2)
    assert len(null) == 1
    assert solve_linear(m, (1, 0, 0)) is None


def test_row_reduce_is_rref():
    m = Matrix([[2, 4], [1, 3]])
    red, pivots = row_reduce(m)
    assert red == Matrix([[1, 0], [0, 1]])
    assert pivots == (0, 1)
    red2, pivots2 = row_reduce(Matrix([[0, 0], [1, 2]]))
    assert red2.rows[0] == (1, 2)
    assert pivots2 == (0,)  # pivot column indices


def test_jordan_type():
    assert jordan_type(Matrix.zeros(3, 3)) == (1, 1, 1)
    j2 = Matrix([[0, 1], [0, 0]])
    assert jordan_type(j2) == (2,)
    m = Matrix.from_entries(5, 5, {(0, 1): 1, (1, 2): 1, (3, 4): 1})
    assert jordan_type(m) == (3, 2)
    with pytest.raises(ValueError):
        jordan_type(Matrix.identity(2))


@settings(max_examples=40, deadline=None, derandomize=True)
@given(
    st.lists(
        st.lists(st.integers(-3, 3), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
def test_rank_transpose_invariant(rows):
    m = Matrix(rows)
    assert rank(m) == rank(m.transpose())
