from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from flagbound.linalg import MatrixElement, bracket, column_space_contains, rank


def gauss_rank(rows):
    """Textbook Gauss-Jordan over Fractions, kept independent of the Bareiss path."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, elements=fractions):
    nrows = draw(st.integers(0, 6))
    ncols = draw(st.integers(1, 6))
    # sparse draws hit rank-deficient cases often
    cell = st.one_of(st.just(Fraction(0)), st.just(Fraction(0)), elements)
    return [[draw(cell) for _ in range(ncols)] for _ in range(nrows)]


@settings(max_examples=300)
@given(matrices())
def test_rank_matches_gauss_jordan(rows):
    assert rank(rows) == gauss_rank(rows)


@given(matrices(st.integers(-3, 3)))
def test_rank_of_duplicated_rows_unchanged(rows):
    assert rank(rows + rows) == rank(rows)


def test_rank_small_cases():
    assert rank([]) == 0
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[Fraction(1, 2), 1], [1, Fraction(1, 3)]]) == 2


def test_bracket_examples():
    E = lambda i, j: MatrixElement.unit(3, i, j)  # noqa: E731
    assert bracket(E(1, 2), E(2, 3)) == E(1, 3)
    assert bracket(E(1, 2), E(2, 1)) == E(1, 1) - E(2, 2)
    x = E(1, 2) + E(3, 1).scale(5)
    assert bracket(x, x).is_zero()


def test_bracket_size_mismatch():
    with pytest.raises(ValueError):
        bracket(MatrixElement.unit(2, 1, 2), MatrixElement.unit(3, 1, 2))


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_sparse_product_matches_dense(a, b):
    dense = [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    got = (MatrixElement.from_rows(a) @ MatrixElement.from_rows(b)).to_rows()
    assert got == dense


def test_json_dump_uses_num_den_strings():
    m = MatrixElement(2, {(0, 1): Fraction(-3, 2)})
    assert m.to_json() == [["0/1", "-3/2"], ["0/1", "0/1"]]


def test_column_space_contains():
    space = [[1, 0, 0], [0, 1, 0]]
    assert column_space_contains(space, [[2, -1, 0]])
    assert not column_space_contains(space, [[0, 0, 1]])
