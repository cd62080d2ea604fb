from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix, ZZ, symbols
from sympy.matrices.normalforms import smith_normal_form

from linequiv.intlinalg import (
    bareiss_det,
    char_poly,
    gram_schmidt,
    hermite_basis_2d,
    in_lattice,
    left_kernel,
    lll_reduce,
    rational_rank,
    same_lattice,
)

small_ints = st.integers(-6, 6)


def matrices(rows, cols):
    return st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@st.composite
def any_matrix(draw, max_rows=6, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return draw(matrices(r, c))


@st.composite
def square(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    return draw(matrices(n, n))


def is_saturated(basis):
    """All Smith invariants equal 1, i.e. the lattice is primitive."""
    if not basis:
        return True
    snf = smith_normal_form(Matrix(basis), domain=ZZ)
    k = len(basis)
    return all(abs(snf[i, i]) == 1 for i in range(k))


@given(any_matrix())
def test_left_kernel_against_sympy(A):
    K = left_kernel(A)
    r = len(A)
    assert len(K) == r - Matrix(A).rank()
    for v in K:
        assert all(sum(v[i] * A[i][j] for i in range(r)) == 0 for j in range(len(A[0])))
    if K:
        assert Matrix(K).rank() == len(K)
    assert is_saturated(K)


def test_left_kernel_klein_four_matrix():
    A = [[4, 0, 0, 0], [2, 2, 0, 0], [2, 0, 2, 0], [2, 0, 0, 2], [1, 1, 1, 1]]
    K = left_kernel(A)
    assert len(K) == 1
    v = K[0]
    assert v == [1, -1, -1, -1, 2] or v == [-1, 1, 1, 1, -2]


def test_saturation_on_a_non_primitive_example():
    # a rational kernel vector (2, -2) scaled: the integer kernel must be (1, -1)
    K = left_kernel([[2], [2]])
    assert K in ([[1, -1]], [[-1, 1]])


@given(any_matrix(max_rows=6, max_cols=6))
def test_rational_rank_oracle(A):
    assert rational_rank(A) == Matrix(A).rank()


def lll_conditions_hold(B, delta=Fraction(3, 4)):
    bstar, mu = gram_schmidt(B)
    norms = [sum(x * x for x in v) for v in bstar]
    for i in range(len(B)):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    for k in range(1, len(B)):
        if norms[k] < (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            return False
    return True


@st.composite
def independent_rows(draw):
    n = draw(st.integers(1, 5))
    k = draw(st.integers(1, n))
    rows = draw(matrices(k, n))
    return rows


@given(independent_rows())
def test_lll_reduced_and_same_lattice(B):
    if Matrix(B).rank() < len(B):
        with pytest.raises(ValueError):
            lll_reduce(B)
        return
    R = lll_reduce(B)
    assert len(R) == len(B)
    assert lll_conditions_hold(R)
    assert same_lattice(R, B)
    # same volume: Gram determinants agree
    gB, gR = Matrix(B) * Matrix(B).T, Matrix(R) * Matrix(R).T
    assert gB.det() == gR.det()


def test_lll_textbook_example():
    B = [[1, 1, 1], [-1, 0, 2], [3, 5, 6]]
    R = lll_reduce(B)
    assert lll_conditions_hold(R)
    assert same_lattice(R, B)
    assert max(sum(x * x for x in v) for v in R) <= 9


def test_in_lattice():
    B = [[2, 0], [0, 3]]
    assert in_lattice(B, [4, -3])
    assert not in_lattice(B, [1, 0])
    assert not in_lattice([[1, 0, 0]], [0, 1, 0])
    assert in_lattice([], [0, 0])


@given(square())
def test_bareiss_det_against_sympy(A):
    assert bareiss_det(A) == Matrix(A).det()


@given(square(max_n=7))
def test_char_poly_against_sympy(A):
    t = symbols("t")
    expected = [int(c) for c in Matrix(A).charpoly(t).all_coeffs()]
    assert char_poly(A) == expected


def test_char_poly_examples():
    assert char_poly([[0, 0], [0, 0]]) == [1, 0, 0]
    assert char_poly([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, -3, 3, -1]
    assert char_poly([[0, 2], [2, 0]]) == [1, 0, -4]


@given(st.lists(st.tuples(small_ints, small_ints), min_size=1, max_size=4), st.integers(2, 7))
def test_hermite_basis_2d(vectors, p):
    vecs = [[p, 0], [0, p]] + [list(v) for v in vectors]
    H = hermite_basis_2d(vecs)
    assert H[1][0] == 0
    for v in vecs:
        assert in_lattice(H, v)
    # H contains the lattice and has the same covolume, so they are equal
    snf = smith_normal_form(Matrix(vecs), domain=ZZ)
    assert abs(H[0][0] * H[1][1]) == abs(snf[0, 0] * snf[1, 1])
