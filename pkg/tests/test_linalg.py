from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from gastruct import linalg as la
from gastruct.polynomial import Polynomial

from conftest import small_fractions


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small_fractions, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


def sym(A):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in A])


@given(matrices())
def test_rank_matches_sympy(A):
    assert la.rank(A) == sym(A).rank()


@given(matrices())
def test_nullspace_is_kernel(A):
    N = la.nullspace(A, len(A[0]))
    assert len(N) == len(A[0]) - la.rank(A)
    for v in N:
        assert not any(la.matvec(A, v))


@given(matrices(rows=st.just(3), cols=st.just(3)))
def test_det_matches_sympy(A):
    assert la.det(A) == sym(A).det()


def test_quotient_coordinates():
    A = la.identity(3)
    B = [[Fraction(0), Fraction(0), Fraction(1)]]
    Q = la.QuotientCoordinates(A, B)
    assert Q.dim == 2
    assert Q.coords([Fraction(2), Fraction(3), Fraction(7)]) == [2, 3]


def test_polynomial_rank_and_det():
    mats = [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
    G = la.generic_combination([la.to_fractions(M) for M in mats])
    assert la.poly_rank(G) == 2
    d = la.poly_det(G)
    assert d == Polynomial({(1, 1): 1}, 2, "c")
    singular = la.generic_combination([la.to_fractions([[1, 1], [1, 1]])])
    assert la.poly_rank(singular) == 1
