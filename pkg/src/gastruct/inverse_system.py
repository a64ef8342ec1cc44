"""Macaulay inverse systems: translation-invariant spaces of polynomials.

An inverse system V in F[x1..xn] corresponds to the ideal of constant
coefficient operators annihilating it, and conversely the solution space of
an ideal is spanned by the coordinate functions of its representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .artinian import build_algebra
from .groebner import GroebnerBasis, Ideal, interreduce, buchberger
from .polynomial import (
    OPERATOR,
    POINT,
    Polynomial,
    grlex_key,
    iter_monomials_up_to,
    monomial_factorial,
    monomials_of_degree,
    pair,
    parse_polynomial,
)
from .representation import build_representation, coefficient_matrix


class InvalidInverseSystem(ValueError):
    pass


@dataclass(frozen=True)
class InverseSystem:
    basis: tuple
    n: int

    def __init__(self, basis, n: int | None = None):
        basis = tuple(basis)
        if n is None:
            n = basis[0].n
        for f in basis:
            if f.kind != POINT or f.n != n:
                raise InvalidInverseSystem(f"{f!r} is not a point polynomial in {n} variables")
        if basis and la.rank(coefficient_matrix(list(basis))) != len(basis):
            raise InvalidInverseSystem("basis is linearly dependent")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "n", n)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def max_degree(self) -> int:
        return max((f.degree() for f in self.basis), default=-1)

    def contains(self, f: Polynomial) -> bool:
        return spans_contain(list(self.basis), f)


def spans_contain(span: list, f: Polynomial) -> bool:
    if f.is_zero():
        return True
    if not span:
        return False
    A = coefficient_matrix(span + [f])
    return la.rank(A) == la.rank(A[:-1])


def spans_equal(U: list, W: list) -> bool:
    if not U or not W:
        return not U and not W
    A = coefficient_matrix(U + W)
    r = la.rank(A)
    return r == la.rank(A[:len(U)]) == la.rank(A[len(U):])


def is_translation_invariant(span: list) -> bool:
    """Closed under every partial derivative."""
    if not span:
        return True
    n = span[0].n
    return all(spans_contain(span, f.diff(i)) for f in span for i in range(n))


def annihilator(V: InverseSystem) -> Ideal:
    """Reduced ideal of operators g with <g, f> = 0 for all f in V.

    Operators of degree D + 1 (D the top degree of V) kill V outright and are
    adjoined as generators; below that the kernel of the pairing is solved for.
    """
    if not is_translation_invariant(list(V.basis)):
        raise InvalidInverseSystem("span is not closed under partial derivatives")
    return Ideal(list(annihilator_basis(V).basis), V.n)


def annihilator_basis(V: InverseSystem) -> GroebnerBasis:
    """Reduced Gröbner basis of the annihilator, read off by linear algebra.

    As a vector space the annihilator is K + (everything of degree > D), with
    K the pairing kernel in degrees <= D.  Echelonizing K with columns in
    decreasing grlex order makes every leading monomial visible, so K's
    echelon rows plus the degree D + 1 monomials already form a Gröbner basis.
    """
    n = V.n
    D = V.max_degree()
    monos = sorted(iter_monomials_up_to(n, D), key=grlex_key, reverse=True) if D >= 0 else []
    # pairing <S^m, f> = m! * coefficient of x^m in f
    P = [[f.coefficient(m) * monomial_factorial(m) for m in monos] for f in V.basis]
    kernel = la.nullspace(P, len(monos)) if P else la.nullspace([], len(monos))
    rows, _ = la.rref(kernel) if kernel else ([], [])
    gens = [Polynomial({m: c for m, c in zip(monos, v) if c}, n, OPERATOR) for v in rows if any(v)]
    gens += [Polynomial.monomial(m, n, OPERATOR) for m in monomials_of_degree(n, D + 1)]
    return GroebnerBasis(tuple(interreduce(gens)), n)


def solution_space(ideal: Ideal) -> InverseSystem:
    """Coordinate functions of the representation of F[S]/I."""
    rep = build_representation(build_algebra(ideal))
    return InverseSystem(rep.coordinate_functions, ideal.n)


def roundtrip_check(ideal: Ideal) -> bool:
    """annihilator(solution_space(I)) has the same reduced Gröbner basis as I."""
    back = annihilator_basis(solution_space(ideal))
    return back.basis == buchberger(ideal).basis


def roundtrip_check_v(V: InverseSystem) -> bool:
    """solution_space(annihilator(V)) spans exactly V."""
    W = solution_space(annihilator(V))
    return spans_equal(list(V.basis), list(W.basis))


def pairing_gram(V: InverseSystem, basis: list) -> list:
    """Gram matrix <mu_k, f_j> of V against standard monomials."""
    return [[pair(Polynomial.monomial(mu, V.n, OPERATOR), f) for mu in basis] for f in V.basis]


def module_action_matrices(V: InverseSystem) -> list:
    """Matrices A_i with d f_j / d x_i = sum_k A_i[k][j] f_k (basis of V)."""
    basis = list(V.basis)
    mats = []
    for i in range(V.n):
        cols = []
        for f in basis:
            A = coefficient_matrix(basis + [f.diff(i)])
            c = la.solve_in_span(A[:-1], A[-1])
            if c is None:
                raise InvalidInverseSystem("span is not closed under partial derivatives")
            cols.append(c)
        mats.append(la.transpose(cols))
    return mats


def point_polynomial(text: str, n: int) -> Polynomial:
    return parse_polynomial(text, n, POINT)

