from fractions import Fraction

import pytest

from gastruct.artinian import build_algebra
from gastruct.catalog import entry
from gastruct.groebner import Ideal
from gastruct.polynomial import POINT, parse_polynomial
from gastruct.representation import (
    block_diagonal,
    build_representation,
    centralizer_dimension,
    check_derivative_relations,
    check_solutions,
    cyclic_vector_check,
    dual_intertwiner,
    evaluate_at_origin,
    factorizations,
    fixed_locus,
    homomorphism_check,
    intertwiner_space,
    inverse_check,
    is_cyclic_vector,
    is_faithful,
    jordan_block,
    leading_monomial_check,
    nonvanishing_point,
    reversed_matrix,
)


def X(text, n=2):
    return parse_polynomial(text, n, POINT)


def rep_of(gens, n):
    return build_representation(build_algebra(Ideal.parse(gens, n)))


def test_printed_p2_matrices_after_basis_reversal():
    rho = reversed_matrix(rep_of(["S1*S2", "S2 - S1^2"], 2).exponential)
    assert rho == [[X("1"), X("x1"), X("x2 + 1/2*x1^2")],
                   [X("0"), X("1"), X("x1")],
                   [X("0"), X("0"), X("1")]]
    tau = reversed_matrix(rep_of(["S1*S2", "S2^2", "S1^2"], 2).exponential)
    assert tau == [[X("1"), X("0"), X("x2")],
                   [X("0"), X("1"), X("x1")],
                   [X("0"), X("0"), X("1")]]


def test_p3_cyclic_coordinate_functions():
    rep = rep_of(["S1^2 - S2", "S1*S2 - S3", "S1*S3"], 3)
    assert [str(f) for f in rep.coordinate_functions] == [
        "1", "x1", "x2 + 1/2*x1^2", "x3 + x1*x2 + 1/6*x1^3"]


def test_derivative_relations_p2():
    rep = rep_of(["S1*S2", "S2 - S1^2"], 2)
    # mu_3 = S1^2 reduces to S2, so only S1 * mu_1 = mu_2 and S2 * mu_1 = mu_3 factor
    assert factorizations(rep.algebra.basis) == [(1, 0, 0), (2, 1, 0)]
    report = check_derivative_relations(rep)
    assert report.ok and len(report.checked) == 2


def test_solution_checks_detect_bad_functions():
    rep = rep_of(["S1*S2", "S2 - S1^2"], 2)
    assert check_solutions(rep)
    assert not check_solutions(rep, [X("1"), X("x1"), X("x2")])
    assert not check_solutions(rep, [X("1"), X("x1"), X("x1")])


@pytest.mark.parametrize("label", ["P2/I_2", "P3/I_1", "P4/I_6", "F3/fixed-fiber", "orbit/P4"])
def test_group_law(label):
    rep = build_representation(entry(label).algebra())
    assert homomorphism_check(rep)
    assert inverse_check(rep)
    ell = rep.length
    assert evaluate_at_origin(rep) == [[Fraction(int(i == j)) for j in range(ell)] for i in range(ell)]
    assert leading_monomial_check(rep)


def test_faithful_and_cyclic():
    R = build_algebra(Ideal.parse(["S1*S2", "S2 - S1^2"], 2))
    assert is_faithful(R)
    # S2 - S1^2 = 0 would be faithful too; S2 itself in the ideal is not
    assert not is_faithful(build_algebra(Ideal.parse(["S2", "S1^2"], 2)))
    rep = build_representation(R)
    assert cyclic_vector_check(rep)
    one = [Fraction(1), Fraction(0), Fraction(0)]
    assert is_cyclic_vector(rep.matrices, one)
    assert not is_cyclic_vector(rep.matrices, [Fraction(0), Fraction(0), Fraction(1)])


def test_fixed_locus_dimensions():
    assert len(fixed_locus(rep_of(["S1*S2", "S2 - S1^2"], 2))) == 1
    assert len(fixed_locus(rep_of(["S1^2", "S1*S2", "S2^2"], 2))) == 2


def test_dual_intertwiner():
    gor = rep_of(["S1*S2", "S2 - S1^2"], 2)
    T = dual_intertwiner(gor)
    assert T is not None
    for M in gor.matrices:
        MT = [list(r) for r in zip(*M)]
        lhs = [[sum(T[i][k] * M[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        rhs = [[sum(MT[i][k] * T[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        assert lhs == rhs
    assert dual_intertwiner(rep_of(["S1^2", "S1*S2", "S2^2"], 2)) is None


def test_strict_sign_fails_for_gorenstein_p2():
    # T M = -M^T T has no invertible solution here; only the x -> -x twisted dual does
    assert dual_intertwiner(rep_of(["S1*S2", "S2 - S1^2"], 2), strict=True) is None
    assert dual_intertwiner(rep_of(["S1^2"], 1), strict=True) is not None
    assert intertwiner_space(rep_of(["S1^2"], 1).matrices, -1)


@pytest.mark.parametrize("sizes,dim", [((3,), 3), ((2, 1), 5), ((1, 1), 4), ((4,), 4), ((2, 2), 8)])
def test_centralizer_dimension(sizes, dim):
    # for a nilpotent matrix with Jordan blocks p_1 >= p_2 >= ..., dim = sum (2i - 1) p_i
    M = block_diagonal(*[jordan_block(s) for s in sizes])
    assert centralizer_dimension(M) == dim


def test_nonvanishing_point():
    p = parse_polynomial("c1*c2 - c1", 2, "c")
    pt = nonvanishing_point(p)
    assert p.evaluate(pt) != 0
