import pytest
import sympy
from hypothesis import example, given, settings
from hypothesis import strategies as st

from gastruct.groebner import (
    Ideal,
    InfiniteColengthError,
    buchberger,
    colength,
    ideal_contains,
    ideal_equal,
    normal_form,
    s_pairs_reduce_to_zero,
    standard_monomials,
)
from gastruct.polynomial import parse_polynomial

from conftest import polynomials


def I(gens, n=2):
    return Ideal.parse(gens, n)


def sympy_basis(ideal):
    syms = sympy.symbols(f"S1:{ideal.n + 1}")
    exprs = [sympy.sympify(str(g).replace("^", "**")) for g in ideal.generators]
    G = sympy.groebner(exprs, *syms, order="grlex", domain=sympy.QQ)
    return sorted(str(sympy.expand(g)) for g in G.exprs)


def ours(ideal):
    syms = sympy.symbols(f"S1:{ideal.n + 1}")
    return sorted(str(sympy.expand(sympy.sympify(str(g).replace("^", "**")))) for g in buchberger(ideal).basis)


@pytest.mark.parametrize("gens,n", [
    (["S1*S2", "S2 - S1^2"], 2),
    (["S1^2 - S2", "S1*S2 - S3", "S1*S3"], 3),
    (["S1^2 - S2", "S1^3 - S3", "S1*S3", "S2*S2", "S2*S3", "S3^2"], 3),
    (["S1^2 - S3", "S1*S2 - S4", "S2^2", "S1*S3", "S1*S4", "S2*S3"], 4),
])
def test_reduced_basis_matches_sympy(gens, n):
    assert ours(I(gens, n)) == sympy_basis(I(gens, n))


def test_generator_with_divisible_leading_term_is_kept():
    # S1^3 - S3 has a leading monomial divisible by that of S1^2 - S2 but is not redundant
    ideal = I(["S1^2 - S2", "S1^3 - S3", "S1*S3", "S2^2", "S2*S3", "S3^2"], 3)
    assert colength(buchberger(ideal)) == 4


def test_frozen_basis_p2():
    G = buchberger(I(["S1*S2", "S2 - S1^2"]))
    assert [str(g) for g in G.basis] == ["S1^2 - S2", "S1*S2", "S2^2"]
    assert standard_monomials(G) == [(0, 0), (1, 0), (0, 1)]


@settings(max_examples=25)
@given(st.lists(polynomials(max_deg=3, max_terms=3), min_size=1, max_size=3))
@example([parse_polynomial("2*S2 + 1", 2)])  # non-monic input
def test_buchberger_criterion_and_membership(gens):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    ideal = Ideal(gens, 2)
    G = buchberger(ideal)
    assert s_pairs_reduce_to_zero(G)
    assert all(ideal_contains(G, g) for g in gens)
    assert ours(ideal) == sympy_basis(ideal)


def test_normal_form_and_equality():
    G = buchberger(I(["S1*S2", "S2 - S1^2"]))
    assert normal_form(parse_polynomial("S1^2", 2), G) == parse_polynomial("S2", 2)
    assert ideal_equal(I(["S1*S2", "S2 - S1^2"]), I(["S2 - S1^2", "S1^3"]))
    assert not ideal_equal(I(["S1^2", "S2"]), I(["S1^3", "S2"]))


def test_infinite_colength_names_variable():
    with pytest.raises(InfiniteColengthError, match="no pure power of S1"):
        standard_monomials(buchberger(I(["S1*S2"])))
    with pytest.raises(InfiniteColengthError, match="no pure power of S2"):
        standard_monomials(buchberger(I(["S1^2"])))


def test_unit_ideal_has_no_standard_monomials():
    G = buchberger(I(["S1 + 1", "S1"]))
    assert G.contains_one()
    assert standard_monomials(G) == []


def test_ideal_validation():
    with pytest.raises(ValueError):
        Ideal([parse_polynomial("x1", 1, "x")], 1)
    with pytest.raises(ValueError):
        Ideal([parse_polynomial("S1", 1)], 2)
