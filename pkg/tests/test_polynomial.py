from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from gastruct.polynomial import (
    OPERATOR,
    POINT,
    ParseError,
    Polynomial,
    apply_operator,
    basis_key,
    grlex_compare,
    grlex_key,
    monomials_of_degree,
    pair,
    parse_polynomial,
)

from conftest import polynomials


def P(text, n=2, kind=OPERATOR):
    return parse_polynomial(text, n, kind)


def to_sympy(p, syms):
    return sum((sympy.Rational(c.numerator, c.denominator) * sympy.prod([s ** e for s, e in zip(syms, m)])
                for m, c in p.terms.items()), sympy.Integer(0))


def test_grlex_order_examples():
    # degree first, then S1 > S2
    assert grlex_compare((0, 2), (1, 0)) == 1
    assert grlex_compare((2, 0), (1, 1)) == 1
    assert grlex_compare((1, 1), (0, 2)) == 1
    assert grlex_compare((1, 1), (1, 1)) == 0
    with pytest.raises(ValueError):
        grlex_compare((1,), (1, 0))


def test_basis_order_puts_s1_before_s2():
    monos = [(0, 1), (1, 0), (0, 0), (2, 0), (1, 1)]
    assert sorted(monos, key=basis_key) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)]


def test_canonical_printing():
    assert str(P("S2 - S1^2")) == "-1*S1^2 + S2"
    assert str(P("S1*S2")) == "S1*S2"
    assert str(P("x2 + 1/2*x1^2", kind=POINT)) == "x2 + 1/2*x1^2"
    assert str(Polynomial.zero(2)) == "0"


def test_parser_accepts_grammar():
    assert P("2*(S1 + S2)^2 / 4") == P("1/2*S1^2 + S1*S2 + 1/2*S2^2")
    assert P("S1**3") == P("S1^3")
    assert P("-(-S2)") == P("S2")


@pytest.mark.parametrize("text", ["S1 +", "S3", "x1", "S1^S2", "S1 / S2", "S1 / 0", "(S1", "", "S1 $ S2", "S"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        P(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as err:
        P("S1 + S9")
    assert err.value.position == 5


@given(polynomials())
def test_print_parse_roundtrip(p):
    assert P(str(p)) == p


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == Polynomial.zero(2)


@given(polynomials(), polynomials())
def test_product_matches_sympy(a, b):
    s1, s2 = sympy.symbols("s1 s2")
    assert sympy.expand(to_sympy(a * b, (s1, s2)) - to_sympy(a, (s1, s2)) * to_sympy(b, (s1, s2))) == 0


@given(polynomials(kind=POINT))
def test_diff_matches_sympy(f):
    x1, x2 = sympy.symbols("x1 x2")
    assert sympy.expand(to_sympy(f.diff(0), (x1, x2)) - sympy.diff(to_sympy(f, (x1, x2)), x1)) == 0


def test_apply_operator_and_pairing():
    f = P("x2 + 1/2*x1^2", kind=POINT)
    assert apply_operator(P("S1^2"), f) == Polynomial.constant(1, 2, POINT)
    assert apply_operator(P("S2 - S1^2"), f).is_zero()
    # <S^m, x^m> = m!
    assert pair(P("S1^3", 1), P("x1^3", 1, POINT)) == 6
    assert pair(P("S1*S2"), P("x1*x2 + x1", kind=POINT)) == 1
    with pytest.raises(ValueError):
        apply_operator(f, f)
    with pytest.raises(ValueError):
        apply_operator(P("S1"), P("x1", 1, POINT))


@given(st.integers(1, 4), st.integers(0, 5))
def test_monomials_of_degree_count(n, d):
    from math import comb
    ms = list(monomials_of_degree(n, d))
    assert len(ms) == len(set(ms)) == comb(n + d - 1, d)
    assert all(sum(m) == d for m in ms)


def test_substitute_and_evaluate():
    p = P("S1^2 - S2")
    images = [P("S1 + S2"), P("S2")]
    assert p.substitute(images) == P("S1^2 + 2*S1*S2 + S2^2 - S2")
    assert p.evaluate([Fraction(1, 2), 3]) == Fraction(-11, 4)
    assert grlex_key((1, 2)) == (3, (1, 2))
