from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gastruct import linalg as la
from gastruct.artinian import build_algebra
from gastruct.catalog import catalog_entries, entry
from gastruct.groebner import Ideal, buchberger
from gastruct.inverse_system import (
    InvalidInverseSystem,
    InverseSystem,
    annihilator,
    is_translation_invariant,
    module_action_matrices,
    pairing_gram,
    point_polynomial,
    roundtrip_check,
    roundtrip_check_v,
    solution_space,
    spans_equal,
)


def V(texts, n=2):
    return InverseSystem([point_polynomial(t, n) for t in texts], n)


def test_annihilator_of_cusp_system():
    # span{1, x1, x2 + x1^2/2} is killed by S1*S2, S2 - S1^2 and everything of degree 3
    ann = annihilator(V(["1", "x1", "x2 + 1/2*x1^2"]))
    assert buchberger(ann).basis == buchberger(Ideal.parse(["S1*S2", "S2 - S1^2"], 2)).basis


def test_annihilator_of_linear_system():
    ann = annihilator(V(["1", "x1", "x2"]))
    assert buchberger(ann).basis == buchberger(Ideal.parse(["S1^2", "S1*S2", "S2^2"], 2)).basis


def test_not_translation_invariant():
    with pytest.raises(InvalidInverseSystem):
        annihilator(V(["1", "x1^2"]))
    assert not is_translation_invariant([point_polynomial("x1*x2", 2)])


def test_dependent_basis_rejected():
    with pytest.raises(InvalidInverseSystem):
        V(["x1", "2*x1"])
    with pytest.raises(InvalidInverseSystem):
        InverseSystem([point_polynomial("x1", 1).with_kind("S")], 1)


@pytest.mark.parametrize("label", [e.label for e in catalog_entries() if e.n <= 4])
def test_roundtrip(label):
    e = entry(label)
    assert roundtrip_check(e.ideal)
    assert solution_space(e.ideal).dimension == e.algebra().length


def test_pairing_is_perfect():
    for label in ["P3/I_1", "P4/I_5", "F2/nontrivial-fiber"]:
        R = entry(label).algebra()
        W = solution_space(R.ideal)
        G = pairing_gram(W, R.basis)
        assert la.rank(G) == R.length


def test_module_action_is_transpose():
    R = entry("P3/I_3").algebra()
    W = solution_space(R.ideal)
    mats = module_action_matrices(W)
    assert mats == [la.transpose(M) for M in R.mult_matrices]


@st.composite
def derivative_closed(draw):
    # the span of all derivatives of a single polynomial is translation invariant
    from gastruct.polynomial import POINT, Polynomial
    terms = {}
    for _ in range(draw(st.integers(1, 3))):
        m = (draw(st.integers(0, 3)), draw(st.integers(0, 2)))
        terms[m] = Fraction(draw(st.integers(1, 5)))
    f = Polynomial(terms, 2, POINT)
    polys, frontier = [f], [f]
    while frontier:
        new = []
        for g in frontier:
            for i in range(2):
                h = g.diff(i)
                if not h.is_zero():
                    new.append(h)
        polys += new
        frontier = new
    rows = la.row_space_basis([[p.coefficient(m) for m in sorted({m for q in polys for m in q.terms})]
                                for p in polys])
    support = sorted({m for q in polys for m in q.terms})
    return InverseSystem([Polynomial(dict(zip(support, r)), 2, POINT) for r in rows], 2)


@settings(max_examples=20)
@given(derivative_closed())
def test_roundtrip_from_inverse_side(W):
    assert roundtrip_check_v(W)
    # Gorenstein: a system generated by one polynomial has a one-dimensional socle
    from gastruct.artinian import socle_dimension
    assert socle_dimension(build_algebra(annihilator(W))) == 1


def test_spans_equal():
    a = [point_polynomial("x1 + x2", 2), point_polynomial("x1", 2)]
    b = [point_polynomial("x2", 2), point_polynomial("x1 - x2", 2)]
    assert spans_equal(a, b)
    assert not spans_equal(a, b[:1])
