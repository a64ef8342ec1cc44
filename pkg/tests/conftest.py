import os
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gastruct.polynomial import OPERATOR, Polynomial

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def polynomials(draw, n=2, kind=OPERATOR, max_deg=3, max_terms=5):
    k = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(k):
        m = tuple(draw(st.lists(st.integers(0, max_deg), min_size=n, max_size=n)))
        if sum(m) <= max_deg:
            terms[m] = draw(small_fractions)
    return Polynomial(terms, n, kind)


def ideal_file(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)
