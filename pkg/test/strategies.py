from hypothesis import strategies as st

from conflab.core.polyring import MultiPoly

VARIABLES = ("d", "l", "a")


@st.composite
def polys(draw, variables=VARIABLES, max_terms=4, max_exp=3):
    """Small polynomials with integer coefficients."""
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono = tuple(
            (v, e)
            for v in variables
            if (e := draw(st.integers(0, max_exp)))
        )
        terms[mono] = draw(st.integers(-5, 5))
    return MultiPoly(terms)
