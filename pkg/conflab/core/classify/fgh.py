"""
The two-variable equation f(x + y) g(x, y) = f(x) h(y), solved for (g, h)
with f fixed.
"""

from typing import Optional

from conflab.config import Settings
from conflab.core.classify.equations import (
    EquationTag,
    FunctionalEquation,
    SolutionSpace,
)
from conflab.core.classify.linear import unknown_poly, unknown_poly2
from conflab.core.exceptions import DomainError
from conflab.core.polyring import MultiPoly
from conflab.util.validation import validate_nonnegative_int


def solve_fgh(f, degree: Optional[int] = None) -> SolutionSpace:
    """
    All g of total degree ≤ ``degree`` and h of degree ≤ ``degree`` with
    f(x + y) g(x, y) = f(x) h(y).

    :param f: The known factor, a nonzero polynomial in ``x``.
    :raises DomainError: if f is zero or mentions anything besides x.
    """
    degree = validate_nonnegative_int(
        Settings()["degree_bound"] if degree is None else degree
    )
    f = MultiPoly.coerce(f)
    if not f:
        raise DomainError("f must be nonzero")
    if f.variables() - {"x"}:
        raise DomainError(f"f = {f} must be a polynomial in x")
    g, g_names = unknown_poly2("g", "x", "y", degree)
    h, h_names = unknown_poly("h", "y", degree)
    residual = f.subs({"x": MultiPoly.var("x") + MultiPoly.var("y")}) * g - f * h
    equation = FunctionalEquation(
        EquationTag.FG_H,
        (residual,),
        tuple(g_names + h_names),
        {"g": g, "h": h},
        {"f": str(f)},
    )
    return equation.solve()
