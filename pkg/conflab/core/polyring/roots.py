"""
Exact rational roots of univariate polynomials, by factoring over ``QQ``.
"""

from fractions import Fraction

from conflab.core.exceptions import DomainError
from conflab.core.polyring.multipoly import MultiPoly, to_fraction


def _univariate(poly: MultiPoly, var: str):
    if poly.variables() - {var}:
        raise DomainError(f"{poly} is not univariate in '{var}'")
    return poly.as_poly([var])


def integer_coefficients(poly: MultiPoly, var: str) -> list[int]:
    """Coefficients in ``var``, lowest power first, scaled to coprime integers."""
    univariate = _univariate(poly, var)
    if poly.is_zero():
        return []
    _, cleared = univariate.clear_denoms(convert=True)
    _, primitive = cleared.primitive()
    return [int(c) for c in reversed(primitive.all_coeffs())]


def rational_roots(poly: MultiPoly, var: str) -> list[Fraction]:
    """
    Distinct rational roots of a nonzero univariate polynomial, ascending.

    :raises DomainError: for the zero polynomial or a second variable.
    """
    if poly.is_zero():
        raise DomainError("the zero polynomial has every root")
    found = _univariate(poly, var).ground_roots()
    return sorted(to_fraction(root) for root in found)
