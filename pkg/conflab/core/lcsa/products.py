"""
Bracket evaluation on elements by conformal sesquilinearity, and j-th products

    [a_λ b] = Σ_j λ^j / j! · a_(j) b.
"""

from fractions import Fraction
from math import factorial

from conflab.core.exceptions import DomainError
from conflab.core.lcsa.algebra import ConformalSuperAlgebra, Element
from conflab.core.polyring import D, L, MultiPoly, ZERO

LEFT = {"d": -L}
RIGHT = {"d": D + L}


def bracket_eval(
    alg: ConformalSuperAlgebra, x: Element, y: Element
) -> dict[str, MultiPoly]:
    """
    ``[x_λ y]`` for homogeneous elements: a coordinate p(∂) contributes
    p(-λ) on the left and p(∂+λ) on the right.

    :raises DomainError: if either element has mixed parity.
    """
    if not (x.is_homogeneous and y.is_homogeneous):
        raise DomainError("bracket_eval needs homogeneous elements")
    out: dict[str, MultiPoly] = {}
    for i, p in x.coordinates.items():
        left = p.subs(LEFT)
        for j, q in y.coordinates.items():
            right = q.subs(RIGHT)
            for k, structure in alg.entry(i, j).items():
                out[k] = out.get(k, ZERO) + left * right * structure
    return {k: v for k, v in out.items() if v}


def lambda_coefficients(
    bracket: dict[str, MultiPoly],
) -> dict[int, dict[str, MultiPoly]]:
    """
    Split a λ-bracket value into its j-th products: ``n -> {k: n! [λ^n]}``.
    """
    products: dict[int, dict[str, MultiPoly]] = {}
    for k, poly in bracket.items():
        for n, c in poly.coefficients("l").items():
            if c:
                products.setdefault(n, {})[k] = c.scale(factorial(n))
    return dict(sorted(products.items()))


def element_products(
    alg: ConformalSuperAlgebra, x: Element, y: Element
) -> dict[int, Element]:
    return {
        n: alg.element(coords)
        for n, coords in lambda_coefficients(bracket_eval(alg, x, y)).items()
    }


def jth_products(alg: ConformalSuperAlgebra, i: str, j: str) -> dict[int, Element]:
    """
    ``n -> i_(n) j`` for generators; only nonzero products are listed.
    """
    return element_products(alg, alg.generator(i), alg.generator(j))


def reconstruct(products: dict[int, Element]) -> dict[str, MultiPoly]:
    """Inverse of :func:`jth_products`: Σ_n λ^n / n! · a_(n) b."""
    out: dict[str, MultiPoly] = {}
    for n, elem in products.items():
        weight = MultiPoly.var("l", n).scale(Fraction(1, factorial(n)))
        for k, c in elem.coordinates.items():
            out[k] = out.get(k, ZERO) + weight * c
    return {k: v for k, v in out.items() if v}
