"""
Single super deformation of a Lie conformal algebra, and the general
abelian-even families of rank (n+1).
"""

from typing import Sequence, Union

from conflab.core.catalog.families import SlotValue, build
from conflab.core.exceptions import DomainError
from conflab.core.lcsa import BasisElement, ConformalSuperAlgebra, Parity


def super_deform(
    alg: ConformalSuperAlgebra, x: Union[BasisElement, str]
) -> ConformalSuperAlgebra:
    """
    Flip the parity of the generator ``x`` of an all-even algebra to odd.

    :raises DomainError: if ``alg`` has an odd generator, ``[x_λ x] ≠ 0``, or
        the flipped table breaks the grading (``x`` is not a free generator
        of an ideal-compatible summand).
    """
    name = x.name if isinstance(x, BasisElement) else x
    if alg.rank[1]:
        raise DomainError(f"{alg.name} already has odd generators")
    alg.parity(name)
    if alg.entry(name, name):
        raise DomainError(
            f"[{name}_λ {name}] is nonzero in {alg.name}; "
            "the super deformation is undefined"
        )
    return alg.with_parity(name, Parity.ODD, label=f"{alg.name}^s({name})")


def build_general_O(
    variant: int, n: int, polys: Sequence[SlotValue]
) -> ConformalSuperAlgebra:
    """
    Rank (n+1) algebra on A1..An (even, abelian) and X (odd).

    Variant 1 sets ``[A_i λ X] = φ_i(λ)X``; variant 2 sets
    ``[X_λ X] = Σ ψ_i(∂)A_i``.

    :raises DomainError: for an unknown variant or a list of the wrong length.
    :raises ConditionViolation: for a polynomial in the wrong variable.
    """
    if variant not in (1, 2):
        raise DomainError(f"variant must be 1 or 2, got {variant}")
    if len(polys) != n:
        raise DomainError(f"expected {n} polynomials, got {len(polys)}")
    prefix = "phi" if variant == 1 else "psi"
    slots = {f"{prefix}_{i}": p for i, p in enumerate(polys, start=1)}
    return build(f"Ot{variant}", n=n, **slots)
