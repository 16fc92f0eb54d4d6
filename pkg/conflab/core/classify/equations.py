"""
Polynomial functional equations whose unknowns are the coefficients of
bounded-degree polynomials, and their exact solution spaces.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from conflab.core.classify.linear import Vector, linear_system, rational_nullspace
from conflab.core.polyring import MultiPoly
from conflab.util.logging import get_logger

LOGGER = get_logger(__name__)


class EquationTag(str, Enum):
    FG_H = "fgh"
    SHIFT = "shift"
    A_SYSTEM = "a_system"
    JACOBI = "jacobi"


@dataclass(frozen=True)
class FunctionalEquation:
    """
    Attributes:
        tag: Which template the equation instantiates.
        residuals: Polynomials that must vanish identically; linear and
            homogeneous in the unknowns.
        unknowns: Coefficient names, in column order.
        templates: Unknown function name -> polynomial in the unknowns.
        known: Display values of the known data.
    """

    tag: EquationTag
    residuals: tuple[MultiPoly, ...]
    unknowns: tuple[str, ...]
    templates: Mapping[str, MultiPoly]
    known: Mapping[str, str] = field(default_factory=dict)

    def solve(self) -> "SolutionSpace":
        rows = linear_system(self.residuals, self.unknowns)
        basis = rational_nullspace(rows, len(self.unknowns))
        LOGGER.debug(
            f"{self.tag.value}: {len(rows)} equations in {len(self.unknowns)} "
            f"unknowns, kernel of dimension {len(basis)}"
        )
        return SolutionSpace(self, tuple(basis))


@dataclass(frozen=True)
class SolutionSpace:
    """
    Attributes:
        equation: The equation solved.
        basis: Kernel basis as coefficient vectors.
        conditions: Parameter conditions under which the space applies.
    """

    equation: FunctionalEquation
    basis: tuple[Vector, ...]
    conditions: tuple[MultiPoly, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def assignment(self, vector: Sequence[Fraction]) -> dict[str, MultiPoly]:
        return {
            name: MultiPoly.const(x) for name, x in zip(self.equation.unknowns, vector)
        }

    def functions(self, vector: Sequence[Fraction]) -> dict[str, MultiPoly]:
        """The unknown functions at ``vector``."""
        values = self.assignment(vector)
        return {
            name: template.subs(values)
            for name, template in self.equation.templates.items()
        }

    def member(self, weights: Sequence[Fraction] = ()) -> dict[str, MultiPoly]:
        """Σ weight_i · basis_i, all weights 1 by default."""
        weights = list(weights) or [Fraction(1)] * self.dimension
        vector = [Fraction(0)] * len(self.equation.unknowns)
        for w, b in zip(weights, self.basis):
            vector = [x + w * y for x, y in zip(vector, b)]
        return self.functions(vector)

    def verify(self) -> bool:
        """Every basis vector, substituted back, zeroes every residual."""
        for vector in self.basis:
            values = self.assignment(vector)
            if any(r.subs(values) for r in self.equation.residuals):
                return False
        return True

    def describe(self) -> list[str]:
        lines = []
        for vector in self.basis:
            shown = ", ".join(f"{k} = {v}" for k, v in self.functions(vector).items())
            lines.append(shown)
        return lines or ["only the zero solution"]
