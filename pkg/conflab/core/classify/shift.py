"""
The shift equation

    (x + a y + b) f(x + y) = (x + (2α - 1) y + 2β) f(x)

for a univariate polynomial f, solved for fixed rationals and, branch by
branch, with (a, b, α, β) symbolic.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import cycle, islice, product
from typing import Iterable, Mapping, Optional, Sequence

from conflab.config import Settings
from conflab.core.classify.equations import (
    EquationTag,
    FunctionalEquation,
    SolutionSpace,
)
from conflab.core.classify.linear import unknown_poly
from conflab.core.exceptions import UnsupportedOperationError
from conflab.core.polyring import MultiPoly
from conflab.util.logging import get_logger
from conflab.util.validation import validate_nonnegative_int, validate_rational

LOGGER = get_logger(__name__)

X = MultiPoly.var("x")
Y = MultiPoly.var("y")

SHIFT_PARAMETERS = ("a", "b", "alpha", "beta")


def shift_residual(f: MultiPoly, a, b, alpha, beta) -> MultiPoly:
    a, b, alpha, beta = (MultiPoly.coerce(v) for v in (a, b, alpha, beta))
    left = (X + a * Y + b) * f.subs({"x": X + Y})
    right = (X + (alpha.scale(2) - 1) * Y + beta.scale(2)) * f
    return left - right


def solve_shift(a, b, alpha, beta, degree: Optional[int] = None) -> SolutionSpace:
    """
    All f of degree ≤ ``degree`` solving the shift equation for rational
    (a, b, α, β).
    """
    degree = validate_nonnegative_int(
        Settings()["degree_bound"] if degree is None else degree
    )
    values = [MultiPoly.const(validate_rational(v)) for v in (a, b, alpha, beta)]
    f, names = unknown_poly("f", "x", degree)
    equation = FunctionalEquation(
        EquationTag.SHIFT,
        (shift_residual(f, *values),),
        tuple(names),
        {"f": f},
        {k: str(v) for k, v in zip(SHIFT_PARAMETERS, values)},
    )
    return equation.solve()


@dataclass(frozen=True)
class Elimination:
    """
    Attributes:
        conditions: Parameter polynomials that must vanish, in the order used.
        substitution: Solved variable -> expression in the remaining ones.
    """

    conditions: tuple[MultiPoly, ...]
    substitution: Mapping[str, MultiPoly]


def _solve_for(
    eq: MultiPoly, candidates: Sequence[str]
) -> Optional[tuple[str, MultiPoly]]:
    """
    Solve ``eq = 0`` for the first candidate that occurs linearly with a
    constant coefficient.
    """
    for var in candidates:
        if eq.degree(var) != 1:
            continue
        coefficient = eq.coeff(var, 1)
        if coefficient.is_constant():
            rest = eq - coefficient * MultiPoly.var(var)
            return var, rest / (-coefficient.constant_value())
    return None


def eliminate(
    equations: Iterable[MultiPoly], unknowns: Sequence[str], parameters: Sequence[str]
) -> Optional[Elimination]:
    """
    Solve a polynomial system by successive linear substitution: equations
    free of the unknowns become parameter conditions, the others are used to
    eliminate an unknown with a constant coefficient.

    :return: None when the system is inconsistent.
    :raises UnsupportedOperationError: when no equation can be solved
        linearly and a case split would be needed.
    """
    pending = [e for e in equations if e]
    unknown_set = set(unknowns)
    conditions: list[MultiPoly] = []
    substitution: dict[str, MultiPoly] = {}
    while pending:
        pure = sorted(
            (e for e in pending if not e.variables() & unknown_set), key=str
        )
        if any(e.is_constant() for e in pure):
            return None
        step = None
        for eq in pure:
            step = _solve_for(eq, parameters)
            if step is not None:
                conditions.append(eq)
                break
        else:
            for eq in sorted(pending, key=str):
                step = _solve_for(eq, unknowns)
                if step is not None:
                    break
        if step is None:
            shown = [str(e) for e in pending]
            raise UnsupportedOperationError(
                f"no equation of {shown} is linear in a single variable"
            )
        mapping = {step[0]: step[1]}
        substitution = {k: v.subs(mapping) for k, v in substitution.items()}
        substitution[step[0]] = step[1]
        pending = [r for r in (e.subs(mapping) for e in pending) if r]
    return Elimination(tuple(conditions), substitution)


@dataclass(frozen=True)
class ShiftBranch:
    """
    Attributes:
        degree: Degree k of the solution f.
        conditions: Conditions on (a, b, α, β) for a degree-k solution.
        substitution: The conditions solved for some of the parameters.
        solution: Monic solution f with the substitution applied.
    """

    degree: int
    conditions: tuple[MultiPoly, ...]
    substitution: Mapping[str, MultiPoly]
    solution: MultiPoly

    def describe(self) -> str:
        shown = ", ".join(f"{c} = 0" for c in self.conditions) or "none"
        return f"deg f = {self.degree}: f = {self.solution} when {shown}"


def solve_shift_parametric(degree: Optional[int] = None) -> list[ShiftBranch]:
    """
    For each k ≤ ``degree``, the parameter conditions under which a monic f
    of degree exactly k solves the shift equation; degrees without a
    solution contribute no branch.
    """
    degree = validate_nonnegative_int(
        Settings()["degree_bound"] if degree is None else degree
    )
    params = [MultiPoly.var(p) for p in SHIFT_PARAMETERS]
    branches = []
    for k in range(degree + 1):
        lower, names = unknown_poly("f", "x", k - 1) if k else (MultiPoly(), [])
        f = MultiPoly.var("x", k) + lower
        residual = shift_residual(f, *params)
        equations = list(residual.collect({"x", "y"}).values())
        solved = eliminate(equations, names, SHIFT_PARAMETERS)
        if solved is None:
            LOGGER.debug(f"shift equation: no solution of degree {k}")
            continue
        parameter_part = {
            k_: v for k_, v in solved.substitution.items() if k_ in SHIFT_PARAMETERS
        }
        branches.append(
            ShiftBranch(
                k, solved.conditions, parameter_part, f.subs(solved.substitution)
            )
        )
    return branches


def _grid(names: Sequence[str], points: int) -> list[dict[str, Fraction]]:
    values = [Fraction(v) for v in (-2, -1, 0, 1, 2, Fraction(1, 2), Fraction(-3, 2))]
    if not names:
        return [{}]
    combos = product(values, repeat=len(names))
    return [dict(zip(names, c)) for c in islice(cycle(list(combos)), points)]


def conditions_agree(
    found: Sequence[MultiPoly],
    expected: Sequence[MultiPoly],
    points: Optional[int] = None,
) -> bool:
    """
    Whether two parameter condition sets cut out the same locus, judged on a
    grid of rational points of each locus.
    """
    points = points or Settings()["probe_points"]
    for source, target in ((expected, found), (found, expected)):
        solved = eliminate(source, (), SHIFT_PARAMETERS)
        if solved is None:
            return eliminate(target, (), SHIFT_PARAMETERS) is None
        free = [p for p in SHIFT_PARAMETERS if p not in solved.substitution]
        for point in _grid(free, points):
            values = {k: v.evaluate(point) for k, v in solved.substitution.items()}
            values.update({k: MultiPoly.const(v) for k, v in point.items()})
            if any(c.subs(values) for c in target):
                return False
    return True


def branch_points(
    branches: Sequence[ShiftBranch], a, b
) -> list[tuple[int, Fraction, Fraction]]:
    """
    Concrete ``(k, α, β)`` for each branch that admits the given (a, b);
    parameters left free by a branch are set to 0.
    """
    fixed = {
        "a": MultiPoly.const(validate_rational(a)),
        "b": MultiPoly.const(validate_rational(b)),
    }
    points = []
    for branch in branches:
        solved = eliminate(
            [c.subs(fixed) for c in branch.conditions], (), ("alpha", "beta")
        )
        if solved is None:
            continue
        zero = {"alpha": 0, "beta": 0}
        alpha, beta = (
            solved.substitution.get(p, MultiPoly()).evaluate(zero).constant_value()
            for p in ("alpha", "beta")
        )
        points.append((branch.degree, alpha, beta))
    return points
