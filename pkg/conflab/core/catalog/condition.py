"""
The admissible Q(∂,λ) components of [A_λ A] for the type-D rank-two even
part

    [A_λ A] = (∂+2λ)A + Q(∂,λ)B,  [A_λ B] = (∂+aλ+b)B,  [B_λ B] = 0.

Q must vanish when b ≠ 0. When b = 0 a nonzero Q is only allowed for the five
values of ``a`` listed in :data:`CONDITION1_TABLE`, as a combination of that
row's templates. Template parameters are ``c`` and ``c_d`` (``d`` is the
reserved name of ∂).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from conflab.core.exceptions import ConditionViolation
from conflab.core.polyring import D, L, PARTIAL, LAMBDA, MultiPoly, ZERO

SlotValue = Union[int, Fraction, str, MultiPoly]

_E = D + L.scale(2)  # ∂+2λ
_S = D * L + L * L  # ∂λ+λ²


@dataclass(frozen=True)
class Condition1Entry:
    """
    Attributes:
        a: The admissible value of ``a``.
        basis: Template polynomials in (∂, λ); Q must be a combination of them.
        slots: Coefficient name of each basis polynomial.
    """

    a: Fraction
    basis: tuple[MultiPoly, ...]
    slots: tuple[str, ...]

    @property
    def template(self) -> MultiPoly:
        """The row with symbolic coefficients ``c`` and ``c_d``."""
        total = ZERO
        for poly, name in zip(self.basis, self.slots):
            total = total + poly * MultiPoly.var(name)
        return total


CONDITION1_TABLE: dict[Fraction, Condition1Entry] = {
    entry.a: entry
    for entry in (
        Condition1Entry(Fraction(1), (_E,), ("c",)),
        Condition1Entry(Fraction(0), (_E * _S, _E * D), ("c", "c_d")),
        Condition1Entry(Fraction(-1), (_E * D * D, _E * _S * D), ("c", "c_d")),
        Condition1Entry(Fraction(-4), (_E * _S**3,), ("c",)),
        Condition1Entry(
            Fraction(-6),
            (_E * (_S**4 * 11 + _S**3 * D * D * 2),),
            ("c",),
        ),
    )
}


def _coerce(value: SlotValue) -> MultiPoly:
    if isinstance(value, str):
        return MultiPoly.var(value)
    return MultiPoly.coerce(value)


def _rational(value: SlotValue) -> Optional[Fraction]:
    """The rational value of a slot, or None if it is symbolic."""
    poly = _coerce(value)
    return poly.constant_value() if poly.is_constant() else None


def condition1_Q(
    a: SlotValue, c: SlotValue = 1, d: Optional[SlotValue] = None
) -> MultiPoly:
    """
    Instantiate the Condition-1 template of row ``a``.

    :param a: One of 1, 0, -1, -4, -6.
    :param c: Coefficient of the first template (rational or parameter name).
    :param d: Coefficient of the second template; only rows 0 and -1 have one.
    :raises ConditionViolation: if ``a`` is outside the table or ``d`` is given
        for a one-template row.
    """
    value = _rational(a)
    entry = CONDITION1_TABLE.get(value) if value is not None else None
    if entry is None:
        raise ConditionViolation(f"a={a} is not in the Condition 1 table")
    coefficients = [_coerce(c)]
    if d is not None:
        if len(entry.basis) < 2:
            raise ConditionViolation(f"row a={value} has no d coefficient")
        coefficients.append(_coerce(d))
    total = ZERO
    for poly, coef in zip(entry.basis, coefficients):
        total = total + poly * coef
    return total


def _leading(poly: MultiPoly):
    """Leading (∂, λ)-monomial of a template and its rational coefficient."""
    collected = poly.collect((PARTIAL, LAMBDA))
    mono = min(collected, key=lambda m: (-sum(e for _, e in m), m))
    return mono, collected[mono].constant_value()


def decompose(q: MultiPoly, entry: Condition1Entry) -> Optional[list[MultiPoly]]:
    """
    Coefficients x_i with q = Σ x_i · basis_i, or None if q is not such a
    combination. Coefficients may mention parameters.
    """
    remainder = q
    coefficients = []
    for poly in entry.basis:
        mono, lead = _leading(poly)
        x = remainder.collect((PARTIAL, LAMBDA)).get(mono, ZERO).scale(1 / lead)
        coefficients.append(x)
        remainder = remainder - poly * x
    return coefficients if remainder.is_zero() else None


def validate_condition1(a: SlotValue, b: SlotValue, q: SlotValue) -> None:
    """
    :raises ConditionViolation: when Q ≠ 0 and b is nonzero or symbolic, a is
        symbolic or outside the table, or Q does not match the row's templates.
    """
    q = _coerce(q)
    if q.is_zero():
        return
    b_value = _rational(b)
    if b_value is None or b_value != 0:
        raise ConditionViolation(f"Q={q} must vanish unless b=0 (b={_coerce(b)})")
    a_value = _rational(a)
    entry = CONDITION1_TABLE.get(a_value) if a_value is not None else None
    if entry is None:
        raise ConditionViolation(f"Q={q} must vanish for a={_coerce(a)}")
    if decompose(q, entry) is None:
        raise ConditionViolation(
            f"Q={q} is not a combination of the a={a_value} templates "
            f"{', '.join(str(p) for p in entry.basis)}"
        )
