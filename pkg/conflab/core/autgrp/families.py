"""
Membership predicates for the automorphism groups of the catalog families.

Every automorphism has the normal shape σ(A) = k1·A + g(∂)·B, σ(B) = k2·B,
σ(X) = k3·X; a family's group is cut out by a few equations among the
constants and by the subspace g(∂) must lie in.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional

from conflab.core.autgrp.automorphism import GradedAutomorphism
from conflab.core.catalog import condition1_Q, get_family
from conflab.core.catalog.families import SlotValue, resolve
from conflab.core.classify.linear import in_span
from conflab.core.exceptions import DomainError, UnknownFamilyError
from conflab.core.polyring import D, LAMBDA, PARTIAL, MultiPoly, ONE
from conflab.core.structures import Report
from conflab.util.logging import get_logger

LOGGER = get_logger(__name__)


class Rule(str, Enum):
    K1_ONE = "k1 = 1"
    K2_ONE = "k2 = 1"
    K2_SQUARE_K1 = "k2 = k1^2"
    K3_SQUARE_K2 = "k3^2 = k2"
    K3_SQUARE_ONE = "k3^2 = 1"
    G_SHAPE = "g in span"
    TRIANGULAR = "triangular even block"


def _holds(rule: Rule, sigma: GradedAutomorphism) -> bool:
    k1, k2, k3 = sigma.k1, sigma.k2, sigma.k3
    return {
        Rule.K1_ONE: k1 == 1,
        Rule.K2_ONE: k2 == 1,
        Rule.K2_SQUARE_K1: k2 == k1 * k1,
        Rule.K3_SQUARE_K2: k3 * k3 == k2,
        Rule.K3_SQUARE_ONE: k3 * k3 == 1,
    }[rule]


def _coefficients(poly: MultiPoly, width: int) -> list[Fraction]:
    found = poly.coefficients(PARTIAL)
    zero = MultiPoly()
    return [found.get(i, zero).constant_value() for i in range(width)]


@dataclass(frozen=True)
class AutFamilyConstraint:
    """
    Attributes:
        tag: Catalog family.
        case: Which case of the family's parameter split applies.
        rules: Equations among k1, k2, k3.
        g_span: Basis of the admissible g(∂); None when g is free, empty when
            g must vanish.
        params: Display values of the slots the case depends on.
    """

    tag: str
    case: str
    rules: frozenset[Rule]
    g_span: Optional[tuple[MultiPoly, ...]]
    params: Mapping[str, str] = field(default_factory=dict)

    def g_admissible(self, g: MultiPoly) -> bool:
        if self.g_span is None:
            return True
        width = max([g.degree(PARTIAL)] + [p.degree(PARTIAL) for p in self.g_span]) + 1
        vectors = [_coefficients(p, width) for p in self.g_span]
        return in_span(_coefficients(g, width), vectors)

    def violations(self, sigma: GradedAutomorphism) -> list[Rule]:
        if sigma.is_swap:
            return [Rule.TRIANGULAR]
        broken = [r for r in sorted(self.rules) if not _holds(r, sigma)]
        if not self.g_admissible(sigma.g):
            broken.append(Rule.G_SHAPE)
        return broken

    def admits(self, sigma: GradedAutomorphism) -> bool:
        return not self.violations(sigma)

    def describe(self) -> str:
        rules = [r.value for r in sorted(self.rules)]
        if self.g_span is None:
            rules.append("g free")
        elif not self.g_span:
            rules.append("g = 0")
        else:
            rules.append(f"g in span{{{', '.join(str(p) for p in self.g_span)}}}")
        return f"{self.tag} {self.case}: {'; '.join(rules)}"


def _constant(values: Mapping[str, MultiPoly], name: str) -> Fraction:
    value = values[name]
    if not value.is_constant():
        raise DomainError(f"slot '{name}' must be a rational, got {value}")
    return value.constant_value()


def _instantiated(values: Mapping[str, MultiPoly], *names: str) -> None:
    for name in names:
        if values[name].variables() - {PARTIAL, LAMBDA}:
            raise DomainError(f"slot '{name}' must be instantiated, got {values[name]}")


def type_d_even_rules(a: Fraction, b: Fraction, q: MultiPoly):
    """
    Case label, k2 rules and g-span of the automorphisms of the type D even
    part, which always fix k1 = 1.
    """
    if b != 0:
        return "(i) b != 0", frozenset(), (ONE - D.scale((a - 1) / b),)
    extra = {Fraction(1): ONE, Fraction(0): D**2, Fraction(-1): D**3}
    if a in extra:
        span = (D, extra[a])
        case = "(iv) b = 0, Q != 0" if q else "(v) b = 0, Q = 0"
        case = f"{case}, a = {a}"
    else:
        span = (D,)
        case = "(ii) b = 0, Q != 0" if q else "(iii) b = 0, Q = 0"
    return case, frozenset({Rule.K2_ONE}) if q else frozenset(), span


def _type_d(tag: str, a, b, q: MultiPoly, extra=frozenset()) -> AutFamilyConstraint:
    case, rules, span = type_d_even_rules(a, b, q)
    return AutFamilyConstraint(
        tag,
        case,
        frozenset({Rule.K1_ONE}) | rules | extra,
        span,
        {"a": str(a), "b": str(b), "Q": str(q)},
    )


def family_constraint(
    tag: str, params: Optional[Mapping[str, SlotValue]] = None
) -> AutFamilyConstraint:
    """
    The automorphism group of an instantiated catalog family as a predicate.

    :raises UnknownFamilyError: for a family without a known group.
    :raises DomainError: for uninstantiated slots the predicate depends on.
    """
    values = resolve(get_family(tag), dict(params or {}), strict=True)
    sq = frozenset({Rule.K3_SQUARE_K2})
    if tag in ("A1", "A2"):
        slot = "phi1" if tag == "A1" else "psi"
        _instantiated(values, slot)
        rules = {Rule.K2_SQUARE_K1}
        if values[slot]:
            rules.add(Rule.K1_ONE if tag == "A1" else Rule.K3_SQUARE_K2)
        case = f"{slot} != 0" if values[slot] else f"{slot} = 0"
        return AutFamilyConstraint(tag, case, frozenset(rules), None)
    if tag in ("A3", "A4"):
        slot = "phi3" if tag == "A3" else "p"
        _instantiated(values, slot)
        span = (values[slot].subs({LAMBDA: -D}),)
        rules = {Rule.K1_ONE} | (sq if tag == "A3" else set())
        return AutFamilyConstraint(
            tag, "", frozenset(rules), span, {slot: str(values[slot])}
        )
    if tag in ("B1", "B2"):
        rules = {Rule.K1_ONE, Rule.K2_ONE}
        if tag == "B2":
            rules.add(Rule.K3_SQUARE_ONE)
        return AutFamilyConstraint(tag, "", frozenset(rules), ())
    if tag in ("C1", "C2", "C3"):
        extra = {"C1": set(), "C2": {Rule.K3_SQUARE_ONE}, "C3": {Rule.K2_ONE}}[tag]
        return AutFamilyConstraint(tag, "", frozenset({Rule.K1_ONE} | extra), ())
    if tag in ("D1", "D2"):
        _instantiated(values, "Q")
        return _type_d(
            tag,
            _constant(values, "a"),
            _constant(values, "b"),
            values["Q"],
            sq if tag == "D2" else frozenset(),
        )
    if tag == "D3":
        _instantiated(values, "Q")
        return _type_d(tag, Fraction(0), _constant(values, "b"), values["Q"], sq)
    if tag in ("HVS", "D5"):
        return _type_d(tag, Fraction(1), Fraction(0), MultiPoly(), sq)
    if tag == "D4":
        gamma = _constant(values, "gamma")
        if gamma:
            return AutFamilyConstraint(
                tag, "gamma != 0", frozenset({Rule.K1_ONE, Rule.K2_ONE}), (),
                {"gamma": str(gamma)},
            )
        return AutFamilyConstraint(
            tag, "gamma = 0", frozenset({Rule.K1_ONE}), (ONE, D), {"gamma": "0"}
        )
    raise UnknownFamilyError(tag, AUTOMORPHISM_FAMILIES)


AUTOMORPHISM_FAMILIES = (
    "A1", "A2", "A3", "A4", "B1", "B2", "C1", "C2", "C3",
    "D1", "D2", "D3", "D4", "D5", "HVS",
)


def check_family(
    tag: str, params: Optional[Mapping[str, SlotValue]], sigma: GradedAutomorphism
) -> Report:
    constraint = family_constraint(tag, params)
    broken = constraint.violations(sigma)
    return Report.verdict(
        "family_membership",
        tag,
        not broken,
        case=constraint.case,
        sigma=sigma.describe(),
        witness=", ".join(r.value for r in broken) or None,
    )


def _type_d_cases(tag: str, extra: Mapping[str, SlotValue]) -> list:
    return [
        (tag, {"a": 2, "b": 1, "Q": 0, **extra}),
        (tag, {"a": -4, "b": 0, "Q": condition1_Q(-4), **extra}),
        (tag, {"a": 2, "b": 0, "Q": 0, **extra}),
        (tag, {"a": -1, "b": 0, "Q": condition1_Q(-1), **extra}),
        (tag, {"a": 0, "b": 0, "Q": 0, **extra}),
    ]


# Every family and parameter case of the automorphism groups, with probe values.
AUTOMORPHISM_CASES: tuple[tuple[str, Mapping[str, SlotValue]], ...] = tuple(
    [
        ("A1", {"f1": "d + 2*l", "phi1": 0}),
        ("A1", {"f1": "d + 2*l", "phi1": "1 + l"}),
        ("A2", {"f2": "d + 2*l", "psi": 0}),
        ("A2", {"f2": "d + 2*l", "psi": "1 + d"}),
        ("A3", {"phi3": "l"}),
        ("A4", {"p": "1 + l", "phi4": "2 + l"}),
        ("B1", {"alpha": 1, "beta": 0}),
        ("B2", {}),
        ("C1", {"alpha": 1, "beta": Fraction(1, 2)}),
        ("C2", {}),
        ("C3", {"phi": "1 + l"}),
    ]
    + _type_d_cases("D1", {"alpha": 2, "beta": 1})
    + _type_d_cases("D2", {})
    + [
        ("D3", {"b": 1}),
        ("D3", {"b": 0, "Q": condition1_Q(0)}),
        ("D3", {"b": 0, "Q": 0}),
        ("D4", {"alpha": 1, "beta": 0, "gamma": 1}),
        ("D4", {"alpha": 1, "beta": 0, "gamma": 0}),
        ("HVS", {}),
    ]
)


def _first_outside(constraint: AutFamilyConstraint) -> MultiPoly:
    for power in range(6):
        candidate = D**power
        if not constraint.g_admissible(candidate):
            return candidate
    raise DomainError(f"every monomial of degree < 6 satisfies {constraint.describe()}")


def necessity_probes(
    tag: str, params: Optional[Mapping[str, SlotValue]] = None
) -> list[tuple[str, GradedAutomorphism]]:
    """
    One map per constraint of the family, breaking exactly that constraint
    and satisfying the others, plus the swap shape.
    """
    constraint = family_constraint(tag, params)
    rules = constraint.rules
    probes = []
    triangular = GradedAutomorphism.triangular
    if Rule.K1_ONE in rules:
        k2 = 4 if Rule.K2_SQUARE_K1 in rules else 1
        k3 = 2 if Rule.K3_SQUARE_K2 in rules and k2 == 4 else 1
        probes.append((Rule.K1_ONE.value, triangular(2, k2, k3)))
    if Rule.K2_ONE in rules:
        k3 = 2 if Rule.K3_SQUARE_K2 in rules else 1
        probes.append((Rule.K2_ONE.value, triangular(1, 4, k3)))
    if Rule.K2_SQUARE_K1 in rules:
        k3 = 2 if Rule.K3_SQUARE_K2 in rules else 1
        probes.append((Rule.K2_SQUARE_K1.value, triangular(1, 4, k3)))
    if Rule.K3_SQUARE_K2 in rules:
        probes.append((Rule.K3_SQUARE_K2.value, triangular(1, 1, 3)))
    if Rule.K3_SQUARE_ONE in rules:
        probes.append((Rule.K3_SQUARE_ONE.value, triangular(1, 1, 2)))
    if constraint.g_span is not None:
        g = _first_outside(constraint)
        probes.append((Rule.G_SHAPE.value, triangular(1, 1, 1, g)))
    probes.append((Rule.TRIANGULAR.value, GradedAutomorphism.swap(1, 1)))
    return probes
