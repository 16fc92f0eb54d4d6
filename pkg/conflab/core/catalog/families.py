"""
Registry of the rank-(2+1) Lie conformal superalgebra families, their rank-two
even types, and the classical examples they are built from.

A family is built from a :class:`FamilySpec`, a tag plus named slot values.
Slots hold rationals, parameter names or polynomials; omitted slots take the
family default, which is symbolic wherever the family has a free parameter.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Callable, Mapping, Optional, Sequence, Union

from conflab.core.catalog.condition import validate_condition1
from conflab.core.exceptions import ConditionViolation, DomainError, UnknownFamilyError
from conflab.core.lcsa import ConformalSuperAlgebra, even, odd, skew_image
from conflab.core.polyring import LAMBDA, MU, PARTIAL, MultiPoly, parse
from conflab.util.logging import get_logger
from conflab.util.validation import validate_positive_int

LOGGER = get_logger(__name__)

SlotValue = Union[int, Fraction, str, MultiPoly]


class SlotKind(str, Enum):
    RATIONAL = "rational"
    POLY_L = "poly_l"
    POLY_D = "poly_d"
    POLY_DL = "poly_dl"
    COUNT = "count"


_ALLOWED = {
    SlotKind.RATIONAL: frozenset(),
    SlotKind.POLY_L: frozenset({LAMBDA}),
    SlotKind.POLY_D: frozenset({PARTIAL}),
    SlotKind.POLY_DL: frozenset({PARTIAL, LAMBDA}),
}


@dataclass(frozen=True)
class Slot:
    """
    Attributes:
        name: Stable slot name used on the command line.
        kind: Which of ∂ and λ the value may mention.
        default: Value used when the slot is omitted.
        nonzero: The value must not be the zero polynomial.
        skew: The value must be skew-symmetric as an even-even bracket entry.
    """

    name: str
    kind: SlotKind = SlotKind.RATIONAL
    default: Any = None
    nonzero: bool = False
    skew: bool = False


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    slots: Mapping[str, SlotValue] = field(default_factory=dict)

    def __str__(self) -> str:
        if not self.slots:
            return self.tag
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.slots.items()))
        return f"{self.tag}({inner})"


Values = dict[str, Any]
Brackets = dict[tuple[str, str], dict[str, MultiPoly]]


@dataclass(frozen=True)
class Family:
    """
    Attributes:
        tag: Registry key.
        even_type: Letter of the rank-two even type (A, B, C, D or O), if any.
        basis: Generator names and parities.
        slots: Parameter slots in declaration order.
        brackets: Assembles the listed λ-brackets from resolved slot values.
        constraint: Extra validation beyond the slot kinds, run when strict.
        indexed: ``(prefix, kind, default pattern)`` for families whose slot
            list depends on the ``n`` slot.
        summary: One-line description.
    """

    tag: str
    even_type: Optional[str]
    basis: Callable[[Values], tuple]
    slots: tuple[Slot, ...]
    brackets: Callable[[Values], Brackets]
    constraint: Optional[Callable[[Values], None]] = None
    indexed: Optional[tuple[str, SlotKind, str]] = None
    summary: str = ""


def P(text: str) -> MultiPoly:
    return parse(text)


VIR = P("d + 2*l")


def _coerce(value: SlotValue) -> MultiPoly:
    if isinstance(value, str):
        return parse(value)
    return MultiPoly.coerce(value)


def _check_kind(tag: str, slot: Slot, value: MultiPoly) -> None:
    reserved = value.variables() & {PARTIAL, LAMBDA, MU}
    allowed = _ALLOWED[slot.kind]
    if not reserved <= allowed:
        shown = ", ".join(sorted(allowed)) or "no variable"
        raise ConditionViolation(
            f"slot '{slot.name}' of {tag} may only mention {shown}, got {value}"
        )


def _slot_list(family: Family, values: Mapping[str, Any]) -> list[Slot]:
    slots = list(family.slots)
    if family.indexed is not None:
        prefix, kind, pattern = family.indexed
        count = values.get("n", next(s.default for s in slots if s.name == "n"))
        for i in range(1, validate_positive_int(count) + 1):
            slots.append(Slot(f"{prefix}_{i}", kind, pattern.format(i=i)))
    return slots


def resolve(family: Family, given: Mapping[str, SlotValue], strict: bool) -> Values:
    return resolve_slots(family.tag, _slot_list(family, given), given, strict)


def resolve_slots(
    tag: str, slots: Sequence[Slot], given: Mapping[str, SlotValue], strict: bool
) -> Values:
    """
    Coerce and validate slot values, filling defaults.

    :raises DomainError: for a slot name the family does not have.
    :raises ConditionViolation: for a value mentioning the wrong variable, and,
        when ``strict``, for a zero value in a nonzero slot or a non-skew value
        in a skew slot.
    """
    names = {s.name for s in slots}
    unknown = set(given) - names
    if unknown:
        raise DomainError(
            f"{tag} has no slot(s) {sorted(unknown)}; slots are {sorted(names)}"
        )
    values: Values = {}
    for slot in slots:
        raw = given.get(slot.name, slot.default)
        if slot.kind is SlotKind.COUNT:
            values[slot.name] = validate_positive_int(raw)
            continue
        value = _coerce(raw)
        _check_kind(tag, slot, value)
        if strict and slot.nonzero and value.is_zero():
            raise ConditionViolation(f"slot '{slot.name}' of {tag} must be nonzero")
        if strict and slot.skew and value != skew_image(value, 0):
            raise ConditionViolation(
                f"slot '{slot.name}' of {tag} is not skew-symmetric: {value}"
            )
        values[slot.name] = value
    return values


def _rank21(values: Values) -> tuple:
    return (even("A"), even("B"), odd("X"))


def _rank2(values: Values) -> tuple:
    return (even("A"), even("B"))


def _condition1(values: Values) -> None:
    validate_condition1(values["a"], values["b"], values["Q"])


def _type_d(values: Values, a=None, b=None) -> Brackets:
    a = values["a"] if a is None else a
    b = values["b"] if b is None else b
    return {
        ("A", "A"): {"A": VIR, "B": values["Q"]},
        ("A", "B"): {"B": P("d") + P("l") * a + b},
    }


def _module_action(values: Values) -> MultiPoly:
    """∂ + αλ + β"""
    return P("d") + P("l") * values["alpha"] + values["beta"]


_D_SLOTS = (
    Slot("a", default="a"),
    Slot("b", default="b"),
    Slot("Q", SlotKind.POLY_DL, 0),
)
_ALPHA_BETA = (Slot("alpha", default="alpha"), Slot("beta", default="beta"))


def _dbar_constraint(values: Values) -> None:
    _condition1(values)
    gamma = values["gamma"]
    if gamma.is_zero():
        return
    hv = (values["a"] - 1).is_zero() and values["b"].is_zero() and values["Q"].is_zero()
    if not hv:
        raise ConditionViolation(
            f"gamma={gamma} must vanish unless (a,b,Q)=(1,0,0); "
            f"got ({values['a']},{values['b']},{values['Q']})"
        )


def _general_o_basis(values: Values) -> tuple:
    n = values["n"]
    return tuple(even(f"A{i}") for i in range(1, n + 1)) + (odd("X"),)


def _general_o1(values: Values) -> Brackets:
    return {
        (f"A{i}", "X"): {"X": values[f"phi_{i}"]} for i in range(1, values["n"] + 1)
    }


def _general_o2(values: Values) -> Brackets:
    xx = {f"A{i}": values[f"psi_{i}"] for i in range(1, values["n"] + 1)}
    return {("X", "X"): xx}


def _d2_brackets(values: Values) -> Brackets:
    half = Fraction(1, 2)
    return {
        **_type_d(values),
        ("A", "X"): {
            "X": P("d") + P("l") * ((values["a"] + 1) * half) + values["b"] * half
        },
        ("X", "X"): {"B": MultiPoly.const(2)},
    }


def _d4_brackets(values: Values) -> Brackets:
    return {
        ("A", "A"): {"A": VIR},
        ("A", "B"): {"B": P("d + l")},
        ("A", "X"): {"X": _module_action(values)},
        ("B", "X"): {"X": values["gamma"]},
    }


_HVS_VALUES = {"a": MultiPoly.const(1), "b": MultiPoly.const(0), "Q": MultiPoly()}

_REGISTRY: list[Family] = [
    Family(
        "Vir", None, lambda v: (even("L"),), (), lambda v: {("L", "L"): {"L": VIR}},
        summary="Virasoro conformal algebra",
    ),
    Family(
        "NS", None, lambda v: (even("L"), odd("G")), (),
        lambda v: {
            ("L", "L"): {"L": VIR},
            ("L", "G"): {"G": P("d + 3/2*l")},
            ("G", "G"): {"L": MultiPoly.const(2)},
        },
        summary="Neveu-Schwarz conformal superalgebra",
    ),
    Family(
        "HV", None, lambda v: (even("L"), even("H")), (),
        lambda v: {("L", "L"): {"L": VIR}, ("L", "H"): {"H": P("d + l")}},
        summary="Heisenberg-Virasoro conformal algebra",
    ),
    Family(
        "HVS", "D", _rank21, (), lambda v: _d2_brackets(_HVS_VALUES),
        summary="Heisenberg-Virasoro conformal superalgebra, D2 at (1,0,0)",
    ),
    Family(
        "W", None, lambda v: (even("A"), even("B"), even("X")),
        (*_ALPHA_BETA, Slot("gamma", default="gamma")),
        _d4_brackets,
        summary="rank-three Lie conformal algebra whose super deformation at X is D4",
    ),
    Family(
        "O1", "O", _rank21,
        (
            Slot("phi_a", SlotKind.POLY_L, "u0 + u1*l"),
            Slot("phi_b", SlotKind.POLY_L, "v0 + v1*l"),
        ),
        lambda v: {("A", "X"): {"X": v["phi_a"]}, ("B", "X"): {"X": v["phi_b"]}},
        summary="abelian even part acting on X by polynomials in λ",
    ),
    Family(
        "O2", "O", _rank21,
        (
            Slot("psi_a", SlotKind.POLY_D, "w0 + w1*d"),
            Slot("psi_b", SlotKind.POLY_D, "z0 + z1*d"),
        ),
        lambda v: {("X", "X"): {"A": v["psi_a"], "B": v["psi_b"]}},
        summary="abelian even part, [X_λ X] = ψ_A(∂)A + ψ_B(∂)B",
    ),
    Family(
        "Ot1", "O", _general_o_basis, (Slot("n", SlotKind.COUNT, 3),), _general_o1,
        indexed=("phi", SlotKind.POLY_L, "u{i} + v{i}*l"),
        summary="rank (n+1), [A_i λ X] = φ_i(λ)X",
    ),
    Family(
        "Ot2", "O", _general_o_basis, (Slot("n", SlotKind.COUNT, 3),), _general_o2,
        indexed=("psi", SlotKind.POLY_D, "w{i} + z{i}*d"),
        summary="rank (n+1), [X_λ X] = Σ ψ_i(∂)A_i",
    ),
    Family(
        "A1", "A", _rank21,
        (
            Slot("f1", SlotKind.POLY_DL, "c*(d + 2*l)", nonzero=True, skew=True),
            Slot("phi1", SlotKind.POLY_L, "u0 + u1*l + u2*l^2"),
        ),
        lambda v: {("A", "A"): {"B": v["f1"]}, ("A", "X"): {"X": v["phi1"]}},
        summary="nilpotent even part, [A_λ X] = φ1(λ)X",
    ),
    Family(
        "A2", "A", _rank21,
        (
            Slot("f2", SlotKind.POLY_DL, "c*(d + 2*l)", nonzero=True, skew=True),
            Slot("psi", SlotKind.POLY_D, "w0 + w1*d + w2*d^2"),
        ),
        lambda v: {("A", "A"): {"B": v["f2"]}, ("X", "X"): {"B": v["psi"]}},
        summary="nilpotent even part, [X_λ X] = ψ(∂)B",
    ),
    Family(
        "A3", "A", _rank21,
        (Slot("phi3", SlotKind.POLY_L, "l", nonzero=True),),
        lambda v: {
            ("A", "B"): {"B": v["phi3"] * 2},
            ("A", "X"): {"X": v["phi3"]},
            ("X", "X"): {"B": MultiPoly.const(2)},
        },
        summary="solvable even part, [X_λ X] = 2B",
    ),
    Family(
        "A4", "A", _rank21,
        (
            Slot("p", SlotKind.POLY_L, "v0 + v1*l", nonzero=True),
            Slot("phi4", SlotKind.POLY_L, "u0 + u1*l"),
        ),
        lambda v: {("A", "B"): {"B": v["p"]}, ("A", "X"): {"X": v["phi4"]}},
        summary="solvable even part, [A_λ B] = p(λ)B",
    ),
    Family(
        "B0", "B", _rank21, (),
        lambda v: {("A", "A"): {"A": VIR}, ("B", "B"): {"B": VIR}},
        summary="Vir ⊕ Vir with X spanning a trivial ideal",
    ),
    Family(
        "B1", "B", _rank21, _ALPHA_BETA,
        lambda v: {
            ("A", "A"): {"A": VIR},
            ("B", "B"): {"B": VIR},
            ("A", "X"): {"X": _module_action(v)},
        },
        summary="Vir ⊕ Vir, [A_λ X] = (∂+αλ+β)X",
    ),
    Family(
        "B2", "B", _rank21, (),
        lambda v: {
            ("A", "A"): {"A": VIR},
            ("B", "B"): {"B": VIR},
            ("A", "X"): {"X": P("d + 3/2*l")},
            ("X", "X"): {"A": MultiPoly.const(2)},
        },
        summary="NS ⊕ Vir",
    ),
    Family(
        "C0", "C", _rank21, (), lambda v: {("A", "A"): {"A": VIR}},
        summary="Vir ⊕ commutative with X spanning a trivial ideal",
    ),
    Family(
        "C1", "C", _rank21, _ALPHA_BETA,
        lambda v: {("A", "A"): {"A": VIR}, ("A", "X"): {"X": _module_action(v)}},
        summary="Vir ⊕ commutative, [A_λ X] = (∂+αλ+β)X",
    ),
    Family(
        "C2", "C", _rank21, (),
        lambda v: {
            ("A", "A"): {"A": VIR},
            ("A", "X"): {"X": P("d + 3/2*l")},
            ("X", "X"): {"A": MultiPoly.const(2)},
        },
        summary="NS ⊕ commutative",
    ),
    Family(
        "C3", "C", _rank21, (Slot("phi", SlotKind.POLY_L, "v0 + v1*l", nonzero=True),),
        lambda v: {("A", "A"): {"A": VIR}, ("B", "X"): {"X": v["phi"]}},
        summary="Vir ⊕ commutative, [B_λ X] = φ(λ)X",
    ),
    Family(
        "D0", "D", _rank21, _D_SLOTS, _type_d, _condition1,
        summary="type D even part with X spanning a trivial ideal",
    ),
    Family(
        "D1", "D", _rank21, _D_SLOTS + _ALPHA_BETA,
        lambda v: {**_type_d(v), ("A", "X"): {"X": _module_action(v)}},
        _condition1,
        summary="type D, [A_λ X] = (∂+αλ+β)X",
    ),
    Family(
        "D2", "D", _rank21, _D_SLOTS, _d2_brackets, _condition1,
        summary="type D, [X_λ X] = 2B",
    ),
    Family(
        "D3", "D", _rank21, (Slot("b", default="b"), Slot("Q", SlotKind.POLY_DL, 0)),
        lambda v: {
            **_type_d(v, a=0),
            ("A", "X"): {"X": P("d + l") + v["b"] * Fraction(1, 2)},
            ("X", "X"): {"B": P("d") + v["b"]},
        },
        lambda v: validate_condition1(0, v["b"], v["Q"]),
        summary="type D with a=0, [X_λ X] = (∂+b)B",
    ),
    Family(
        "D4", "D", _rank21, _ALPHA_BETA + (Slot("gamma", default="gamma"),),
        _d4_brackets,
        summary="HV even part, [B_λ X] = γX",
    ),
    Family(
        "D5", "D", _rank21, (), lambda v: _d2_brackets(_HVS_VALUES),
        summary="D2 at (a,b,Q)=(1,0,0)",
    ),
    Family(
        "Dbar", "D", _rank21, _D_SLOTS + _ALPHA_BETA + (Slot("gamma", default=0),),
        lambda v: {
            **_type_d(v),
            ("A", "X"): {"X": _module_action(v)},
            ("B", "X"): {"X": v["gamma"]},
        },
        _dbar_constraint,
        summary="D1 together with [B_λ X] = γX",
    ),
]

FAMILIES: Mapping[str, Family] = MappingProxyType({f.tag: f for f in _REGISTRY})

EVEN_TYPES: Mapping[str, Family] = MappingProxyType(
    {
        f.tag: f
        for f in (
            Family("O", "O", _rank2, (), lambda v: {}, summary="abelian"),
            Family(
                "A", "A", _rank2,
                (Slot("P1", SlotKind.POLY_DL, 0), Slot("Q1", SlotKind.POLY_DL, 0)),
                lambda v: {("A", "A"): {"B": v["Q1"]}, ("A", "B"): {"B": v["P1"]}},
                lambda v: _type_a_constraint(v),
                summary="solvable",
            ),
            Family(
                "B", "B", _rank2, (),
                lambda v: {("A", "A"): {"A": VIR}, ("B", "B"): {"B": VIR}},
                summary="Vir ⊕ Vir",
            ),
            Family(
                "C", "C", _rank2, (), lambda v: {("A", "A"): {"A": VIR}},
                summary="Vir ⊕ commutative",
            ),
            Family("D", "D", _rank2, _D_SLOTS, _type_d, _condition1, summary="type D"),
        )
    }
)

# Finite nontrivial irreducible conformal modules of each family.
FNICM_TABLE: Mapping[str, tuple[str, ...]] = MappingProxyType(
    {
        "A1": ("N_f",),
        "A2": ("N_f",),
        "A3": ("N_f",),
        "A4": ("N_f",),
        "B1": ("M_A", "M_B"),
        "B2": ("M_B", "M_plus", "M_minus"),
        "C1": ("N_g", "M_A"),
        "C3": ("N_g", "M_A"),
        "C2": ("N_g", "M_plus", "M_minus"),
        "D1": ("M_A", "M_omega"),
        "D4": ("M_A", "M_omega"),
        "HVS": ("M_A", "M_cE"),
        "D5": ("M_A", "M_cE"),
        "D2": ("M_A",),
        "D3": ("M_A",),
        "Dbar": ("M_A", "M_omega"),
    }
)


def _type_a_constraint(values: Values) -> None:
    p1, q1 = values["P1"], values["Q1"]
    if p1.is_zero():
        if q1 != skew_image(q1, 0):
            raise ConditionViolation(f"Q1={q1} must be skew-symmetric")
        return
    if not q1.is_zero() or PARTIAL in p1.variables():
        raise ConditionViolation(
            f"a solvable even part needs P1=0 or (P1=p(λ), Q1=0); got P1={p1}, Q1={q1}"
        )


def get_family(tag: str, registry: Mapping[str, Family] = FAMILIES) -> Family:
    try:
        return registry[tag]
    except KeyError:
        raise UnknownFamilyError(tag, tuple(registry))


def _build(
    registry: Mapping[str, Family], spec: Union[FamilySpec, str], strict: bool, slots
) -> ConformalSuperAlgebra:
    if isinstance(spec, str):
        spec = FamilySpec(spec, dict(slots))
    elif slots:
        spec = FamilySpec(spec.tag, {**spec.slots, **slots})
    family = get_family(spec.tag, registry)
    values = resolve(family, spec.slots, strict)
    if strict and family.constraint is not None:
        family.constraint(values)
    LOGGER.debug(f"building {spec}")
    return ConformalSuperAlgebra.from_brackets(
        family.basis(values), family.brackets(values), name=str(spec)
    )


def build(
    spec: Union[FamilySpec, str], strict: bool = True, **slots: SlotValue
) -> ConformalSuperAlgebra:
    """
    Build a catalog algebra. Omitted brackets are zero or skew-derived.

    #### Usage:

        ```
        build("D2", a=1, b=0, Q=0)
        build(FamilySpec("A3", {"phi3": "l"}))
        ```

    :param spec: Family spec or bare tag.
    :param strict: Validate nonzero, skew and Condition-1 constraints. Pass
        False to force-construct an algebra outside the family.
    :param slots: Slot values merged over those of ``spec``.
    :raises UnknownFamilyError: for an unregistered tag.
    :raises ConditionViolation: for a constraint violation.
    """
    return _build(FAMILIES, spec, strict, slots)


def even_type(
    tag: str, strict: bool = True, **slots: SlotValue
) -> ConformalSuperAlgebra:
    """Rank-two Lie conformal algebra of type O, A, B, C or D."""
    return _build(EVEN_TYPES, tag, strict, slots)


def family_tags() -> tuple[str, ...]:
    return tuple(FAMILIES)
