"""
Constructors for the rank-one and rank-(1+1) conformal modules of the
Virasoro and Neveu-Schwarz examples and of the rank-(2+1) families.

Rank-one modules have the single generator ``v``; rank-(1+1) modules have
``v0`` (even) and ``v1`` (odd) unless the parity is changed.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Mapping, Optional, Union

from conflab.core.catalog import FNICM_TABLE, FamilySpec, build
from conflab.core.catalog.families import Slot, SlotKind, SlotValue, resolve_slots
from conflab.core.exceptions import ConditionViolation, UnknownFamilyError
from conflab.core.lcsa import ConformalSuperAlgebra, even, odd
from conflab.core.polyring import MultiPoly, parse
from conflab.core.repmod.module import ConformalModule
from conflab.util.logging import get_logger

LOGGER = get_logger(__name__)

HALF = Fraction(1, 2)
D = parse("d")
L = parse("l")
ONE = MultiPoly.const(1)


@dataclass(frozen=True)
class ModuleFamilySpec:
    """
    Attributes:
        tag: Module family tag.
        slots: Slot values; omitted slots take the family default.
        parity_changed: Build the parity-changed module.
    """

    tag: str
    slots: Mapping[str, SlotValue] = field(default_factory=dict)
    parity_changed: bool = False

    def __str__(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.slots.items()))
        label = f"{self.tag}({inner})" if inner else self.tag
        return f"Π{label}" if self.parity_changed else label


Values = dict
Actions = dict[tuple[str, str], dict[str, MultiPoly]]


@dataclass(frozen=True)
class ModuleFamily:
    """
    Attributes:
        tag: Registry key.
        algebra: Default algebra spec the module is built over.
        rank: 1 for ``v``, 2 for ``v0, v1``.
        slots: Parameter slots.
        actions: Assembles the action table from resolved slots.
        constraint: Validation run when strict; receives the algebra too.
    """

    tag: str
    algebra: str
    rank: int
    slots: tuple[Slot, ...]
    actions: Callable[[Values], Actions]
    constraint: Optional[Callable[[Values, ConformalSuperAlgebra], None]] = None


def _line(values: Values, weight, shift="eta") -> MultiPoly:
    """∂ + weight·λ + shift"""
    return D + L * weight + values[shift]


def _nonzero(*names: str):
    def check(values: Values, alg: ConformalSuperAlgebra) -> None:
        for name in names:
            if values[name].is_zero():
                raise ConditionViolation(f"slot '{name}' must be nonzero")

    return check


def _not_half(name: str):
    def check(values: Values, alg: ConformalSuperAlgebra) -> None:
        if (values[name] - HALF).is_zero():
            raise ConditionViolation(f"slot '{name}' must differ from 1/2")

    return check


def _is_hv_even_part(alg: ConformalSuperAlgebra) -> bool:
    return (
        dict(alg.entry("A", "A")) == {"A": D + L * 2}
        and dict(alg.entry("A", "B")) == {"B": D + L}
        and not alg.entry("B", "B")
    )


def _omega_constraint(values: Values, alg: ConformalSuperAlgebra) -> None:
    _nonzero("omega")(values, alg)
    if not _is_hv_even_part(alg):
        raise ConditionViolation(
            f"omega={values['omega']} must vanish unless the even part of "
            f"{alg.name} is Heisenberg-Virasoro"
        )


def _n_constraint(values: Values, alg: ConformalSuperAlgebra) -> None:
    f, g = values["f"], values["g"]
    if f.is_zero() and g.is_zero():
        raise ConditionViolation("f and g must not both vanish")
    if alg.q("A", "A", "A") and not f.is_zero():
        raise ConditionViolation(
            f"f must vanish when [A_λ A] has an A component in {alg.name}"
        )
    if (alg.q("A", "A", "B") or alg.q("A", "B", "B")) and not g.is_zero():
        raise ConditionViolation(f"g must vanish when A acts on B in {alg.name}")


def _nsbar(values: Values, plus: bool, even_gen: str, odd_gen: str, shift: str):
    delta = values["delta"]
    if plus:
        return {
            (even_gen, "v0"): {"v0": _line(values, delta, shift)},
            (even_gen, "v1"): {"v1": _line(values, delta + HALF, shift)},
            (odd_gen, "v0"): {"v1": ONE},
            (odd_gen, "v1"): {"v0": _line(values, delta * 2, shift)},
        }
    return {
        (even_gen, "v0"): {"v0": _line(values, delta, shift)},
        (even_gen, "v1"): {"v1": _line(values, delta - HALF, shift)},
        (odd_gen, "v0"): {"v1": _line(values, delta * 2 - 1, shift)},
        (odd_gen, "v1"): {"v0": ONE},
    }


def _hvs(h: Callable[[Values], MultiPoly], delta0, delta1):
    def actions(values: Values) -> Actions:
        d0, d1 = delta0(values), delta1(values)
        return {
            ("A", "v0"): {"v0": _line(values, d0)},
            ("A", "v1"): {"v1": _line(values, d1)},
            ("X", "v0"): {"v1": h({**values, "delta1": d1})},
        }

    return actions


def _delta0(values: Values):
    return values["delta0"]


def _constant(c):
    return lambda values: MultiPoly.const(c)


_ETA = Slot("eta", default="eta")
_DELTA = Slot("delta", default="delta")
_HVS_PARAM = (Slot("delta0", default="delta0"), _ETA)

_REGISTRY = [
    ModuleFamily(
        "V", "Vir", 1, (_DELTA, Slot("a", default="a")),
        lambda v: {("L", "v"): {"v": _line(v, v["delta"], "a")}},
    ),
    ModuleFamily(
        "NSbar", "NS", 2, (_DELTA, Slot("a", default="a")),
        lambda v: _nsbar(v, True, "L", "G", "a"),
        _nonzero("delta"),
    ),
    ModuleFamily(
        "NSbar_prime", "NS", 2, (_DELTA, Slot("a", default="a")),
        lambda v: _nsbar(v, False, "L", "G", "a"),
        _not_half("delta"),
    ),
    ModuleFamily(
        "N", "A1", 1,
        (Slot("f", SlotKind.POLY_L, "f0 + f1*l"), Slot("g", SlotKind.POLY_L, 0)),
        lambda v: {("A", "v"): {"v": v["f"]}, ("B", "v"): {"v": v["g"]}},
        _n_constraint,
    ),
    ModuleFamily(
        "N_f", "A1", 1, (Slot("f", SlotKind.POLY_L, "f0 + f1*l", nonzero=True),),
        lambda v: {("A", "v"): {"v": v["f"]}},
        lambda v, alg: _n_constraint({**v, "g": MultiPoly()}, alg),
    ),
    ModuleFamily(
        "N_g", "C1", 1, (Slot("g", SlotKind.POLY_L, "g0 + g1*l", nonzero=True),),
        lambda v: {("B", "v"): {"v": v["g"]}},
        lambda v, alg: _n_constraint({**v, "f": MultiPoly()}, alg),
    ),
    ModuleFamily(
        "M_A", "D1", 1, (_DELTA, _ETA),
        lambda v: {("A", "v"): {"v": _line(v, v["delta"])}},
        _nonzero("delta"),
    ),
    ModuleFamily(
        "M_B", "B1", 1, (_DELTA, _ETA),
        lambda v: {("B", "v"): {"v": _line(v, v["delta"])}},
        _nonzero("delta"),
    ),
    ModuleFamily(
        "M_plus", "B2", 2, (_DELTA, _ETA),
        lambda v: _nsbar(v, True, "A", "X", "eta"),
        _nonzero("delta"),
    ),
    ModuleFamily(
        "M_minus", "B2", 2, (_DELTA, _ETA),
        lambda v: _nsbar(v, False, "A", "X", "eta"),
        _not_half("delta"),
    ),
    ModuleFamily(
        "M_omega", "D4", 1, (_DELTA, _ETA, Slot("omega", default="omega")),
        lambda v: {
            ("A", "v"): {"v": _line(v, v["delta"])},
            ("B", "v"): {"v": v["omega"]},
        },
        _omega_constraint,
    ),
    ModuleFamily(
        "M_cE", "HVS", 2,
        (
            _DELTA,
            Slot("zeta", default="zeta"),
            Slot("c", default="c"),
            Slot("eps", default="eps"),
        ),
        lambda v: {
            ("A", "v0"): {"v0": _line(v, v["delta"], "zeta")},
            ("A", "v1"): {"v1": _line(v, v["delta"], "zeta")},
            ("B", "v0"): {"v0": v["c"] * v["eps"]},
            ("B", "v1"): {"v1": v["c"] * v["eps"]},
            ("X", "v0"): {"v1": v["c"]},
            ("X", "v1"): {"v0": v["eps"]},
        },
        _nonzero("c", "eps"),
    ),
    ModuleFamily(
        "HVS_1", "HVS", 2, _HVS_PARAM, _hvs(_constant(1), _delta0, _delta0),
    ),
    ModuleFamily(
        "HVS_2", "HVS", 2, _HVS_PARAM,
        _hvs(lambda v: L, _delta0, lambda v: v["delta0"] - 1),
    ),
    ModuleFamily(
        "HVS_3", "HVS", 2, _HVS_PARAM,
        _hvs(
            lambda v: L * (D - L * v["delta1"] + v["eta"]),
            _delta0,
            lambda v: v["delta0"] - 2,
        ),
    ),
    ModuleFamily(
        "HVS_4", "HVS", 2, (_ETA, Slot("k", default="k")),
        _hvs(lambda v: D + L * v["k"] + v["eta"], _constant(1), _constant(0)),
    ),
    ModuleFamily(
        "HVS_5", "HVS", 2, (_ETA,),
        _hvs(
            lambda v: L * (D + L + v["eta"]) * (D + L * 2 + v["eta"]),
            _constant(1),
            _constant(-2),
        ),
    ),
    ModuleFamily(
        "HVS_6", "HVS", 2, (_ETA,),
        _hvs(
            lambda v: L * (D + v["eta"]) * (D - L + v["eta"]),
            _constant(3),
            _constant(0),
        ),
    ),
]

MODULE_FAMILIES: Mapping[str, ModuleFamily] = MappingProxyType(
    {f.tag: f for f in _REGISTRY}
)

# Algebra slot overrides for FNICM table entries whose module needs a
# particular member of the family.
_ALGEBRA_OVERRIDES = {
    ("D1", "M_omega"): {"a": 1, "b": 0, "Q": 0},
    ("Dbar", "M_omega"): {"a": 1, "b": 0, "Q": 0, "gamma": "gamma"},
}


def module_cases() -> list[tuple[ModuleFamilySpec, FamilySpec]]:
    """
    Every module family over its default algebra, then every FNICM table
    entry over its algebra family, in table order.
    """
    cases = [(ModuleFamilySpec(f.tag), FamilySpec(f.algebra)) for f in _REGISTRY]
    for family_tag, module_tags in FNICM_TABLE.items():
        for tag in module_tags:
            slots = _ALGEBRA_OVERRIDES.get((family_tag, tag), {})
            cases.append((ModuleFamilySpec(tag), FamilySpec(family_tag, slots)))
    return cases


def get_module_family(tag: str) -> ModuleFamily:
    try:
        return MODULE_FAMILIES[tag]
    except KeyError:
        raise UnknownFamilyError(tag, tuple(MODULE_FAMILIES))


def build_module(
    spec: Union[ModuleFamilySpec, str],
    algebra: Union[ConformalSuperAlgebra, FamilySpec, str, None] = None,
    strict: bool = True,
    **slots: SlotValue,
) -> ConformalModule:
    """
    Build a module of the named family.

    #### Usage:

        ```
        build_module("M_cE", c=1, eps=1)
        build_module("M_minus", build("C2"), delta="1/3")
        ```

    :param spec: Module family spec or bare tag.
    :param algebra: Algebra to act; defaults to the family's usual algebra.
    :param strict: Enforce slot constraints.
    :raises ConditionViolation: for a violated slot constraint.
    """
    if isinstance(spec, str):
        spec = ModuleFamilySpec(spec, dict(slots))
    elif slots:
        spec = ModuleFamilySpec(spec.tag, {**spec.slots, **slots}, spec.parity_changed)
    family = get_module_family(spec.tag)
    if algebra is None:
        algebra = build(family.algebra)
    elif not isinstance(algebra, ConformalSuperAlgebra):
        algebra = build(algebra)
    values = resolve_slots(family.tag, family.slots, spec.slots, strict)
    if strict and family.constraint is not None:
        family.constraint(values, algebra)
    basis = (even("v"),) if family.rank == 1 else (even("v0"), odd("v1"))
    mod = ConformalModule(
        algebra, basis, family.actions(values), name=f"{spec}/{algebra.name}"
    )
    LOGGER.debug(f"built module {mod.name}")
    return mod.with_parity_changed() if spec.parity_changed else mod

