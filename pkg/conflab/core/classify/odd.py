"""
Re-derivation of the rank-(2+1) families from their rank-two even parts.

For a fixed even part and a fixed action of it on X, the bracket
[X_λ X] = ψ_A(∂)A + ψ_B(∂)B enters every Jacobi identity linearly, so the
admissible (ψ_A, ψ_B) of bounded degree form the kernel of a rational
matrix. Each resulting structure is matched against the catalog.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from conflab.config import Settings
from conflab.core.catalog import build, even_type
from conflab.core.catalog.families import SlotValue
from conflab.core.classify.equations import (
    EquationTag,
    FunctionalEquation,
    SolutionSpace,
)
from conflab.core.classify.linear import unknown_poly
from conflab.core.classify.shift import branch_points, solve_shift_parametric
from conflab.core.exceptions import DomainError, LabException
from conflab.core.lcsa import ConformalSuperAlgebra, check_jacobi, even, odd
from conflab.core.polyring import PARTIAL, D, L, MultiPoly, ZERO, parse
from conflab.util.logging import get_logger
from conflab.util.validation import validate_nonnegative_int

LOGGER = get_logger(__name__)

BASIS = (even("A"), even("B"), odd("X"))

Action = dict[tuple[str, str], dict[str, MultiPoly]]


@dataclass(frozen=True)
class Slots:
    """The odd-part brackets of a rank-(2+1) structure."""

    phi_a: MultiPoly
    phi_b: MultiPoly
    psi_a: MultiPoly
    psi_b: MultiPoly

    @classmethod
    def of(cls, alg: ConformalSuperAlgebra) -> "Slots":
        return cls(
            alg.q("A", "X", "X"),
            alg.q("B", "X", "X"),
            alg.q("X", "X", "A"),
            alg.q("X", "X", "B"),
        )


def _vir_action(slots: Slots) -> dict[str, MultiPoly]:
    rest = slots.phi_a - D
    return {"alpha": rest.coeff("l", 1), "beta": rest.coeff("l", 0)}


def _pick(even_params: Mapping[str, SlotValue], *names: str) -> dict[str, SlotValue]:
    return {n: even_params[n] for n in names if n in even_params}


Reader = Callable[[Slots, Mapping[str, SlotValue]], dict[str, SlotValue]]

# Catalog slot values read off a structure, per family tag.
READERS: Mapping[str, Reader] = {
    "O1": lambda s, e: {"phi_a": s.phi_a, "phi_b": s.phi_b},
    "O2": lambda s, e: {"psi_a": s.psi_a, "psi_b": s.psi_b},
    "A1": lambda s, e: {"f1": e.get("Q1", 0), "phi1": s.phi_a},
    "A2": lambda s, e: {"f2": e.get("Q1", 0), "psi": s.psi_b},
    "A3": lambda s, e: {"phi3": s.phi_a},
    "A4": lambda s, e: {"p": e.get("P1", 0), "phi4": s.phi_a},
    "B0": lambda s, e: {},
    "B1": lambda s, e: _vir_action(s),
    "B2": lambda s, e: {},
    "C0": lambda s, e: {},
    "C1": lambda s, e: _vir_action(s),
    "C2": lambda s, e: {},
    "C3": lambda s, e: {"phi": s.phi_b},
    "D0": lambda s, e: _pick(e, "a", "b", "Q"),
    "D1": lambda s, e: {**_pick(e, "a", "b", "Q"), **_vir_action(s)},
    "D2": lambda s, e: _pick(e, "a", "b", "Q"),
    "D3": lambda s, e: _pick(e, "b", "Q"),
    "D4": lambda s, e: {**_vir_action(s), "gamma": s.phi_b},
}

CANDIDATE_TAGS: Mapping[str, tuple[str, ...]] = {
    "O": ("O1", "O2"),
    "A": ("A1", "A2", "A3", "A4"),
    "B": ("B0", "B1", "B2"),
    "C": ("C0", "C1", "C2", "C3"),
    "D": ("D0", "D1", "D2", "D3", "D4"),
}

# (even type, parameters, families the derivation must reproduce)
ODD_PROBES: tuple[tuple[str, Mapping[str, SlotValue], frozenset[str]], ...] = (
    ("O", {}, frozenset({"O1", "O2"})),
    ("A", {"P1": 0, "Q1": "d + 2*l"}, frozenset({"A1", "A2"})),
    ("A", {"P1": "2*l", "Q1": 0}, frozenset({"A3", "A4"})),
    ("B", {}, frozenset({"B0", "B1", "B2"})),
    ("C", {}, frozenset({"C0", "C1", "C2", "C3"})),
    ("D", {"a": 2, "b": 1, "Q": 0}, frozenset({"D0", "D1", "D2"})),
    ("D", {"a": 0, "b": 0, "Q": 0}, frozenset({"D0", "D1", "D2", "D3"})),
    ("D", {"a": 1, "b": 0, "Q": 0}, frozenset({"D0", "D1", "D2", "D4"})),
)


@dataclass(frozen=True)
class OddStructure:
    """
    Attributes:
        even_tag: Rank-two even type.
        action: Label of the even-part action on X.
        algebra: The assembled rank-(2+1) structure.
        space: Admissible (ψ_A, ψ_B) for this action.
        tags: Catalog families the structure belongs to; empty if none.
    """

    even_tag: str
    action: str
    algebra: ConformalSuperAlgebra
    space: SolutionSpace
    tags: tuple[str, ...]

    def describe(self) -> str:
        shown = ", ".join(self.tags) or "no catalog family"
        return f"{self.action}: {'; '.join(self.algebra.describe())} -> {shown}"


def _acting(base: str, poly: MultiPoly) -> tuple[str, Action]:
    return f"{base} acts by {poly}", {(base, "X"): {"X": poly}}


def _virasoro(alpha, beta) -> MultiPoly:
    return D + L.scale(alpha) + beta


def _shift_points(a, b, degree: int) -> list[tuple[Fraction, Fraction]]:
    """Generic (1, 1) followed by every (α, β) on a branch of the shift equation."""
    points = [(Fraction(1), Fraction(1))]
    for _, alpha, beta in branch_points(solve_shift_parametric(degree), a, b):
        if (alpha, beta) not in points:
            points.append((alpha, beta))
    return points


def candidate_actions(
    tag: str, even_params: Mapping[str, MultiPoly], degree: int
) -> list[tuple[str, Action]]:
    """
    Actions of the even part on X drawn from the rank-one module
    classification of each type; the trivial action always comes first.
    """
    out: list[tuple[str, Action]] = [("trivial", {})]
    if tag == "O":
        out += [_acting("A", 1 + L), _acting("B", L.scale(2))]
    elif tag == "A":
        p1 = even_params["P1"]
        if not p1:
            out.append(_acting("A", 1 + L))
        else:
            out += [_acting("A", p1 / 2), _acting("A", L + 3)]
    elif tag in ("B", "C"):
        for alpha, beta in _shift_points(2, 0, degree):
            out.append(_acting("A", _virasoro(alpha, beta)))
        if tag == "C":
            out.append(_acting("B", 1 + L))
    elif tag == "D":
        try:
            a, b = (even_params[k].constant_value() for k in ("a", "b"))
        except DomainError:
            raise DomainError("type D derivation needs rational a and b")
        for alpha, beta in _shift_points(a, b, degree):
            out.append(_acting("A", _virasoro(alpha, beta)))
        if a == 1 and b == 0 and not even_params["Q"]:
            label, action = _acting("A", _virasoro(1, 1))
            action[("B", "X")] = {"X": MultiPoly.const(1)}
            out.append((f"{label}, B acts by 1", action))
    return out


def _leading(poly: MultiPoly) -> Fraction:
    return poly.sorted_terms()[0][1]


def same_up_to_odd_scale(
    found: ConformalSuperAlgebra, expected: ConformalSuperAlgebra
) -> bool:
    """
    Equal structures, except that [X_λ X] may differ by a nonzero constant
    factor (a rescaling of X).
    """
    if found.basis != expected.basis:
        return False
    keys = (set(found.structure) | set(expected.structure)) - {("X", "X")}
    if any(dict(found.entry(*k)) != dict(expected.entry(*k)) for k in keys):
        return False
    mine, theirs = dict(found.entry("X", "X")), dict(expected.entry("X", "X"))
    if set(mine) != set(theirs):
        return False
    if not mine:
        return True
    first = sorted(mine)[0]
    ratio = _leading(theirs[first]) / _leading(mine[first])
    return all(p.scale(ratio) == theirs[k] for k, p in mine.items())


def identify(
    alg: ConformalSuperAlgebra,
    tag: str,
    even_params: Mapping[str, SlotValue],
    candidates: Optional[Sequence[str]] = None,
) -> tuple[str, ...]:
    """Catalog families among ``candidates`` that ``alg`` is a member of."""
    slots = Slots.of(alg)
    found = []
    for family in candidates or CANDIDATE_TAGS[tag]:
        try:
            expected = build(family, **READERS[family](slots, even_params))
        except LabException as e:
            LOGGER.debug(f"{family} rejects the read slots: {e}")
            continue
        if same_up_to_odd_scale(alg, expected):
            found.append(family)
    return tuple(found)


def _assemble(
    even_alg: ConformalSuperAlgebra,
    action: Action,
    xx: Mapping[str, MultiPoly],
    name: str,
) -> ConformalSuperAlgebra:
    brackets = {key: dict(row) for key, row in even_alg.structure.items()}
    brackets.update(action)
    brackets[("X", "X")] = dict(xx)
    return ConformalSuperAlgebra.from_brackets(BASIS, brackets, name=name)


def derive_odd_structure(
    tag: str,
    params: Optional[Mapping[str, SlotValue]] = None,
    degree: Optional[int] = None,
) -> list[OddStructure]:
    """
    Every rank-(2+1) structure over the even type ``tag`` reachable from the
    candidate actions, with [X_λ X] = ψ_A(∂)A + ψ_B(∂)B of degree at most
    ``degree``.

    For each action admitted by Jacobi, the ψ = 0 structure is emitted, and
    when the kernel is nonzero so is the structure at the sum of its basis
    vectors.

    :raises UnknownFamilyError: for an unknown even type.
    :raises ConditionViolation: for even-part parameters violating its
        constraints.
    """
    degree = validate_nonnegative_int(
        Settings()["degree_bound"] if degree is None else degree
    )
    params = dict(params or {})
    even_alg = even_type(tag, **params)
    if not even_alg.is_instantiated():
        raise DomainError(f"{even_alg.name} must be instantiated")
    values = {
        k: parse(v) if isinstance(v, str) else MultiPoly.coerce(v)
        for k, v in params.items()
    }
    values.setdefault("P1", ZERO)
    values.setdefault("Q", ZERO)
    psi_a, a_names = unknown_poly("p", PARTIAL, degree)
    psi_b, b_names = unknown_poly("q", PARTIAL, degree)
    results = []
    for label, action in candidate_actions(tag, values, degree):
        trivial = _assemble(even_alg, action, {}, f"{tag}[{label}]")
        if not check_jacobi(trivial).passed:
            LOGGER.debug(f"{tag}: action '{label}' is not a module action, skipped")
            continue
        general = _assemble(even_alg, action, {"A": psi_a, "B": psi_b}, trivial.name)
        residuals = tuple(r.poly for r in check_jacobi(general).residuals)
        equation = FunctionalEquation(
            EquationTag.JACOBI,
            residuals,
            tuple(a_names + b_names),
            {"psi_A": psi_a, "psi_B": psi_b},
            {"even": even_alg.name, "action": label},
        )
        space = equation.solve()
        structures = [trivial]
        if space.dimension:
            member = space.member()
            xx = {"A": member["psi_A"], "B": member["psi_B"]}
            structures.append(_assemble(even_alg, action, xx, trivial.name))
        for alg in structures:
            tags = identify(alg, tag, params)
            results.append(OddStructure(tag, label, alg, space, tags))
            LOGGER.debug(f"{tag}[{label}] -> {', '.join(tags) or 'unmatched'}")
    LOGGER.info(
        f"derived {len(results)} structures over {even_alg.name}",
        extra={"even": tag, "degree": degree},
    )
    return results


def derived_families(structures: Sequence[OddStructure]) -> frozenset[str]:
    return frozenset(t for s in structures for t in s.tags)
