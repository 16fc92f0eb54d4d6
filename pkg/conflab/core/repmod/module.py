"""
Free conformal modules over a conformal superalgebra, given by λ-actions on
module generators

    a_λ u = Σ_w P_au^w(∂, λ) w,

extended to all of M by a_λ(p(∂)u) = p(∂+λ) a_λ u.
"""

from dataclasses import dataclass, field
from math import factorial
from types import MappingProxyType
from typing import Mapping, Optional, Sequence

from conflab.core.exceptions import DomainError
from conflab.core.lcsa import BasisElement, ConformalSuperAlgebra, Parity
from conflab.core.lcsa.axioms import representation_residuals
from conflab.core.polyring import MU, RESERVED, D, L, MultiPoly, ZERO
from conflab.core.structures import Report

ActionTable = Mapping[tuple[str, str], Mapping[str, MultiPoly]]

RIGHT = {"d": D + L}


@dataclass(frozen=True)
class ConformalModule:
    """
    Attributes:
        algebra: The acting conformal superalgebra.
        basis: Module generators with parities.
        action: ``(a, u) -> {w: P_au^w}``; absent entries are zero.
        name: Label used in reports.
    """

    algebra: ConformalSuperAlgebra
    basis: tuple[BasisElement, ...]
    action: ActionTable
    name: str = "module"
    _parity: Mapping[str, Parity] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = [b.name for b in self.basis]
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate module generators in {names}")
        parity = {b.name: b.parity for b in self.basis}
        cleaned = {}
        for (a, u), row in self.action.items():
            self.algebra.parity(a)
            if u not in parity:
                raise DomainError(f"action ({a},{u}) mentions unknown generator '{u}'")
            kept = {}
            for w, poly in row.items():
                poly = MultiPoly.coerce(poly)
                if not poly:
                    continue
                if w not in parity:
                    raise DomainError(f"{a}_λ {u} lands on unknown '{w}'")
                if self.algebra.parity(a) + parity[u] != parity[w]:
                    raise DomainError(
                        f"parity violation: {a}_λ {u} has a component on {w}"
                    )
                if MU in poly.variables():
                    raise DomainError(f"action polynomial {poly} mentions μ")
                kept[w] = poly
            if kept:
                cleaned[(a, u)] = MappingProxyType(kept)
        object.__setattr__(self, "action", MappingProxyType(cleaned))
        object.__setattr__(self, "_parity", MappingProxyType(parity))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(b.name for b in self.basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def parity(self, name: str) -> Parity:
        try:
            return self._parity[name]
        except KeyError:
            raise DomainError(f"'{name}' is not a generator of {self.name}")

    def act(self, a: str, u: str) -> Mapping[str, MultiPoly]:
        return self.action.get((a, u), MappingProxyType({}))

    def parameters(self) -> frozenset[str]:
        found = set(self.algebra.parameters())
        for row in self.action.values():
            for poly in row.values():
                found |= poly.variables()
        return frozenset(found - set(RESERVED))

    def is_instantiated(self) -> bool:
        return not self.parameters()

    def evaluate(self, values: Mapping) -> "ConformalModule":
        table = {
            key: {w: p.subs(values) for w, p in row.items()}
            for key, row in self.action.items()
        }
        algebra = self.algebra.evaluate(values)
        return ConformalModule(algebra, self.basis, table, self.name)

    def replace_action(
        self, a: str, u: str, row: Mapping[str, MultiPoly], label: Optional[str] = None
    ) -> "ConformalModule":
        """Copy with one action entry replaced."""
        table = {key: dict(value) for key, value in self.action.items()}
        table[(a, u)] = dict(row)
        return ConformalModule(self.algebra, self.basis, table, label or self.name)

    def with_parity_changed(self) -> "ConformalModule":
        basis = tuple(BasisElement(b.name, b.parity.flip()) for b in self.basis)
        return ConformalModule(self.algebra, basis, self.action, f"Π{self.name}")

    def describe(self) -> list[str]:
        lines = []
        for (a, u), row in sorted(self.action.items()):
            rhs = " + ".join(f"({p}){w}" for w, p in row.items())
            lines.append(f"{a}_l {u} = {rhs}")
        return lines


def check_module(mod: ConformalModule) -> Report:
    """
    Residuals of [a_λ b]_{λ+μ} v = a_λ(b_μ v) - (-1)^{|a||b|} b_μ(a_λ v) for
    every pair of algebra generators and every module generator, identically
    in the parameters.
    """
    residuals = representation_residuals(mod.algebra, mod.names, mod.act)
    return Report.from_residuals("module", mod.name, residuals)


def act_on(
    mod: ConformalModule, a: str, vector: Mapping[str, MultiPoly]
) -> dict[str, MultiPoly]:
    """``a_λ`` applied to ``Σ p_u(∂) u``."""
    out: dict[str, MultiPoly] = {}
    for u, p in vector.items():
        p = MultiPoly.coerce(p)
        if not p:
            continue
        shifted = p.subs(RIGHT)
        for w, poly in mod.act(a, u).items():
            out[w] = out.get(w, ZERO) + shifted * poly
    return {w: p for w, p in out.items() if p}


def jth_actions(
    mod: ConformalModule, a: str, vector: Mapping[str, MultiPoly]
) -> dict[int, dict[str, MultiPoly]]:
    """``n -> a_(n) vector`` for every n with a nonzero result."""
    products: dict[int, dict[str, MultiPoly]] = {}
    for w, poly in act_on(mod, a, vector).items():
        for n, c in poly.coefficients("l").items():
            if c:
                products.setdefault(n, {})[w] = c.scale(factorial(n))
    return dict(sorted(products.items()))


def jth_action(
    mod: ConformalModule, a: str, n: int, vector: Mapping[str, MultiPoly]
) -> dict[str, MultiPoly]:
    return jth_actions(mod, a, vector).get(n, {})


def locality_bounds(mod: ConformalModule) -> dict[tuple[str, str], int]:
    """
    Highest n with a_(n) u ≠ 0 for each algebra generator a and module
    generator u; -1 when a_λ u = 0.
    """
    bounds = {}
    for a in mod.algebra.names:
        for u in mod.names:
            degrees = [p.degree("l") for p in mod.act(a, u).values()]
            bounds[(a, u)] = max(degrees, default=-1)
    return bounds


def locality_check(mod: ConformalModule, level: int) -> bool:
    """
    True iff a_(n) u = 0 for every generator pair and every n up to ``level``
    beyond the pair's locality bound.
    """
    bounds = locality_bounds(mod)
    for (a, u), bound in bounds.items():
        products = jth_actions(mod, a, {u: MultiPoly.const(1)})
        if any(n > bound for n in products if n <= level):
            return False
    return True


def row_of(mod: ConformalModule, vector: Mapping[str, MultiPoly]) -> tuple:
    return tuple(MultiPoly.coerce(vector.get(u, ZERO)) for u in mod.names)


def vector_of(mod: ConformalModule, row: Sequence[MultiPoly]) -> dict[str, MultiPoly]:
    return {u: p for u, p in zip(mod.names, row) if p}
