"""
Z2-graded free conformal superalgebras given by a λ-bracket structure table

    [X^i_λ X^j] = Σ_k Q_ij^k(∂, λ) X^k

together with their homogeneous elements Σ p_i(∂) X^i.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

from conflab.core.exceptions import DomainError
from conflab.core.polyring import LAMBDA, MU, PARTIAL, RESERVED, MultiPoly, ZERO

Table = Mapping[tuple[str, str], Mapping[str, MultiPoly]]


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    def flip(self) -> "Parity":
        return Parity(1 - int(self))

    @property
    def label(self) -> str:
        return "even" if self is Parity.EVEN else "odd"

    @classmethod
    def parse(cls, value) -> "Parity":
        if isinstance(value, Parity):
            return value
        text = str(value).strip().lower()
        if text in {"0", "even"}:
            return cls.EVEN
        if text in {"1", "odd"}:
            return cls.ODD
        raise DomainError(f"unknown parity '{value}'")


def sign(p: int, q: int) -> int:
    """(-1)^{p q}"""
    return -1 if (int(p) * int(q)) % 2 else 1


@dataclass(frozen=True)
class BasisElement:
    name: str
    parity: Parity = Parity.EVEN

    @property
    def is_odd(self) -> bool:
        return self.parity is Parity.ODD


def even(name: str) -> BasisElement:
    return BasisElement(name, Parity.EVEN)


def odd(name: str) -> BasisElement:
    return BasisElement(name, Parity.ODD)


SKEW = {LAMBDA: -MultiPoly.var(PARTIAL) - MultiPoly.var(LAMBDA)}


def skew_image(poly: MultiPoly, parity_product: int) -> MultiPoly:
    """
    Mirror entry Q_ji^k(∂, λ) = -(-1)^{|i||j|} Q_ij^k(∂, -∂-λ).
    """
    return poly.subs(SKEW).scale(-sign(parity_product, 1))


def _clean(table: Mapping) -> dict:
    out = {}
    for key, row in table.items():
        kept = {k: MultiPoly.coerce(p) for k, p in row.items() if p}
        if kept:
            out[key] = kept
    return out


@dataclass(frozen=True)
class ConformalSuperAlgebra:
    """
    Free C[∂]-module on ``basis`` with λ-brackets from ``structure``.

    Attributes:
        basis: Ordered generators with parities.
        structure: ``(i, j) -> {k: Q_ij^k}``; absent entries are zero.
        name: Label used in reports.
    """

    basis: tuple[BasisElement, ...]
    structure: Table
    name: str = "algebra"
    _parity: Mapping[str, Parity] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = [b.name for b in self.basis]
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate basis names in {names}")
        for n in names:
            if n in RESERVED:
                raise DomainError(f"basis name '{n}' clashes with a reserved variable")
        parity = {b.name: b.parity for b in self.basis}
        cleaned = _clean(self.structure)
        for (i, j), row in cleaned.items():
            if i not in parity or j not in parity:
                raise DomainError(f"bracket ({i},{j}) mentions an unknown generator")
            for k, poly in row.items():
                if k not in parity:
                    raise DomainError(f"bracket ({i},{j}) lands on unknown '{k}'")
                if parity[i] + parity[j] != parity[k]:
                    raise DomainError(
                        f"parity violation: [{i}_λ {j}] has a component on {k}"
                    )
                if MU in poly.variables():
                    raise DomainError(f"structure polynomial {poly} mentions μ")
        object.__setattr__(
            self,
            "structure",
            MappingProxyType({k: MappingProxyType(v) for k, v in cleaned.items()}),
        )
        object.__setattr__(self, "_parity", MappingProxyType(parity))

    @classmethod
    def from_brackets(
        cls,
        basis: Iterable[BasisElement],
        brackets: Mapping[tuple[str, str], Mapping[str, MultiPoly]],
        name: str = "algebra",
        complete: bool = True,
    ) -> "ConformalSuperAlgebra":
        """
        Build an algebra from the listed brackets, filling every omitted mirror
        pair ``(j, i)`` by skew-symmetry.
        """
        basis = tuple(basis)
        parity = {b.name: b.parity for b in basis}
        table = {key: dict(row) for key, row in _clean(brackets).items()}
        if complete:
            for (i, j), row in list(table.items()):
                if (j, i) in table or i == j:
                    continue
                pp = int(parity.get(i, 0)) * int(parity.get(j, 0))
                table[(j, i)] = {k: skew_image(p, pp) for k, p in row.items()}
        return cls(basis, table, name)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(b.name for b in self.basis)

    @property
    def rank(self) -> tuple[int, int]:
        evens = sum(1 for b in self.basis if not b.is_odd)
        return evens, len(self.basis) - evens

    def parity(self, name: str) -> Parity:
        try:
            return self._parity[name]
        except KeyError:
            raise DomainError(f"'{name}' is not a generator of {self.name}")

    def index(self, name: str) -> int:
        return self.names.index(name)

    def entry(self, i: str, j: str) -> Mapping[str, MultiPoly]:
        return self.structure.get((i, j), MappingProxyType({}))

    def q(self, i: str, j: str, k: str) -> MultiPoly:
        return self.entry(i, j).get(k, ZERO)

    def parameters(self) -> frozenset[str]:
        found = set()
        for row in self.structure.values():
            for poly in row.values():
                found |= poly.variables()
        return frozenset(found - set(RESERVED))

    def is_instantiated(self) -> bool:
        return not self.parameters()

    def element(self, coordinates: Mapping[str, MultiPoly]) -> "Element":
        coords = {}
        for n, p in coordinates.items():
            p = MultiPoly.coerce(p)
            if not p:
                continue
            if n not in self._parity:
                raise DomainError(f"'{n}' is not a generator of {self.name}")
            if p.variables() & {LAMBDA, MU}:
                raise DomainError(f"coordinate {p} of {n} must not mention λ or μ")
            coords[n] = p
        parities = {self._parity[n] for n in coords}
        if len(parities) > 1:
            par = None
        else:
            par = parities.pop() if parities else Parity.EVEN
        return Element(MappingProxyType(coords), par)

    def generator(self, name: str) -> "Element":
        return self.element({name: MultiPoly.const(1)})

    def restrict(self, names: Iterable[str], name: Optional[str] = None):
        """
        Subalgebra on a subset of the basis; the subset must be closed under
        the bracket.
        """
        keep = [b for b in self.basis if b.name in set(names)]
        kept = {b.name for b in keep}
        table = {}
        for (i, j), row in self.structure.items():
            if i in kept and j in kept:
                outside = set(row) - kept
                if outside:
                    raise DomainError(
                        f"[{i}_λ {j}] leaves the span of {sorted(kept)} via {outside}"
                    )
                table[(i, j)] = row
        return ConformalSuperAlgebra(tuple(keep), table, name or f"{self.name}|sub")

    def with_parity(self, name: str, parity: Parity, label: Optional[str] = None):
        basis = tuple(
            BasisElement(b.name, parity) if b.name == name else b for b in self.basis
        )
        return ConformalSuperAlgebra(basis, self.structure, label or self.name)

    def evaluate(self, values: Mapping) -> "ConformalSuperAlgebra":
        """Instantiate parameters by rationals (or polynomials)."""
        table = {
            key: {k: p.subs(values) for k, p in row.items()}
            for key, row in self.structure.items()
        }
        return ConformalSuperAlgebra(self.basis, table, self.name)

    def same_structure(self, other: "ConformalSuperAlgebra") -> bool:
        return self.basis == other.basis and dict(self.structure) == dict(
            other.structure
        )

    def describe(self) -> list[str]:
        lines = []
        for (i, j), row in sorted(self.structure.items()):
            rhs = " + ".join(f"({p}){k}" for k, p in row.items())
            lines.append(f"[{i}_l {j}] = {rhs}")
        return lines


@dataclass(frozen=True)
class Element:
    """
    ``Σ p_i(∂) X^i``; ``parity`` is None for a mixed element.
    """

    coordinates: Mapping[str, MultiPoly]
    parity: Optional[Parity]

    @property
    def is_homogeneous(self) -> bool:
        return self.parity is not None

    def is_zero(self) -> bool:
        return not self.coordinates

    def __getitem__(self, name: str) -> MultiPoly:
        return self.coordinates.get(name, ZERO)

    def as_dict(self) -> dict[str, MultiPoly]:
        return dict(self.coordinates)
