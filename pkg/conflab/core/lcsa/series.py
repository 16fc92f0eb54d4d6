"""
Derived and lower central series of instantiated conformal superalgebras,
ideal membership, and the even subalgebra.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from conflab.config import Settings
from conflab.core.exceptions import DomainError
from conflab.core.lcsa.algebra import ConformalSuperAlgebra, Element, Parity
from conflab.core.lcsa.hnf import (
    PolySubmodule,
    Row,
    full_module,
    hermite_normal_form,
    unit_rows,
)
from conflab.core.lcsa.products import element_products
from conflab.core.polyring import ZERO
from conflab.util.logging import get_logger

LOGGER = get_logger(__name__)


@dataclass(frozen=True)
class SeriesResult:
    """
    Attributes:
        kind: ``derived`` or ``lower_central``.
        terms: R, then successive terms, ending at the stable term.
        capped: True if the iteration limit was reached before stabilising.
    """

    kind: str
    terms: tuple[PolySubmodule, ...]
    capped: bool = False

    @property
    def last(self) -> PolySubmodule:
        return self.terms[-1]

    @property
    def terminates_at_zero(self) -> bool:
        return not self.capped and self.last.is_zero()


def require_instantiated(alg: ConformalSuperAlgebra) -> None:
    params = alg.parameters()
    if params:
        raise DomainError(
            f"{alg.name} mentions parameters {sorted(params)}; "
            "instantiate them to rationals first"
        )


def row_to_elements(alg: ConformalSuperAlgebra, row: Row) -> list[Element]:
    """Split a coordinate row into its homogeneous components."""
    parts: dict[Parity, dict] = {}
    for name, entry in zip(alg.names, row):
        if entry:
            parts.setdefault(alg.parity(name), {})[name] = entry
    return [alg.element(coords) for _, coords in sorted(parts.items())]


def element_to_row(alg: ConformalSuperAlgebra, elem: Element) -> Row:
    return tuple(elem[n] for n in alg.names)


def products_between(
    alg: ConformalSuperAlgebra, left: Iterable[Row], right: Iterable[Row]
) -> list[Row]:
    """All j-th products u_(j) w for u in ``left`` and w in ``right``."""
    right = list(right)
    out = []
    for u_row in left:
        for u in row_to_elements(alg, u_row):
            for w_row in right:
                for w in row_to_elements(alg, w_row):
                    for product in element_products(alg, u, w).values():
                        out.append(element_to_row(alg, product))
    return out


def span(alg: ConformalSuperAlgebra, rows: Sequence[Row]) -> PolySubmodule:
    return hermite_normal_form(rows, len(alg.basis))


def _iterate(alg, kind, step, cap) -> SeriesResult:
    require_instantiated(alg)
    cap = cap or Settings()["series_cap"]
    terms = [full_module(len(alg.basis))]
    for _ in range(cap):
        current = terms[-1]
        if current.is_zero():
            return SeriesResult(kind, tuple(terms))
        following = span(alg, step(current))
        if following == current:
            return SeriesResult(kind, tuple(terms))
        terms.append(following)
    capped = not terms[-1].is_zero()
    if capped:
        LOGGER.warning(
            f"{kind} series of {alg.name} did not stabilise within {cap} steps"
        )
    return SeriesResult(kind, tuple(terms), capped)


def derived_series(
    alg: ConformalSuperAlgebra, cap: Optional[int] = None
) -> SeriesResult:
    """R^(0) = R, R^(n+1) spanned by products of R^(n) with itself."""

    def step(current):
        return products_between(alg, current.hnf_basis, current.hnf_basis)

    return _iterate(alg, "derived", step, cap)


def lower_central_series(
    alg: ConformalSuperAlgebra, cap: Optional[int] = None
) -> SeriesResult:
    """R^1 = R, R^(n+1) spanned by products of R with R^n."""
    generators = unit_rows(len(alg.basis))

    def step(current):
        return products_between(alg, generators, current.hnf_basis)

    return _iterate(alg, "lower_central", step, cap)


def is_solvable(alg: ConformalSuperAlgebra, cap: Optional[int] = None) -> bool:
    return derived_series(alg, cap).terminates_at_zero


def is_nilpotent(alg: ConformalSuperAlgebra, cap: Optional[int] = None) -> bool:
    return lower_central_series(alg, cap).terminates_at_zero


def is_perfect(alg: ConformalSuperAlgebra) -> bool:
    """R' = R."""
    require_instantiated(alg)
    rows = unit_rows(len(alg.basis))
    return span(alg, products_between(alg, rows, rows)).is_full()


def check_ideal(alg: ConformalSuperAlgebra, sub: PolySubmodule) -> bool:
    """
    True iff every product of a generator of ``alg`` with a basis row of
    ``sub`` lies in ``sub``.
    """
    require_instantiated(alg)
    if sub.width != len(alg.basis):
        raise DomainError("submodule width does not match the algebra rank")
    products = products_between(alg, unit_rows(len(alg.basis)), sub.hnf_basis)
    return all(sub.contains(row) for row in products)


def even_part(alg: ConformalSuperAlgebra) -> ConformalSuperAlgebra:
    names = [b.name for b in alg.basis if b.parity is Parity.EVEN]
    return alg.restrict(names, name=f"{alg.name}_even")


def submodule_of(
    alg: ConformalSuperAlgebra, coordinates: Iterable[dict]
) -> PolySubmodule:
    """Span of elements given as ``{name: poly}`` dicts."""
    rows = [tuple(c.get(n, ZERO) for n in alg.names) for c in coordinates]
    return span(alg, rows)
