"""
Hermite normal form of row modules over Q[∂].

Rows are coordinate vectors of MultiPolys in ``d`` only. The reduction runs
on univariate ``sympy.Poly`` entries: extended gcds (``gcdex``) merge rows
with unimodular steps and ``div`` reduces entries above each pivot. The
canonical basis has strictly increasing pivot columns, monic pivots, and
every entry above a pivot reduced to degree below the pivot's degree.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from sympy import Poly

from conflab.core.exceptions import DomainError, UnsupportedOperationError
from conflab.core.polyring import PARTIAL, MultiPoly, ZERO

Row = tuple[MultiPoly, ...]
PolyRow = list[Poly]


def _check_univariate(row: Sequence[MultiPoly]) -> None:
    for entry in row:
        extra = entry.variables() - {PARTIAL}
        if extra:
            raise UnsupportedOperationError(
                f"entry {entry} mentions {sorted(extra)}; instantiate parameters "
                "to rationals before Hermite reduction"
            )


def _is_zero_row(row: Sequence) -> bool:
    return all(not e for e in row)


def _axpy(row: Sequence, factor, pivot: Sequence) -> list:
    return [a - factor * b for a, b in zip(row, pivot)]


def _pivot_column(row: Sequence) -> int:
    for c, e in enumerate(row):
        if e:
            return c
    return -1


def _merge(pivot: PolyRow, row: PolyRow, col: int) -> tuple[PolyRow, PolyRow]:
    """
    Unimodular step on two rows that are nonzero at ``col``: the first result
    carries the monic gcd of the two entries there, the second a zero.
    """
    a, b = pivot[col], row[col]
    s, t, g = a.gcdex(b)
    a_g, b_g = a.exquo(g), b.exquo(g)
    merged = [s * x + t * y for x, y in zip(pivot, row)]
    cleared = [a_g * y - b_g * x for x, y in zip(pivot, row)]
    return merged, cleared


@dataclass(frozen=True)
class PolySubmodule:
    """
    C[∂]-submodule of a free module of rank ``width``.

    Attributes:
        width: Number of coordinates.
        generators: Rows as supplied.
        hnf_basis: Canonical row basis.
    """

    width: int
    generators: tuple[Row, ...]
    hnf_basis: tuple[Row, ...]

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_pivot_column(r) for r in self.hnf_basis)

    def is_zero(self) -> bool:
        return not self.hnf_basis

    def is_full(self) -> bool:
        """True iff the basis is the identity, i.e. the whole free module."""
        if len(self.hnf_basis) != self.width:
            return False
        return all(
            row[c] == 1 and all(not e for k, e in enumerate(row) if k != c)
            for c, row in enumerate(self.hnf_basis)
        )

    def reduce(self, vector: Sequence[MultiPoly]) -> Row:
        """
        Normal form of ``vector`` modulo the submodule.
        """
        vec = [MultiPoly.coerce(e) for e in vector]
        if len(vec) != self.width:
            raise DomainError(f"expected {self.width} coordinates, got {len(vec)}")
        _check_univariate(vec)
        for row in self.hnf_basis:
            c = _pivot_column(row)
            if not vec[c]:
                continue
            quotient, _ = vec[c].divmod(row[c], PARTIAL)
            if quotient:
                vec = _axpy(vec, quotient, row)
        return tuple(vec)

    def contains(self, vector: Sequence[MultiPoly]) -> bool:
        return _is_zero_row(self.reduce(vector))

    def contains_module(self, other: "PolySubmodule") -> bool:
        return all(self.contains(r) for r in other.hnf_basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySubmodule):
            return NotImplemented
        return self.width == other.width and self.hnf_basis == other.hnf_basis

    def __hash__(self) -> int:
        return hash((self.width, self.hnf_basis))

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        names = names or [f"e{i}" for i in range(self.width)]
        if not self.hnf_basis:
            return "0"
        rows = []
        for row in self.hnf_basis:
            parts = [f"({e}){n}" for e, n in zip(row, names) if e]
            rows.append(" + ".join(parts))
        return "span{" + "; ".join(rows) + "}"


def hermite_normal_form(
    rows: Iterable[Sequence[MultiPoly]], width: Optional[int] = None
) -> PolySubmodule:
    """
    Canonical row basis over Q[∂].

    :param rows: Coordinate vectors with entries in Q[∂].
    :param width: Number of coordinates; inferred from the first row if omitted.
    :raises UnsupportedOperationError: if an entry mentions a parameter.
    """
    original = tuple(tuple(MultiPoly.coerce(e) for e in r) for r in rows)
    if width is None:
        if not original:
            raise DomainError("width is required for an empty generator list")
        width = len(original[0])
    for r in original:
        if len(r) != width:
            raise DomainError("rows of unequal length")
        _check_univariate(r)

    remaining: list[PolyRow] = [
        [e.as_poly([PARTIAL]) for e in r] for r in original if not _is_zero_row(r)
    ]
    basis: list[PolyRow] = []
    for col in range(width):
        active = [r for r in remaining if r[col]]
        if not active:
            continue
        remaining = [r for r in remaining if not r[col]]
        pivot = active[0]
        for row in active[1:]:
            pivot, cleared = _merge(pivot, row, col)
            if not _is_zero_row(cleared):
                remaining.append(cleared)
        lead = pivot[col].LC()
        basis.append([e.quo_ground(lead) for e in pivot])

    for i, row in enumerate(basis):
        c = _pivot_column(row)
        for j in range(i):
            if basis[j][c]:
                quotient, _ = basis[j][c].div(row[c])
                if quotient:
                    basis[j] = _axpy(basis[j], quotient, row)

    hnf = tuple(tuple(MultiPoly.from_poly(e) for e in r) for r in basis)
    return PolySubmodule(width, original, hnf)


def unit_rows(width: int) -> list[Row]:
    return [
        tuple(MultiPoly.const(1) if c == r else ZERO for c in range(width))
        for r in range(width)
    ]


def full_module(width: int) -> PolySubmodule:
    return hermite_normal_form(unit_rows(width), width)


def zero_module(width: int) -> PolySubmodule:
    return PolySubmodule(width, (), ())
