"""
Exact linear algebra over the rationals on ``sympy`` domain matrices:
reduced row echelon form, kernels, and the coefficient systems of polynomial
identities that are linear in a set of unknown coefficients.
"""

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from conflab.core.exceptions import UnsupportedOperationError
from conflab.core.polyring import MultiPoly, to_fraction

Vector = tuple[Fraction, ...]


def domain_matrix(matrix: Iterable[Sequence], columns: Optional[int]) -> DomainMatrix:
    """
    ``matrix`` over ``QQ``.

    :param columns: Width of the matrix; required when it has no rows.
    """
    rows = [[Fraction(x) for x in row] for row in matrix]
    width = columns if columns is not None else (len(rows[0]) if rows else 0)
    for row in rows:
        if len(row) != width:
            raise ValueError(f"row of length {len(row)} in a {width}-column matrix")
    elements = [[QQ(x.numerator, x.denominator) for x in row] for row in rows]
    return DomainMatrix(elements, (len(rows), width), QQ)


def reduced_row_echelon(
    matrix: Iterable[Sequence], columns: Optional[int] = None
) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    """
    Reduced row echelon form and its pivot columns; pivot rows come first.
    """
    dm = domain_matrix(matrix, columns)
    rows, width = dm.shape
    if rows == 0 or width == 0:
        return [[Fraction(0)] * width for _ in range(rows)], ()
    reduced, pivots = dm.rref()
    dense = reduced.to_Matrix()
    entries = [[to_fraction(dense[r, c]) for c in range(width)] for r in range(rows)]
    return entries, tuple(pivots)


def rank(matrix: Iterable[Sequence], columns: Optional[int] = None) -> int:
    dm = domain_matrix(matrix, columns)
    if 0 in dm.shape:
        return 0
    return dm.rank()


def rational_nullspace(
    matrix: Iterable[Sequence], columns: Optional[int] = None
) -> list[Vector]:
    """
    Basis of the right kernel, one vector per free column in column order,
    each scaled so that its first nonzero entry is 1.

    :param columns: Width of the matrix; required when it has no rows.
    """
    matrix = list(matrix)
    width = columns if columns is not None else (len(matrix[0]) if matrix else 0)
    reduced, pivots = reduced_row_echelon(matrix, width)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * width
        vector[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vector[p] = -reduced[r][f]
        lead = next(x for x in vector if x != 0)
        basis.append(tuple(x / lead for x in vector))
    return basis


def in_span(vector: Sequence, basis: Sequence[Sequence]) -> bool:
    if not basis:
        return all(x == 0 for x in vector)
    columns = len(vector)
    return rank(list(basis), columns) == rank(list(basis) + [vector], columns)


def linear_system(
    residuals: Iterable[MultiPoly], unknowns: Sequence[str]
) -> list[list[Fraction]]:
    """
    Coefficient rows of ``residual ≡ 0``, one per monomial in the variables
    other than ``unknowns``, for residuals that are linear and homogeneous in
    the unknowns.

    :raises UnsupportedOperationError: for a term that is nonlinear in the
        unknowns or free of them.
    """
    index = {u: i for i, u in enumerate(unknowns)}
    rows = []
    for residual in residuals:
        others = residual.variables() - index.keys()
        for mono, coefficient in sorted(residual.collect(others).items()):
            row = [Fraction(0)] * len(unknowns)
            for term, c in coefficient.terms.items():
                if len(term) != 1 or term[0][1] != 1 or term[0][0] not in index:
                    raise UnsupportedOperationError(
                        f"not linear homogeneous in the unknowns: {coefficient}"
                    )
                row[index[term[0][0]]] += c
            if any(row):
                rows.append(row)
    return rows


def unknown_poly(prefix: str, var: str, degree: int) -> tuple[MultiPoly, list[str]]:
    """``Σ_{i ≤ degree} prefix_i var^i`` and its coefficient names."""
    names = [f"{prefix}_{i}" for i in range(degree + 1)]
    poly = MultiPoly()
    for i, name in enumerate(names):
        poly = poly + MultiPoly.var(name) * MultiPoly.var(var, i)
    return poly, names


def unknown_poly2(
    prefix: str, x: str, y: str, degree: int
) -> tuple[MultiPoly, list[str]]:
    """Bivariate version of :func:`unknown_poly`, total degree ≤ ``degree``."""
    names = []
    poly = MultiPoly()
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            name = f"{prefix}_{i}_{j}"
            names.append(name)
            monomial = MultiPoly.var(x, i) * MultiPoly.var(y, j)
            poly = poly + MultiPoly.var(name) * monomial
    return poly, names
