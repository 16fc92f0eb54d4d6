from .multipoly import (
    D,
    L,
    M,
    ONE,
    ZERO,
    Monomial,
    MultiPoly,
    arith,
    coeff_in_var,
    poly_divide,
    substitute,
    to_fraction,
)
from .parser import format_poly, parse
from .roots import integer_coefficients, rational_roots
from .variables import LAMBDA, MU, PARTIAL, RESERVED, VarKind, var_key, var_kind

__all__ = [
    "D",
    "L",
    "LAMBDA",
    "M",
    "MU",
    "Monomial",
    "MultiPoly",
    "ONE",
    "PARTIAL",
    "RESERVED",
    "VarKind",
    "ZERO",
    "arith",
    "coeff_in_var",
    "format_poly",
    "integer_coefficients",
    "parse",
    "poly_divide",
    "rational_roots",
    "substitute",
    "to_fraction",
    "var_key",
    "var_kind",
]
