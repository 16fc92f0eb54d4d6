from .algebra import (
    BasisElement,
    ConformalSuperAlgebra,
    Element,
    Parity,
    even,
    odd,
    sign,
    skew_image,
)
from .axioms import check_jacobi, check_skew, representation_residuals
from .hnf import PolySubmodule, full_module, hermite_normal_form, unit_rows, zero_module
from .products import (
    bracket_eval,
    element_products,
    jth_products,
    lambda_coefficients,
    reconstruct,
)
from .series import (
    SeriesResult,
    check_ideal,
    derived_series,
    even_part,
    is_nilpotent,
    is_perfect,
    is_solvable,
    lower_central_series,
    products_between,
    submodule_of,
)

__all__ = [
    "BasisElement",
    "ConformalSuperAlgebra",
    "Element",
    "Parity",
    "PolySubmodule",
    "SeriesResult",
    "bracket_eval",
    "check_ideal",
    "check_jacobi",
    "check_skew",
    "derived_series",
    "element_products",
    "even",
    "even_part",
    "full_module",
    "hermite_normal_form",
    "is_nilpotent",
    "is_perfect",
    "is_solvable",
    "jth_products",
    "lambda_coefficients",
    "lower_central_series",
    "odd",
    "products_between",
    "reconstruct",
    "representation_residuals",
    "sign",
    "skew_image",
    "submodule_of",
    "unit_rows",
    "zero_module",
]
