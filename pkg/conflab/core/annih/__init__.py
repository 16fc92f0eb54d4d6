from .closed_form import (
    TypeDShape,
    c_terms,
    check_module_correspondence,
    expected_bracket,
    match_closed_form,
    read_shape,
)
from .truncated import (
    DERIVATION,
    AnnGenerator,
    TruncatedLieSuper,
    build_annihilation,
    check_antisymmetry,
    check_super_jacobi_filtered,
    combine,
    format_combination,
)

__all__ = [
    "AnnGenerator",
    "DERIVATION",
    "TruncatedLieSuper",
    "TypeDShape",
    "build_annihilation",
    "c_terms",
    "check_antisymmetry",
    "check_module_correspondence",
    "check_super_jacobi_filtered",
    "combine",
    "expected_bracket",
    "format_combination",
    "match_closed_form",
    "read_shape",
]
