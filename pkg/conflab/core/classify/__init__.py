from .equations import EquationTag, FunctionalEquation, SolutionSpace
from .fgh import solve_fgh
from .linear import (
    in_span,
    linear_system,
    rank,
    rational_nullspace,
    reduced_row_echelon,
)
from .odd import (
    CANDIDATE_TAGS,
    ODD_PROBES,
    READERS,
    OddStructure,
    candidate_actions,
    derive_odd_structure,
    derived_families,
    identify,
    same_up_to_odd_scale,
)
from .shift import (
    ShiftBranch,
    branch_points,
    conditions_agree,
    eliminate,
    shift_residual,
    solve_shift,
    solve_shift_parametric,
)

__all__ = [
    "CANDIDATE_TAGS",
    "EquationTag",
    "FunctionalEquation",
    "ODD_PROBES",
    "OddStructure",
    "READERS",
    "ShiftBranch",
    "SolutionSpace",
    "branch_points",
    "candidate_actions",
    "conditions_agree",
    "derive_odd_structure",
    "derived_families",
    "eliminate",
    "identify",
    "in_span",
    "linear_system",
    "rank",
    "rational_nullspace",
    "reduced_row_echelon",
    "same_up_to_odd_scale",
    "shift_residual",
    "solve_fgh",
    "solve_shift",
    "solve_shift_parametric",
]
