from .automorphism import (
    GradedAutomorphism,
    compose,
    invert,
    is_automorphism,
    is_identity,
    same_map,
)
from .families import (
    AUTOMORPHISM_CASES,
    AUTOMORPHISM_FAMILIES,
    AutFamilyConstraint,
    Rule,
    check_family,
    family_constraint,
    necessity_probes,
    type_d_even_rules,
)
from .sampling import (
    group_axiom_sample,
    run_necessity_probes,
    sample_member,
    soundness_sample,
)

__all__ = [
    "AUTOMORPHISM_CASES",
    "AUTOMORPHISM_FAMILIES",
    "AutFamilyConstraint",
    "GradedAutomorphism",
    "Rule",
    "check_family",
    "compose",
    "family_constraint",
    "group_axiom_sample",
    "invert",
    "is_automorphism",
    "is_identity",
    "necessity_probes",
    "run_necessity_probes",
    "same_map",
    "sample_member",
    "soundness_sample",
    "type_d_even_rules",
]
