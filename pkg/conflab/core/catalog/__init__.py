from .condition import (
    CONDITION1_TABLE,
    Condition1Entry,
    condition1_Q,
    decompose,
    validate_condition1,
)
from .deform import build_general_O, super_deform
from .families import (
    EVEN_TYPES,
    FAMILIES,
    FNICM_TABLE,
    Family,
    FamilySpec,
    Slot,
    SlotKind,
    build,
    even_type,
    family_tags,
    get_family,
)

__all__ = [
    "CONDITION1_TABLE",
    "Condition1Entry",
    "EVEN_TYPES",
    "FAMILIES",
    "FNICM_TABLE",
    "Family",
    "FamilySpec",
    "Slot",
    "SlotKind",
    "build",
    "build_general_O",
    "condition1_Q",
    "decompose",
    "even_type",
    "family_tags",
    "get_family",
    "super_deform",
    "validate_condition1",
]
