from .basic import (
    validate_int,
    validate_nonnegative_int,
    validate_nonzero_rational,
    validate_positive_int,
    validate_rational,
)

__all__ = [
    "validate_int",
    "validate_nonnegative_int",
    "validate_nonzero_rational",
    "validate_positive_int",
    "validate_rational",
]
