from fractions import Fraction

import pytest

from conflab.util.validation import (
    validate_int,
    validate_nonnegative_int,
    validate_nonzero_rational,
    validate_positive_int,
    validate_rational,
)


def test_integers():
    assert validate_int("12") == 12
    assert validate_positive_int(3) == 3
    assert validate_nonnegative_int(0) == 0
    with pytest.raises(ValueError):
        validate_int(True)
    with pytest.raises(ValueError):
        validate_int("x")
    with pytest.raises(ValueError):
        validate_positive_int(0)
    with pytest.raises(ValueError):
        validate_nonnegative_int(-1)


@pytest.mark.parametrize(
    "value, expected",
    [
        (2, Fraction(2)),
        ("3/2", Fraction(3, 2)),
        (" -4 ", Fraction(-4)),
        (Fraction(1, 3), Fraction(1, 3)),
    ],
)
def test_rationals(value, expected):
    assert validate_rational(value) == expected


@pytest.mark.parametrize("value", [0.5, "0.5", "1e3", "1/0", None, False, "a"])
def test_inexact_or_invalid_rationals(value):
    with pytest.raises(ValueError):
        validate_rational(value)


def test_nonzero_rational():
    assert validate_nonzero_rational("-1/2") == Fraction(-1, 2)
    with pytest.raises(ValueError):
        validate_nonzero_rational(0)
