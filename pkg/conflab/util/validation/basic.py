from fractions import Fraction


def validate_int(value) -> int:
    """
    Basic type check for value to determine if a value is an integer.

    :param value: Any value to be validated
    :return: The input value if valid.
    """
    if isinstance(value, bool):
        raise ValueError("Value must be an integer")
    if not isinstance(value, int):
        try:
            value = int(value)
        except (TypeError, ValueError):
            raise ValueError("Value must be an integer")
    return value


def validate_positive_int(value) -> int:
    """
    Basic type check for value to determine if a value is a positive integer.

    :param value: Any value to be validated
    :return: The input value if valid.
    """
    value = validate_int(value)
    if value <= 0:
        raise ValueError("Value must be a positive integer")
    return value


def validate_nonnegative_int(value) -> int:
    """
    Check that a value is an integer greater than or equal to zero.

    :param value: Any value to be validated
    :return: The input value if valid.
    """
    value = validate_int(value)
    if value < 0:
        raise ValueError("Value must be a nonnegative integer")
    return value


def validate_rational(value) -> Fraction:
    """
    Coerce an int, Fraction or ``"p/q"`` string into an exact rational.
    Floats are refused.

    :param value: Any value to be validated
    :return: The value as a Fraction.
    """
    if isinstance(value, (bool, float)):
        raise ValueError("Value must be an exact rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    try:
        text = str(value).strip()
        if any(ch in text for ch in ".eE"):
            raise ValueError
        return Fraction(text)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValueError("Value must be an exact rational")


def validate_nonzero_rational(value) -> Fraction:
    """
    Coerce to a rational and reject zero.

    :param value: Any value to be validated
    :return: The value as a nonzero Fraction.
    """
    value = validate_rational(value)
    if value == 0:
        raise ValueError("Value must be a nonzero rational")
    return value
