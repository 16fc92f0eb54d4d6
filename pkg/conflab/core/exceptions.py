"""
Provides the exception hierarchy of the laboratory. Every exception carries an
error type and an info message so the command line can report failures
uniformly and map them to exit codes.
"""

from typing import Optional


class LabException(Exception):
    """
    Base exception offering an error type and additional details.
    """

    def __init__(self, error_type: str, info: str):
        """
        Initialize the exception with an error type and a message.

        :param error_type: String identifying the type of error.
        :param info: Additional information describing the error.
        """
        self.error_type = error_type
        self.info = info
        super().__init__(f"{self.error_type} - {self.info}")

    def __str__(self):
        """
        Return a string representation that includes the error type and info message.
        """
        return f"{self.error_type} - {self.info}"


class PolynomialSyntaxError(LabException):
    """
    Raised when polynomial text does not conform to the grammar. ``offset`` is
    the byte offset of the offending token in the UTF-8 encoded input.
    """

    def __init__(self, info: str, offset: int, text: Optional[str] = None):
        self.offset = offset
        self.text = text
        super().__init__("SyntaxError", f"{info} at byte {offset}")


class UndeclaredVariableError(LabException):
    def __init__(self, name: str, offset: Optional[int] = None):
        self.name = name
        self.offset = offset
        where = f" at byte {offset}" if offset is not None else ""
        super().__init__("UndeclaredVariable", f"'{name}' is not declared{where}")


class UnsupportedOperationError(LabException):
    def __init__(self, info: str):
        super().__init__("Unsupported", info)


class DomainError(LabException):
    def __init__(self, info: str):
        super().__init__("DomainError", info)


class ConditionViolation(LabException):
    def __init__(self, info: str):
        super().__init__("ConditionViolation", info)


class ShapeError(LabException):
    def __init__(self, info: str):
        super().__init__("ShapeError", info)


class UnknownFamilyError(LabException):
    def __init__(self, tag: str, known=()):
        self.tag = tag
        listing = f"; known: {', '.join(known)}" if known else ""
        super().__init__("UnknownFamily", f"'{tag}'{listing}")
