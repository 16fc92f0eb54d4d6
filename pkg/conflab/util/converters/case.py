"""
Word splitting and the two identifier cases the configuration layer needs:
PascalCase for configuration class names and SCREAMING_SNAKE_CASE for
environment variable names.
"""


def _split_into_words(value: str) -> list[str]:
    """
    Lowercase words of ``value``. Underscores, dashes and spaces separate
    words, and so does a lowercase-to-uppercase transition.
    """
    if not isinstance(value, str):
        raise TypeError("Input must be a string.")
    if not value.strip():
        raise ValueError("Input string cannot be empty or only whitespace.")
    words, current = [], ""
    for i, ch in enumerate(value):
        if ch in "_- ":
            words.append(current)
            current = ""
        elif ch.isupper() and i and value[i - 1].islower():
            words.append(current)
            current = ch
        else:
            current += ch
    words.append(current)
    return [w.lower() for w in words if w]


class CaseConverter:
    """
    Converts identifiers between cases.
    """

    @staticmethod
    def pascal(value: str) -> str:
        """
        :param value: ``snake_case``, ``kebab-case``, camelCase or spaced words.
        :return: The PascalCase form.
        """
        return "".join(w.capitalize() for w in _split_into_words(value))

    @staticmethod
    def screaming(value: str) -> str:
        """
        :param value: Identifier in any supported case.
        :return: The SCREAMING_SNAKE_CASE form.
        """
        return "_".join(w.upper() for w in _split_into_words(value))
