"""
Defines BaseConfig, a read-only Mapping assembled from
class-level defaults, environment variables and keyword overrides, in that
order of precedence (lowest first).
"""

import os
from collections.abc import Mapping
from types import MappingProxyType
from typing import Any, Callable, Optional

from conflab.util.converters import CaseConverter


class BaseConfig(Mapping):
    """
    Subclasses declare ``PREFIX``, ``DEFAULTS`` and ``VALIDATORS``. A key
    ``foo`` is read from the environment variable ``{PREFIX}FOO`` and every
    raw value passes through ``VALIDATORS[foo]``.

    :param environ: Environment to read; ``os.environ`` by default.
    :param overrides: Explicit values, validated like environment values.
    :raises KeyError: for an override naming no known key.
    :raises ValueError: for a value its validator rejects.
    """

    PREFIX: str = ""
    DEFAULTS: Mapping[str, Any] = MappingProxyType({})
    VALIDATORS: Mapping[str, Callable[[Any], Any]] = MappingProxyType({})

    def __init__(self, environ: Optional[Mapping[str, str]] = None, **overrides):
        env = os.environ if environ is None else environ
        data = dict(self.DEFAULTS)
        for key in data:
            raw = env.get(f"{self.PREFIX}{CaseConverter.screaming(key)}")
            if raw is not None:
                data[key] = self._validate(key, raw)
        for key, value in overrides.items():
            if key not in data:
                raise KeyError(f"Unknown setting '{key}'")
            data[key] = self._validate(key, value)
        self._data = MappingProxyType(data)

    def _validate(self, key: str, value: Any) -> Any:
        validator = self.VALIDATORS.get(key)
        return validator(value) if validator else value

    def dump(self) -> Mapping[str, Any]:
        """The resolved configuration as a read-only mapping."""
        return self._data

    def __getitem__(self, key):
        return self._data[key]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)
