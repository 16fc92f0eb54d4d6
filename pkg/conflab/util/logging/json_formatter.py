"""
Schema-driven JSON lines for the report stream. Each schema entry maps an
output key to either a record attribute name, a ``@`` token, or a callable
taking the record.
"""

import json
import logging
import traceback
from datetime import datetime, timezone
from types import MappingProxyType
from typing import Any, Callable, Mapping, Optional

Resolver = Callable[[logging.LogRecord], Any]


def _utc(record: logging.LogRecord) -> str:
    stamp = datetime.fromtimestamp(record.created, tz=timezone.utc)
    return stamp.strftime("%Y-%m-%dT%H:%M:%SZ")


def _traceback(record: logging.LogRecord) -> Optional[str]:
    if not record.exc_info:
        return None
    return "".join(traceback.format_exception(*record.exc_info))


class JsonFormatter(logging.Formatter):
    """
    Tokens: ``@time`` (UTC, ``Z`` suffix), ``@level``, ``@message``,
    ``@logger``, ``@exception``. The key ``@all`` (value ignored) splices in
    every attribute the caller attached through ``extra`` that no other
    entry consumed.

    Entries resolving to None are left out, so a report without a witness
    has no ``witness`` key.

    :param schema: Output layout; the report fields by default.
    :param indent: Forwarded to ``json.dumps``.
    :param sort_keys: Forwarded to ``json.dumps``.
    """

    DEFAULT_SCHEMA: Mapping[str, Any] = MappingProxyType(
        {
            "check": "check",
            "target": "target",
            "status": "status",
            "witness": "witness",
            "detail": "detail",
        }
    )

    TOKENS: Mapping[str, Resolver] = MappingProxyType(
        {
            "@time": _utc,
            "@level": lambda r: r.levelname,
            "@message": lambda r: r.getMessage(),
            "@logger": lambda r: r.name,
            "@exception": _traceback,
        }
    )

    _STANDARD = frozenset(logging.LogRecord("", 0, "", 0, "", (), None).__dict__) | {
        "message",
        "asctime",
    }

    def __init__(
        self,
        schema: Optional[Mapping[str, Any]] = None,
        *,
        indent: Optional[int] = None,
        sort_keys: bool = False,
    ):
        super().__init__()
        self.schema = dict(schema or self.DEFAULT_SCHEMA)
        self.indent = indent
        self.sort_keys = sort_keys

    @staticmethod
    def _jsonable(value: Any) -> Any:
        try:
            json.dumps(value)
        except TypeError:
            return str(value)
        return value

    def _lookup(self, spec: Any, record: logging.LogRecord) -> Any:
        if callable(spec):
            return spec(record)
        if spec in self.TOKENS:
            return self.TOKENS[spec](record)
        return getattr(record, spec, None) if isinstance(spec, str) else None

    def _attached(self, record: logging.LogRecord, taken: set) -> dict[str, Any]:
        return {
            k: self._jsonable(v)
            for k, v in record.__dict__.items()
            if k not in taken
            and k not in self._STANDARD
            and not k.startswith("_")
            and v is not None
        }

    def format(self, record: logging.LogRecord) -> str:
        payload: dict[str, Any] = {}
        taken = {v for v in self.schema.values() if isinstance(v, str)}
        for key, spec in self.schema.items():
            if key == "@all":
                payload.update(self._attached(record, taken))
            elif (value := self._lookup(spec, record)) is not None:
                payload[key] = self._jsonable(value)
        return json.dumps(payload, indent=self.indent, sort_keys=self.sort_keys)
