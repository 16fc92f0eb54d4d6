"""
This module provides a specialized Logger class for the verification
laboratory, along with a decorator to log exceptions. The Logger class extends
Python's built-in logging.Logger with a helper for structured check events.
"""

import inspect
import logging
import os
import sys
from functools import wraps
from logging import Logger as BaseLogger
from typing import Any, Optional

from pythonjsonlogger.json import JsonFormatter as FileJsonFormatter

from conflab.util.logging.formatter import Formatter


class Logger(BaseLogger):
    """
    A logger subclass that provides a method for check-initiated logs.
    Human-readable output goes to standard error; when a log file is given,
    records are also written there as JSON lines.

    :param name: Name for this logger.
    :param level: Logging level. Defaults to logging.INFO.
    :param logfile: Optional log file name/path. Defaults to no file.
    :param colored: Whether log output should use colored formatting. Defaults to False.
    """

    LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(module)s %(message)s"

    def __init__(
        self,
        name: str,
        level: int = logging.INFO,
        logfile: Optional[str] = None,
        colored: bool = False,
    ):
        super().__init__(name, level)
        if not self.hasHandlers():
            if logfile:
                file_handler = logging.FileHandler(logfile)
                file_handler.setFormatter(
                    FileJsonFormatter(
                        self.LOG_FORMAT,
                        rename_fields={"levelname": "level", "asctime": "ts"},
                    )
                )
                self.addHandler(file_handler)

            stream_handler = logging.StreamHandler(sys.stderr)
            stream_handler.setFormatter(Formatter(colored=colored))
            self.addHandler(stream_handler)

        self.propagate = False

    def log_check(
        self,
        level: int,
        check: str,
        target: str,
        status: str,
        message: str,
        witness: Optional[str] = None,
        **kwargs: Any,
    ) -> None:
        """
        Log a verification check event with additional metadata.

        :param level: Logging level (e.g., logging.INFO).
        :param check: Name of the check (e.g. ``jacobi``).
        :param target: The algebra, module or family checked.
        :param status: One of ``pass``, ``fail`` or ``skipped``.
        :param message: Human-readable log message.
        :param witness: Optional formatted residual or generator tuple.
        :param kwargs: Additional keyword arguments for the log method.
        """
        extra = {
            "check": check,
            "target": target,
            "status": status,
            "witness": witness,
        }
        self.log(level, message, extra=extra, **kwargs)


def log_exceptions(logger: BaseLogger = None):
    """
    Decorator to log exceptions in the format: package.module:line.
    Uses logger from the class instance if available, otherwise
    uses the logger passed in.

    :param logger: Optional logger to use if no logger is found on the instance.
    :return: Decorated function that logs any raised exceptions.
    """

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            instance_logger = getattr(args[0], "logger", None) if args else None
            active_logger = (
                instance_logger if isinstance(instance_logger, BaseLogger) else logger
            )

            try:
                return func(*args, **kwargs)
            except Exception as e:
                caller_info = f"{func.__module__}.{func.__qualname__}"

                try:
                    trace = inspect.trace()
                    if trace:
                        frame_info = trace[-1]
                        mod_name = frame_info.frame.f_globals.get("__name__")
                        if mod_name == "__main__":
                            rel_path = os.path.relpath(
                                os.path.abspath(frame_info.filename), os.getcwd()
                            )
                            mod_name = os.path.splitext(rel_path)[0].replace(
                                os.sep, "."
                            )
                        caller_info = f"{mod_name}:{frame_info.lineno}"
                except Exception as inspect_error:
                    if active_logger:
                        active_logger.warning(
                            f"Could not inspect call stack: {inspect_error}"
                        )

                if active_logger:
                    active_logger.error(
                        f"Exception in {caller_info}: {e}",
                        extra={"caller": caller_info},
                    )
                else:
                    print(f"[ERROR] Exception in {caller_info}: {e}", file=sys.stderr)

                raise

        return wrapper

    if callable(logger):
        func = logger
        logger = None
        return decorator(func)

    return decorator


_LOGGERS: dict[str, Logger] = {}


def get_logger(name: str, **kwargs: Any) -> Logger:
    """
    Return the package Logger registered under ``name``, creating it once.

    :param name: Logger name, usually ``__name__``.
    :param kwargs: Forwarded to :class:`Logger` on first creation.
    """
    if name not in _LOGGERS:
        _LOGGERS[name] = Logger(name, **kwargs)
    return _LOGGERS[name]
