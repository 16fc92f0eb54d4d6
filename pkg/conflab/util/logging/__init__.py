from .formatter import Formatter
from .json_formatter import JsonFormatter
from .logger import Logger, get_logger, log_exceptions

__all__ = ["Formatter", "JsonFormatter", "Logger", "get_logger", "log_exceptions"]
