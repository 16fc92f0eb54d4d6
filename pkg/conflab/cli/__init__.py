from .main import CommandRunner, build_parser, main, parse_params
from .stream import ReportStream

__all__ = ["CommandRunner", "ReportStream", "build_parser", "main", "parse_params"]
