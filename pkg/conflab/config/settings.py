"""
Laboratory defaults. Every key may be overridden through an environment
variable named ``CONFLAB_<KEY>`` (upper case).
"""

from types import MappingProxyType
from typing import Any, Callable, Mapping, Optional

from conflab.config.base_config import BaseConfig
from conflab.util.validation import (
    validate_nonnegative_int,
    validate_positive_int,
)


def _flag(value) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in {"1", "true", "yes", "on"}:
        return True
    if text in {"0", "false", "no", "off", ""}:
        return False
    raise ValueError("Value must be a boolean flag")


def _optional_path(value) -> Optional[str]:
    return str(value) if value not in (None, "") else None


class Settings(BaseConfig):
    """
    Read-only mapping of defaults for degree bounds, truncation levels,
    sampling and logging.

    Attributes:
        degree_bound: Unknown-polynomial degree bound for functional equations.
        annihilation_level: Truncation cap N of annihilation algebras.
        series_cap: Maximum iterations of derived / lower central series.
        seed: Default sampling seed.
        samples: Default number of automorphism samples.
        probe_points: Size of the rational probe grid for parametric conditions.
        probe_degree: Candidate degree bound for irreducibility probes.
        log_file: Optional JSON log file.
        colored: Colour the standard-error log.
    """

    PREFIX = "CONFLAB_"

    DEFAULTS: Mapping[str, Any] = MappingProxyType(
        {
            "degree_bound": 6,
            "annihilation_level": 8,
            "series_cap": 10,
            "seed": 1,
            "samples": 50,
            "probe_points": 25,
            "probe_degree": 3,
            "log_file": None,
            "colored": False,
        }
    )

    VALIDATORS: Mapping[str, Callable[[Any], Any]] = MappingProxyType(
        {
            "degree_bound": validate_nonnegative_int,
            "annihilation_level": validate_nonnegative_int,
            "series_cap": validate_positive_int,
            "seed": validate_nonnegative_int,
            "samples": validate_positive_int,
            "probe_points": validate_positive_int,
            "probe_degree": validate_nonnegative_int,
            "log_file": _optional_path,
            "colored": _flag,
        }
    )
