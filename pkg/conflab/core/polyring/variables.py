"""
Variable naming and the global variable order d < l < m < parameters.
"""

import re
from enum import Enum
from functools import lru_cache

PARTIAL = "d"
LAMBDA = "l"
MU = "m"

NAME_PATTERN = re.compile(r"[a-z][a-z0-9_]*")


class VarKind(str, Enum):
    PARTIAL = "partial"
    LAMBDA = "lambda"
    MU = "mu"
    PARAMETER = "parameter"


RESERVED = {PARTIAL: VarKind.PARTIAL, LAMBDA: VarKind.LAMBDA, MU: VarKind.MU}


def var_kind(name: str) -> VarKind:
    return RESERVED.get(name, VarKind.PARAMETER)


@lru_cache(maxsize=None)
def var_key(name: str) -> tuple:
    """
    Sort key realising the fixed variable order: ``d``, ``l``, ``m``, then
    parameters lexicographically.
    """
    order = {PARTIAL: 0, LAMBDA: 1, MU: 2}
    if name in order:
        return (order[name], "")
    return (3, name)


def is_valid_name(name: str) -> bool:
    return bool(NAME_PATTERN.fullmatch(name))
