"""
JSON document describing a conformal superalgebra by its λ-brackets.

    {
        "name": "NS",
        "basis": [{"name": "L", "parity": "even"}, {"name": "G", "parity": "odd"}],
        "params": [],
        "brackets": {"L,L": {"L": "d + 2*l"}, "L,G": {"G": "d + 3/2*l"}}
    }

Omitted brackets are zero, and an omitted mirror pair ``"G,L"`` is filled in
by skew-symmetry.
"""

import re
from pathlib import Path
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from conflab.core.exceptions import LabException
from conflab.core.lcsa import BasisElement, ConformalSuperAlgebra, Parity
from conflab.core.polyring import RESERVED, MultiPoly, parse

GENERATOR_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
PARAMETER_NAME = re.compile(r"[a-z][a-z0-9_]*")


class BasisEntry(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str
    parity: Literal["even", "odd"] = "even"

    @field_validator("name")
    @classmethod
    def _valid_name(cls, value: str) -> str:
        if not GENERATOR_NAME.fullmatch(value):
            raise ValueError(f"'{value}' is not a valid generator name")
        if value in RESERVED:
            raise ValueError(f"generator name '{value}' is reserved")
        return value

    def element(self) -> BasisElement:
        return BasisElement(self.name, Parity.parse(self.parity))


class AlgebraFile(BaseModel):
    """
    Attributes:
        name: Label used in reports; defaults to ``algebra``.
        basis: Generators in order, each with its parity.
        params: Parameter names the bracket polynomials may mention.
        brackets: ``"X,Y" -> {target: polynomial}`` in the polynomial grammar.
    """

    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    basis: list[BasisEntry] = Field(min_length=1)
    params: list[str] = Field(default_factory=list)
    brackets: dict[str, dict[str, str]] = Field(default_factory=dict)

    @field_validator("basis")
    @classmethod
    def _unique_basis(cls, value: list[BasisEntry]) -> list[BasisEntry]:
        names = [b.name for b in value]
        repeated = sorted({n for n in names if names.count(n) > 1})
        if repeated:
            raise ValueError(f"duplicate generator names {repeated}")
        return value

    @field_validator("params")
    @classmethod
    def _valid_params(cls, value: list[str]) -> list[str]:
        for name in value:
            if name in RESERVED:
                raise ValueError(f"parameter name '{name}' is reserved")
            if not PARAMETER_NAME.fullmatch(name):
                raise ValueError(f"'{name}' is not a valid parameter name")
        if len(set(value)) != len(value):
            raise ValueError("parameter names must be distinct")
        return value

    @model_validator(mode="after")
    def _parse_brackets(self) -> "AlgebraFile":
        generators = {b.name for b in self.basis}
        for key, row in self.brackets.items():
            pair = _split_pair(key)
            for name in pair + tuple(row):
                if name not in generators:
                    raise ValueError(f"bracket '{key}' mentions unknown '{name}'")
            for target, text in row.items():
                try:
                    parse(text, self.params)
                except LabException as e:
                    raise ValueError(f"brackets['{key}']['{target}']: {e}")
        return self

    @classmethod
    def load(cls, path: Union[str, Path]) -> "AlgebraFile":
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))

    def table(self) -> dict[tuple[str, str], dict[str, MultiPoly]]:
        return {
            _split_pair(key): {t: parse(text, self.params) for t, text in row.items()}
            for key, row in self.brackets.items()
        }

    def to_algebra(self) -> ConformalSuperAlgebra:
        """
        :raises DomainError: if a bracket breaks the grading.
        """
        return ConformalSuperAlgebra.from_brackets(
            [b.element() for b in self.basis],
            self.table(),
            name=self.name or "algebra",
        )


def _split_pair(key: str) -> tuple[str, str]:
    parts = [p.strip() for p in key.split(",")]
    if len(parts) != 2 or not all(parts):
        raise ValueError(f"bracket key '{key}' must read 'X,Y'")
    return parts[0], parts[1]
