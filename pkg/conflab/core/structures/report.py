from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Optional

from conflab.core.polyring import MultiPoly


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class Residual:
    """
    A nonzero residual of an identity check.

    Attributes:
        indices: Generator names the residual is attached to, e.g. ``("A", "X", "B")``.
        poly: The residual polynomial, exact.
    """

    indices: tuple[str, ...]
    poly: MultiPoly

    def render(self) -> str:
        return f"({','.join(self.indices)}): {self.poly}"


@dataclass
class Report:
    """
    Outcome of one verification check.

    Attributes:
        check: Name of the check, e.g. ``skew`` or ``module``.
        target: Algebra, module or family the check ran against.
        status: Pass, fail or skipped.
        residuals: Nonzero residuals, in deterministic index order.
        detail: Free-form structured details (counts, bounds, solution data).
        elapsed: Wall time in seconds, when measured.
    """

    check: str
    target: str
    status: Status
    residuals: list[Residual] = field(default_factory=list)
    detail: dict[str, Any] = field(default_factory=dict)
    elapsed: Optional[float] = None

    @classmethod
    def from_residuals(
        cls, check: str, target: str, residuals: Iterable[Residual], **detail
    ) -> "Report":
        found = sorted(residuals, key=lambda r: r.indices)
        status = Status.FAIL if found else Status.PASS
        return cls(check, target, status, found, dict(detail))

    @classmethod
    def verdict(cls, check: str, target: str, ok: bool, **detail) -> "Report":
        return cls(check, target, Status.PASS if ok else Status.FAIL, [], dict(detail))

    @property
    def passed(self) -> bool:
        return self.status is not Status.FAIL

    @property
    def witness(self) -> Optional[str]:
        if self.residuals:
            return self.residuals[0].render()
        return self.detail.get("witness")

    def to_record(self, timings: bool = False) -> dict[str, Any]:
        record = {
            "check": self.check,
            "target": self.target,
            "status": self.status.value,
            "witness": self.witness,
            "detail": {k: v for k, v in self.detail.items() if k != "witness"}
            or None,
        }
        if timings and self.elapsed is not None:
            record["elapsed"] = round(self.elapsed, 6)
        return record
