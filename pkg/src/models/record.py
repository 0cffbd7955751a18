"""
Structured output records for computations and verification checks.
"""
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict


class Status(Enum):
    """Outcome carried by a record."""
    PASS = "pass"
    FAIL = "fail"
    VALUE = "value"


@dataclass(frozen=True)
class CheckRecord:
    """One output line: an identity check or a computed value."""

    check: str
    params: Dict[str, Any] = field(default_factory=dict)
    status: Status = Status.VALUE
    detail: str = ""

    @classmethod
    def verdict(cls, check: str, params: Dict[str, Any], passed: bool, detail: str = "") -> "CheckRecord":
        return cls(check, params, Status.PASS if passed else Status.FAIL, "" if passed else detail)

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    def params_text(self) -> str:
        return " ".join(f"{key}={self.params[key]}" for key in sorted(self.params))

    def to_dict(self) -> dict:
        """Convert to dictionary for serialization."""
        return {
            "check": self.check,
            "params": dict(sorted(self.params.items())),
            "status": self.status.value,
            "detail": self.detail,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    def __str__(self) -> str:
        return f"{self.check} [{self.params_text()}] {self.status.value}"
