"""
Report values returned by the axiom validators.
"""
from dataclasses import dataclass, field
from typing import List, Optional


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one axiom; `detail` names the first failing coefficient."""

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}

    def __str__(self) -> str:
        mark = "pass" if self.passed else "FAIL"
        return f"{self.name}: {mark}" + (f" ({self.detail})" if self.detail else "")


@dataclass(frozen=True)
class ValidationReport:
    """All axiom checks run against one law or descriptor."""

    subject: str
    checks: List[AxiomCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[AxiomCheck]:
        return [check for check in self.checks if not check.passed]

    def check(self, name: str) -> Optional[AxiomCheck]:
        for item in self.checks:
            if item.name == name:
                return item
        return None

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }
