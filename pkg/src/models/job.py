"""
Job configuration assembled from command-line flags.
"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional


class OutputFormat(Enum):
    """How records are written to stdout."""
    TABLE = "table"
    RECORDS = "records"


class Command(Enum):
    """Every CLI verb pair."""
    FGL_N_SERIES = "fgl n-series"
    FGL_INVERSE = "fgl inverse"
    FGL_VALIDATE = "fgl validate"
    FGL_SHOW = "fgl show"
    HOPF_ANTIPODE = "hopf antipode"
    HOPF_POWER = "hopf power"
    HOPF_VALIDATE = "hopf validate"
    EXT_BUILD = "ext build"
    EXT_TWIST = "ext twist"
    EXT_PHI = "ext phi"
    EXT_VERIFY = "ext verify"
    VERIFY_ALL = "verify all"

    @property
    def group(self) -> str:
        return self.value.split()[0]


@dataclass(frozen=True)
class JobConfig:
    """Everything one CLI invocation needs."""

    command: Command
    order: int = 5
    n: int = 1
    range: int = 3
    law: str = "mishchenko-model"
    instance: str = "beta"
    twist_file: Optional[str] = None
    output_format: OutputFormat = OutputFormat.TABLE
    concurrent: bool = True

    def validate(self, max_order: int) -> List[str]:
        """Returns a list of problems; empty when the job can run."""
        problems = []
        if not 1 <= self.order <= max_order:
            problems.append(f"--order must lie in 1..{max_order}, got {self.order}")
        if self.range < 0:
            problems.append(f"--range must be >= 0, got {self.range}")
        if not self.law:
            problems.append("--law must name a law or a file")
        if not self.instance:
            problems.append("--instance must name an instance or a file")
        return problems

    def span(self) -> List[int]:
        return list(range(-self.range, self.range + 1))
