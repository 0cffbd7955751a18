"""
Abstract base class for verification suites.
"""
import asyncio
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, TYPE_CHECKING

from src.algebra.errors import AlgebraError
from src.models.record import CheckRecord

if TYPE_CHECKING:
    from src.models.job import JobConfig


@dataclass
class Cell:
    """One identity at one parameter point; `run` returns None or the first discrepancy."""

    check: str
    params: Dict[str, Any]
    run: Callable[[], Optional[str]] = field(repr=False)


class BaseSuite(ABC):
    """Base class for all verification suites."""

    def __init__(self, job: "JobConfig"):
        self.job = job
        self.logger = logging.getLogger(self.__class__.__name__)

    @abstractmethod
    def prepare(self) -> None:
        """Build the laws, descriptors and series the cells share."""
        pass

    @abstractmethod
    def cells(self) -> List[Cell]:
        pass

    @abstractmethod
    def get_suite_name(self) -> str:
        """Return the name of this suite."""
        pass

    def _evaluate(self, cell: Cell) -> CheckRecord:
        try:
            discrepancy = cell.run()
        except AlgebraError as e:
            self.logger.debug(f"{cell.check} {cell.params} raised {type(e).__name__}: {e}")
            return CheckRecord.verdict(cell.check, cell.params, False, f"{type(e).__name__}: {e}")
        record = CheckRecord.verdict(cell.check, cell.params, discrepancy is None, discrepancy or "")
        self.logger.debug(f"{record}")
        return record

    def _prepare_failure(self, error: AlgebraError) -> List[CheckRecord]:
        self.logger.error(f"Could not prepare {self.get_suite_name()} checks: {type(error).__name__}: {error}")
        params = {"suite": self.get_suite_name(), "order": self.job.order}
        return [CheckRecord.verdict("prepare", params, False, f"{type(error).__name__}: {error}")]

    async def collect(self) -> List[CheckRecord]:
        """Run every cell; records come back in cell order.

        An AlgebraError while preparing yields a single failed "prepare" record.
        """
        try:
            if self.job.concurrent:
                await asyncio.to_thread(self.prepare)
            else:
                self.prepare()
        except AlgebraError as e:
            return self._prepare_failure(e)

        if self.job.concurrent:
            cells = self.cells()
            records = await asyncio.gather(*(asyncio.to_thread(self._evaluate, cell) for cell in cells))
        else:
            records = [self._evaluate(cell) for cell in self.cells()]
        records = list(records)
        failed = sum(1 for record in records if record.failed)
        self.logger.info(f"Collected {len(records)} checks from {self.get_suite_name()} ({failed} failed)")
        return records


def equality(left, right, describe: Optional[Callable[[Any, Any], Optional[str]]] = None) -> Optional[str]:
    """None when equal; otherwise `describe(left, right)` or both values."""
    if left == right:
        return None
    if describe is not None:
        detail = describe(left, right)
        if detail:
            return detail
    return f"{left} != {right}"
