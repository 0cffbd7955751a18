from .job import Command, JobConfig, OutputFormat
from .record import CheckRecord, Status
from .validation import AxiomCheck, ValidationReport

__all__ = ["AxiomCheck", "CheckRecord", "Command", "JobConfig", "OutputFormat", "Status", "ValidationReport"]
