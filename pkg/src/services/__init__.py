from .loader import (
    load_hopf,
    load_law,
    load_twist,
    parse_polynomial,
    resolve_hopf,
    resolve_law,
    resolve_twist,
)
from .report import ReportService

__all__ = [
    "ReportService",
    "load_hopf",
    "load_law",
    "load_twist",
    "parse_polynomial",
    "resolve_hopf",
    "resolve_law",
    "resolve_twist",
]
