"""
Configuration management using environment variables.
"""
import os
from dataclasses import dataclass
from typing import List

from dotenv import load_dotenv

from src.fgl.law import LAWS
from src.hopf.descriptor import INSTANCES
from src.models.job import OutputFormat

# Load .env file
load_dotenv()


def _int_env(key: str, default: int) -> int:
    value = os.getenv(key, "")
    try:
        return int(value) if value else default
    except ValueError:
        return default


def _bool_env(key: str, default: bool) -> bool:
    value = os.getenv(key, "")
    if not value:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


@dataclass
class Config:
    """Application configuration loaded from environment variables."""

    # Truncation
    DEFAULT_ORDER: int = 5
    MAX_ORDER: int = 10

    # Default instances
    DEFAULT_LAW: str = "mishchenko-model"
    DEFAULT_INSTANCE: str = "beta"

    # Output
    OUTPUT_FORMAT: str = "table"
    CONCURRENT: bool = True

    # Application
    LOG_LEVEL: str = "INFO"
    LOG_DIR: str = ""

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from environment variables."""
        return cls(
            DEFAULT_ORDER=_int_env("FGLH_DEFAULT_ORDER", 5),
            MAX_ORDER=_int_env("FGLH_MAX_ORDER", 10),
            DEFAULT_LAW=os.getenv("FGLH_DEFAULT_LAW", "mishchenko-model"),
            DEFAULT_INSTANCE=os.getenv("FGLH_DEFAULT_INSTANCE", "beta"),
            OUTPUT_FORMAT=os.getenv("FGLH_OUTPUT_FORMAT", "table"),
            CONCURRENT=_bool_env("FGLH_CONCURRENT", True),
            LOG_LEVEL=os.getenv("LOG_LEVEL", "INFO"),
            LOG_DIR=os.getenv("LOG_DIR", ""),
        )

    def validate(self) -> List[str]:
        """Validate configuration. Returns list of problems."""
        problems = []
        if self.MAX_ORDER < 1:
            problems.append(f"FGLH_MAX_ORDER must be >= 1, got {self.MAX_ORDER}")
        if not 1 <= self.DEFAULT_ORDER <= max(self.MAX_ORDER, 1):
            problems.append(f"FGLH_DEFAULT_ORDER must lie in 1..{self.MAX_ORDER}, got {self.DEFAULT_ORDER}")
        if self.OUTPUT_FORMAT not in {fmt.value for fmt in OutputFormat}:
            problems.append(f"FGLH_OUTPUT_FORMAT must be table or records, got {self.OUTPUT_FORMAT!r}")
        if self.DEFAULT_LAW not in LAWS and not os.path.exists(self.DEFAULT_LAW):
            problems.append(f"FGLH_DEFAULT_LAW {self.DEFAULT_LAW!r} is neither a built-in law nor a file")
        if self.DEFAULT_INSTANCE not in INSTANCES and not os.path.exists(self.DEFAULT_INSTANCE):
            problems.append(f"FGLH_DEFAULT_INSTANCE {self.DEFAULT_INSTANCE!r} is neither a built-in instance nor a file")
        return problems
