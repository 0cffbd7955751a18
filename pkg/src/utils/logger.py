"""
Logging setup for fglh: diagnostics on stderr, optional daily file log.
"""
import logging
import os
import sys
from datetime import datetime
from typing import Optional


def setup_logging(level: str = "INFO", log_dir: Optional[str] = None) -> None:
    """Route every logger to stderr at `level`.

    stdout belongs to the report, so two runs with the same job stay
    byte-identical whatever the log level. With a log directory, a
    fglh_YYYYMMDD.log file there also receives DEBUG output, including
    per-cell verdicts.
    """
    log_level = getattr(logging, level.upper(), logging.INFO)

    formatter = logging.Formatter(
        fmt="%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    )

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(log_level)

    handlers = [console_handler]
    log_dir = log_dir if log_dir is not None else os.getenv("LOG_DIR", "")
    if log_dir and os.path.isdir(log_dir):
        file_handler = logging.FileHandler(
            os.path.join(log_dir, f"fglh_{datetime.now().strftime('%Y%m%d')}.log")
        )
        file_handler.setFormatter(formatter)
        file_handler.setLevel(logging.DEBUG)
        handlers.append(file_handler)

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG if len(handlers) > 1 else log_level)

    # repeated main() calls in one process must not stack handlers
    root_logger.handlers.clear()
    for handler in handlers:
        root_logger.addHandler(handler)

    # parse_expr and the worker-thread event loop log at DEBUG
    logging.getLogger("asyncio").setLevel(logging.WARNING)
    logging.getLogger("sympy").setLevel(logging.WARNING)
