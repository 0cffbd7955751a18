from .logger import setup_logging
from .formatting import format_exponent, format_poly, format_rational, format_series

__all__ = ["setup_logging", "format_exponent", "format_poly", "format_rational", "format_series"]
