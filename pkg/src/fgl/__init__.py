from .law import (
    LAWS,
    FormalGroupLaw,
    additive,
    from_logarithm,
    from_logarithm_coefficients,
    law_by_name,
    log_one_plus_x,
    logarithm,
    mishchenko_model,
    multiplicative,
)
from .power_systems import fgl_hom_discrepancy, formal_sum, inverse_series, is_fgl_hom, n_series
from .validation import require_fgl, validate_fgl

__all__ = [
    "LAWS",
    "FormalGroupLaw",
    "additive",
    "fgl_hom_discrepancy",
    "formal_sum",
    "from_logarithm",
    "from_logarithm_coefficients",
    "inverse_series",
    "is_fgl_hom",
    "law_by_name",
    "log_one_plus_x",
    "logarithm",
    "mishchenko_model",
    "multiplicative",
    "n_series",
    "require_fgl",
    "validate_fgl",
]
