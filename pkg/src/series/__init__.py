from .power_series import (
    PowerSeries,
    Series1,
    Series2,
    compose1,
    first_difference,
    map_coeffs,
    reversion,
    solve_degreewise,
    subst2,
    subst_into1,
    substitute,
)

__all__ = [
    "PowerSeries",
    "Series1",
    "Series2",
    "compose1",
    "first_difference",
    "map_coeffs",
    "reversion",
    "solve_degreewise",
    "subst2",
    "subst_into1",
    "substitute",
]
