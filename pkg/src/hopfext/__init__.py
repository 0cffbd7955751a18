from .extension import (
    CoveringSeries,
    HopfFormalGroup,
    canonical_extension,
    convolve_twists,
    counit_square,
    default_twist_series,
    extension_discrepancy,
    has_unit_slots,
    identity_covering,
    is_extension,
    is_symmetric,
    trivial_extension,
    twist,
    twist_by,
    unit_slot_discrepancy,
)
from .covering import hopf_hom_discrepancy, hopf_hom_sides, is_hopf_hom, phi_n, project

__all__ = [
    "CoveringSeries",
    "HopfFormalGroup",
    "canonical_extension",
    "convolve_twists",
    "counit_square",
    "default_twist_series",
    "extension_discrepancy",
    "has_unit_slots",
    "hopf_hom_discrepancy",
    "hopf_hom_sides",
    "identity_covering",
    "is_extension",
    "is_hopf_hom",
    "is_symmetric",
    "phi_n",
    "project",
    "trivial_extension",
    "twist",
    "twist_by",
    "unit_slot_discrepancy",
]
