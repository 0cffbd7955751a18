from .descriptor import (
    INSTANCES,
    HopfDescriptor,
    beta_instance,
    comultiplication,
    counit,
    identity,
    multiply_after,
    tensor_square_map,
    trivial_instance,
    unit_counit,
)
from .convolution import (
    antipode,
    compose,
    conv_power,
    convolution,
    is_coalgebra_morphism,
    morphism_difference,
)
from .validation import is_cocommutative, validate_hopf

__all__ = [
    "INSTANCES",
    "HopfDescriptor",
    "antipode",
    "beta_instance",
    "comultiplication",
    "compose",
    "conv_power",
    "convolution",
    "counit",
    "identity",
    "is_coalgebra_morphism",
    "is_cocommutative",
    "morphism_difference",
    "multiply_after",
    "tensor_square_map",
    "trivial_instance",
    "unit_counit",
    "validate_hopf",
]
