from .errors import (
    AlgebraError,
    DescriptorError,
    DescriptorMismatchError,
    HopfStructureError,
    InvalidFormalGroupLawError,
    MissingImageError,
    NoTensorSquareError,
    NonMonicSeriesError,
    NonUnitLinearTermError,
    NotCocommutativeError,
    RingMismatchError,
)
from .ring import RATIONALS, Generator, RingDescriptor, RingKind
from .polynomial import Monomial, PolyElement, add, generator, mul, poly_sum, truncate_above
from .morphism import (
    AlgebraMorphism,
    apply_map,
    identity_morphism,
    left_embedding,
    right_embedding,
    scalar_embedding,
    tensor_embed_left,
    tensor_embed_right,
)

__all__ = [
    "AlgebraError",
    "AlgebraMorphism",
    "DescriptorError",
    "DescriptorMismatchError",
    "Generator",
    "HopfStructureError",
    "InvalidFormalGroupLawError",
    "MissingImageError",
    "Monomial",
    "NoTensorSquareError",
    "NonMonicSeriesError",
    "NonUnitLinearTermError",
    "NotCocommutativeError",
    "PolyElement",
    "RATIONALS",
    "RingDescriptor",
    "RingKind",
    "RingMismatchError",
    "add",
    "apply_map",
    "generator",
    "identity_morphism",
    "left_embedding",
    "mul",
    "poly_sum",
    "right_embedding",
    "scalar_embedding",
    "tensor_embed_left",
    "tensor_embed_right",
    "truncate_above",
]
