"""
Antipode, convolution product and convolution powers (n) of the identity.
"""
import logging
from typing import Optional

from src.algebra.errors import HopfStructureError, RingMismatchError
from src.algebra.morphism import AlgebraMorphism, apply_map
from src.algebra.ring import require_same_ring
from src.hopf.descriptor import (
    HopfDescriptor,
    comultiplication,
    identity,
    multiply_after,
    tensor_square_map,
    unit_counit,
)

logger = logging.getLogger(__name__)


def antipode(hopf: HopfDescriptor) -> AlgebraMorphism:
    """S, derived when the descriptor was built."""
    if hopf._antipode is None:
        raise HopfStructureError(f"{hopf.name} has no antipode: {hopf._antipode_error}")
    return hopf._antipode


def _check_endomorphism(hopf: HopfDescriptor, f: AlgebraMorphism) -> None:
    try:
        require_same_ring(f.source, hopf.carrier)
        require_same_ring(f.target, hopf.carrier)
    except RingMismatchError:
        raise RingMismatchError(f"{f.name or 'morphism'} is not an endomorphism of {hopf.name}") from None


def convolution(f: AlgebraMorphism, g: AlgebraMorphism, hopf: HopfDescriptor) -> AlgebraMorphism:
    """f⋆g = μ∘(f⊗g)∘Δ, evaluated on generators."""
    _check_endomorphism(hopf, f)
    _check_endomorphism(hopf, g)
    after = multiply_after(hopf, f, g)
    images = {gen: apply_map(hopf.diagonal(gen), after) for gen in hopf.generators}
    return AlgebraMorphism.over_base(hopf.carrier, hopf.carrier, images, f"{f.name}⋆{g.name}")


def conv_power(hopf: HopfDescriptor, n: int) -> AlgebraMorphism:
    """(n): (0) = η∘ε, (1) = id, (-1) = S, (n) = (n-1)⋆(1), (-n) = (-n+1)⋆S."""
    if n == 0:
        return unit_counit(hopf)
    step = identity(hopf) if n > 0 else antipode(hopf)
    power = step
    for _ in range(abs(n) - 1):
        power = convolution(power, step, hopf)
    logger.debug(f"Computed ({n}) on {hopf.name} by {abs(n) - 1} convolutions")
    return AlgebraMorphism(power.source, power.target, power.images, f"({n})")


def compose(f: AlgebraMorphism, g: AlgebraMorphism) -> AlgebraMorphism:
    """f∘g."""
    return g.then(f)


def is_coalgebra_morphism(hopf: HopfDescriptor, f: AlgebraMorphism) -> bool:
    """Δ∘f = (f⊗f)∘Δ on every generator."""
    delta = comultiplication(hopf)
    square = tensor_square_map(hopf, f)
    return all(
        apply_map(f.image(gen), delta) == apply_map(hopf.diagonal(gen), square)
        for gen in hopf.generators
    )


def morphism_difference(f: AlgebraMorphism, g: AlgebraMorphism) -> Optional[str]:
    """None when f and g agree on every generator; else the first generator where they differ."""
    if f.source != g.source or f.target != g.target:
        return f"rings differ: {f.source.name}->{f.target.name} vs {g.source.name}->{g.target.name}"
    for gen in f.source.variables:
        left, right = f.images.get(gen), g.images.get(gen)
        if left != right:
            return f"{gen.label}: {f.name or 'f'} gives {left}, {g.name or 'g'} gives {right}"
    return None
