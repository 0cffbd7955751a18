"""
Algebra morphisms between ring descriptors, given by generator images.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from src.algebra.errors import MissingImageError, NoTensorSquareError, RingMismatchError
from src.algebra.polynomial import PolyElement, poly_sum
from src.algebra.ring import Generator, RingDescriptor, RingKind, require_same_ring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraMorphism:
    """Multiplicative Q-linear map determined by where each generator goes.

    Images may be partial; applying the map to an element that uses a
    generator without an image raises MissingImageError.
    """

    source: RingDescriptor
    target: RingDescriptor
    images: Mapping[Generator, PolyElement] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        for gen, image in self.images.items():
            if not self.source.has(gen):
                raise RingMismatchError(f"{gen.label} is not a generator of {self.source.name}")
            require_same_ring(image.ring, self.target)

    @classmethod
    def over_base(cls, source: RingDescriptor, target: RingDescriptor,
                  images: Mapping[Generator, PolyElement], name: str = "") -> "AlgebraMorphism":
        """Morphism fixing the shared base scalars, with the given images elsewhere."""
        full: Dict[Generator, PolyElement] = {}
        for scalar in source.scalars:
            full[scalar] = PolyElement.variable(target, target.generator(scalar.name))
        full.update(images)
        return cls(source, target, full, name)

    def image(self, gen: Generator) -> PolyElement:
        try:
            return self.images[gen]
        except KeyError:
            raise MissingImageError(
                f"morphism {self.name or '?'} has no image for {gen.label}"
            ) from None

    def __call__(self, a: PolyElement) -> PolyElement:
        return apply_map(a, self)

    def grading_discrepancy(self) -> Optional[str]:
        """First generator whose image is not homogeneous of the generator's weight."""
        for gen in self.source.variables:
            img = self.images.get(gen)
            if img is not None and not img.is_homogeneous(gen.weight):
                return f"{gen.label}: {self.name or 'f'}({gen.label}) = {img} is not of weight {gen.weight}"
        return None

    def is_graded(self) -> bool:
        return self.grading_discrepancy() is None

    def then(self, after: "AlgebraMorphism") -> "AlgebraMorphism":
        """Composite `after ∘ self`."""
        require_same_ring(self.target, after.source)
        return AlgebraMorphism(
            self.source,
            after.target,
            {gen: apply_map(img, after) for gen, img in self.images.items()},
            f"{after.name}∘{self.name}",
        )

    def __eq__(self, other) -> bool:
        # algebra morphisms agree iff they agree on generators
        if not isinstance(other, AlgebraMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.images) == dict(other.images)
        )


def apply_map(a: PolyElement, f: AlgebraMorphism) -> PolyElement:
    """Extend `f` linearly and multiplicatively over the monomials of `a`."""
    require_same_ring(a.ring, f.source)
    variables = a.ring.variables
    powers: Dict[Tuple[int, int], PolyElement] = {}

    def power(index: int, exp: int) -> PolyElement:
        key = (index, exp)
        if key not in powers:
            img = f.image(variables[index])
            powers[key] = img if exp == 1 else power(index, exp - 1) * img
        return powers[key]

    def image_of(mono, coeff) -> PolyElement:
        term = PolyElement.constant(f.target, coeff)
        for index, exp in mono.exponents:
            term = term * power(index, exp)
            if term.is_zero():
                break
        return term

    return poly_sum(f.target, (image_of(mono, coeff) for mono, coeff in a.items()))


def identity_morphism(ring: RingDescriptor) -> AlgebraMorphism:
    return AlgebraMorphism(
        ring, ring, {gen: PolyElement.variable(ring, gen) for gen in ring.variables}, "id"
    )


def scalar_embedding(base: RingDescriptor, target: RingDescriptor) -> AlgebraMorphism:
    """Structure map R -> T sending each base generator to the same scalar in T."""
    if target.scalar_ring != base and target != base:
        raise RingMismatchError(f"{target.name} is not an algebra over {base.name}")
    return AlgebraMorphism(
        base,
        target,
        {gen: PolyElement.variable(target, target.generator(gen.name)) for gen in base.variables},
        f"{base.name}->{target.name}",
    )


def slot_embedding(carrier: RingDescriptor, slot: int, factors: int = 2) -> AlgebraMorphism:
    """h -> 1⊗..⊗h⊗..⊗1 with h in tensor factor `slot`."""
    if carrier.kind is not RingKind.HOPF_CARRIER:
        raise NoTensorSquareError(f"ring {carrier.name} ({carrier.kind.value}) has no tensor square")
    target = carrier.tensor_power(factors) if factors != 2 else carrier.tensor_square
    return AlgebraMorphism.over_base(
        carrier,
        target,
        {gen: PolyElement.variable(target, gen.in_slot(slot)) for gen in carrier.generators},
        f"iota{slot}",
    )


def left_embedding(carrier: RingDescriptor) -> AlgebraMorphism:
    return slot_embedding(carrier, 0)


def right_embedding(carrier: RingDescriptor) -> AlgebraMorphism:
    return slot_embedding(carrier, 1)


def tensor_embed_left(a: PolyElement) -> PolyElement:
    """h -> h⊗1."""
    return apply_map(a, left_embedding(a.ring))


def tensor_embed_right(a: PolyElement) -> PolyElement:
    """h -> 1⊗h."""
    return apply_map(a, right_embedding(a.ring))


def slot_shift(tensor: RingDescriptor, target: RingDescriptor, offset: int) -> AlgebraMorphism:
    """Relabel tensor factor s of `tensor` as factor s + offset of `target`."""
    return AlgebraMorphism.over_base(
        tensor,
        target,
        {gen: PolyElement.variable(target, gen.in_slot(gen.slot + offset)) for gen in tensor.generators},
        f"shift{offset}",
    )


def from_slot_images(tensor: RingDescriptor, target: RingDescriptor,
                     per_slot: Mapping[int, Optional[AlgebraMorphism]]) -> AlgebraMorphism:
    """Morphism out of a tensor power given by one carrier morphism per factor.

    `per_slot[s]` maps the carrier into `target`; a factor missing from the
    mapping is sent through the counit (its generators go to 0). Generators the
    slot morphism has no image for stay unmapped.
    """
    if tensor.carrier is None:
        raise NoTensorSquareError(f"{tensor.name} is not a tensor power")
    images: Dict[Generator, PolyElement] = {}
    for gen in tensor.generators:
        f = per_slot.get(gen.slot)
        plain = gen.in_slot(None)
        if f is None:
            images[gen] = PolyElement.zero(target)
        elif plain in f.images:
            images[gen] = f.images[plain]
    return AlgebraMorphism.over_base(tensor, target, images)
