"""
Connected graded commutative Hopf algebras presented by generators and diagonals.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional

from src.algebra.errors import HopfStructureError, MissingImageError, RingMismatchError
from src.algebra.morphism import (
    AlgebraMorphism,
    apply_map,
    from_slot_images,
    identity_morphism,
    left_embedding,
    right_embedding,
)
from src.algebra.polynomial import PolyElement
from src.algebra.ring import Generator, RingDescriptor, RingKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HopfDescriptor:
    """Hopf algebra H over a base ring R.

    `diagonals` maps each carrier generator name to Δ(g) in H⊗H. The
    comultiplication, counit and antipode are derived once, here.
    """

    name: str
    carrier: RingDescriptor
    diagonals: Mapping[str, PolyElement] = field(default_factory=dict)
    cocommutative: bool = False

    def __post_init__(self):
        if self.carrier.kind is not RingKind.HOPF_CARRIER:
            raise RingMismatchError(f"{self.carrier.name} is not a hopf-carrier ring")
        tensor = self.carrier.tensor_square
        images: Dict[Generator, PolyElement] = {}
        for gen in self.carrier.generators:
            if gen.name not in self.diagonals:
                raise HopfStructureError(f"no diagonal given for generator {gen.name}")
            diagonal = self.diagonals[gen.name]
            if diagonal.ring != tensor:
                raise RingMismatchError(f"diagonal of {gen.name} must live in {tensor.name}")
            images[gen] = diagonal
        extra = set(self.diagonals) - {gen.name for gen in self.carrier.generators}
        if extra:
            raise HopfStructureError(f"diagonals given for unknown generators: {', '.join(sorted(extra))}")

        delta = AlgebraMorphism.over_base(self.carrier, tensor, images, "Δ")
        object.__setattr__(self, "_comultiplication", delta)
        try:
            object.__setattr__(self, "_antipode", _derive_antipode(self))
            object.__setattr__(self, "_antipode_error", None)
        except HopfStructureError as e:
            logger.debug(f"Antipode of {self.name} not derivable: {e}")
            object.__setattr__(self, "_antipode", None)
            object.__setattr__(self, "_antipode_error", str(e))

    @property
    def base(self) -> RingDescriptor:
        return self.carrier.scalar_ring

    @property
    def tensor_square(self) -> RingDescriptor:
        return self.carrier.tensor_square

    @property
    def generators(self):
        return self.carrier.generators

    def diagonal(self, gen: Generator) -> PolyElement:
        return self._comultiplication.image(gen)

    def __str__(self) -> str:
        return f"{self.name} over {self.base.name} ({len(self.generators)} generators)"


def comultiplication(hopf: HopfDescriptor) -> AlgebraMorphism:
    """Δ: H -> H⊗H."""
    return hopf._comultiplication


def counit(hopf: HopfDescriptor) -> AlgebraMorphism:
    """ε: H -> R, killing every carrier generator."""
    base = hopf.base
    return AlgebraMorphism.over_base(
        hopf.carrier, base, {gen: PolyElement.zero(base) for gen in hopf.generators}, "ε"
    )


def unit_counit(hopf: HopfDescriptor) -> AlgebraMorphism:
    """η∘ε: H -> H, the convolution unit (0)."""
    carrier = hopf.carrier
    return AlgebraMorphism.over_base(
        carrier, carrier, {gen: PolyElement.zero(carrier) for gen in hopf.generators}, "(0)"
    )


def identity(hopf: HopfDescriptor) -> AlgebraMorphism:
    return identity_morphism(hopf.carrier)


def tensor_square_map(hopf: HopfDescriptor, f: AlgebraMorphism) -> AlgebraMorphism:
    """f⊗f on H⊗H for an endomorphism f of H."""
    tensor = hopf.tensor_square
    return from_slot_images(tensor, tensor, {
        0: f.then(left_embedding(hopf.carrier)),
        1: f.then(right_embedding(hopf.carrier)),
    })


def multiply_after(hopf: HopfDescriptor, f: AlgebraMorphism, g: AlgebraMorphism) -> AlgebraMorphism:
    """μ∘(f⊗g): H⊗H -> H."""
    return from_slot_images(hopf.tensor_square, hopf.carrier, {0: f, 1: g})


def _derive_antipode(hopf: HopfDescriptor) -> AlgebraMorphism:
    """S by induction on weight from μ∘(S⊗id)∘Δ = η∘ε."""
    carrier = hopf.carrier
    embed_left = left_embedding(carrier)
    images: Dict[Generator, PolyElement] = {}
    for gen in sorted(carrier.generators, key=lambda g: g.weight):
        rest = hopf.diagonal(gen) - embed_left.image(gen)
        known = AlgebraMorphism.over_base(carrier, carrier, images, "S")
        try:
            images[gen] = -apply_map(rest, multiply_after(hopf, known, identity_morphism(carrier)))
        except MissingImageError as e:
            raise HopfStructureError(f"antipode of {gen.name} needs a generator of equal or higher weight: {e}") from e
    return AlgebraMorphism.over_base(carrier, carrier, images, "S")


def beta_instance(order: int, base: Optional[RingDescriptor] = None) -> HopfDescriptor:
    """Generators b_1..b_order, weight(b_i) = i, Δb_n = sum_{i+j=n} b_i⊗b_j with b_0 = 1."""
    if order < 1:
        raise ValueError("beta instance needs order >= 1")
    gens = tuple(Generator(f"b{i}", i) for i in range(1, order + 1))
    carrier = RingDescriptor.hopf_carrier("H", gens, base)
    tensor = carrier.tensor_square

    def b(i: int, slot: int) -> PolyElement:
        if i == 0:
            return PolyElement.one(tensor)
        return PolyElement.variable(tensor, gens[i - 1].in_slot(slot))

    diagonals = {
        f"b{n}": sum((b(i, 0) * b(n - i, 1) for i in range(n + 1)), PolyElement.zero(tensor))
        for n in range(1, order + 1)
    }
    return HopfDescriptor("beta", carrier, diagonals, cocommutative=True)


def trivial_instance(base: Optional[RingDescriptor] = None) -> HopfDescriptor:
    """H = R with no generators."""
    return HopfDescriptor("trivial", RingDescriptor.hopf_carrier("H", (), base), {}, cocommutative=True)


INSTANCES = {
    "beta": beta_instance,
    "trivial": lambda order, base=None: trivial_instance(base),
}
