"""
Ring descriptors: the coefficient universes R, H and H⊗H.

A ring is the polynomial algebra over the rationals on its variables. Rings of
kind HOPF_CARRIER or TENSOR_SQUARE are declared over a base ring whose
generators act as shared scalars.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Optional, Tuple

from src.algebra.errors import NoTensorSquareError, RingMismatchError

SLOT_LABELS = ("L", "R")


class RingKind(Enum):
    """Role a ring plays in the construction."""
    BASE = "base-ring"
    HOPF_CARRIER = "hopf-carrier"
    TENSOR_SQUARE = "tensor-square"
    SCRATCH = "scratch"


@dataclass(frozen=True)
class Generator:
    """A polynomial generator with a positive grading weight.

    `slot` tags the tensor factor a generator belongs to (0 = left, 1 = right,
    higher slots only in scratch tensor powers). Scalars and carrier
    generators have no slot.
    """

    name: str
    weight: int
    slot: Optional[int] = None

    def __post_init__(self):
        if not self.name:
            raise ValueError("generator name must be non-empty")
        if self.weight < 1:
            raise ValueError(f"generator {self.name} needs weight >= 1, got {self.weight}")

    def in_slot(self, slot: Optional[int]) -> "Generator":
        return Generator(self.name, self.weight, slot)

    @property
    def label(self) -> str:
        if self.slot is None:
            return self.name
        if self.slot < len(SLOT_LABELS):
            return f"{self.name}_{SLOT_LABELS[self.slot]}"
        return f"{self.name}_{self.slot}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class RingDescriptor:
    """Ordered generator list of a graded polynomial ring over Q."""

    name: str
    generators: Tuple[Generator, ...] = ()
    kind: RingKind = RingKind.BASE
    base: Optional["RingDescriptor"] = None
    carrier: Optional["RingDescriptor"] = field(default=None, compare=False, repr=False)
    factors: int = 1

    def __post_init__(self):
        seen = set()
        for gen in self.variables:
            key = (gen.name, gen.slot)
            if key in seen:
                raise ValueError(f"duplicate generator {gen.label} in ring {self.name}")
            seen.add(key)
        if self.kind is RingKind.TENSOR_SQUARE and self.factors != 2:
            raise ValueError("tensor-square rings have exactly two factors")

    @classmethod
    def base_ring(cls, name: str, generators=()) -> "RingDescriptor":
        return cls(name=name, generators=tuple(generators), kind=RingKind.BASE)

    @classmethod
    def hopf_carrier(cls, name: str, generators, base: Optional["RingDescriptor"] = None) -> "RingDescriptor":
        return cls(
            name=name,
            generators=tuple(generators),
            kind=RingKind.HOPF_CARRIER,
            base=base if base is not None else RATIONALS,
        )

    @cached_property
    def scalars(self) -> Tuple[Generator, ...]:
        """Generators inherited from the base ring."""
        if self.base is None:
            return ()
        return self.base.variables

    @cached_property
    def variables(self) -> Tuple[Generator, ...]:
        """Every polynomial variable, base scalars first."""
        return self.scalars + self.generators

    @cached_property
    def _index(self) -> Dict[Generator, int]:
        return {gen: i for i, gen in enumerate(self.variables)}

    @cached_property
    def scalar_ring(self) -> "RingDescriptor":
        """The ring the counit lands in: the base ring, or this ring when it is a base."""
        return self.base if self.base is not None else self

    def index_of(self, gen: Generator) -> int:
        try:
            return self._index[gen]
        except KeyError:
            raise RingMismatchError(f"{gen.label} is not a generator of {self.name}") from None

    def has(self, gen: Generator) -> bool:
        return gen in self._index

    def generator(self, name: str, slot: Optional[int] = None) -> Generator:
        for gen in self.variables:
            if gen.name == name and gen.slot == slot:
                return gen
        label = name if slot is None else Generator(name, 1, slot).label
        raise RingMismatchError(f"{label} is not a generator of {self.name}")

    def tensor_power(self, k: int) -> "RingDescriptor":
        """k-fold tensor power over the base ring; k = 2 is the tensor square."""
        if self.kind is not RingKind.HOPF_CARRIER:
            raise NoTensorSquareError(f"ring {self.name} ({self.kind.value}) has no tensor powers")
        if k < 1:
            raise ValueError("tensor power needs k >= 1")
        gens = tuple(gen.in_slot(slot) for slot in range(k) for gen in self.generators)
        return RingDescriptor(
            name=f"{self.name}^{k}",
            generators=gens,
            kind=RingKind.TENSOR_SQUARE if k == 2 else RingKind.SCRATCH,
            base=self.base,
            carrier=self,
            factors=k,
        )

    @cached_property
    def tensor_square(self) -> "RingDescriptor":
        return self.tensor_power(2)

    def __str__(self) -> str:
        labels = ", ".join(gen.label for gen in self.variables)
        return f"{self.name}[{labels}]" if labels else self.name


RATIONALS = RingDescriptor.base_ring("Q")


def require_same_ring(a: RingDescriptor, b: RingDescriptor) -> None:
    if a is not b and a != b:
        raise RingMismatchError(f"ring mismatch: {a.name} vs {b.name}")
