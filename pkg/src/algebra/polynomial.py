"""
Sparse graded commutative polynomials with exact rational coefficients.
"""
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from src.algebra.ring import Generator, RingDescriptor, require_same_ring

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Monomial:
    """Product of generator powers, stored as sorted (variable index, exponent) pairs."""

    exponents: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        for _, exp in self.exponents:
            if exp <= 0:
                raise ValueError("monomials store positive exponents only")

    @classmethod
    def of(cls, index: int, exponent: int = 1) -> "Monomial":
        return cls(((index, exponent),)) if exponent else ONE

    @classmethod
    def from_map(cls, exponents: Mapping[int, int]) -> "Monomial":
        return cls(tuple(sorted((i, e) for i, e in exponents.items() if e)))

    def times(self, other: "Monomial") -> "Monomial":
        if not other.exponents:
            return self
        if not self.exponents:
            return other
        merged: Dict[int, int] = dict(self.exponents)
        for i, e in other.exponents:
            merged[i] = merged.get(i, 0) + e
        return Monomial(tuple(sorted(merged.items())))

    def weight(self, ring: RingDescriptor) -> int:
        variables = ring.variables
        return sum(variables[i].weight * e for i, e in self.exponents)

    def dense(self, nvars: int) -> Tuple[int, ...]:
        vector = [0] * nvars
        for i, e in self.exponents:
            vector[i] = e
        return tuple(vector)

    def is_one(self) -> bool:
        return not self.exponents


ONE = Monomial()


class PolyElement:
    """Immutable element of a RingDescriptor's polynomial algebra."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: RingDescriptor, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.ring = ring
        self._terms: Dict[Monomial, Fraction] = {
            mono: Fraction(coeff) for mono, coeff in (terms or {}).items() if coeff
        }

    # --- constructors -------------------------------------------------
    @classmethod
    def zero(cls, ring: RingDescriptor) -> "PolyElement":
        return cls(ring)

    @classmethod
    def constant(cls, ring: RingDescriptor, value: Scalar) -> "PolyElement":
        return cls(ring, {ONE: value})

    @classmethod
    def one(cls, ring: RingDescriptor) -> "PolyElement":
        return cls.constant(ring, 1)

    @classmethod
    def variable(cls, ring: RingDescriptor, gen: Generator) -> "PolyElement":
        return cls(ring, {Monomial.of(ring.index_of(gen)): 1})

    @classmethod
    def _from_clean(cls, ring: RingDescriptor, terms: Dict[Monomial, Fraction]) -> "PolyElement":
        element = cls.__new__(cls)
        element.ring = ring
        element._terms = terms
        return element

    # --- inspection ---------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE, Fraction(0))

    def weights(self) -> Iterable[int]:
        return (mono.weight(self.ring) for mono in self._terms)

    def max_weight(self) -> int:
        return max(self.weights(), default=0)

    def is_homogeneous(self, weight: int) -> bool:
        return all(w == weight for w in self.weights())

    def __len__(self) -> int:
        return len(self._terms)

    # --- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "PolyElement":
        if isinstance(other, PolyElement):
            require_same_ring(self.ring, other.ring)
            return other
        if isinstance(other, (int, Fraction)):
            return PolyElement.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other) -> "PolyElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = terms.get(mono, 0) + coeff
            if total:
                terms[mono] = total
            else:
                terms.pop(mono, None)
        return PolyElement._from_clean(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "PolyElement":
        return PolyElement._from_clean(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "PolyElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PolyElement":
        return (-self) + other

    def __mul__(self, other) -> "PolyElement":
        if isinstance(other, (int, Fraction)):
            if not other:
                return PolyElement.zero(self.ring)
            return PolyElement._from_clean(self.ring, {m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1.times(m2)
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return PolyElement._from_clean(self.ring, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PolyElement":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = PolyElement.one(self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._terms == ({ONE: Fraction(other)} if other else {})
        if not isinstance(other, PolyElement):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring.name, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        from src.utils.formatting import format_poly
        return f"PolyElement({format_poly(self)!r} in {self.ring.name})"

    def __str__(self) -> str:
        from src.utils.formatting import format_poly
        return format_poly(self)


def add(a: PolyElement, b: PolyElement) -> PolyElement:
    return a + b


def mul(a: PolyElement, b: PolyElement) -> PolyElement:
    return a * b


def truncate_above(a: PolyElement, weight: Optional[int]) -> PolyElement:
    """Drop every monomial of weight greater than `weight` (None keeps everything)."""
    if weight is None:
        return a
    if weight < 0:
        raise ValueError("weight bound must be >= 0")
    ring = a.ring
    return PolyElement._from_clean(ring, {m: c for m, c in a.items() if m.weight(ring) <= weight})


def generator(ring: RingDescriptor, name: str, slot: Optional[int] = None) -> PolyElement:
    return PolyElement.variable(ring, ring.generator(name, slot))


def poly_sum(ring: RingDescriptor, elements: Iterable[PolyElement]) -> PolyElement:
    """Sum without intermediate copies."""
    terms: Dict[Monomial, Fraction] = {}
    for element in elements:
        require_same_ring(element.ring, ring)
        for mono, coeff in element.items():
            terms[mono] = terms.get(mono, 0) + coeff
    return PolyElement._from_clean(ring, {m: c for m, c in terms.items() if c})
