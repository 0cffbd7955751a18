"""
Truncated power series without constant term, over any RingDescriptor.

Truncation is by total degree: a series of order N keeps the coefficients of
monomials of total degree 1..N. Series1 and Series2 are the one- and
two-variable cases; the generic PowerSeries also serves as the three-variable
scratch space of the associativity check.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from src.algebra.errors import NonUnitLinearTermError, RingMismatchError
from src.algebra.morphism import AlgebraMorphism, apply_map
from src.algebra.polynomial import PolyElement, poly_sum, truncate_above
from src.algebra.ring import RingDescriptor, require_same_ring

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


class PowerSeries:
    """Immutable truncated series in `nvars` variables with PolyElement coefficients."""

    __slots__ = ("ring", "order", "nvars", "_coeffs")

    def __init__(self, ring: RingDescriptor, order: int, nvars: int,
                 coeffs: Optional[Mapping[Exponents, PolyElement]] = None):
        if order < 1:
            raise ValueError(f"truncation order must be >= 1, got {order}")
        self.ring = ring
        self.order = order
        self.nvars = nvars
        clean: Dict[Exponents, PolyElement] = {}
        for exponents, coeff in (coeffs or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != nvars or any(e < 0 for e in exponents):
                raise ValueError(f"bad exponent tuple {exponents} for {nvars} variables")
            require_same_ring(coeff.ring, ring)
            degree = sum(exponents)
            if degree == 0:
                if not coeff.is_zero():
                    raise ValueError("series have no constant term")
                continue
            if degree <= order and not coeff.is_zero():
                clean[exponents] = coeff
        self._coeffs = clean

    @classmethod
    def _wrap(cls, ring, order, nvars, coeffs: Dict[Exponents, PolyElement]) -> "PowerSeries":
        series = PowerSeries.__new__(_SHAPES.get(nvars, PowerSeries))
        series.ring = ring
        series.order = order
        series.nvars = nvars
        series._coeffs = coeffs
        return series

    @classmethod
    def zero(cls, ring: RingDescriptor, order: int, nvars: int) -> "PowerSeries":
        return PowerSeries._wrap(ring, order, nvars, {})

    @classmethod
    def variable(cls, ring: RingDescriptor, order: int, nvars: int, index: int) -> "PowerSeries":
        exponents = tuple(1 if i == index else 0 for i in range(nvars))
        return PowerSeries._wrap(ring, order, nvars, {exponents: PolyElement.one(ring)})

    # --- inspection ---------------------------------------------------
    def coefficient(self, exponents: Exponents) -> PolyElement:
        return self._coeffs.get(tuple(exponents)) or PolyElement.zero(self.ring)

    def items(self) -> Iterator[Tuple[Exponents, PolyElement]]:
        return iter(self._coeffs.items())

    def sorted_items(self) -> List[Tuple[Exponents, PolyElement]]:
        """Graded order: total degree ascending, then first variable's power descending."""
        return sorted(self._coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def to_records(self) -> List[Tuple[Exponents, str]]:
        """Serialization records: (exponent tuple, coefficient with p/q rationals)."""
        from src.utils.formatting import format_poly
        return [(exponents, format_poly(coeff, exact=True)) for exponents, coeff in self.sorted_items()]

    # --- arithmetic ---------------------------------------------------
    def _check(self, other: "PowerSeries") -> int:
        require_same_ring(self.ring, other.ring)
        if self.nvars != other.nvars:
            raise RingMismatchError(f"cannot combine {self.nvars}- and {other.nvars}-variable series")
        return min(self.order, other.order)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = self._check(other)
        coeffs: Dict[Exponents, PolyElement] = {}
        for source in (self._coeffs, other._coeffs):
            for exponents, coeff in source.items():
                if sum(exponents) > order:
                    continue
                total = coeffs[exponents] + coeff if exponents in coeffs else coeff
                coeffs[exponents] = total
        return PowerSeries._wrap(self.ring, order, self.nvars,
                                 {e: c for e, c in coeffs.items() if not c.is_zero()})

    def __neg__(self) -> "PowerSeries":
        return PowerSeries._wrap(self.ring, self.order, self.nvars, {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return self + (-other)

    def scale(self, factor: Union[int, Fraction, PolyElement]) -> "PowerSeries":
        coeffs = {e: c * factor for e, c in self._coeffs.items()}
        return PowerSeries._wrap(self.ring, self.order, self.nvars, {e: c for e, c in coeffs.items() if not c.is_zero()})

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if isinstance(other, (int, Fraction, PolyElement)):
            return self.scale(other)
        order = self._check(other)
        buckets: Dict[Exponents, List[PolyElement]] = {}
        right = [(e, sum(e), c) for e, c in other._coeffs.items()]
        for e1, c1 in self._coeffs.items():
            d1 = sum(e1)
            for e2, d2, c2 in right:
                if d1 + d2 > order:
                    continue
                key = tuple(a + b for a, b in zip(e1, e2))
                buckets.setdefault(key, []).append(c1 * c2)
        coeffs = {e: poly_sum(self.ring, parts) for e, parts in buckets.items()}
        return PowerSeries._wrap(self.ring, order, self.nvars, {e: c for e, c in coeffs.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PowerSeries":
        if k < 1:
            raise ValueError("series powers start at 1 (no constant terms)")
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.order == other.order
            and self.ring == other.ring
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.order, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        from src.utils.formatting import format_series
        return f"{type(self).__name__}({format_series(self)!r}, order={self.order}, ring={self.ring.name})"

    # --- reshaping ----------------------------------------------------
    def with_order(self, order: int) -> "PowerSeries":
        return PowerSeries._wrap(self.ring, order, self.nvars,
                                 {e: c for e, c in self._coeffs.items() if sum(e) <= order})

    def truncate_weights(self, weight: Optional[int]) -> "PowerSeries":
        coeffs = {e: truncate_above(c, weight) for e, c in self._coeffs.items()}
        return PowerSeries._wrap(self.ring, self.order, self.nvars, {e: c for e, c in coeffs.items() if not c.is_zero()})

    def lift(self, nvars: int, positions: Sequence[int]) -> "PowerSeries":
        """Re-express in `nvars` variables, variable i going to slot positions[i]."""
        coeffs = {}
        for exponents, coeff in self._coeffs.items():
            wide = [0] * nvars
            for i, e in enumerate(exponents):
                wide[positions[i]] += e
            coeffs[tuple(wide)] = coeff
        return PowerSeries._wrap(self.ring, self.order, nvars, coeffs)

    def map_coeffs(self, f: AlgebraMorphism) -> "PowerSeries":
        require_same_ring(self.ring, f.source)
        coeffs = {e: apply_map(c, f) for e, c in self._coeffs.items()}
        return PowerSeries._wrap(f.target, self.order, self.nvars, {e: c for e, c in coeffs.items() if not c.is_zero()})


class Series1(PowerSeries):
    """One-variable series: coefficient of x^k for 1 <= k <= order."""

    __slots__ = ()

    def __init__(self, ring: RingDescriptor, order: int, coeffs: Optional[Mapping[int, PolyElement]] = None):
        super().__init__(ring, order, 1, {(k,): c for k, c in (coeffs or {}).items()})

    @classmethod
    def x(cls, ring: RingDescriptor, order: int) -> "Series1":
        return PowerSeries.variable(ring, order, 1, 0)

    @classmethod
    def from_scalars(cls, ring: RingDescriptor, order: int, coeffs: Mapping[int, Union[int, Fraction]]) -> "Series1":
        return cls(ring, order, {k: PolyElement.constant(ring, q) for k, q in coeffs.items()})

    @classmethod
    def zero1(cls, ring: RingDescriptor, order: int) -> "Series1":
        return PowerSeries.zero(ring, order, 1)

    def coeff(self, k: int) -> PolyElement:
        return self.coefficient((k,))

    @property
    def linear_coefficient(self) -> PolyElement:
        return self.coeff(1)


class Series2(PowerSeries):
    """Two-variable series in u, v: coefficient of u^i v^j for 1 <= i+j <= order."""

    __slots__ = ()

    def __init__(self, ring: RingDescriptor, order: int, coeffs: Optional[Mapping[Tuple[int, int], PolyElement]] = None):
        super().__init__(ring, order, 2, coeffs)

    @classmethod
    def u(cls, ring: RingDescriptor, order: int) -> "Series2":
        return PowerSeries.variable(ring, order, 2, 0)

    @classmethod
    def v(cls, ring: RingDescriptor, order: int) -> "Series2":
        return PowerSeries.variable(ring, order, 2, 1)

    def coeff(self, i: int, j: int) -> PolyElement:
        return self.coefficient((i, j))

    def swap(self) -> "Series2":
        """F(v, u)."""
        return PowerSeries._wrap(self.ring, self.order, 2, {(j, i): c for (i, j), c in self._coeffs.items()})

    def restrict_u_zero(self) -> Series1:
        """F(0, v) as a series in one variable."""
        return PowerSeries._wrap(self.ring, self.order, 1, {(j,): c for (i, j), c in self._coeffs.items() if i == 0})

    def restrict_v_zero(self) -> Series1:
        """F(u, 0) as a series in one variable."""
        return PowerSeries._wrap(self.ring, self.order, 1, {(i,): c for (i, j), c in self._coeffs.items() if j == 0})


_SHAPES = {1: Series1, 2: Series2}


def substitute(outer: PowerSeries, inners: Sequence[PowerSeries]) -> PowerSeries:
    """outer(inner_1, ..., inner_k), truncated at the smallest order involved."""
    if len(inners) != outer.nvars:
        raise ValueError(f"need {outer.nvars} inner series, got {len(inners)}")
    nvars = inners[0].nvars
    for inner in inners:
        require_same_ring(outer.ring, inner.ring)
        if inner.nvars != nvars:
            raise RingMismatchError("inner series must share their variables")
    order = min([outer.order] + [inner.order for inner in inners])
    inners = [inner.with_order(order) for inner in inners]

    powers: List[Dict[int, PowerSeries]] = [{1: inner} for inner in inners]

    def power(slot: int, k: int) -> PowerSeries:
        cache = powers[slot]
        if k not in cache:
            cache[k] = power(slot, k - 1) * inners[slot]
        return cache[k]

    buckets: Dict[Exponents, List[PolyElement]] = {}
    for exponents, coeff in outer.items():
        if sum(exponents) > order:
            continue
        term: Optional[PowerSeries] = None
        for slot, k in enumerate(exponents):
            if k == 0:
                continue
            factor = power(slot, k)
            term = factor if term is None else term * factor
            if term.is_zero():
                break
        for e, c in term.items():
            buckets.setdefault(e, []).append(coeff * c)
    coeffs = {e: poly_sum(outer.ring, parts) for e, parts in buckets.items()}
    return PowerSeries._wrap(outer.ring, order, nvars, {e: c for e, c in coeffs.items() if not c.is_zero()})


def compose1(outer: Series1, inner: Series1) -> Series1:
    """outer(inner(x))."""
    if outer.nvars != 1 or inner.nvars != 1:
        raise ValueError("compose1 takes one-variable series")
    return substitute(outer, [inner])


def subst2(F: Series2, g: Series1, h: Series1) -> Series2:
    """F(g(u), h(v))."""
    return substitute(F, [g.lift(2, (0,)), h.lift(2, (1,))])


def subst_into1(phi: Series1, F: Series2) -> Series2:
    """phi(F(u, v))."""
    return substitute(phi, [F])


def map_coeffs(series: PowerSeries, f: AlgebraMorphism) -> PowerSeries:
    """Apply an algebra morphism to every coefficient."""
    return series.map_coeffs(f)


def reversion(f: Series1) -> Series1:
    """Compositional inverse of a series whose linear coefficient is 1."""
    one = PolyElement.one(f.ring)
    if f.linear_coefficient != one:
        raise NonUnitLinearTermError(
            f"reversion needs linear coefficient 1, got {f.linear_coefficient}"
        )
    # f(g) = x + (g_k - e_k) x^k + ... once lower terms agree, so subtract the error
    coeffs: Dict[int, PolyElement] = {1: one}
    for k in range(2, f.order + 1):
        g = Series1(f.ring, k, coeffs)
        error = compose1(f.with_order(k), g).coeff(k)
        if not error.is_zero():
            coeffs[k] = -error
    return Series1(f.ring, f.order, coeffs)


def solve_degreewise(residual, ring: RingDescriptor, order: int, seed: Mapping[int, PolyElement]) -> Series1:
    """Find s with residual(s) = 0 when residual(s)_k = s_k + (terms in s_1..s_{k-1}).

    `seed` fixes the linear coefficient.
    """
    coeffs: Dict[int, PolyElement] = dict(seed)
    for k in range(2, order + 1):
        s = Series1(ring, k, coeffs)
        error = residual(s, k)
        if not error.is_zero():
            coeffs[k] = -error
    return Series1(ring, order, coeffs)


def first_difference(left: PowerSeries, right: PowerSeries) -> Optional[str]:
    """None when equal; otherwise names the first coefficient (graded order) that differs."""
    from src.utils.formatting import format_exponent, format_poly
    if left.nvars != right.nvars:
        return f"variable count differs: {left.nvars} vs {right.nvars}"
    if left.ring != right.ring:
        return f"rings differ: {left.ring.name} vs {right.ring.name}"
    keys = set(e for e, _ in left.items()) | set(e for e, _ in right.items())
    for exponents in sorted(keys, key=lambda e: (sum(e), tuple(-x for x in e))):
        a, b = left.coefficient(exponents), right.coefficient(exponents)
        if a != b:
            return f"coefficient of {format_exponent(exponents)}: {format_poly(a, exact=True)} vs {format_poly(b, exact=True)}"
    if left.order != right.order:
        return f"truncation orders differ: {left.order} vs {right.order}"
    return None
