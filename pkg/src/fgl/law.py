"""
Formal group laws over a base ring and their standard constructors.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

from src.algebra.errors import NonMonicSeriesError, RingMismatchError
from src.algebra.polynomial import PolyElement
from src.algebra.ring import RATIONALS, Generator, RingDescriptor, RingKind
from src.series.power_series import Series1, Series2, reversion, subst_into1

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormalGroupLaw:
    """Two-variable series F(u, v) over a base ring.

    Construction does not validate; run validate_fgl for the axioms.
    """

    name: str
    series: Series2

    def __post_init__(self):
        if self.series.nvars != 2:
            raise ValueError("a formal group law is a two-variable series")
        if self.series.ring.kind is not RingKind.BASE:
            raise RingMismatchError(f"formal group laws live over a base ring, not {self.series.ring.kind.value}")

    @property
    def ring(self) -> RingDescriptor:
        return self.series.ring

    @property
    def order(self) -> int:
        return self.series.order

    def __str__(self) -> str:
        from src.utils.formatting import format_series
        return f"{self.name}: F(u,v) = {format_series(self.series)}"


def additive(order: int) -> FormalGroupLaw:
    """F(u, v) = u + v."""
    ring = RATIONALS
    return FormalGroupLaw("additive", Series2.u(ring, order) + Series2.v(ring, order))


def multiplicative(order: int) -> FormalGroupLaw:
    """F(u, v) = u + v + uv."""
    ring = RATIONALS
    u, v = Series2.u(ring, order), Series2.v(ring, order)
    return FormalGroupLaw("multiplicative", u + v + u * v)


def from_logarithm(log: Series1, name: str = "logarithm") -> FormalGroupLaw:
    """F(u, v) = log^-1(log(u) + log(v)) for a monic logarithm."""
    if log.linear_coefficient != PolyElement.one(log.ring):
        raise NonMonicSeriesError(f"logarithm must start with x, got linear coefficient {log.linear_coefficient}")
    exp = reversion(log)
    both = log.lift(2, (0,)) + log.lift(2, (1,))
    logger.debug(f"Building law {name} from logarithm at order {log.order}")
    return FormalGroupLaw(name, subst_into1(exp, both))


def from_logarithm_coefficients(ring: RingDescriptor, order: int,
                                coefficients: Sequence[PolyElement], name: str = "logarithm") -> FormalGroupLaw:
    """log(x) = x + sum_k coefficients[k-1] * x^(k+1)."""
    coeffs: Dict[int, PolyElement] = {1: PolyElement.one(ring)}
    for k, coeff in enumerate(coefficients, start=1):
        if k + 1 <= order:
            coeffs[k + 1] = coeff
    return from_logarithm(Series1(ring, order, coeffs), name)


def mishchenko_ring(order: int) -> RingDescriptor:
    """Q[m_1, ..., m_{order-1}] with weight(m_k) = k."""
    return RingDescriptor.base_ring(
        "MU", tuple(Generator(f"m{k}", k) for k in range(1, order))
    )


def mishchenko_model(order: int) -> FormalGroupLaw:
    """Geometric cobordism law from log(x) = x + sum m_k x^(k+1) over Q[m_k]."""
    ring = mishchenko_ring(order)
    coefficients = [PolyElement.variable(ring, gen) for gen in ring.generators]
    return from_logarithm_coefficients(ring, order, coefficients, "mishchenko-model")


def log_one_plus_x(order: int) -> Series1:
    """log(1 + x) = x - x^2/2 + x^3/3 - ..."""
    return Series1.from_scalars(
        RATIONALS, order, {k: Fraction((-1) ** (k + 1), k) for k in range(1, order + 1)}
    )


def logarithm(law: FormalGroupLaw) -> Series1:
    """The monic series l with l(F(u,v)) = l(u) + l(v); needs a ring containing Q.

    l'(x) = 1 / (dF/dv)(x, 0), integrated term by term.
    """
    ring, order = law.ring, law.order
    one = PolyElement.one(ring)
    # g(x) = dF/dv(x, 0) = 1 + sum_i F_{i,1} x^i
    g = {i: law.series.coeff(i, 1) for i in range(1, order)}
    h: List[PolyElement] = [one]
    for k in range(1, order):
        h.append(-sum((g[i] * h[k - i] for i in range(1, k + 1)), PolyElement.zero(ring)))
    return Series1(ring, order, {k + 1: h[k] * Fraction(1, k + 1) for k in range(order)})


LAWS: Dict[str, Callable[[int], FormalGroupLaw]] = {
    "additive": additive,
    "multiplicative": multiplicative,
    "mishchenko-model": mishchenko_model,
}


def law_by_name(name: str, order: int) -> FormalGroupLaw:
    try:
        factory = LAWS[name]
    except KeyError:
        raise ValueError(f"unknown law {name!r}; choose from {', '.join(sorted(LAWS))}") from None
    return factory(order)
