"""
Inverse series, power systems and homomorphisms of formal group laws.
"""
import logging
from typing import Optional

from src.algebra.errors import RingMismatchError
from src.algebra.polynomial import PolyElement
from src.fgl.law import FormalGroupLaw
from src.series.power_series import (
    Series1,
    first_difference,
    solve_degreewise,
    subst2,
    subst_into1,
    substitute,
)

logger = logging.getLogger(__name__)


def formal_sum(law: FormalGroupLaw, a: Series1, b: Series1) -> Series1:
    """F(a(x), b(x)) as a one-variable series."""
    return substitute(law.series, [a, b])


def inverse_series(law: FormalGroupLaw) -> Series1:
    """theta with F(x, theta(x)) = 0, solved degree by degree."""
    ring = law.ring

    def residual(theta: Series1, k: int) -> PolyElement:
        x = Series1.x(ring, k)
        return formal_sum(law, x, theta).coeff(k) if k <= law.order else PolyElement.zero(ring)

    return solve_degreewise(residual, ring, law.order, {1: -PolyElement.one(ring)})


def n_series(law: FormalGroupLaw, n: int) -> Series1:
    """phi^(n): phi^(1) = x, phi^(-1) = theta, phi^(n) = F(x, phi^(n-1)).

    Below -1 the recursion runs downward as phi^(n-1) = F(theta, phi^(n)).
    """
    ring, order = law.ring, law.order
    x = Series1.x(ring, order)
    if n == 0:
        return Series1.zero1(ring, order)
    if n > 0:
        phi = x
        for _ in range(n - 1):
            phi = formal_sum(law, x, phi)
        return phi
    theta = inverse_series(law)
    phi = theta
    for _ in range(-n - 1):
        phi = formal_sum(law, theta, phi)
    return phi


def fgl_hom_discrepancy(phi: Series1, source: FormalGroupLaw, target: FormalGroupLaw) -> Optional[str]:
    """None when phi(F1(u,v)) = F2(phi(u), phi(v)); else the first differing coefficient."""
    if source.ring != target.ring or phi.ring != source.ring:
        raise RingMismatchError("homomorphism check needs one shared base ring")
    order = min(phi.order, source.order, target.order)
    lhs = subst_into1(phi.with_order(order), source.series.with_order(order))
    rhs = subst2(target.series.with_order(order), phi.with_order(order), phi.with_order(order))
    return first_difference(lhs, rhs)


def is_fgl_hom(phi: Series1, source: FormalGroupLaw, target: FormalGroupLaw) -> bool:
    return fgl_hom_discrepancy(phi, source, target) is None
