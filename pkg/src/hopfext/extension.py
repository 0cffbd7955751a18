"""
Formal groups over a Hopf algebra H: two-variable series with coefficients in
H⊗H extending a formal group law over the base ring, and their twists by the
convolution powers (n).
"""
import logging
from dataclasses import dataclass, field
from typing import Optional

from src.algebra.errors import HopfStructureError, NonMonicSeriesError, NotCocommutativeError, RingMismatchError
from src.algebra.morphism import (
    AlgebraMorphism,
    from_slot_images,
    identity_morphism,
    left_embedding,
    right_embedding,
    scalar_embedding,
)
from src.algebra.polynomial import PolyElement, poly_sum
from src.algebra.ring import require_same_ring
from src.fgl.law import FormalGroupLaw
from src.hopf.convolution import conv_power, convolution
from src.hopf.descriptor import HopfDescriptor, comultiplication, tensor_square_map
from src.series.power_series import Series1, Series2, first_difference, reversion, subst2, subst_into1

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoveringSeries:
    """One-variable series Φ(x) with coefficients in the carrier of `hopf`."""

    hopf: HopfDescriptor
    series: Series1

    def __post_init__(self):
        if self.series.nvars != 1:
            raise ValueError("a covering series has one variable")
        require_same_ring(self.series.ring, self.hopf.carrier)

    @property
    def order(self) -> int:
        return self.series.order

    def is_monic(self) -> bool:
        return self.series.linear_coefficient == PolyElement.one(self.hopf.carrier)


@dataclass(frozen=True)
class HopfFormalGroup:
    """Body G(u, v) over H⊗H together with the base law it should extend.

    Equality is coefficientwise; the name is only a label.
    """

    hopf: HopfDescriptor
    base: FormalGroupLaw
    body: Series2
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.body.nvars != 2:
            raise ValueError("the body of a formal group is a two-variable series")
        require_same_ring(self.body.ring, self.hopf.tensor_square)
        if self.base.ring != self.hopf.base:
            raise RingMismatchError(
                f"law {self.base.name} lives over {self.base.ring.name}, Hopf algebra over {self.hopf.base.name}"
            )
        if self.base.order != self.body.order:
            raise ValueError(f"base law has order {self.base.order}, body has order {self.body.order}")

    @property
    def order(self) -> int:
        return self.body.order

    def __str__(self) -> str:
        from src.utils.formatting import format_series
        return f"{self.name or 'G'}(u,v) = {format_series(self.body)}"


def _embed_law(law: FormalGroupLaw, hopf: HopfDescriptor) -> Series2:
    return law.series.map_coeffs(scalar_embedding(law.ring, hopf.tensor_square))


def counit_square(hopf: HopfDescriptor) -> AlgebraMorphism:
    """ε⊗ε: H⊗H -> R."""
    return from_slot_images(hopf.tensor_square, hopf.base, {})


def trivial_extension(law: FormalGroupLaw, hopf: HopfDescriptor) -> HopfFormalGroup:
    """F with every coefficient r embedded as r·(1⊗1)."""
    return HopfFormalGroup(hopf, law, _embed_law(law, hopf), f"{law.name}⊗1")


def extension_discrepancy(group: HopfFormalGroup) -> Optional[str]:
    projected = group.body.map_coeffs(counit_square(group.hopf))
    return first_difference(projected, group.base.series)


def is_extension(group: HopfFormalGroup) -> bool:
    """(ε⊗ε) applied to the body recovers the base law."""
    return extension_discrepancy(group) is None


def unit_slot_discrepancy(group: HopfFormalGroup) -> Optional[str]:
    hopf = group.hopf
    keep = identity_morphism(hopf.carrier)
    x = Series1.x(hopf.carrier, group.order)
    # ε on the left factor with u = 0 leaves v, and symmetrically
    for slot, restrict, label in ((1, Series2.restrict_u_zero, "u=0"), (0, Series2.restrict_v_zero, "v=0")):
        collapsed = group.body.map_coeffs(from_slot_images(hopf.tensor_square, hopf.carrier, {slot: keep}))
        diff = first_difference(restrict(collapsed), x)
        if diff:
            return f"{label}: {diff}"
    return None


def has_unit_slots(group: HopfFormalGroup) -> bool:
    return unit_slot_discrepancy(group) is None


def is_symmetric(group: HopfFormalGroup) -> bool:
    """G(u, v) = σG(v, u), σ exchanging the tensor factors."""
    hopf = group.hopf
    sigma = from_slot_images(hopf.tensor_square, hopf.tensor_square, {
        0: right_embedding(hopf.carrier),
        1: left_embedding(hopf.carrier),
    })
    return group.body.map_coeffs(sigma).swap() == group.body


def twist_by(group: HopfFormalGroup, f: AlgebraMorphism) -> HopfFormalGroup:
    """Body with (f⊗f) applied to every coefficient."""
    hopf = group.hopf
    require_same_ring(f.source, hopf.carrier)
    require_same_ring(f.target, hopf.carrier)
    ungraded = f.grading_discrepancy()
    if ungraded:
        raise HopfStructureError(f"twists need a graded endomorphism; {ungraded}")
    body = group.body.map_coeffs(tensor_square_map(hopf, f))
    return HopfFormalGroup(hopf, group.base, body, f"{group.name}^{f.name}")


def _require_cocommutative(hopf: HopfDescriptor) -> None:
    if not hopf.cocommutative:
        raise NotCocommutativeError(f"{hopf.name} is not cocommutative; (n) need not respect Δ")


def twist(group: HopfFormalGroup, n: int) -> HopfFormalGroup:
    """G^(n) = ((n)⊗(n))G."""
    _require_cocommutative(group.hopf)
    logger.debug(f"Twisting {group.name} by ({n})")
    return twist_by(group, conv_power(group.hopf, n))


def convolve_twists(group: HopfFormalGroup, m: int, n: int) -> HopfFormalGroup:
    """Twist by (m)⋆(n); agrees with twist(group, m + n)."""
    _require_cocommutative(group.hopf)
    hopf = group.hopf
    return twist_by(group, convolution(conv_power(hopf, m), conv_power(hopf, n), hopf))


def default_twist_series(hopf: HopfDescriptor, order: int) -> CoveringSeries:
    """b = x + Σ_k c_k x^(k+1), c_k the sum of the generators of weight k."""
    carrier = hopf.carrier
    coeffs = {1: PolyElement.one(carrier)}
    for k in range(1, order):
        same_weight = [PolyElement.variable(carrier, gen) for gen in hopf.generators if gen.weight == k]
        if same_weight:
            coeffs[k + 1] = poly_sum(carrier, same_weight)
    return CoveringSeries(hopf, Series1(carrier, order, coeffs))


def identity_covering(hopf: HopfDescriptor, order: int) -> CoveringSeries:
    """Φ = x."""
    return CoveringSeries(hopf, Series1.x(hopf.carrier, order))


def _working_order(law: FormalGroupLaw, b: CoveringSeries) -> int:
    return min(law.order, b.order)


def truncated_law(law: FormalGroupLaw, order: int) -> FormalGroupLaw:
    if order == law.order:
        return law
    return FormalGroupLaw(law.name, law.series.with_order(order))


def canonical_extension(law: FormalGroupLaw, hopf: HopfDescriptor, b: CoveringSeries) -> HopfFormalGroup:
    """G(u, v) = (Δb)(F(b̄_L(u), b̄_R(v))) with b̄ the compositional inverse of b."""
    if b.hopf != hopf:
        raise RingMismatchError(f"twist series belongs to {b.hopf.name}, not {hopf.name}")
    if not b.is_monic():
        raise NonMonicSeriesError(f"twist series must start with x, got linear coefficient {b.series.linear_coefficient}")
    order = _working_order(law, b)
    law = truncated_law(law, order)
    b_series = b.series.with_order(order)

    b_bar = reversion(b_series)
    inner = subst2(
        _embed_law(law, hopf),
        b_bar.map_coeffs(left_embedding(hopf.carrier)),
        b_bar.map_coeffs(right_embedding(hopf.carrier)),
    )
    delta_b = b_series.map_coeffs(comultiplication(hopf))
    body = subst_into1(delta_b, inner)
    logger.debug(f"Built canonical extension of {law.name} over {hopf.name} at order {order}")
    return HopfFormalGroup(hopf, law, body, f"G[{law.name}]")
