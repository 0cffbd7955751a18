"""
Homomorphisms of formal groups over a Hopf algebra and the covering series Φ^(n).
"""
import logging
from typing import Optional

from src.algebra.errors import DescriptorMismatchError, NonMonicSeriesError, RingMismatchError
from src.algebra.morphism import left_embedding, right_embedding, scalar_embedding
from src.fgl.law import FormalGroupLaw
from src.fgl.power_systems import n_series
from src.hopf.convolution import conv_power
from src.hopf.descriptor import HopfDescriptor, comultiplication, counit
from src.hopfext.extension import CoveringSeries, HopfFormalGroup, truncated_law
from src.series.power_series import Series1, compose1, first_difference, reversion, subst2, subst_into1

logger = logging.getLogger(__name__)


def hopf_hom_sides(phi: CoveringSeries, source: HopfFormalGroup, target: HopfFormalGroup):
    """(ΔΦ)(G1(u, v)) and G2(Φ(u)⊗1, 1⊗Φ(v))."""
    hopf = phi.hopf
    if source.hopf != hopf or target.hopf != hopf:
        raise DescriptorMismatchError("covering series and formal groups must share one Hopf descriptor")
    if not phi.order == source.order == target.order:
        raise DescriptorMismatchError(
            f"truncation orders differ: Φ {phi.order}, source {source.order}, target {target.order}"
        )
    lhs = subst_into1(phi.series.map_coeffs(comultiplication(hopf)), source.body)
    rhs = subst2(
        target.body,
        phi.series.map_coeffs(left_embedding(hopf.carrier)),
        phi.series.map_coeffs(right_embedding(hopf.carrier)),
    )
    return lhs, rhs


def hopf_hom_discrepancy(phi: CoveringSeries, source: HopfFormalGroup, target: HopfFormalGroup) -> Optional[str]:
    lhs, rhs = hopf_hom_sides(phi, source, target)
    return first_difference(lhs, rhs)


def is_hopf_hom(phi: CoveringSeries, source: HopfFormalGroup, target: HopfFormalGroup) -> bool:
    """Φ is a homomorphism source -> target of formal groups over H."""
    return hopf_hom_discrepancy(phi, source, target) is None


def project(phi: CoveringSeries) -> Series1:
    """ε(Φ), the base-ring series Φ covers."""
    return phi.series.map_coeffs(counit(phi.hopf))


def phi_n(law: FormalGroupLaw, hopf: HopfDescriptor, b: CoveringSeries, n: int) -> CoveringSeries:
    """Φ^(n)(x) = ((n)b)(φ^(n)(b̄(x))).

    Covers φ^(n) and maps canonical_extension(law, hopf, b) to its n-th twist.
    """
    if b.hopf != hopf:
        raise RingMismatchError(f"twist series belongs to {b.hopf.name}, not {hopf.name}")
    if not b.is_monic():
        raise NonMonicSeriesError(f"twist series must start with x, got linear coefficient {b.series.linear_coefficient}")
    order = min(law.order, b.order)
    law = truncated_law(law, order)
    b_series = b.series.with_order(order)

    power = n_series(law, n).map_coeffs(scalar_embedding(law.ring, hopf.carrier))
    twisted_b = b_series.map_coeffs(conv_power(hopf, n))
    series = compose1(twisted_b, compose1(power, reversion(b_series)))
    logger.debug(f"Built Φ^({n}) over {hopf.name} at order {order}")
    return CoveringSeries(hopf, series)
