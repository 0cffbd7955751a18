"""
Structural checks for Hopf descriptors.
"""
import logging
from typing import Callable, Optional

from src.algebra.morphism import (
    AlgebraMorphism,
    apply_map,
    from_slot_images,
    left_embedding,
    right_embedding,
    slot_embedding,
    slot_shift,
)
from src.algebra.ring import Generator
from src.hopf.descriptor import HopfDescriptor, comultiplication, identity
from src.models.validation import AxiomCheck, ValidationReport

logger = logging.getLogger(__name__)


def _first_failure(hopf: HopfDescriptor, holds: Callable[[Generator], Optional[str]]) -> Optional[str]:
    for gen in hopf.generators:
        problem = holds(gen)
        if problem:
            return f"{gen.name}: {problem}"
    return None


def _swap(hopf: HopfDescriptor) -> AlgebraMorphism:
    return from_slot_images(hopf.tensor_square, hopf.tensor_square, {
        0: right_embedding(hopf.carrier),
        1: left_embedding(hopf.carrier),
    })


def is_cocommutative(hopf: HopfDescriptor) -> bool:
    swap = _swap(hopf)
    return all(apply_map(hopf.diagonal(gen), swap) == hopf.diagonal(gen) for gen in hopf.generators)


def validate_hopf(hopf: HopfDescriptor) -> ValidationReport:
    """Connectedness, gradedness, counit laws, coassociativity and the cocommutativity flag.

    counit-left keeps the left factor, (id⊗ε)Δ(g) = g; counit-right keeps the
    right factor, (ε⊗id)Δ(g) = g.
    """
    carrier, tensor = hopf.carrier, hopf.tensor_square
    checks = []

    def connected(gen):
        constant = hopf.diagonal(gen).constant_term()
        return f"Δ has constant term {constant}" if constant else None

    problem = _first_failure(hopf, connected)
    checks.append(AxiomCheck("connectedness", problem is None, problem or ""))

    def graded(gen):
        diagonal = hopf.diagonal(gen)
        return None if diagonal.is_homogeneous(gen.weight) else f"Δ not homogeneous of weight {gen.weight}: {diagonal}"

    problem = _first_failure(hopf, graded)
    checks.append(AxiomCheck("graded", problem is None, problem or ""))

    for name, keep in (("counit-left", 0), ("counit-right", 1)):
        collapse = from_slot_images(tensor, carrier, {keep: identity(hopf)})

        def counit_law(gen, collapse=collapse):
            got = apply_map(hopf.diagonal(gen), collapse)
            return None if got == identity(hopf).image(gen) else f"got {got}"

        problem = _first_failure(hopf, counit_law)
        checks.append(AxiomCheck(name, problem is None, problem or ""))

    cube = carrier.tensor_power(3)
    delta = comultiplication(hopf)
    delta_then_id = from_slot_images(tensor, cube, {
        0: delta.then(slot_shift(tensor, cube, 0)),
        1: slot_embedding(carrier, 2, 3),
    })
    id_then_delta = from_slot_images(tensor, cube, {
        0: slot_embedding(carrier, 0, 3),
        1: delta.then(slot_shift(tensor, cube, 1)),
    })

    def coassociative(gen):
        left = apply_map(hopf.diagonal(gen), delta_then_id)
        right = apply_map(hopf.diagonal(gen), id_then_delta)
        return None if left == right else f"(Δ⊗id)Δ = {left} but (id⊗Δ)Δ = {right}"

    problem = _first_failure(hopf, coassociative)
    checks.append(AxiomCheck("coassociativity", problem is None, problem or ""))

    actual = is_cocommutative(hopf)
    checks.append(AxiomCheck(
        "cocommutativity-flag",
        actual == hopf.cocommutative,
        "" if actual == hopf.cocommutative else f"declared {hopf.cocommutative}, actual {actual}",
    ))

    checks.append(AxiomCheck("antipode", hopf._antipode is not None, hopf._antipode_error or ""))

    report = ValidationReport(hopf.name, checks)
    logger.debug(f"Validated Hopf descriptor {hopf.name}: {'pass' if report.passed else 'FAIL'}")
    return report
