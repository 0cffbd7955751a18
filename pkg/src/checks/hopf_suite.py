"""
Hopf algebra identities: axioms, antipode laws, the convolution group of the
powers (n) and their compatibility with Δ and composition.
"""
from typing import Dict, List, Optional

from src.algebra.morphism import AlgebraMorphism
from src.checks.base import BaseSuite, Cell
from src.hopf.convolution import (
    antipode,
    compose,
    conv_power,
    convolution,
    is_coalgebra_morphism,
    morphism_difference,
)
from src.hopf.descriptor import HopfDescriptor, identity, unit_counit
from src.hopf.validation import validate_hopf
from src.services.loader import resolve_hopf


class HopfSuite(BaseSuite):
    """Checks the selected Hopf instance at the job's order."""

    def prepare(self) -> None:
        self.hopf: HopfDescriptor = resolve_hopf(self.job.instance, self.job.order)
        self._powers: Dict[int, AlgebraMorphism] = {}
        self.logger.debug(f"Prepared {self.hopf}")

    def power(self, n: int) -> AlgebraMorphism:
        # cells may race to fill the cache; values are identical
        if n not in self._powers:
            self._powers[n] = conv_power(self.hopf, n)
        return self._powers[n]

    def cells(self) -> List[Cell]:
        hopf = self.hopf
        base = {"instance": hopf.name, "order": self.job.order}
        span = self.job.span()
        cells = [
            Cell("hopf-axioms", dict(base), self._axioms),
            Cell("antipode-left", dict(base),
                 lambda: morphism_difference(convolution(antipode(hopf), identity(hopf), hopf), unit_counit(hopf))),
            Cell("antipode-right", dict(base),
                 lambda: morphism_difference(convolution(identity(hopf), antipode(hopf), hopf), unit_counit(hopf))),
            Cell("graded-antipode", dict(base), lambda: antipode(hopf).grading_discrepancy()),
        ]
        for n in span:
            cells.append(Cell("graded-power", {**base, "n": n}, lambda n=n: self.power(n).grading_discrepancy()))
        for m in span:
            for n in span:
                cells.append(Cell(
                    "convolution-group", {**base, "m": m, "n": n},
                    lambda m=m, n=n: morphism_difference(
                        convolution(self.power(m), self.power(n), hopf), self.power(m + n)
                    ),
                ))
        if hopf.cocommutative:
            for n in span:
                cells.append(Cell(
                    "coalgebra-morphism", {**base, "n": n},
                    lambda n=n: None if is_coalgebra_morphism(hopf, self.power(n)) else f"Δ∘({n}) != (({n})⊗({n}))∘Δ",
                ))
            for m in span:
                for n in span:
                    cells.append(Cell(
                        "power-composition", {**base, "m": m, "n": n},
                        lambda m=m, n=n: morphism_difference(compose(self.power(n), self.power(m)), conv_power(hopf, m * n)),
                    ))
        return cells

    def _axioms(self) -> Optional[str]:
        report = validate_hopf(self.hopf)
        return None if report.passed else "; ".join(str(check) for check in report.failures())

    def get_suite_name(self) -> str:
        return "hopf algebra"
