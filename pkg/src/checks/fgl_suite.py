"""
Formal group law identities: axioms, power systems, inverse series and the
binomial closed form of the multiplicative law.
"""
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple

from src.algebra.ring import RATIONALS
from src.checks.base import BaseSuite, Cell
from src.fgl.law import LAWS, FormalGroupLaw, from_logarithm, law_by_name, logarithm
from src.fgl.power_systems import fgl_hom_discrepancy, formal_sum, inverse_series, n_series
from src.fgl.validation import validate_fgl
from src.series.power_series import Series1, compose1, first_difference
from src.services.loader import resolve_law


def binomial_series(n: int, order: int) -> Series1:
    """(1 + x)^n - 1 through generalized binomial coefficients."""
    coeffs = {}
    for k in range(1, order + 1):
        numerator = 1
        for i in range(k):
            numerator *= n - i
        coeffs[k] = Fraction(numerator, factorial(k))
    return Series1.from_scalars(RATIONALS, order, coeffs)


class FormalGroupSuite(BaseSuite):
    """Checks every built-in law, plus a law loaded from file when one is selected."""

    def prepare(self) -> None:
        order = self.job.order
        self.laws: List[FormalGroupLaw] = [law_by_name(name, order) for name in sorted(LAWS)]
        if self.job.law not in LAWS:
            self.laws.append(resolve_law(self.job.law, order))
        self.powers: Dict[Tuple[str, int], Series1] = {}
        reach = 2 * self.job.range
        for law in self.laws:
            for n in range(-reach, reach + 1):
                self.powers[(law.name, n)] = n_series(law, n)
        self.logger.debug(f"Prepared power systems for {len(self.laws)} laws up to |n| = {reach}")

    def cells(self) -> List[Cell]:
        cells = []
        order = self.job.order
        span = self.job.span()
        for law in self.laws:
            base = {"law": law.name, "order": order}
            cells.append(Cell("fgl-axioms", dict(base), lambda law=law: self._axioms(law)))
            cells.append(Cell("inverse-series", dict(base), lambda law=law: self._inverse(law)))
            cells.append(Cell("logarithm", dict(base), lambda law=law: self._logarithm(law)))
            for n in span:
                cells.append(Cell(
                    "n-series-endomorphism", {**base, "n": n},
                    lambda law=law, n=n: fgl_hom_discrepancy(self.powers[(law.name, n)], law, law),
                ))
            for m in span:
                for n in span:
                    cells.append(Cell(
                        "n-series-addition", {**base, "m": m, "n": n},
                        lambda law=law, m=m, n=n: self._addition(law, m, n),
                    ))
            if law.name == "multiplicative":
                for n in span:
                    cells.append(Cell(
                        "binomial-closed-form", {**base, "n": n},
                        lambda n=n: first_difference(self.powers[("multiplicative", n)], binomial_series(n, order)),
                    ))
        return cells

    def _axioms(self, law: FormalGroupLaw) -> Optional[str]:
        report = validate_fgl(law)
        return None if report.passed else "; ".join(str(check) for check in report.failures())

    def _inverse(self, law: FormalGroupLaw) -> Optional[str]:
        theta = inverse_series(law)
        x = Series1.x(law.ring, law.order)
        diff = first_difference(formal_sum(law, x, theta), Series1.zero1(law.ring, law.order))
        if diff:
            return f"F(x, θ(x)) != 0: {diff}"
        diff = first_difference(compose1(theta, theta), x)
        return f"θ(θ(x)) != x: {diff}" if diff else None

    def _logarithm(self, law: FormalGroupLaw) -> Optional[str]:
        rebuilt = from_logarithm(logarithm(law), law.name)
        return first_difference(rebuilt.series, law.series)

    def _addition(self, law: FormalGroupLaw, m: int, n: int) -> Optional[str]:
        total = formal_sum(law, self.powers[(law.name, m)], self.powers[(law.name, n)])
        return first_difference(total, self.powers[(law.name, m + n)])

    def get_suite_name(self) -> str:
        return "formal group laws"
