"""
Formal groups over the Hopf algebra: extension conditions, twists by the
powers (n), and the covering series Φ^(n).
"""
from typing import Dict, List, Optional

from src.checks.base import BaseSuite, Cell, equality
from src.fgl.law import FormalGroupLaw
from src.fgl.power_systems import n_series
from src.fgl.validation import require_fgl
from src.hopfext.covering import hopf_hom_discrepancy, phi_n, project
from src.hopfext.extension import (
    CoveringSeries,
    HopfFormalGroup,
    canonical_extension,
    convolve_twists,
    extension_discrepancy,
    identity_covering,
    is_symmetric,
    trivial_extension,
    twist,
    unit_slot_discrepancy,
)
from src.series.power_series import first_difference
from src.services.loader import resolve_hopf, resolve_law, resolve_twist


def _body_difference(left: HopfFormalGroup, right: HopfFormalGroup) -> Optional[str]:
    return first_difference(left.body, right.body)


class ExtensionSuite(BaseSuite):
    """Checks the canonical extension of the selected law by the selected instance."""

    def prepare(self) -> None:
        order = self.job.order
        self.law: FormalGroupLaw = require_fgl(resolve_law(self.job.law, order))
        self.hopf = resolve_hopf(self.job.instance, order, self.law.ring)
        self.b: CoveringSeries = resolve_twist(self.job.twist_file, self.hopf, order)
        self.group = canonical_extension(self.law, self.hopf, self.b)
        self._twists: Dict[int, HopfFormalGroup] = {}
        self.logger.debug(f"Prepared extension of {self.law.name} by {self.hopf.name} at order {order}")

    def twisted(self, n: int) -> HopfFormalGroup:
        if n not in self._twists:
            self._twists[n] = twist(self.group, n)
        return self._twists[n]

    def cells(self) -> List[Cell]:
        group, law, hopf = self.group, self.law, self.hopf
        base = {"law": law.name, "instance": hopf.name, "order": self.job.order}
        span = self.job.span()

        cells = [
            Cell("extension", dict(base), lambda: extension_discrepancy(group)),
            Cell("unit-slots", dict(base), lambda: unit_slot_discrepancy(group)),
            Cell("symmetry", dict(base), lambda: None if is_symmetric(group) else "G(u,v) != σG(v,u)"),
            Cell("twist-identity", dict(base), lambda: _body_difference(self.twisted(1), group)),
            Cell("twist-zero", dict(base), lambda: _body_difference(self.twisted(0), trivial_extension(law, hopf))),
        ]
        for n in span:
            cells.append(Cell("twist-extension", {**base, "n": n}, lambda n=n: extension_discrepancy(self.twisted(n))))
        for m in span:
            for n in span:
                cells.append(Cell(
                    "twist-convolution", {**base, "m": m, "n": n},
                    lambda m=m, n=n: equality(convolve_twists(group, m, n), self.twisted(m + n), _body_difference),
                ))
                cells.append(Cell(
                    "twist-iteration", {**base, "m": m, "n": n},
                    lambda m=m, n=n: equality(twist(self.twisted(m), n), self.twisted(m * n), _body_difference),
                ))
        for n in span:
            cells.append(Cell("covering-hom", {**base, "n": n}, lambda n=n: self._covering(n)))
            cells.append(Cell("covering-projection", {**base, "n": n}, lambda n=n: self._projection(n)))
            cells.append(Cell("trivial-covering", {**base, "n": n}, lambda n=n: self._trivial(n)))
        return cells

    def _covering(self, n: int) -> Optional[str]:
        phi = phi_n(self.law, self.hopf, self.b, n)
        return hopf_hom_discrepancy(phi, self.group, self.twisted(n))

    def _projection(self, n: int) -> Optional[str]:
        phi = phi_n(self.law, self.hopf, self.b, n)
        return first_difference(project(phi), n_series(self.law, n))

    def _trivial(self, n: int) -> Optional[str]:
        # with b = x everything collapses onto the base law
        x = identity_covering(self.hopf, self.law.order)
        trivial = trivial_extension(self.law, self.hopf)
        diff = _body_difference(canonical_extension(self.law, self.hopf, x), trivial)
        if diff:
            return f"b = x does not give the trivial extension: {diff}"
        return hopf_hom_discrepancy(phi_n(self.law, self.hopf, x, n), trivial, trivial)

    def get_suite_name(self) -> str:
        return "hopf extensions"
