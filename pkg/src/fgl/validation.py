"""
Axiom checks for formal group laws.
"""
import logging

from src.algebra.errors import InvalidFormalGroupLawError
from src.algebra.polynomial import PolyElement
from src.fgl.law import FormalGroupLaw
from src.models.validation import AxiomCheck, ValidationReport
from src.series.power_series import PowerSeries, Series1, first_difference, substitute

logger = logging.getLogger(__name__)


def _unit_check(name: str, restricted: Series1, law: FormalGroupLaw, variable: str) -> AxiomCheck:
    expected = Series1.x(law.ring, law.order)
    diff = first_difference(restricted, expected)
    if diff is None:
        return AxiomCheck(name, True)
    # report against the two-variable monomial rather than the restriction
    for k in range(1, law.order + 1):
        got = restricted.coeff(k)
        want = PolyElement.one(law.ring) if k == 1 else PolyElement.zero(law.ring)
        if got != want:
            mono = variable if k == 1 else f"{variable}^{k}"
            return AxiomCheck(name, False, f"coefficient of {mono}: expected {want}, got {got}")
    return AxiomCheck(name, False, diff)


def associativity_sides(law: FormalGroupLaw):
    """F(F(x,y),z) and F(x,F(y,z)) in a three-variable scratch expansion."""
    ring, order = law.ring, law.order
    x, y, z = (PowerSeries.variable(ring, order, 3, i) for i in range(3))
    left = substitute(law.series, [substitute(law.series, [x, y]), z])
    right = substitute(law.series, [x, substitute(law.series, [y, z])])
    return left, right


def validate_fgl(law: FormalGroupLaw) -> ValidationReport:
    """Unit, commutativity and associativity axioms to the law's order."""
    checks = [
        _unit_check("unit-left", law.series.restrict_v_zero(), law, "u"),
        _unit_check("unit-right", law.series.restrict_u_zero(), law, "v"),
    ]

    diff = first_difference(law.series, law.series.swap())
    checks.append(AxiomCheck("commutativity", diff is None, diff or ""))

    left, right = associativity_sides(law)
    diff = first_difference(left, right)
    checks.append(AxiomCheck("associativity", diff is None, diff or ""))

    report = ValidationReport(law.name, checks)
    logger.debug(f"Validated {law.name} at order {law.order}: {'pass' if report.passed else 'FAIL'}")
    return report


def require_fgl(law: FormalGroupLaw) -> FormalGroupLaw:
    """Return `law` unchanged, or raise InvalidFormalGroupLawError naming the failed axioms."""
    report = validate_fgl(law)
    if not report.passed:
        raise InvalidFormalGroupLawError(
            f"{law.name} is not a formal group law: {'; '.join(str(check) for check in report.failures())}"
        )
    return law
