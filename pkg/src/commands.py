"""
Command implementations: each turns a JobConfig into a titled list of records.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List

from src.algebra.morphism import AlgebraMorphism
from src.checks.base import BaseSuite
from src.checks.extension_suite import ExtensionSuite
from src.checks.fgl_suite import FormalGroupSuite
from src.checks.hopf_suite import HopfSuite
from src.fgl.law import logarithm
from src.fgl.power_systems import inverse_series, n_series
from src.fgl.validation import validate_fgl
from src.hopf.convolution import antipode, conv_power
from src.hopf.descriptor import HopfDescriptor
from src.hopf.validation import validate_hopf
from src.hopfext.covering import phi_n, project
from src.hopfext.extension import (
    canonical_extension,
    extension_discrepancy,
    twist,
    unit_slot_discrepancy,
)
from src.models.job import Command, JobConfig, OutputFormat
from src.models.record import CheckRecord, Status
from src.models.validation import ValidationReport
from src.series.power_series import PowerSeries
from src.services.loader import resolve_hopf, resolve_law, resolve_twist
from src.utils.formatting import format_exponent, format_poly, format_series

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """What a command prints; `ok` decides the exit status."""

    title: str
    records: List[CheckRecord] = field(default_factory=list)
    ok: bool = True


def series_records(label: str, params: Dict, series: PowerSeries, job: JobConfig) -> List[CheckRecord]:
    """One table line, or one record per coefficient with p/q rationals."""
    if job.output_format is OutputFormat.RECORDS:
        return [
            CheckRecord(label, {**params, "term": format_exponent(exponents)}, Status.VALUE, text)
            for exponents, text in series.to_records()
        ]
    return [CheckRecord(label, params, Status.VALUE, format_series(series))]


def morphism_records(label: str, params: Dict, hopf: HopfDescriptor, f: AlgebraMorphism,
                     job: JobConfig) -> List[CheckRecord]:
    exact = job.output_format is OutputFormat.RECORDS
    return [
        CheckRecord(f"{label}({gen.name})", params, Status.VALUE, format_poly(f.image(gen), exact))
        for gen in hopf.generators
    ]


def report_records(report: ValidationReport, params: Dict) -> List[CheckRecord]:
    return [CheckRecord.verdict(check.name, params, check.passed, check.detail) for check in report.checks]


def _verdict(discrepancy):
    return discrepancy is None, discrepancy or ""


def cmd_fgl(job: JobConfig) -> CommandResult:
    law = resolve_law(job.law, job.order)
    params = {"law": law.name, "order": job.order}
    report = validate_fgl(law)
    if job.command is Command.FGL_VALIDATE or not report.passed:
        if not report.passed:
            logger.error(f"{law.name} is not a formal group law: {'; '.join(str(c) for c in report.failures())}")
        return CommandResult(f"Axioms of {law.name}", report_records(report, params), report.passed)

    if job.command is Command.FGL_N_SERIES:
        records = series_records(f"phi^({job.n})(x)", {**params, "n": job.n}, n_series(law, job.n), job)
        return CommandResult(f"{job.n}-series of {law.name}", records)
    if job.command is Command.FGL_INVERSE:
        return CommandResult(f"Inverse series of {law.name}", series_records("theta(x)", params, inverse_series(law), job))
    if job.command is Command.FGL_SHOW:
        records = series_records("F(u,v)", params, law.series, job)
        records += series_records("log(x)", params, logarithm(law), job)
        return CommandResult(f"Formal group law {law.name}", records)
    raise ValueError(f"not an fgl command: {job.command.value}")


def cmd_hopf(job: JobConfig) -> CommandResult:
    hopf = resolve_hopf(job.instance, job.order)
    params = {"instance": hopf.name, "order": job.order}
    report = validate_hopf(hopf)
    if job.command is Command.HOPF_VALIDATE or not report.passed:
        if not report.passed:
            logger.error(f"{hopf.name} is not a valid Hopf descriptor: {'; '.join(str(c) for c in report.failures())}")
        return CommandResult(f"Axioms of {hopf.name}", report_records(report, params), report.passed)

    if job.command is Command.HOPF_ANTIPODE:
        return CommandResult(f"Antipode of {hopf.name}", morphism_records("S", params, hopf, antipode(hopf), job))
    if job.command is Command.HOPF_POWER:
        records = morphism_records(f"({job.n})", {**params, "n": job.n}, hopf, conv_power(hopf, job.n), job)
        return CommandResult(f"Convolution power ({job.n}) on {hopf.name}", records)
    raise ValueError(f"not a hopf command: {job.command.value}")


def cmd_ext(job: JobConfig) -> CommandResult:
    law = resolve_law(job.law, job.order)
    law_report = validate_fgl(law)
    if not law_report.passed:
        logger.error(f"{law.name} is not a formal group law: {'; '.join(str(c) for c in law_report.failures())}")
        return CommandResult(f"Axioms of {law.name}", report_records(law_report, {"law": law.name, "order": job.order}), False)
    hopf = resolve_hopf(job.instance, job.order, law.ring)
    report = validate_hopf(hopf)
    params = {"law": law.name, "instance": hopf.name, "order": job.order}
    if not report.passed:
        logger.error(f"{hopf.name} is not a valid Hopf descriptor")
        return CommandResult(f"Axioms of {hopf.name}", report_records(report, params), False)

    b = resolve_twist(job.twist_file, hopf, job.order)
    group = canonical_extension(law, hopf, b)

    if job.command is Command.EXT_BUILD:
        records = series_records("G(u,v)", params, group.body, job)
        records.append(CheckRecord.verdict("extension", params, *_verdict(extension_discrepancy(group))))
        records.append(CheckRecord.verdict("unit-slots", params, *_verdict(unit_slot_discrepancy(group))))
        ok = not any(record.failed for record in records)
        return CommandResult(f"Canonical extension of {law.name} by {hopf.name}", records, ok)
    if job.command is Command.EXT_TWIST:
        params = {**params, "n": job.n}
        return CommandResult(
            f"Twist ({job.n}) of the canonical extension",
            series_records(f"G^({job.n})(u,v)", params, twist(group, job.n).body, job),
        )
    if job.command is Command.EXT_PHI:
        params = {**params, "n": job.n}
        phi = phi_n(law, hopf, b, job.n)
        records = series_records(f"Phi^({job.n})(x)", params, phi.series, job)
        records += series_records(f"eps(Phi^({job.n}))(x)", params, project(phi), job)
        return CommandResult(f"Covering series Phi^({job.n})", records)
    raise ValueError(f"not an ext command: {job.command.value}")


def suites_for(job: JobConfig) -> List[BaseSuite]:
    if job.command is Command.EXT_VERIFY:
        return [ExtensionSuite(job)]
    return [FormalGroupSuite(job), HopfSuite(job), ExtensionSuite(job)]


async def cmd_verify(job: JobConfig) -> CommandResult:
    """Every identity in the selected suites; ok iff all pass."""
    records: List[CheckRecord] = []
    for suite in suites_for(job):
        logger.info(f"  - Running {suite.get_suite_name()} checks...")
        records.extend(await suite.collect())
    failed = [record for record in records if record.failed]
    if failed:
        first = failed[0]
        logger.error(f"{len(failed)} identities failed; first: {first} {first.detail}")
    return CommandResult(f"Verification at order {job.order}, range {job.range}", records, not failed)
