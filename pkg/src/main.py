"""
Main orchestrator for the formal group law toolkit.
Parses the command line, runs computations or verification suites, and
writes the report to stdout.
"""
import argparse
import asyncio
import logging
import sys
from typing import List, Optional

from src.algebra.errors import AlgebraError, DescriptorError
from src.commands import CommandResult, cmd_ext, cmd_fgl, cmd_hopf, cmd_verify
from src.config import Config
from src.models.job import Command, JobConfig, OutputFormat
from src.services.report import ReportService
from src.utils.logger import setup_logging

VERBS = {
    "fgl": ["n-series", "inverse", "validate", "show"],
    "hopf": ["antipode", "power", "validate"],
    "ext": ["build", "twist", "phi", "verify"],
    "verify": ["all"],
}


def build_parser(config: Config) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=config.DEFAULT_ORDER, help="truncation order N")
    common.add_argument("--n", type=int, default=1, help="integer n for powers, twists and covering series")
    common.add_argument("--range", type=int, default=3, help="verify n, m over -range..range")
    common.add_argument("--law", default=config.DEFAULT_LAW, help="built-in law name or law file")
    common.add_argument("--instance", default=config.DEFAULT_INSTANCE, help="built-in Hopf instance or descriptor file")
    common.add_argument("--b", dest="twist_file", default=None, help="twist series file (default x + b1 x^2 + ...)")
    common.add_argument("--format", choices=[fmt.value for fmt in OutputFormat],
                        default=config.OUTPUT_FORMAT, help="human table or structured records")

    parser = argparse.ArgumentParser(
        prog="fglh",
        description="Exact formal group laws, Hopf algebras and formal groups over Hopf algebras.",
    )
    groups = parser.add_subparsers(dest="group", required=True)
    for group, verbs in VERBS.items():
        sub = groups.add_parser(group, help=f"{group} commands")
        actions = sub.add_subparsers(dest="verb", required=True)
        for verb in verbs:
            actions.add_parser(verb, parents=[common])
    return parser


def job_from_args(args: argparse.Namespace, config: Config) -> JobConfig:
    return JobConfig(
        command=Command(f"{args.group} {args.verb}"),
        order=args.order,
        n=args.n,
        range=args.range,
        law=args.law,
        instance=args.instance,
        twist_file=args.twist_file,
        output_format=OutputFormat(args.format),
        concurrent=config.CONCURRENT,
    )


async def run(job: JobConfig) -> CommandResult:
    group = job.command.group
    if group == "fgl":
        return cmd_fgl(job)
    if group == "hopf":
        return cmd_hopf(job)
    if job.command in (Command.EXT_VERIFY, Command.VERIFY_ALL):
        return await cmd_verify(job)
    return cmd_ext(job)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit status."""
    # Load configuration
    config = Config.from_env()

    # Setup logging
    setup_logging(config.LOG_LEVEL, config.LOG_DIR)
    logger = logging.getLogger("main")

    # Validate configuration
    problems = config.validate()
    if problems:
        logger.error(f"Invalid configuration: {'; '.join(problems)}")
        return 2

    args = build_parser(config).parse_args(argv)
    job = job_from_args(args, config)
    problems = job.validate(config.MAX_ORDER)
    if problems:
        for problem in problems:
            logger.error(problem)
            print(f"error: {problem}", file=sys.stderr)
        return 2

    logger.info("=" * 50)
    logger.info(f"{job.command.value} (order {job.order})")
    logger.info("=" * 50)

    try:
        # Step 1: Compute
        logger.info("Step 1: Computing...")
        result = asyncio.run(run(job))

        # Step 2: Report
        logger.info(f"Step 2: Writing {len(result.records)} records...")
        ReportService(job.output_format).deliver(result.records, result.title)

    except DescriptorError as e:
        logger.error(f"Could not load descriptor: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1
    except AlgebraError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1

    if not result.ok:
        logger.error("Some checks failed")
        return 1
    logger.info("Done.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
