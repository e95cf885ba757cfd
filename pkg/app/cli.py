"""Command-line entry point: one subcommand per tool, reports as JSON and CSV."""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from app.config.env_config import config
from app.errors import PhaseLabError, PhaseSyntaxError
from app.models.experiment_config import COMMANDS, ExperimentConfig
from app.models.report_models import SuiteSummary
from app.tools.registry import get_tool
from app.utils.report_utils import build_envelope, to_json, write_csv, write_json

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phase-lab",
        description="Exact analysis and numerical decay experiments for oscillatory integral operators.",
    )
    parser.add_argument("command", choices=COMMANDS, help="What to run.")
    parser.add_argument("--phase", help="Phase text, e.g. 'x^3*y + x*y^3'.")
    parser.add_argument("--p", help="Lebesgue exponent as p/q (default 2).")
    parser.add_argument("--q", help="Target exponent for pitt and fractional.")
    parser.add_argument("--alpha", help="Frequency-side weight power for pitt.")
    parser.add_argument("--beta", help="Space-side weight power for pitt.")
    parser.add_argument("--a", help="Inner power of the fractional kernel.")
    parser.add_argument("--b", help="Exponent denominator of the fractional kernel.")
    parser.add_argument("--n", type=int, help="Degree for the witness experiment.")
    parser.add_argument("--k", type=int, help="Derivative order for the van der Corput check.")
    parser.add_argument("--n-dim", type=int, dest="n_dim", help="Dimension for the pitt verdict.")
    parser.add_argument("--lambda-lo", type=int, dest="lambda_lo", help="Base-2 exponent of the smallest lambda.")
    parser.add_argument("--lambda-hi", type=int, dest="lambda_hi", help="Base-2 exponent of the largest lambda.")
    parser.add_argument("--steps", type=int, help="Ladder points (one per octave by default).")
    parser.add_argument("--damped", action="store_true", default=None, help="Insert the damping factor in decay runs.")
    parser.add_argument("--res-cap", type=int, dest="res_cap", help=f"Grid count cap per axis (default {config.res_cap}).")
    parser.add_argument("--tol", type=float, help=f"Relative tolerance (default {config.tol:g}).")
    parser.add_argument("--assert", action="store_true", default=None, dest="assertions",
                        help="Exit 3 unless the run matches its expected values.")
    parser.add_argument("--assert-tol", type=float, dest="assert_tol", help="Tolerance for --assert.")
    parser.add_argument("--out", help=f"Output directory (default {config.out_dir}).")
    parser.add_argument("--config", dest="config_file", help="File of key = value lines.")
    parser.add_argument("--seed", type=int, help="Seed for randomized inputs.")
    parser.add_argument("--workers", type=int, help=f"Ladder worker threads (default {config.workers}).")
    return parser


def load_settings(args: argparse.Namespace) -> ExperimentConfig:
    flags = {key: value for key, value in vars(args).items() if key != "config_file"}
    if args.config_file:
        return ExperimentConfig.from_key_value_file(args.config_file, **flags)
    return ExperimentConfig.from_sources(None, flags)


def suite_table(summary: SuiteSummary) -> str:
    width = max(len(row.name) for row in summary.rows) if summary.rows else 4
    lines = [f"{'criterion':<{width}}  result  measured"]
    for row in summary.rows:
        measured = f"{row.measured:.6g}" if row.measured is not None else "-"
        lines.append(f"{row.name:<{width}}  {'PASS' if row.passed else 'FAIL':<6}  {measured}")
    lines.append(f"{summary.passed} passed, {summary.failed} failed")
    return "\n".join(lines)


def run(settings: ExperimentConfig) -> int:
    tool = get_tool(settings.command)
    logger.info(f"Running {tool.name}: {tool.description}")
    report = tool(settings)
    envelope = build_envelope(report, settings.model_dump())
    out_dir = Path(settings.out)
    write_json(out_dir / f"{settings.command}.json", envelope)
    table = tool.csv_table(report)
    if table is not None:
        header, rows = table
        write_csv(out_dir / f"{settings.command}.csv", header, rows)

    if isinstance(report, SuiteSummary):
        print(suite_table(report))
        return 0 if report.failed == 0 else 3
    print(to_json(envelope), end="")
    if settings.assertions:
        tool.assert_report(report, settings)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=config.logging_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        return run(load_settings(args))
    except PhaseSyntaxError as e:
        logger.error(f"Parse error: {e}")
        print(f"error: {e}", file=sys.stderr)
        if e.text is not None:
            print(f"  {e.text}\n  {' ' * e.position}^", file=sys.stderr)
        return e.exit_code
    except PhaseLabError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
