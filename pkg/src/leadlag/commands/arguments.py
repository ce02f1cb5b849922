"""Flag groups shared by the subcommands. Unset flags stay None so settings fill them."""

from __future__ import annotations

import argparse
from pathlib import Path

from leadlag.commands.run_config import parse_phase_breaks, parse_temperatures


def add_input_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("inputs")
    group.add_argument("--vix", type=Path, help="spot CSV: date,close")
    group.add_argument("--futures", type=Path, help="futures CSV: date,contract,expiry,close,settle,volume")


def add_tops_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("thermal optimal path")
    group.add_argument("--temperature", type=float, help="path temperature T (default 2)")
    group.add_argument("--margin", type=int, help="largest ensemble start offset M (default 30)")
    group.add_argument("--workers", type=int, help="processes for the ensemble (default: CPU count)")


def add_output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, help="output directory (default ./out)")


def add_analyze_arguments(parser: argparse.ArgumentParser) -> None:
    add_input_arguments(parser)
    parser.add_argument(
        "--price-field",
        choices=("close", "settle", "both"),
        help="futures price used for splicing; both writes one output set per series",
    )
    add_tops_arguments(parser)
    parser.add_argument(
        "--temperatures",
        type=parse_temperatures,
        help="comma-separated temperatures for an extra robustness scan, e.g. 0.5,1,1.5,2",
    )
    group = parser.add_argument_group("self-consistency")
    group.add_argument("--window", type=int, help="rolling regression window w (default 20)")
    group.add_argument("--sweep-windows", action="store_true", help="also run every window size from 5 to 60")
    group.add_argument("--alpha", type=float, help="significance level (default 0.05)")
    parser.add_argument(
        "--phases",
        type=parse_phase_breaks,
        help="comma-separated phase break dates (default 2006-02-24,2009-01-29)",
    )
    add_output_arguments(parser)


def add_stats_arguments(parser: argparse.ArgumentParser) -> None:
    add_input_arguments(parser)
    add_output_arguments(parser)


def add_bench_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("scenarios", type=Path, help="scenario JSON file")
    add_tops_arguments(parser)
    parser.add_argument("--seed", type=int, help="seed offset added to every scenario seed (default 0)")
    add_output_arguments(parser)
