from __future__ import annotations

import argparse
import logging

from leadlag.commands.outputs import OutputWriter
from leadlag.commands.run_config import RunConfig
from leadlag.core.config import get_settings
from leadlag.synthetic.bench import run_bench
from leadlag.synthetic.scenarios import load_scenarios

logger = logging.getLogger(__name__)


def cmd_bench(config: RunConfig) -> int:
    """Run every scenario in the file and write bench_report.csv."""
    config.require("scenarios")
    scenarios = load_scenarios(config.scenarios)
    if config.seed:
        scenarios = [s.model_copy(update={"seed": s.seed + config.seed}) for s in scenarios]
    logger.info("bench: %d scenario(s) from %s", len(scenarios), config.scenarios)

    with OutputWriter(config.out, config.header("bench")) as out:
        report = run_bench(scenarios, config.ensemble())
        out.table("bench_report.csv", report)

    for row in report.itertuples(index=False):
        if row.kind == "oracle":
            print(f"{row.scenario}: oracle agreement {row.status} (max |diff| = {row.oracle_max_abs_diff:.3g})")
        else:
            print(f"{row.scenario}: rmse={row.rmse:.4f} switch_latency={row.switch_latency}")
    print(f"{len(report)} scenario(s); report written to {config.out / 'bench_report.csv'}")
    return 0


def handle(args: argparse.Namespace) -> int:
    return cmd_bench(RunConfig.from_args(args, get_settings()))
