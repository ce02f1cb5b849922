"""
Command-line entry point: `leadlag {analyze,stats,bench} ...`.

Exit codes: 0 success, 2 input or configuration error, 3 computation error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from leadlag import __version__
from leadlag.bootstrap import build_registry
from leadlag.core.config import get_settings
from leadlag.core.errors import LeadLagError
from leadlag.core.logger import PACKAGE_LOGGER, clear_run_id, configure_logging, set_run_id
from leadlag.core.registry import CommandRegistry

logger = logging.getLogger(PACKAGE_LOGGER + ".cli")


def build_parser(registry: CommandRegistry) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="leadlag", description="Thermal optimal path lead-lag analysis")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--log-dir", help="directory for the rotating log file; 'none' disables it")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in registry.list_commands():
        command = registry.get(name)
        command.add_arguments(sub.add_parser(name, help=command.help))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    registry = build_registry()
    args = build_parser(registry).parse_args(argv)
    settings = get_settings()

    log_dir = args.log_dir if args.log_dir is not None else settings.log_dir
    configure_logging(
        log_dir=None if str(log_dir).lower() == "none" else log_dir,
        level=args.log_level or settings.log_level,
    )
    rid = set_run_id()
    logger.info("command=%s run_id=%s", args.command, rid)
    try:
        return registry.get(args.command).handler(args)
    except LeadLagError as e:
        logger.error("%s failed (%s): %s", args.command, type(e).__name__, e)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    finally:
        clear_run_id()


if __name__ == "__main__":
    sys.exit(main())
