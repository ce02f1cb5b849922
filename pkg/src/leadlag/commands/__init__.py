from leadlag.commands.analyze import cmd_analyze
from leadlag.commands.bench import cmd_bench
from leadlag.commands.outputs import OutputWriter
from leadlag.commands.phases import phase_summary
from leadlag.commands.run_config import RunConfig
from leadlag.commands.stats import cmd_stats

__all__ = ["OutputWriter", "RunConfig", "cmd_analyze", "cmd_bench", "cmd_stats", "phase_summary"]
