from leadlag.commands import analyze, bench, stats
from leadlag.commands.arguments import add_analyze_arguments, add_bench_arguments, add_stats_arguments
from leadlag.core.registry import Command, CommandRegistry


def build_registry() -> CommandRegistry:
    registry = CommandRegistry()

    registry.register(
        Command(
            name="analyze",
            help="lead-lag path, self-consistency test and phase statistics for spot vs futures",
            add_arguments=add_analyze_arguments,
            handler=analyze.handle,
        )
    )
    registry.register(
        Command(
            name="stats",
            help="summary statistics, normality and unit-root tests, correlations",
            add_arguments=add_stats_arguments,
            handler=stats.handle,
        )
    )
    registry.register(
        Command(
            name="bench",
            help="synthetic lag-recovery and oracle benchmark",
            add_arguments=add_bench_arguments,
            handler=bench.handle,
        )
    )

    return registry
