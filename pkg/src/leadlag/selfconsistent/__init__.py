from leadlag.selfconsistent.rolling import (
    lagged_alignment,
    mark_significance,
    rolling_self_consistent_test,
    window_sweep,
)
from leadlag.selfconsistent.types import AlignedPairs, SelfConsistencyReport, WindowSweep

__all__ = [
    "AlignedPairs",
    "SelfConsistencyReport",
    "WindowSweep",
    "lagged_alignment",
    "mark_significance",
    "rolling_self_consistent_test",
    "window_sweep",
]
