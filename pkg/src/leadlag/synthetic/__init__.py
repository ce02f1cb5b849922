from leadlag.synthetic.bench import oracle_max_abs_diff, run_bench, run_scenario
from leadlag.synthetic.generator import LaggedPair, generate_lagged_pair, random_distance_matrix
from leadlag.synthetic.oracle import OracleResult, brute_force_thermal_oracle
from leadlag.synthetic.scenarios import BenchScenarioFile, LagScenario, load_scenarios
from leadlag.synthetic.scoring import RecoveryScore, central_median, recovery_score

__all__ = [
    "BenchScenarioFile",
    "LagScenario",
    "LaggedPair",
    "OracleResult",
    "RecoveryScore",
    "brute_force_thermal_oracle",
    "central_median",
    "generate_lagged_pair",
    "load_scenarios",
    "oracle_max_abs_diff",
    "random_distance_matrix",
    "recovery_score",
    "run_bench",
    "run_scenario",
]
