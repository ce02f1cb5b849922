from leadlag.tops.calendar import to_calendar_lags
from leadlag.tops.distance import distance_matrix, local_minimal_mapping
from leadlag.tops.dp import dp_optimal_path
from leadlag.tops.ensemble import run_ensemble, temperature_scan, tops_ensemble
from leadlag.tops.lattice import half_width, lattice_nodes, member_nodes
from leadlag.tops.thermal import free_energy, thermal_average_path, thermal_weights
from leadlag.tops.types import (
    DistanceMatrix,
    EnsembleConfig,
    EnsembleResult,
    LatticeNode,
    LeadLagPath,
    ThermalField,
    ThermalPath,
)

__all__ = [
    "DistanceMatrix",
    "EnsembleConfig",
    "EnsembleResult",
    "LatticeNode",
    "LeadLagPath",
    "ThermalField",
    "ThermalPath",
    "distance_matrix",
    "dp_optimal_path",
    "free_energy",
    "half_width",
    "lattice_nodes",
    "local_minimal_mapping",
    "member_nodes",
    "run_ensemble",
    "temperature_scan",
    "thermal_average_path",
    "thermal_weights",
    "to_calendar_lags",
    "tops_ensemble",
]
