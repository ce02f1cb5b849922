"""
Exhaustive-enumeration reference for the thermal recursion.

Every partial path from the start node (and, backward, into the end node)
is enumerated and weighted by exp(-sum eps / T) with the start node's own
factor included, exactly as the recursion initializes. Only small lattices
are accepted.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from leadlag.core.errors import ConfigurationError, OracleRefusedError
from leadlag.tops.lattice import Box
from leadlag.tops.types import DistanceMatrix, LatticeNode

MAX_ORACLE_N = 8

Node = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class OracleResult:
    t_values: np.ndarray
    x_values: np.ndarray
    log_z: float


def brute_force_thermal_oracle(
    d: DistanceMatrix, temperature: float, start: LatticeNode, end: LatticeNode
) -> OracleResult:
    if d.n > MAX_ORACLE_N:
        raise OracleRefusedError(f"oracle refuses N={d.n} > {MAX_ORACLE_N} (path count explodes)")
    if not temperature > 0:
        raise ConfigurationError(f"temperature must be positive, got {temperature}")
    box = Box.between(start, end, d.n)
    boltz = np.exp(-d.values / temperature)

    fwd = _enumerate(boltz, (box.a1, box.a2), box, step=1)
    bwd = _enumerate(boltz, (box.b1, box.b2), box, step=-1)

    t_values = np.arange(box.t_start, box.t_end + 1)
    x_values = np.array([(_slice_mean(fwd, t) + _slice_mean(bwd, t)) / 2.0 for t in t_values])
    return OracleResult(t_values=t_values, x_values=x_values, log_z=float(np.log(fwd[(box.b1, box.b2)])))


def _enumerate(boltz: np.ndarray, origin: Node, box: Box, step: int) -> Dict[Node, float]:
    """Sum of path weights over every partial path leaving `origin` in direction `step`."""
    acc: Dict[Node, float] = defaultdict(float)
    stack = [(origin, float(boltz[origin]))]
    while stack:
        (t1, t2), w = stack.pop()
        acc[(t1, t2)] += w
        for n1, n2 in ((t1 + step, t2), (t1, t2 + step), (t1 + step, t2 + step)):
            if box.a1 <= n1 <= box.b1 and box.a2 <= n2 <= box.b2:
                stack.append(((n1, n2), w * boltz[n1, n2]))
    return acc


def _slice_mean(acc: Dict[Node, float], t: int) -> float:
    total = 0.0
    moment = 0.0
    for (t1, t2), w in acc.items():
        if t1 + t2 == t:
            total += w
            moment += (t2 - t1) * w
    return moment / total
