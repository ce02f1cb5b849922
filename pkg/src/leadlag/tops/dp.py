from __future__ import annotations

import logging
from typing import List, Tuple

import numpy as np

from leadlag.tops.lattice import Box, shifted
from leadlag.tops.types import DistanceMatrix, LatticeNode

logger = logging.getLogger(__name__)

# predecessor order doubles as the tie-break preference
_DIAGONAL, _HORIZONTAL, _VERTICAL = 0, 1, 2


def dp_optimal_path(d: DistanceMatrix, start: LatticeNode, end: LatticeNode) -> Tuple[List[LatticeNode], float]:
    """
    Minimum-energy path from start to end; energy sums eps over every node
    visited, start and end included. Moves: (t1+1, t2) horizontal,
    (t1, t2+1) vertical, (t1+1, t2+1) diagonal. Ties prefer diagonal, then
    horizontal.
    """
    box = Box.between(start, end, d.n)
    eps = d.values

    costs: List[np.ndarray] = []
    choices: List[np.ndarray] = []
    los: List[int] = []
    for k, t in enumerate(range(box.t_start, box.t_end + 1)):
        lo, hi = box.t1_range(t)
        t1 = np.arange(lo, hi + 1)
        local = eps[t1, t - t1]
        if k == 0:
            cost = local.astype(float)
            choice = np.full(t1.size, -1, dtype=np.int8)
        else:
            diag = shifted(costs[k - 2], los[k - 2], t1 - 1, np.inf) if k >= 2 else np.full(t1.size, np.inf)
            horiz = shifted(costs[k - 1], los[k - 1], t1 - 1, np.inf)
            vert = shifted(costs[k - 1], los[k - 1], t1, np.inf)
            stacked = np.vstack([diag, horiz, vert])
            choice = np.argmin(stacked, axis=0).astype(np.int8)
            cost = stacked[choice, np.arange(t1.size)] + local
        costs.append(cost)
        choices.append(choice)
        los.append(lo)

    path = [end]
    t1, t2 = end.t1, end.t2
    k = len(costs) - 1
    energy = float(costs[k][t1 - los[k]])
    while k > 0:
        move = choices[k][t1 - los[k]]
        if move == _DIAGONAL:
            t1, t2, k = t1 - 1, t2 - 1, k - 2
        elif move == _HORIZONTAL:
            t1, k = t1 - 1, k - 1
        else:
            t2, k = t2 - 1, k - 1
        path.append(LatticeNode.at(t1, t2))
    path.reverse()
    logger.debug("dp path start=%s end=%s steps=%d energy=%.6g", start, end, len(path) - 1, energy)
    return path, energy
