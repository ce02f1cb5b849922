"""
Minimum-free-energy ensemble over start/end offsets.

Member (i1, i2) runs from (t1=i1, t2=i2) to (t1=N-1-i1, t2=N-1-i2) for
i1, i2 in 0..M. Each member is independent; with workers > 1 they are
spread over a process pool whose initializer installs the distance matrix
once per process.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from leadlag.core.errors import ConfigurationError
from leadlag.core.logger import log_step
from leadlag.tops.lattice import Box, member_nodes
from leadlag.tops.thermal import backward_sweep, forward_sweep, per_step_free_energy
from leadlag.tops.types import DistanceMatrix, EnsembleConfig, EnsembleResult, Member, ThermalPath

logger = logging.getLogger(__name__)

MemberResult = Tuple[int, int, float, int, np.ndarray]  # i1, i2, F per step, t_start, <x(t)>

_WORKER_EPS: Optional[np.ndarray] = None
_WORKER_T: float = 0.0


def evaluate_member(eps: np.ndarray, i1: int, i2: int, temperature: float) -> MemberResult:
    n = eps.shape[0]
    start, end = member_nodes(n, i1, i2)
    box = Box.between(start, end, n)
    fwd = forward_sweep(eps, box, temperature)
    bwd = backward_sweep(eps, box, temperature)
    f = per_step_free_energy(float(fwd.log_norm[-1]), temperature, end.t - start.t)
    return i1, i2, f, start.t, (fwd.x_mean + bwd.x_mean) / 2.0


def run_ensemble(d: DistanceMatrix, cfg: EnsembleConfig) -> EnsembleResult:
    cfg.check_length(d.n)
    members = [(i1, i2) for i1 in range(cfg.margin + 1) for i2 in range(cfg.margin + 1)]
    with log_step(logger, f"ensemble n={d.n} members={len(members)} T={cfg.temperature}"):
        results = _evaluate_all(d.values, members, cfg.temperature, cfg.workers)

    energies = np.full((cfg.margin + 1, cfg.margin + 1), np.nan)
    for i1, i2, f, _, _ in results:
        energies[i1, i2] = f
    best = float(np.min(energies))
    tied = [r for r in results if r[2] <= best + cfg.tie_tolerance]
    winner = min(tied, key=lambda r: (r[2], r[0], r[1]))
    tied_members = tuple((r[0], r[1]) for r in tied)
    if len(tied) > 1:
        logger.info("ensemble tie: averaging %d members %s", len(tied), tied_members)

    t_values, x_values = _average_paths(tied)
    path = ThermalPath(
        t_values=t_values,
        x_values=x_values,
        free_energy_per_step=winner[2],
        member=(winner[0], winner[1]),
        temperature=cfg.temperature,
        tied_members=tied_members,
    )
    logger.info("ensemble winner member=%s free_energy_per_step=%.10g", path.member, path.free_energy_per_step)
    return EnsembleResult(path=path, free_energies=energies, tied_members=tied_members)


def tops_ensemble(d: DistanceMatrix, cfg: EnsembleConfig) -> ThermalPath:
    return run_ensemble(d, cfg).path


def temperature_scan(
    d: DistanceMatrix, cfg: EnsembleConfig, temperatures: Iterable[float]
) -> Dict[float, ThermalPath]:
    """Ensemble path at each temperature, everything else from cfg."""
    out: Dict[float, ThermalPath] = {}
    for temperature in temperatures:
        if not temperature > 0:
            raise ConfigurationError(f"temperature must be positive, got {temperature}")
        out[float(temperature)] = tops_ensemble(d, cfg.model_copy(update={"temperature": float(temperature)}))
    return out


def _evaluate_all(
    eps: np.ndarray, members: Sequence[Member], temperature: float, workers: int
) -> List[MemberResult]:
    if workers <= 1 or len(members) == 1:
        return [evaluate_member(eps, i1, i2, temperature) for i1, i2 in members]
    chunksize = max(1, len(members) // (workers * 4))
    with ProcessPoolExecutor(
        max_workers=workers, initializer=_init_worker, initargs=(eps, temperature)
    ) as pool:
        return list(pool.map(_evaluate_in_worker, members, chunksize=chunksize))


def _init_worker(eps: np.ndarray, temperature: float) -> None:
    global _WORKER_EPS, _WORKER_T
    _WORKER_EPS = eps
    _WORKER_T = temperature


def _evaluate_in_worker(member: Member) -> MemberResult:
    assert _WORKER_EPS is not None, "worker not initialized"
    return evaluate_member(_WORKER_EPS, member[0], member[1], _WORKER_T)


def _average_paths(results: Sequence[MemberResult]) -> Tuple[np.ndarray, np.ndarray]:
    """Average <x(t)> of tied members over the t-range they all cover."""
    if len(results) == 1:
        _, _, _, ts, x = results[0]
        return np.arange(ts, ts + x.size), x
    lo = max(r[3] for r in results)
    hi = min(r[3] + r[4].size - 1 for r in results)
    stacked = np.vstack([r[4][lo - r[3] : hi - r[3] + 1] for r in results])
    return np.arange(lo, hi + 1), stacked.mean(axis=0)
