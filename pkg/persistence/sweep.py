"""
Filtration sweeps for hyperlap
Evaluates persistent Laplacians over diagonal, explicit-pair or grid parameter sets
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import config
from config import resource_monitor
from persistence.cache import SnapshotCache, snapshot_cache
from persistence.filtration import Filtration
from persistence.persistent import PersistentEntry, persistent_laplacian
from utils.errors import FiltrationOrderError, InputError

logger = logging.getLogger(__name__)

DIAGONAL = "diagonal"
PAIRS = "pairs"
GRID = "grid"


@dataclass(frozen=True)
class SweepMode:
    kind: str
    pairs: Tuple[Tuple[float, float], ...] = ()
    step: Optional[float] = None

    @classmethod
    def diagonal(cls) -> "SweepMode":
        return cls(DIAGONAL)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[float, float]]) -> "SweepMode":
        return cls(PAIRS, tuple((float(a), float(b)) for a, b in pairs))

    @classmethod
    def grid(cls, step: float) -> "SweepMode":
        return cls(GRID, step=float(step))


@dataclass(frozen=True)
class SweepRow:
    """All requested dimensions of one (a, b) cell"""

    a: float
    b: float
    entries: Dict[int, PersistentEntry]

    @property
    def is_diagonal(self) -> bool:
        return self.a == self.b

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": self.a,
            "b": self.b,
            "dimensions": {str(p): entry.to_dict() for p, entry in self.entries.items()},
        }


def grid_points(f: Filtration, step: float) -> List[float]:
    if step is None or not step > 0:
        raise InputError(f"Grid step must be positive, got {step}")
    if f.is_empty():
        return []
    low, high = f.critical_values[0], f.critical_values[-1]
    n_steps = int(math.floor((high - low) / step + config.VALUE_TOL))
    return [low + k * step for k in range(n_steps + 1)]


def sweep_pairs(f: Filtration, mode: SweepMode) -> List[Tuple[float, float]]:
    """The (a, b) pairs a sweep evaluates, in output order"""
    if mode.kind == DIAGONAL:
        return [(c, c) for c in f.critical_values]
    if mode.kind == PAIRS:
        for a, b in mode.pairs:
            if a > b:
                raise FiltrationOrderError(a, b)
        return list(mode.pairs)
    if mode.kind == GRID:
        points = grid_points(f, mode.step)
        return [(points[i], points[j]) for i in range(len(points)) for j in range(i, len(points))]
    raise InputError(f"Unknown sweep mode '{mode.kind}'")


def sweep(
    f: Filtration,
    mode: SweepMode,
    dims: Sequence[int] = (0, 1, 2),
    workers: Optional[int] = None,
    cache: Optional[SnapshotCache] = None,
    zero_tol: Optional[float] = None,
) -> List[SweepRow]:
    """Persistent summaries for every pair of the mode, rows in deterministic pair order"""
    dims = sorted(set(dims))
    if not dims or dims[0] < 0:
        raise InputError(f"Dimensions must be non-negative, got {list(dims)}")
    pairs = sweep_pairs(f, mode)
    if not pairs:
        logger.info(f"Sweep over {f.name}: nothing to evaluate")
        return []

    cache = snapshot_cache if cache is None else cache
    max_dim = dims[-1]
    workers = workers or config.SWEEP_WORKERS or 1

    def evaluate(pair: Tuple[float, float]) -> SweepRow:
        a, b = pair
        entries = {
            p: persistent_laplacian(f, a, b, p, cache=cache, max_dim=max_dim, zero_tol=zero_tol)[1]
            for p in dims
        }
        return SweepRow(a, b, entries)

    logger.info(f"🔄 Sweeping {f.name}: {len(pairs)} cells ({mode.kind}), dims {dims}")
    resource_monitor.log_system_info("sweep start")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(evaluate, pairs))
    else:
        rows = [evaluate(pair) for pair in pairs]
    resource_monitor.log_system_info("sweep end")
    cache.log_stats()
    return rows


__all__ = [
    "DIAGONAL",
    "PAIRS",
    "GRID",
    "SweepMode",
    "SweepRow",
    "grid_points",
    "sweep_pairs",
    "sweep",
]
