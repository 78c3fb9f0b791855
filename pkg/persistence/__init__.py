"""
Persistence module for hyperlap
Contains filtrations, persistent Laplacians, sweeps and the snapshot cache
"""

from .filtration import Filtration, volume_filtration, distance_filtration, values_filtration
from .persistent import (
    omega_ab,
    persistent_laplacian,
    persistent_betti_exact,
    persistent_harmonic_dim,
    PersistentEntry,
)
from .sweep import SweepMode, SweepRow, sweep
from .cache import snapshot_cache, get_cache_stats, clear_cache

__all__ = [
    "Filtration",
    "volume_filtration",
    "distance_filtration",
    "values_filtration",
    "omega_ab",
    "persistent_laplacian",
    "persistent_betti_exact",
    "persistent_harmonic_dim",
    "PersistentEntry",
    "SweepMode",
    "SweepRow",
    "sweep",
    "snapshot_cache",
    "get_cache_stats",
    "clear_cache",
]
