"""
Filtrations for hyperlap
Sublevel-set filtrations of a base hyperdigraph and the volume / distance builders
"""

import logging
from itertools import count
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.spatial.distance import pdist

import config
from structures.hyperdigraph import Hyperdigraph
from structures.hyperedges import Edge
from utils.errors import InputError

logger = logging.getLogger(__name__)

_filtration_ids = count(1)


def _slack(value: float) -> float:
    return config.VALUE_TOL * max(1.0, abs(value))


def merge_values(values: Sequence[float]) -> Tuple[float, ...]:
    """Sorted distinct values; a run within the value tolerance of its first member collapses onto that member"""
    merged: List[float] = []
    anchor = 0.0
    for value in sorted(values):
        if merged and value - anchor <= _slack(anchor):
            continue
        merged.append(value)
        anchor = value
    return tuple(merged)


class Filtration:
    """A base hyperdigraph with one real value per edge.

    The snapshot at a keeps every edge with f(e) <= a; snapshots are
    nested as a grows.
    """

    def __init__(self, base: Hyperdigraph, values: Mapping[Sequence[int], float], name: str = ""):
        normalized: Dict[Edge, float] = {}
        for edge, value in values.items():
            edge = tuple(edge)
            if edge not in base:
                raise InputError(f"Filtration value given for {edge}, which is not an edge")
            value = float(value)
            if not np.isfinite(value):
                raise InputError(f"Filtration value of {edge} is not finite")
            normalized[edge] = value
        missing = [e for e in base.all_edges() if e not in normalized]
        if missing:
            raise InputError(f"{len(missing)} edges have no filtration value, e.g. {missing[0]}")

        self.base = base
        self.uid = next(_filtration_ids)
        self.name = name or f"filtration-{self.uid}"
        self._values = normalized
        self.critical_values = merge_values(normalized.values())
        logger.debug(
            f"Filtration {self.name}: {len(normalized)} edges, "
            f"{len(self.critical_values)} critical values"
        )

    @classmethod
    def from_values(cls, base: Hyperdigraph, values: Mapping[Sequence[int], float], name: str = "") -> "Filtration":
        return cls(base, values, name)

    @property
    def values(self) -> Dict[Edge, float]:
        return dict(self._values)

    def value(self, edge: Sequence[int]) -> float:
        return self._values[tuple(edge)]

    def is_empty(self) -> bool:
        return not self.critical_values

    def snap(self, a: float) -> float:
        """Largest critical value <= a, or a itself below the first critical value"""
        snapped = None
        for c in self.critical_values:
            if c <= a + _slack(a):
                snapped = c
            else:
                break
        return a if snapped is None else snapped

    def snapshot(self, a: float) -> Hyperdigraph:
        """Sublevel hyperdigraph {e : f(e) <= a} on the same vertex universe"""
        limit = a + _slack(a)
        return self.base.subcomplex(e for e in self.base.all_edges() if self._values[e] <= limit)

    def __repr__(self) -> str:
        return f"Filtration({self.name!r}, base={self.base!r}, critical={len(self.critical_values)})"


def volume_value(points: np.ndarray) -> float:
    """|det(A^T A)|^(1/(2p)) with A = (v1-v0, ..., vp-v0); 0 for one point or a degenerate simplex"""
    p = len(points) - 1
    if p <= 0:
        return 0.0
    a = (points[1:] - points[0]).T
    if np.linalg.matrix_rank(a) < p:
        return 0.0
    gram = a.T @ a
    return float(abs(np.linalg.det(gram)) ** (1.0 / (2 * p)))


def volume_filtration(h: Hyperdigraph, name: str = "volume") -> Filtration:
    coords = h.require_coords()
    values = {e: volume_value(coords[list(e)]) for e in h.all_edges()}
    return Filtration(h, values, name)


def distance_value(points: np.ndarray) -> float:
    """Largest pairwise Euclidean distance; 0 for a single point"""
    if len(points) <= 1:
        return 0.0
    return float(pdist(points).max())


def distance_filtration(h: Hyperdigraph, name: str = "distance") -> Filtration:
    coords = h.require_coords()
    values = {e: distance_value(coords[list(e)]) for e in h.all_edges()}
    return Filtration(h, values, name)


def values_filtration(h: Hyperdigraph, values: Optional[Mapping[Sequence[int], float]], name: str = "values") -> Filtration:
    if values is None:
        raise InputError("The values filtration needs a 'values' array in the document")
    return Filtration.from_values(h, values, name)


FILTRATION_BUILDERS = {
    "volume": volume_filtration,
    "distance": distance_filtration,
}


__all__ = [
    "merge_values",
    "Filtration",
    "volume_value",
    "volume_filtration",
    "distance_value",
    "distance_filtration",
    "values_filtration",
    "FILTRATION_BUILDERS",
]
