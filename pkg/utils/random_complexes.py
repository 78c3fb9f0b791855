"""
Random complex generators for hyperlap
Seeded hyperdigraphs and filtrations for the randomized consistency checks
"""

import logging
from typing import Dict, Optional

import numpy as np

from persistence.filtration import Filtration
from structures.hyperdigraph import Hyperdigraph
from structures.hyperedges import Edge

logger = logging.getLogger(__name__)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_hyperdigraph(
    rng: np.random.Generator,
    max_vertices: int = 7,
    max_dim: int = 3,
    all_vertices: bool = False,
    sorted_edges: bool = False,
    face_probability: float = 0.7,
) -> Hyperdigraph:
    """A random hyperdigraph with a tendency to contain faces of its edges.

    Top-down: pick a few random sequences per dimension, then keep each of
    their codimension-one faces with face_probability.
    """
    n = int(rng.integers(2, max_vertices + 1))
    edges = set()
    if all_vertices:
        edges.update((v,) for v in range(n))

    for p in range(min(max_dim, n - 1), 0, -1):
        count = int(rng.integers(0, 5 if p > 1 else 7))
        for _ in range(count):
            seq = tuple(int(v) for v in rng.choice(n, size=p + 1, replace=False))
            edges.add(tuple(sorted(seq)) if sorted_edges else seq)
        for edge in [e for e in edges if len(e) == p + 1]:
            for i in range(len(edge)):
                if rng.random() < face_probability:
                    edges.add(edge[:i] + edge[i + 1 :])

    if not all_vertices:
        for v in range(n):
            if rng.random() < 0.6:
                edges.add((v,))
    return Hyperdigraph(n, edges)


def random_points(rng: np.random.Generator, n: int, dimension: int = 2, scale: float = 3.0) -> np.ndarray:
    return rng.uniform(0.0, scale, size=(n, dimension))


def random_filtration(rng: np.random.Generator, h: Hyperdigraph, levels: int = 4) -> Filtration:
    """Integer values in 0..levels-1 so that ties occur"""
    values: Dict[Edge, float] = {e: float(rng.integers(0, levels)) for e in h.all_edges()}
    return Filtration(h, values, name="random")


def random_injection(rng: np.random.Generator, n: int, target: int) -> Dict[int, int]:
    images = rng.choice(target, size=n, replace=False)
    return {v: int(images[v]) for v in range(n)}


__all__ = [
    "make_rng",
    "random_hyperdigraph",
    "random_points",
    "random_filtration",
    "random_injection",
]
