"""
Directed hyperedge helpers for hyperlap
A directed p-hyperedge is a tuple of p+1 distinct non-negative vertex ids
"""

import logging
from itertools import combinations
from typing import Iterable, Sequence, Tuple

from utils.errors import InputError, RepeatedVertexError

logger = logging.getLogger(__name__)

Edge = Tuple[int, ...]


def as_edge(seq: Iterable[int]) -> Edge:
    """Validate a vertex sequence and return it as an Edge tuple.

    Raises:
        InputError: empty sequence or a negative / non-integer id
        RepeatedVertexError: a vertex occurs twice
    """
    edge = tuple(seq)
    if not edge:
        raise InputError("A hyperedge needs at least one vertex")
    for v in edge:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise InputError(f"Vertex ids must be non-negative integers, got {v!r}")
    if len(set(edge)) != len(edge):
        raise RepeatedVertexError(f"Hyperedge {edge} repeats a vertex")
    return edge


def edge_dim(edge: Sequence[int]) -> int:
    return len(edge) - 1


def is_sorted_edge(edge: Sequence[int]) -> bool:
    return all(edge[i] < edge[i + 1] for i in range(len(edge) - 1))


def count_inversions(seq: Sequence[int]) -> int:
    return sum(
        1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j]
    )


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation that sorts seq into increasing order.

    Args:
        seq: vertex sequence with pairwise distinct entries

    Returns:
        +1 for an even number of inversions, -1 for an odd number
    """
    if len(set(seq)) != len(seq):
        raise RepeatedVertexError(f"Sequence {tuple(seq)} repeats a vertex")
    return -1 if count_inversions(seq) % 2 else 1


def is_shuffle(seq: Sequence[int], p: int, q: int) -> bool:
    """True iff seq is a (p, q)-shuffle of its sorted vertex set.

    The first p entries and the last q entries must each be increasing.
    """
    if p < 0 or q < 0:
        raise InputError(f"Shuffle block sizes must be non-negative, got ({p}, {q})")
    if p + q != len(seq):
        raise InputError(
            f"Shuffle block sizes ({p}, {q}) do not add up to length {len(seq)}"
        )
    if len(set(seq)) != len(seq):
        raise RepeatedVertexError(f"Sequence {tuple(seq)} repeats a vertex")
    return is_sorted_edge(seq[:p]) and is_sorted_edge(seq[p:])


def is_shuffle_edge(seq: Sequence[int]) -> bool:
    """True iff seq is a (p, n-p)-shuffle for some split point p"""
    n = len(seq)
    return any(is_shuffle(seq, p, n - p) for p in range(n + 1))


def drop_vertex(edge: Edge, i: int) -> Edge:
    return edge[:i] + edge[i + 1 :]


__all__ = [
    "Edge",
    "as_edge",
    "edge_dim",
    "is_sorted_edge",
    "count_inversions",
    "permutation_sign",
    "is_shuffle",
    "is_shuffle_edge",
    "drop_vertex",
]
