"""
Structures module for hyperlap
Contains directed hyperedges, hyperdigraphs and hypergraphs
"""

from .hyperedges import Edge, as_edge, permutation_sign, is_shuffle, is_shuffle_edge
from .hyperdigraph import (
    Hyperdigraph,
    Hypergraph,
    normalize_hypergraph,
    complete_hyperdigraph,
    relabel,
    StructureReport,
    is_shuffle_hyperdigraph,
    classify_structure,
)

__all__ = [
    "Edge",
    "as_edge",
    "permutation_sign",
    "is_shuffle",
    "is_shuffle_edge",
    "Hyperdigraph",
    "Hypergraph",
    "normalize_hypergraph",
    "complete_hyperdigraph",
    "relabel",
    "StructureReport",
    "is_shuffle_hyperdigraph",
    "classify_structure",
]
