"""
Reduction module for hyperlap
"""

from .reduce import reduce, pi_chain_map, pi_matrix, induced_homology_rank, InducedHomology

__all__ = ["reduce", "pi_chain_map", "pi_matrix", "induced_homology_rank", "InducedHomology"]
