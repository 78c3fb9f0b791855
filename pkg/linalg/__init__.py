"""
Linear algebra module for hyperlap
Exact rational matrices for kernels, ranks and span membership
"""

from .exact import RationalMatrix, rref, rank, kernel_basis, nullity, in_span

__all__ = ["RationalMatrix", "rref", "rank", "kernel_basis", "nullity", "in_span"]
