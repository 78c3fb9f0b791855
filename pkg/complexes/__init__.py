"""
Complexes module for hyperlap
Contains ambient boundary matrices and the embedded chain complex
"""

from .chains import boundary_of_edge, ambient_boundary_matrix, AmbientBoundary
from .embedded import (
    compute_omega,
    orthonormalize,
    boundary_rep,
    EmbeddedComplex,
    build_embedded_complex,
    betti_exact,
)

__all__ = [
    "boundary_of_edge",
    "ambient_boundary_matrix",
    "AmbientBoundary",
    "compute_omega",
    "orthonormalize",
    "boundary_rep",
    "EmbeddedComplex",
    "build_embedded_complex",
    "betti_exact",
]
