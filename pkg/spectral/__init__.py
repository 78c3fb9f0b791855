"""
Spectral module for hyperlap
Contains Laplacian assembly, spectra and connectivity checks
"""

from .laplacian import (
    laplacian_matrix,
    spectrum,
    summarize,
    SpectralSummary,
    hodge_dimensions,
    harmonic_basis,
    connectivity_check,
)

__all__ = [
    "laplacian_matrix",
    "spectrum",
    "summarize",
    "SpectralSummary",
    "hodge_dimensions",
    "harmonic_basis",
    "connectivity_check",
]
