"""
Persistent Laplacians for hyperlap
Omega^{a,b}, persistent Betti numbers (exact), persistent spectra and
persistent harmonic spaces between two snapshots of a filtration
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

import config
from complexes.embedded import EmbeddedComplex, orthonormalize
from linalg.exact import RationalMatrix, kernel_basis, rank
from persistence.cache import SnapshotCache, get_snapshot_complex
from persistence.filtration import Filtration
from spectral.laplacian import (
    harmonic_basis,
    laplacian_from_boundaries,
    numeric_rank,
    spectrum,
    summarize_spectrum,
)
from structures.hyperedges import Edge
from utils.errors import FiltrationOrderError, OmegaResidualError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PersistentEntry:
    """Persistent data of one (a, b, p) cell"""

    a: float
    b: float
    p: int
    dim_omega_a: int
    dim_omega_ab: int
    betti: int
    spectrum: Tuple[float, ...]
    lambda_min_nonzero: Optional[float]
    fiedler: Optional[float]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "betti": self.betti,
            "spectrum": list(self.spectrum),
            "lambda_min_nonzero": self.lambda_min_nonzero,
            "fiedler": self.fiedler,
            "dim_omega_a": self.dim_omega_a,
            "dim_omega_ab": self.dim_omega_ab,
        }


def embed_rows(matrix: RationalMatrix, source: Sequence[Edge], target: Sequence[Edge]) -> RationalMatrix:
    """Move F-coordinates over source generators onto target generators"""
    position = {e: i for i, e in enumerate(source)}
    zero = [0] * matrix.cols
    return RationalMatrix(
        len(target), matrix.cols, (matrix.row(position[e]) if e in position else zero for e in target)
    )


def embed_rows_float(matrix: np.ndarray, source: Sequence[Edge], target: Sequence[Edge]) -> np.ndarray:
    position = {e: i for i, e in enumerate(source)}
    out = np.zeros((len(target), matrix.shape[1]))
    for i, e in enumerate(target):
        if e in position:
            out[i] = matrix[position[e]]
    return out


def snapshot_pair(
    f: Filtration,
    a: float,
    b: float,
    max_dim: int,
    cache: Optional[SnapshotCache] = None,
) -> Tuple[EmbeddedComplex, EmbeddedComplex]:
    """Embedded complexes of the snapshots at a and b, both snapped to critical values"""
    if a > b:
        raise FiltrationOrderError(a, b)
    complex_a = get_snapshot_complex(f, f.snap(a), max_dim, cache)
    complex_b = get_snapshot_complex(f, f.snap(b), max_dim, cache)
    return complex_a, complex_b


def _omega_ab_coefficients(complex_a: EmbeddedComplex, complex_b: EmbeddedComplex, p: int) -> RationalMatrix:
    """Coordinates Y over the exact basis of Omega^b_{p+1} with d(K_b Y) inside Omega^a_p"""
    grade_b = complex_b.grade(p + 1)
    k_b = grade_b.dim
    if k_b == 0:
        return RationalMatrix.zeros(0, 0)
    inside_a = embed_rows(
        complex_a.exact_basis(p), complex_a.generators(p), complex_b.generators(p)
    )
    system = grade_b.boundary_exact.hstack(inside_a)
    solutions = kernel_basis(system)
    return solutions.select_rows(range(k_b))


def _omega_ab(complex_a: EmbeddedComplex, complex_b: EmbeddedComplex, p: int) -> RationalMatrix:
    grade_b = complex_b.grade(p + 1)
    coefficients = _omega_ab_coefficients(complex_a, complex_b, p)
    if coefficients.rows == 0:
        return RationalMatrix.zeros(len(grade_b.generators), 0)
    return grade_b.exact_basis @ coefficients


def omega_ab(
    f: Filtration,
    a: float,
    b: float,
    p: int,
    cache: Optional[SnapshotCache] = None,
    max_dim: Optional[int] = None,
) -> RationalMatrix:
    """Exact basis of Omega^{a,b}_{p+1}: chains of Omega^b_{p+1} whose boundary lies in Omega^a_p.

    Columns are expressed over the directed (p+1)-hyperedges of the b snapshot.
    """
    complex_a, complex_b = snapshot_pair(f, a, b, max(p, max_dim or 0), cache)
    return _omega_ab(complex_a, complex_b, p)


def _persistent_betti(complex_a: EmbeddedComplex, complex_b: EmbeddedComplex, p: int) -> int:
    grade_b = complex_b.grade(p + 1)
    coefficients = _omega_ab_coefficients(complex_a, complex_b, p)
    image_rank = rank(grade_b.boundary_exact @ coefficients) if coefficients.cols else 0
    cycles = complex_a.dim(p) - complex_a.boundary_rank(p)
    return cycles - image_rank


def persistent_betti_exact(
    f: Filtration,
    a: float,
    b: float,
    p: int,
    cache: Optional[SnapshotCache] = None,
    max_dim: Optional[int] = None,
) -> int:
    """beta_p^{a,b} = nullity(d_p^a) - rank(d_{p+1}^{a,b}), exact"""
    complex_a, complex_b = snapshot_pair(f, a, b, max(p, max_dim or 0), cache)
    return _persistent_betti(complex_a, complex_b, p)


def persistent_laplacian(
    f: Filtration,
    a: float,
    b: float,
    p: int,
    cache: Optional[SnapshotCache] = None,
    max_dim: Optional[int] = None,
    zero_tol: Optional[float] = None,
) -> Tuple[np.ndarray, PersistentEntry]:
    """L_p^{a,b} = (B^{a,b}_{p+1})^T B^{a,b}_{p+1} + B^a_p (B^a_p)^T and its summary.

    Raises:
        FiltrationOrderError: a > b
        OmegaResidualError: a boundary of Omega^{a,b}_{p+1} leaves Omega^a_p
        ZeroCountMismatchError: harmonic count differs from the exact persistent Betti number
    """
    complex_a, complex_b = snapshot_pair(f, a, b, max(p, max_dim or 0), cache)
    grade_b = complex_b.grade(p + 1)
    generators_b = complex_b.generators(p)
    generators_a = complex_a.generators(p)

    chains = _omega_ab(complex_a, complex_b, p)
    q_ab = orthonormalize(chains)
    image = grade_b.ambient.aligned(generators_b).to_numpy() @ q_ab

    position_b = {e: i for i, e in enumerate(generators_b)}
    a_rows = [position_b[e] for e in generators_a]
    outside = np.ones(len(generators_b), dtype=bool)
    outside[a_rows] = False
    restricted = image[a_rows] if a_rows else np.zeros((0, image.shape[1]))

    q_a = complex_a.ortho_basis(p)
    coefficients = q_a.T @ restricted
    residual = max(
        float(np.linalg.norm(image[outside])) if outside.any() else 0.0,
        float(np.linalg.norm(restricted - q_a @ coefficients)) if restricted.size else 0.0,
    )
    if residual > config.RESIDUAL_TOL:
        raise OmegaResidualError(
            f"d^b of Omega^{{a,b}}_{p + 1} leaves Omega^a_{p} at ({a}, {b}) (residual {residual:.3e})"
        )

    laplacian = laplacian_from_boundaries(complex_a.boundary_rep(p), coefficients.T)
    eigenvalues = spectrum(laplacian)
    betti = _persistent_betti(complex_a, complex_b, p)
    summary = summarize_spectrum(p, eigenvalues, betti, zero_tol, label=f"a={a:g}, b={b:g}")
    entry = PersistentEntry(
        a=a,
        b=b,
        p=p,
        dim_omega_a=complex_a.dim(p),
        dim_omega_ab=q_ab.shape[1],
        betti=betti,
        spectrum=summary.spectrum,
        lambda_min_nonzero=summary.lambda_min_nonzero,
        fiedler=summary.fiedler,
    )
    logger.debug(f"L_{p}^({a:g},{b:g}): size {laplacian.shape[0]}, betti {betti}")
    return laplacian, entry


def persistent_harmonic_dim(
    f: Filtration,
    a: float,
    b: float,
    p: int,
    cache: Optional[SnapshotCache] = None,
    max_dim: Optional[int] = None,
    zero_tol: Optional[float] = None,
) -> int:
    """Dimension of the image of the a-harmonic space projected onto the b-harmonic space"""
    complex_a, complex_b = snapshot_pair(f, a, b, max(p, max_dim or 0), cache)
    harmonic_a = embed_rows_float(
        harmonic_basis(complex_a, p, zero_tol), complex_a.generators(p), complex_b.generators(p)
    )
    harmonic_b = harmonic_basis(complex_b, p, zero_tol)
    if harmonic_a.shape[1] == 0 or harmonic_b.shape[1] == 0:
        return 0
    return numeric_rank(harmonic_b.T @ harmonic_a)


__all__ = [
    "PersistentEntry",
    "embed_rows",
    "embed_rows_float",
    "snapshot_pair",
    "omega_ab",
    "persistent_betti_exact",
    "persistent_laplacian",
    "persistent_harmonic_dim",
]
