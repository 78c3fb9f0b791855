"""
Topological Laplacians for hyperlap
Assembles L_p = B_{p+1}^T B_{p+1} + B_p B_p^T, solves the symmetric eigenproblem
and cross-checks the harmonic count against the exact Betti number
"""

import logging
from dataclasses import dataclass, replace
from typing import Any, Dict, Iterable, Optional, Tuple

import networkx as nx
import numpy as np
import scipy.linalg

import config
from complexes.embedded import EmbeddedComplex, betti_exact
from structures.hyperdigraph import Hyperdigraph
from utils.errors import ConsistencyError, EigensolverError, InputError, ZeroCountMismatchError

logger = logging.getLogger(__name__)


def laplacian_from_boundaries(b_p: np.ndarray, b_next: np.ndarray) -> np.ndarray:
    """Symmetrized B_next^T B_next + B_p B_p^T"""
    size = b_p.shape[0]
    laplacian = np.zeros((size, size))
    if b_next.size:
        laplacian += b_next.T @ b_next
    if b_p.size:
        laplacian += b_p @ b_p.T
    return (laplacian + laplacian.T) / 2


def laplacian_matrix(complex_: EmbeddedComplex, p: int) -> np.ndarray:
    """L_p on Omega_p in its canonical orthonormal basis"""
    return laplacian_from_boundaries(complex_.boundary_rep(p), complex_.boundary_rep(p + 1))


def spectrum(laplacian: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues; values in [-1e-9, 0) are reported as 0"""
    if laplacian.size == 0:
        return np.zeros(0)
    try:
        eigenvalues = scipy.linalg.eigh(laplacian, eigvals_only=True)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as e:
        raise EigensolverError(f"Symmetric eigensolver did not converge: {e}")
    eigenvalues = np.sort(eigenvalues)
    if eigenvalues[0] < -config.NEGATIVE_CLAMP:
        raise ConsistencyError(
            f"Laplacian is not positive semidefinite (eigenvalue {eigenvalues[0]:.3e})",
            code="not_psd",
        )
    eigenvalues[eigenvalues < 0] = 0.0
    return eigenvalues


def zero_threshold(eigenvalues: np.ndarray, zero_tol: Optional[float] = None) -> float:
    tol = config.ZERO_TOL if zero_tol is None else zero_tol
    top = float(eigenvalues[-1]) if len(eigenvalues) else 0.0
    return tol * max(1.0, top)


def count_zeros(eigenvalues: np.ndarray, zero_tol: Optional[float] = None) -> int:
    threshold = zero_threshold(eigenvalues, zero_tol)
    return int(np.sum(eigenvalues <= threshold))


def smallest_nonzero(eigenvalues: np.ndarray, zero_tol: Optional[float] = None) -> Optional[float]:
    threshold = zero_threshold(eigenvalues, zero_tol)
    positive = eigenvalues[eigenvalues > threshold]
    return float(positive[0]) if positive.size else None


def numeric_rank(matrix: np.ndarray, cutoff: Optional[float] = None) -> int:
    """Number of singular values above cutoff * max(1, largest singular value)"""
    if matrix.size == 0:
        return 0
    cutoff = config.RANK_CUTOFF if cutoff is None else cutoff
    singular = scipy.linalg.svdvals(matrix)
    return int(np.sum(singular > cutoff * max(1.0, float(singular[0]))))


@dataclass(frozen=True)
class SpectralSummary:
    """Spectral data of one dimension"""

    p: int
    dim: int
    spectrum: Tuple[float, ...]
    betti: int
    lambda_min_nonzero: Optional[float]
    fiedler: Optional[float]
    zero_threshold: float = 0.0
    rank_boundary: Optional[int] = None
    rank_coboundary: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "betti": self.betti,
            "spectrum": list(self.spectrum),
            "lambda_min_nonzero": self.lambda_min_nonzero,
            "fiedler": self.fiedler,
            "rank_boundary": self.rank_boundary,
            "rank_coboundary": self.rank_coboundary,
        }


def summarize_spectrum(
    p: int,
    eigenvalues: np.ndarray,
    betti: int,
    zero_tol: Optional[float] = None,
    label: str = "",
) -> SpectralSummary:
    """Package eigenvalues with the exact Betti number, enforcing the zero-count check"""
    zeros = count_zeros(eigenvalues, zero_tol)
    if zeros != betti:
        raise ZeroCountMismatchError(p, zeros, betti, label)
    return SpectralSummary(
        p=p,
        dim=len(eigenvalues),
        spectrum=tuple(float(x) for x in eigenvalues),
        betti=betti,
        lambda_min_nonzero=smallest_nonzero(eigenvalues, zero_tol),
        fiedler=float(eigenvalues[1]) if len(eigenvalues) >= 2 else None,
        zero_threshold=zero_threshold(eigenvalues, zero_tol),
    )


def summarize(
    complex_: EmbeddedComplex,
    dims: Optional[Iterable[int]] = None,
    zero_tol: Optional[float] = None,
    label: str = "",
) -> Dict[int, SpectralSummary]:
    """Spectrum, exact Betti number and smallest nonzero eigenvalue per dimension"""
    dims = list(complex_.dims if dims is None else dims)
    summary: Dict[int, SpectralSummary] = {}
    for p in dims:
        if p < 0 or p > complex_.max_dim:
            raise InputError(f"Dimension {p} outside 0..{complex_.max_dim}")
        eigenvalues = spectrum(laplacian_matrix(complex_, p))
        summary[p] = replace(
            summarize_spectrum(p, eigenvalues, betti_exact(complex_, p), zero_tol, label),
            rank_boundary=numeric_rank(complex_.boundary_rep(p)),
            rank_coboundary=numeric_rank(complex_.boundary_rep(p + 1)),
        )
        logger.debug(f"{label or 'complex'} p={p}: dim {summary[p].dim}, betti {summary[p].betti}")
    return summary


def hodge_dimensions(complex_: EmbeddedComplex, p: int) -> Dict[str, int]:
    """Both sides of dim Omega_p = beta_p + rank B_p + rank B_{p+1}"""
    return {
        "dim": complex_.dim(p),
        "betti": betti_exact(complex_, p),
        "rank_boundary": numeric_rank(complex_.boundary_rep(p)),
        "rank_coboundary": numeric_rank(complex_.boundary_rep(p + 1)),
        "rank_boundary_exact": complex_.boundary_rank(p),
        "rank_coboundary_exact": complex_.boundary_rank(p + 1),
    }


def harmonic_basis(
    complex_: EmbeddedComplex, p: int, zero_tol: Optional[float] = None
) -> np.ndarray:
    """Orthonormal basis of ker L_p expressed in F_p coordinates"""
    laplacian = laplacian_matrix(complex_, p)
    q_p = complex_.ortho_basis(p)
    if laplacian.size == 0:
        return np.zeros((q_p.shape[0], 0))
    try:
        eigenvalues, vectors = scipy.linalg.eigh(laplacian)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as e:
        raise EigensolverError(f"Symmetric eigensolver did not converge: {e}")
    threshold = zero_threshold(np.clip(eigenvalues, 0, None), zero_tol)
    kernel = vectors[:, eigenvalues <= threshold]
    return q_p @ kernel


@dataclass(frozen=True)
class ConnectivityReport:
    lambda0_2_positive: bool
    connected: bool
    lambda0_2: Optional[float]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda0_2_positive": self.lambda0_2_positive,
            "connected": self.connected,
            "lambda0_2": self.lambda0_2,
        }


def connectivity_check(h: Hyperdigraph, zero_tol: Optional[float] = None) -> ConnectivityReport:
    """Compare lambda_0(2) > 0 with combinatorial connectivity.

    Connectivity is undirected reachability between the 0-hyperedges along
    1-hyperedges, through any vertex of the universe.
    """
    vertex_edges = h.edges(0)
    if not vertex_edges:
        raise InputError("connectivity_check needs at least one 0-hyperedge", code="empty_selection")

    complex_ = EmbeddedComplex(h, max_dim=0)
    eigenvalues = spectrum(laplacian_matrix(complex_, 0))
    if len(eigenvalues) >= 2:
        lambda0_2 = float(eigenvalues[1])
        positive = lambda0_2 > zero_threshold(eigenvalues, zero_tol)
    else:
        lambda0_2 = None
        positive = True

    graph = nx.Graph()
    graph.add_nodes_from(range(h.n_vertices))
    graph.add_edges_from(h.edges(1))
    component = nx.node_connected_component(graph, vertex_edges[0][0])
    connected = all(e[0] in component for e in vertex_edges)

    report = ConnectivityReport(positive, connected, lambda0_2)
    logger.debug(f"Connectivity of {h!r}: {report}")
    return report


__all__ = [
    "laplacian_from_boundaries",
    "laplacian_matrix",
    "spectrum",
    "zero_threshold",
    "count_zeros",
    "smallest_nonzero",
    "numeric_rank",
    "SpectralSummary",
    "summarize_spectrum",
    "summarize",
    "hodge_dimensions",
    "harmonic_basis",
    "ConnectivityReport",
    "connectivity_check",
]
