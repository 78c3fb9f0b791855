"""
Embedded chain complex for hyperlap
Builds Omega_p (the largest chain complex inside the span of the hyperedges),
its canonical orthonormal bases and the boundary representation matrices B_p
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

import config
from complexes.chains import AmbientBoundary, ambient_boundary_matrix
from linalg.exact import RationalMatrix, kernel_basis, rank
from structures.hyperdigraph import Hyperdigraph
from structures.hyperedges import Edge
from utils.errors import InputError, OmegaResidualError, RankDeficiencyError

logger = logging.getLogger(__name__)

# Orthonormality of Q_p is checked to this precision
ORTHO_TOL = 1e-12
# A Gram-Schmidt column shrinking below this relative norm means dependent input
DEPENDENCE_TOL = 1e-10


def compute_omega(h: Hyperdigraph, p: int, ambient: Optional[AmbientBoundary] = None) -> RationalMatrix:
    """Exact basis of Omega_p in F_p coordinates (columns).

    Omega_p is the kernel of the rows of the ambient boundary whose face is
    not a (p-1)-hyperedge. Omega_0 is all of F_0.
    """
    n_generators = len(h.edges(p))
    if p == 0:
        return RationalMatrix.identity(n_generators)
    ambient = ambient or ambient_boundary_matrix(h, p)
    forbidden = ambient.forbidden_matrix
    if forbidden.rows == 0:
        return RationalMatrix.identity(n_generators)
    return kernel_basis(forbidden)


def orthonormalize(exact_basis: RationalMatrix) -> np.ndarray:
    """Modified Gram-Schmidt in column order, first nonzero entry of each column positive"""
    basis = exact_basis.to_numpy()
    n_rows, n_cols = basis.shape
    q = np.zeros((n_rows, n_cols))
    for j in range(n_cols):
        v = basis[:, j].copy()
        original = np.linalg.norm(v)
        for k in range(j):
            v -= (q[:, k] @ v) * q[:, k]
        norm = np.linalg.norm(v)
        if original == 0 or norm <= DEPENDENCE_TOL * original:
            raise RankDeficiencyError(
                f"Column {j} of the exact basis is linearly dependent on earlier columns"
            )
        v /= norm
        nonzero = np.flatnonzero(np.abs(v) > ORTHO_TOL)
        if nonzero.size and v[nonzero[0]] < 0:
            v = -v
        q[:, j] = v

    if n_cols and np.abs(q.T @ q - np.eye(n_cols)).max() > ORTHO_TOL * max(1, n_rows):
        raise RankDeficiencyError("Gram-Schmidt output is not orthonormal")
    return q


def boundary_rep(
    q_p: np.ndarray,
    q_prev: np.ndarray,
    ambient: AmbientBoundary,
    prev_generators: Tuple[Edge, ...],
) -> np.ndarray:
    """B_p: one row per basis vector of Omega_p, one column per basis vector of Omega_{p-1}.

    With this layout L_p = B_{p+1}^T B_{p+1} + B_p B_p^T.
    """
    dim_p = q_p.shape[1]
    dim_prev = q_prev.shape[1]
    if dim_p == 0 or dim_prev == 0:
        return np.zeros((dim_p, dim_prev))

    image = ambient.matrix.to_numpy() @ q_p
    forbidden_residual = (
        np.linalg.norm(image[list(ambient.forbidden_rows)]) if ambient.forbidden_rows else 0.0
    )
    aligned = ambient.aligned(prev_generators).to_numpy() @ q_p
    coefficients = q_prev.T @ aligned
    span_residual = np.linalg.norm(aligned - q_prev @ coefficients)
    residual = max(forbidden_residual, span_residual)
    if residual > config.RESIDUAL_TOL:
        raise OmegaResidualError(
            f"d_{ambient.p} leaves Omega_{ambient.p - 1} (residual {residual:.3e})"
        )
    return coefficients.T


@dataclass(frozen=True)
class Grade:
    """Everything computed for one dimension p"""

    p: int
    generators: Tuple[Edge, ...]
    ambient: AmbientBoundary
    exact_basis: RationalMatrix
    ortho_basis: np.ndarray
    boundary_exact: RationalMatrix
    boundary_rank: int
    boundary_rep: np.ndarray

    @property
    def dim(self) -> int:
        return self.exact_basis.cols


class EmbeddedComplex:
    """Omega_0..Omega_{max_dim+1} of a hyperdigraph.

    max_dim defaults to the top edge dimension (at least 0); the extra grade
    supplies B_{max_dim+1} for the top Laplacian.
    """

    def __init__(self, hyperdigraph: Hyperdigraph, max_dim: Optional[int] = None):
        if max_dim is None:
            max_dim = config.MAX_DIM if config.MAX_DIM is not None else max(hyperdigraph.max_dim, 0)
        if max_dim < 0:
            raise InputError(f"max_dim must be non-negative, got {max_dim}")
        self.hyperdigraph = hyperdigraph
        self.max_dim = max_dim
        self._grades: Dict[int, Grade] = {}
        for p in range(max_dim + 2):
            self._grades[p] = self._build_grade(p)
        logger.debug(
            f"Embedded complex of {hyperdigraph!r}: dims "
            f"{[self._grades[p].dim for p in range(max_dim + 2)]}"
        )

    def _build_grade(self, p: int) -> Grade:
        h = self.hyperdigraph
        generators = h.edges(p)
        ambient = ambient_boundary_matrix(h, p)
        exact = compute_omega(h, p, ambient)
        q_p = orthonormalize(exact)

        if p == 0:
            prev_generators: Tuple[Edge, ...] = ()
            q_prev = np.zeros((0, 0))
        else:
            previous = self._grades[p - 1]
            prev_generators = previous.generators
            q_prev = previous.ortho_basis

        boundary_exact = ambient.aligned(prev_generators) @ exact
        return Grade(
            p=p,
            generators=generators,
            ambient=ambient,
            exact_basis=exact,
            ortho_basis=q_p,
            boundary_exact=boundary_exact,
            boundary_rank=rank(boundary_exact),
            boundary_rep=boundary_rep(q_p, q_prev, ambient, prev_generators),
        )

    @property
    def dims(self) -> range:
        """Dimensions with a complete Laplacian"""
        return range(self.max_dim + 1)

    def grade(self, p: int) -> Grade:
        if p not in self._grades:
            raise InputError(
                f"Dimension {p} outside the computed range 0..{self.max_dim + 1}"
            )
        return self._grades[p]

    def dim(self, p: int) -> int:
        return self.grade(p).dim

    def generators(self, p: int) -> Tuple[Edge, ...]:
        return self.grade(p).generators

    def exact_basis(self, p: int) -> RationalMatrix:
        return self.grade(p).exact_basis

    def ortho_basis(self, p: int) -> np.ndarray:
        return self.grade(p).ortho_basis

    def boundary_rep(self, p: int) -> np.ndarray:
        return self.grade(p).boundary_rep

    def boundary_rank(self, p: int) -> int:
        """Exact rank of d_p restricted to Omega_p"""
        return self.grade(p).boundary_rank


def build_embedded_complex(h: Hyperdigraph, max_dim: Optional[int] = None) -> EmbeddedComplex:
    return EmbeddedComplex(h, max_dim)


def betti_exact(source, p: int) -> int:
    """beta_p = dim Omega_p - rank(d_p on Omega_p) - rank(d_{p+1} on Omega_{p+1}), exact.

    Args:
        source: a Hyperdigraph or an already built EmbeddedComplex covering p+1
        p: dimension
    """
    if isinstance(source, EmbeddedComplex) and source.max_dim >= p:
        complex_ = source
    else:
        h = source.hyperdigraph if isinstance(source, EmbeddedComplex) else source
        complex_ = EmbeddedComplex(h, max_dim=p)
    return complex_.dim(p) - complex_.boundary_rank(p) - complex_.boundary_rank(p + 1)


__all__ = [
    "compute_omega",
    "orthonormalize",
    "boundary_rep",
    "Grade",
    "EmbeddedComplex",
    "build_embedded_complex",
    "betti_exact",
]
