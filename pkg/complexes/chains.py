"""
Ambient chain spaces and boundary matrices for hyperlap
Generators of F_p are the directed p-hyperedges; d_p = sum of (-1)^i times the i-th face map
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from linalg.exact import RationalMatrix
from structures.hyperdigraph import Hyperdigraph
from structures.hyperedges import Edge, drop_vertex
from utils.errors import InputError

logger = logging.getLogger(__name__)


def boundary_of_edge(edge: Edge) -> List[Tuple[Edge, int]]:
    """Alternating face list of a directed hyperedge; empty for a single vertex"""
    if len(edge) <= 1:
        return []
    return [(drop_vertex(edge, i), -1 if i % 2 else 1) for i in range(len(edge))]


class GeneratorIndex:
    """Bijection between a list of sequences and matrix positions"""

    def __init__(self, labels: Sequence[Edge] = ()):
        self._labels: List[Edge] = []
        self._position: Dict[Edge, int] = {}
        for label in labels:
            self.add(label)

    def add(self, label: Edge) -> int:
        """Position of label, appending it on first sight"""
        position = self._position.get(label)
        if position is None:
            position = len(self._labels)
            self._labels.append(label)
            self._position[label] = position
        return position

    def position(self, label: Edge) -> Optional[int]:
        return self._position.get(label)

    @property
    def labels(self) -> Tuple[Edge, ...]:
        return tuple(self._labels)

    def __contains__(self, label) -> bool:
        return label in self._position

    def __len__(self) -> int:
        return len(self._labels)


def boundary_matrix(
    generators: Sequence[Edge], faces: Optional[Sequence[Edge]] = None
) -> Tuple[RationalMatrix, Tuple[Edge, ...]]:
    """Integer matrix of d on the span of generators.

    Rows are the given faces, or every occurring face in first-occurrence
    order during the column sweep when faces is None.
    """
    index = GeneratorIndex(faces or ())
    fixed = faces is not None
    entries: List[Dict[int, int]] = []
    for edge in generators:
        column: Dict[int, int] = {}
        for face, sign in boundary_of_edge(edge):
            if fixed and face not in index:
                continue
            column[index.add(face)] = sign
        entries.append(column)

    n_rows = len(index)
    rows = [[0] * len(generators) for _ in range(n_rows)]
    for j, column in enumerate(entries):
        for i, sign in column.items():
            rows[i][j] = sign
    return RationalMatrix(n_rows, len(generators), rows), index.labels


@dataclass(frozen=True)
class AmbientBoundary:
    """d_p from F_p into the span of the faces that actually occur"""

    p: int
    matrix: RationalMatrix
    face_labels: Tuple[Edge, ...]
    generators: Tuple[Edge, ...]
    hyperedge_rows: Tuple[int, ...]
    forbidden_rows: Tuple[int, ...]

    @property
    def forbidden_matrix(self) -> RationalMatrix:
        """Rows whose face is not a (p-1)-hyperedge"""
        return self.matrix.select_rows(self.forbidden_rows)

    def aligned(self, targets: Sequence[Edge]) -> RationalMatrix:
        """Re-index the rows onto the target generator order.

        Faces outside targets are dropped; targets that never occur get zero rows.
        """
        row_of = {label: i for i, label in enumerate(self.face_labels)}
        zero = [0] * self.matrix.cols
        return RationalMatrix(
            len(targets),
            self.matrix.cols,
            (
                self.matrix.row(row_of[t]) if t in row_of else zero
                for t in targets
            ),
        )


def ambient_boundary_matrix(h: Hyperdigraph, p: int) -> AmbientBoundary:
    """Boundary of the directed p-hyperedges with rows split into hyperedge / non-hyperedge faces"""
    if p < 0:
        raise InputError(f"Dimension must be non-negative, got {p}")
    generators = h.edges(p)
    matrix, faces = boundary_matrix(generators)
    hyperedge_rows = tuple(i for i, face in enumerate(faces) if face in h)
    forbidden_rows = tuple(i for i, face in enumerate(faces) if face not in h)
    logger.debug(
        f"d_{p}: {matrix.rows}x{matrix.cols}, {len(forbidden_rows)} non-hyperedge face rows"
    )
    return AmbientBoundary(p, matrix, faces, generators, hyperedge_rows, forbidden_rows)


__all__ = [
    "boundary_of_edge",
    "GeneratorIndex",
    "boundary_matrix",
    "AmbientBoundary",
    "ambient_boundary_matrix",
]
