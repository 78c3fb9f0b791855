"""
Hyperdigraph containers for hyperlap
Holds the vertex universe, graded directed hyperedges and optional coordinates
"""

import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from structures.hyperedges import Edge, as_edge, is_shuffle_edge, is_sorted_edge
from utils.errors import DuplicateEdgeError, InputError, MissingCoordinatesError

logger = logging.getLogger(__name__)


class Hyperdigraph:
    """A finite vertex universe 0..n-1 plus a set of directed hyperedges.

    Edges are stored graded by dimension p = len(edge) - 1, each grade in
    lexicographic order so every matrix layout built from it is reproducible.
    Instances are immutable after construction.
    """

    def __init__(
        self,
        n_vertices: int,
        edges: Iterable[Sequence[int]] = (),
        coords: Optional[Union[Sequence[Sequence[float]], np.ndarray]] = None,
    ):
        if isinstance(n_vertices, bool) or not isinstance(n_vertices, int) or n_vertices < 0:
            raise InputError(f"Vertex count must be a non-negative integer, got {n_vertices!r}")
        self._n_vertices = n_vertices

        seen = set()
        grades: Dict[int, List[Edge]] = {}
        for raw in edges:
            edge = as_edge(raw)
            for v in edge:
                if v >= n_vertices:
                    raise InputError(
                        f"Hyperedge {edge} references vertex {v} outside 0..{n_vertices - 1}"
                    )
            if edge in seen:
                raise DuplicateEdgeError(f"Hyperedge {edge} occurs more than once")
            seen.add(edge)
            grades.setdefault(len(edge) - 1, []).append(edge)

        self._edge_set = frozenset(seen)
        self._grades: Dict[int, Tuple[Edge, ...]] = {
            p: tuple(sorted(grade)) for p, grade in grades.items()
        }
        self._coords = self._check_coords(coords)

    def _check_coords(self, coords) -> Optional[np.ndarray]:
        if coords is None:
            return None
        array = np.asarray(coords, dtype=float)
        if array.ndim == 1 and self._n_vertices == 0 and array.size == 0:
            array = array.reshape(0, 0)
        if array.ndim != 2 or array.shape[0] != self._n_vertices:
            raise InputError(
                f"Expected one coordinate vector per vertex ({self._n_vertices}), "
                f"got shape {array.shape}"
            )
        if not np.all(np.isfinite(array)):
            raise InputError("Coordinates must be finite")
        array.setflags(write=False)
        return array

    @property
    def n_vertices(self) -> int:
        return self._n_vertices

    @property
    def coords(self) -> Optional[np.ndarray]:
        return self._coords

    @property
    def has_coords(self) -> bool:
        return self._coords is not None

    def require_coords(self) -> np.ndarray:
        if self._coords is None:
            raise MissingCoordinatesError("This operation needs vertex coordinates")
        return self._coords

    @property
    def max_dim(self) -> int:
        """Largest edge dimension present, -1 when there are no edges"""
        return max(self._grades) if self._grades else -1

    def edges(self, p: int) -> Tuple[Edge, ...]:
        """Directed p-hyperedges in canonical (lexicographic) order"""
        return self._grades.get(p, ())

    def all_edges(self) -> Iterator[Edge]:
        for p in sorted(self._grades):
            yield from self._grades[p]

    def has_edge(self, edge: Sequence[int]) -> bool:
        return tuple(edge) in self._edge_set

    def grade_sizes(self) -> Dict[int, int]:
        return {p: len(grade) for p, grade in sorted(self._grades.items())}

    @property
    def is_hypergraph(self) -> bool:
        return all(is_sorted_edge(e) for e in self._edge_set)

    def subcomplex(self, edges: Iterable[Sequence[int]]) -> "Hyperdigraph":
        """Same vertex universe and coordinates, restricted edge set"""
        return Hyperdigraph(self._n_vertices, edges, self._coords)

    def __contains__(self, edge) -> bool:
        return self.has_edge(edge)

    def __len__(self) -> int:
        return len(self._edge_set)

    def __iter__(self) -> Iterator[Edge]:
        return self.all_edges()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hyperdigraph):
            return NotImplemented
        if self._n_vertices != other._n_vertices or self._edge_set != other._edge_set:
            return False
        if (self._coords is None) != (other._coords is None):
            return False
        return self._coords is None or np.array_equal(self._coords, other._coords)

    def __hash__(self) -> int:
        return hash((self._n_vertices, self._edge_set))

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(n_vertices={self._n_vertices}, "
            f"grades={self.grade_sizes()})"
        )


class Hypergraph(Hyperdigraph):
    """A hyperdigraph whose edges are vertex sets, stored sorted.

    Unsorted input sets are canonically sorted; two inputs that sort to
    the same set are duplicates.
    """

    def __init__(
        self,
        n_vertices: int,
        edges: Iterable[Iterable[int]] = (),
        coords=None,
    ):
        canonical = []
        for raw in edges:
            vertices = list(raw)
            as_edge(vertices)
            canonical.append(tuple(sorted(vertices)))
        super().__init__(n_vertices, canonical, coords)

    def subcomplex(self, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        return Hypergraph(self.n_vertices, edges, self.coords)


def normalize_hypergraph(h: Hypergraph) -> Hyperdigraph:
    """View a hypergraph as the hyperdigraph with trivial (increasing) directions"""
    return Hyperdigraph(
        h.n_vertices, (tuple(sorted(e)) for e in h.all_edges()), h.coords
    )


def complete_hyperdigraph(n_vertices: int, max_dim: int) -> Hyperdigraph:
    """Every sequence of distinct vertices of length 1..max_dim+1"""
    if n_vertices < 0 or max_dim < 0:
        raise InputError(
            f"complete_hyperdigraph needs non-negative sizes, got ({n_vertices}, {max_dim})"
        )
    edges = [
        seq
        for length in range(1, min(max_dim + 1, n_vertices) + 1)
        for seq in permutations(range(n_vertices), length)
    ]
    return Hyperdigraph(n_vertices, edges)


def relabel(
    h: Hyperdigraph, mapping: Union[Sequence[int], Mapping[int, int]], n_vertices: Optional[int] = None
) -> Hyperdigraph:
    """Apply an injective vertex map to every edge, keeping each edge's order.

    Coordinates are not carried over.
    """
    lookup = dict(mapping) if isinstance(mapping, Mapping) else dict(enumerate(mapping))
    missing = [v for v in range(h.n_vertices) if v not in lookup]
    if missing:
        raise InputError(f"Relabeling does not cover vertices {missing}")
    images = [lookup[v] for v in range(h.n_vertices)]
    if len(set(images)) != len(images):
        raise InputError("Relabeling must be injective")
    target = n_vertices if n_vertices is not None else max(images, default=-1) + 1
    return Hyperdigraph(target, (tuple(lookup[v] for v in e) for e in h.all_edges()))


@dataclass(frozen=True)
class StructureReport:
    """Which classical object families an edge set belongs to"""

    graph: bool
    simplicial_complex: bool
    digraph: bool
    path_complex: bool
    hypergraph: bool
    hyperdigraph: bool
    shuffle: bool

    def to_dict(self) -> Dict[str, bool]:
        return {
            "graph": self.graph,
            "simplicial_complex": self.simplicial_complex,
            "digraph": self.digraph,
            "path_complex": self.path_complex,
            "hypergraph": self.hypergraph,
            "hyperdigraph": self.hyperdigraph,
            "shuffle": self.shuffle,
        }


def is_shuffle_hyperdigraph(h: Hyperdigraph) -> bool:
    return all(is_shuffle_edge(e) for e in h.all_edges())


def classify_structure(h: Hyperdigraph) -> StructureReport:
    edges = list(h.all_edges())
    lengths = {len(e) for e in edges}
    all_sorted = h.is_hypergraph

    def closed_under_faces() -> bool:
        for e in edges:
            for size in range(1, len(e)):
                for face in combinations(e, size):
                    if face not in h:
                        return False
        return True

    def closed_under_end_removal() -> bool:
        return all(
            len(e) == 1 or (e[1:] in h and e[:-1] in h) for e in edges
        )

    edge_lengths_only_two = lengths <= {2}
    report = StructureReport(
        graph=all_sorted and edge_lengths_only_two,
        simplicial_complex=all_sorted and closed_under_faces(),
        digraph=edge_lengths_only_two,
        path_complex=closed_under_end_removal(),
        hypergraph=all_sorted,
        hyperdigraph=True,
        shuffle=is_shuffle_hyperdigraph(h),
    )
    logger.debug(f"Classified {h!r}: {report}")
    return report

__all__ = [
    "Hyperdigraph",
    "Hypergraph",
    "normalize_hypergraph",
    "complete_hyperdigraph",
    "relabel",
    "StructureReport",
    "is_shuffle_hyperdigraph",
    "classify_structure",
]
