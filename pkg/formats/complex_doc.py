"""
Complex document format for hyperlap
JSON documents naming vertices by label, parsed into Hyperdigraphs and written back
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from structures.hyperdigraph import Hyperdigraph
from structures.hyperedges import Edge
from utils.errors import (
    DuplicateEdgeError,
    DuplicateLabelError,
    MalformedDocumentError,
    RepeatedVertexError,
    UnknownLabelError,
)

logger = logging.getLogger(__name__)


@dataclass
class ComplexDocument:
    """The on-disk form: labels define the vertex order"""

    vertices: List[str]
    directed: bool
    edges: List[List[str]]
    coords: Optional[List[List[float]]] = None
    values: Optional[List[float]] = None
    name: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {}
        if self.name:
            document["name"] = self.name
        document["vertices"] = list(self.vertices)
        document["directed"] = self.directed
        document["edges"] = [list(e) for e in self.edges]
        if self.coords is not None:
            document["coords"] = [list(c) for c in self.coords]
        if self.values is not None:
            document["values"] = list(self.values)
        return document


@dataclass
class ParsedComplex:
    """A parsed document: the hyperdigraph plus what only the document knows"""

    hyperdigraph: Hyperdigraph
    labels: List[str]
    directed: bool
    values: Optional[Dict[Edge, float]] = None
    name: Optional[str] = None
    edge_order: List[Edge] = field(default_factory=list)


def _require(condition: bool, message: str):
    if not condition:
        raise MalformedDocumentError(message)


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def load_document(text: Union[str, bytes]) -> ComplexDocument:
    """Decode JSON and check the document shape (not yet the labels)"""
    try:
        raw = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise MalformedDocumentError(f"Invalid JSON: {e}")

    _require(isinstance(raw, dict), "Document must be a JSON object")
    for key in ("vertices", "directed", "edges"):
        _require(key in raw, f"Missing required field '{key}'")
    unknown = set(raw) - {"vertices", "directed", "edges", "coords", "values", "name"}
    _require(not unknown, f"Unknown fields: {sorted(unknown)}")

    vertices = raw["vertices"]
    _require(isinstance(vertices, list), "'vertices' must be a list")
    labels = [str(v) if isinstance(v, (int, str)) and not isinstance(v, bool) else None for v in vertices]
    _require(all(label is not None for label in labels), "Vertex labels must be strings or integers")
    _require(isinstance(raw["directed"], bool), "'directed' must be true or false")

    edges = raw["edges"]
    _require(isinstance(edges, list), "'edges' must be a list")
    parsed_edges = []
    for edge in edges:
        _require(isinstance(edge, list) and edge, f"Edge {edge!r} must be a nonempty list of labels")
        parsed_edges.append([str(v) for v in edge])

    coords = raw.get("coords")
    if coords is not None:
        _require(isinstance(coords, list), "'coords' must be a list of vectors")
        _require(len(coords) == len(labels), "'coords' needs one vector per vertex")
        for vector in coords:
            _require(
                isinstance(vector, list) and all(_is_number(x) for x in vector),
                f"Coordinate vector {vector!r} must be a list of numbers",
            )
        _require(len({len(v) for v in coords}) <= 1, "Coordinate vectors must share one dimension")

    values = raw.get("values")
    if values is not None:
        _require(
            isinstance(values, list) and all(_is_number(x) for x in values),
            "'values' must be a list of numbers",
        )
        _require(len(values) == len(parsed_edges), "'values' needs one number per edge")

    name = raw.get("name")
    _require(name is None or isinstance(name, str), "'name' must be a string")

    return ComplexDocument(labels, raw["directed"], parsed_edges, coords, values, name)


def document_to_complex(document: ComplexDocument) -> ParsedComplex:
    """Map labels to ids 0..n-1 in document order and build the Hyperdigraph"""
    index: Dict[str, int] = {}
    for label in document.vertices:
        if label in index:
            raise DuplicateLabelError(f"Vertex label '{label}' is used twice")
        index[label] = len(index)

    edges: List[Edge] = []
    seen = set()
    for raw in document.edges:
        for label in raw:
            if label not in index:
                raise UnknownLabelError(f"Edge {raw} references unknown vertex '{label}'")
        if len(set(raw)) != len(raw):
            raise RepeatedVertexError(f"Edge {raw} repeats a vertex")
        edge = tuple(index[label] for label in raw)
        if not document.directed:
            edge = tuple(sorted(edge))
        if edge in seen:
            raise DuplicateEdgeError(f"Edge {raw} occurs more than once")
        seen.add(edge)
        edges.append(edge)

    h = Hyperdigraph(len(index), edges, document.coords)
    values = None
    if document.values is not None:
        values = {edge: float(v) for edge, v in zip(edges, document.values)}
    logger.debug(f"Parsed document {document.name or ''}: {h!r}")
    return ParsedComplex(h, list(document.vertices), document.directed, values, document.name, edges)


def read_complex(text: Union[str, bytes]) -> ParsedComplex:
    return document_to_complex(load_document(text))


def parse_complex(text: Union[str, bytes]) -> Hyperdigraph:
    """ComplexDocument JSON text to a Hyperdigraph (undirected inputs normalized)"""
    return read_complex(text).hyperdigraph


def read_complex_file(path: Union[str, Path]) -> ParsedComplex:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MalformedDocumentError(f"Cannot read {path}: {e}")
    return read_complex(text)


def complex_to_document(
    h: Hyperdigraph,
    labels: Optional[Sequence[str]] = None,
    directed: Optional[bool] = None,
    values: Optional[Dict[Edge, float]] = None,
    name: Optional[str] = None,
) -> ComplexDocument:
    """Canonical document: edges graded by dimension, lexicographic within a grade"""
    labels = [str(v) for v in range(h.n_vertices)] if labels is None else [str(x) for x in labels]
    if len(labels) != h.n_vertices:
        raise MalformedDocumentError(f"Need {h.n_vertices} labels, got {len(labels)}")
    directed = (not h.is_hypergraph) if directed is None else directed
    edges = list(h.all_edges())
    return ComplexDocument(
        vertices=labels,
        directed=directed,
        edges=[[labels[v] for v in e] for e in edges],
        coords=h.coords.tolist() if h.coords is not None else None,
        values=[values[e] for e in edges] if values is not None else None,
        name=name,
    )


def dump_complex(
    h: Hyperdigraph,
    labels: Optional[Sequence[str]] = None,
    directed: Optional[bool] = None,
    values: Optional[Dict[Edge, float]] = None,
    name: Optional[str] = None,
) -> str:
    document = complex_to_document(h, labels, directed, values, name)
    return json.dumps(document.to_dict(), indent=2) + "\n"


__all__ = [
    "ComplexDocument",
    "ParsedComplex",
    "load_document",
    "document_to_complex",
    "read_complex",
    "parse_complex",
    "read_complex_file",
    "complex_to_document",
    "dump_complex",
]
