"""
Reduced hypergraph module for hyperlap
Forgets edge directions, pushes chains through the signed projection pi and
measures the map it induces on embedded homology
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Sequence

from complexes.chains import boundary_of_edge
from complexes.embedded import EmbeddedComplex, betti_exact
from linalg.exact import RationalMatrix, in_span, kernel_basis, rank, to_fraction
from structures.hyperdigraph import Hyperdigraph, Hypergraph, normalize_hypergraph
from structures.hyperedges import Edge, permutation_sign
from utils.errors import ChainMapError

logger = logging.getLogger(__name__)

Chain = Dict[Edge, Fraction]


def reduce(h: Hyperdigraph) -> Hypergraph:
    """Reduced hypergraph: each directed edge's vertex set, deduplicated"""
    vertex_sets = sorted({tuple(sorted(e)) for e in h.all_edges()})
    reduced = Hypergraph(h.n_vertices, vertex_sets, h.coords)
    logger.debug(f"Reduced {len(h)} directed edges to {len(reduced)} hyperedges")
    return reduced


def pi_sequence(seq: Sequence[int]) -> Chain:
    """pi on a single sequence: sign of its sorting permutation times its vertex set"""
    return {tuple(sorted(seq)): Fraction(permutation_sign(seq))}


def pi_chain_map(h: Hyperdigraph, x: Mapping[Sequence[int], Any]) -> Chain:
    """Linear extension of pi; zero coefficients are dropped from the result"""
    out: Chain = {}
    for seq, coefficient in x.items():
        seq = tuple(seq)
        if seq not in h:
            raise ChainMapError(f"{seq} is not a directed hyperedge of the source")
        for face, sign in pi_sequence(seq).items():
            out[face] = out.get(face, Fraction(0)) + sign * to_fraction(coefficient)
    return {e: c for e, c in out.items() if c != 0}


def pi_matrix(h: Hyperdigraph, p: int, reduced: Hypergraph = None) -> RationalMatrix:
    """pi_p from F_p(h) to the span of the reduced p-hyperedges"""
    reduced = reduced or reduce(h)
    targets = reduced.edges(p)
    row_of = {e: i for i, e in enumerate(targets)}
    sources = h.edges(p)
    rows = [[0] * len(sources) for _ in targets]
    for j, seq in enumerate(sources):
        rows[row_of[tuple(sorted(seq))]][j] = permutation_sign(seq)
    return RationalMatrix(len(targets), len(sources), rows)


def boundary_chain(x: Mapping[Sequence[int], Any]) -> Chain:
    """Ambient boundary of a chain of sequences"""
    out: Chain = {}
    for seq, coefficient in x.items():
        for face, sign in boundary_of_edge(tuple(seq)):
            out[face] = out.get(face, Fraction(0)) + sign * to_fraction(coefficient)
    return {e: c for e, c in out.items() if c != 0}


def pi_of_chain(x: Mapping[Sequence[int], Any]) -> Chain:
    """pi on arbitrary chains of distinct-vertex sequences"""
    out: Chain = {}
    for seq, coefficient in x.items():
        for face, sign in pi_sequence(tuple(seq)).items():
            out[face] = out.get(face, Fraction(0)) + sign * to_fraction(coefficient)
    return {e: c for e, c in out.items() if c != 0}


def chain_map_defect(seq: Sequence[int]) -> Chain:
    """pi(d x) - d(pi x) for one sequence; empty when pi commutes with d"""
    x = {tuple(seq): 1}
    lhs = pi_of_chain(boundary_chain(x))
    rhs = boundary_chain(pi_of_chain(x))
    keys = set(lhs) | set(rhs)
    defect = {k: lhs.get(k, 0) - rhs.get(k, 0) for k in keys}
    return {k: c for k, c in defect.items() if c != 0}


@dataclass(frozen=True)
class InducedHomology:
    p: int
    rank: int
    source_betti: int
    target_betti: int

    def to_dict(self) -> Dict[str, int]:
        return {
            "p": self.p,
            "rank": self.rank,
            "source_betti": self.source_betti,
            "target_betti": self.target_betti,
        }


def induced_homology_rank(h: Hyperdigraph, p: int) -> InducedHomology:
    """Rank of H_p(pi): H_p of the hyperdigraph -> H_p of its reduced hypergraph.

    Cycles of Omega_p are pushed through pi and counted modulo the boundaries
    of Inf_{p+1}, all over the rationals.
    """
    reduced = reduce(h)
    source = EmbeddedComplex(h, max_dim=p)
    target = EmbeddedComplex(normalize_hypergraph(reduced), max_dim=p)
    projection = pi_matrix(h, p, reduced)

    grade = source.grade(p)
    image_of_omega = projection @ grade.exact_basis
    target_basis = target.exact_basis(p)
    for j, column in enumerate(image_of_omega.columns()):
        if not in_span(column, target_basis):
            raise ChainMapError(f"pi maps Omega_{p} generator {j} outside Inf_{p}")

    cycle_coordinates = kernel_basis(grade.boundary_exact)
    cycles = grade.exact_basis @ cycle_coordinates
    target_next = target.grade(p + 1)
    boundaries = target_next.boundary_exact
    base_rank = rank(boundaries)
    combined = boundaries.hstack(projection @ cycles)
    induced = rank(combined) - base_rank

    result = InducedHomology(
        p=p,
        rank=induced,
        source_betti=betti_exact(source, p),
        target_betti=betti_exact(target, p),
    )
    logger.debug(f"H_{p}(pi): {result}")
    return result


def induced_homology_ranks(h: Hyperdigraph, max_dim: int = None) -> List[InducedHomology]:
    top = max(h.max_dim, 0) if max_dim is None else max_dim
    return [induced_homology_rank(h, p) for p in range(top + 1)]


__all__ = [
    "Chain",
    "reduce",
    "pi_sequence",
    "pi_chain_map",
    "pi_matrix",
    "boundary_chain",
    "pi_of_chain",
    "chain_map_defect",
    "InducedHomology",
    "induced_homology_rank",
    "induced_homology_ranks",
]
