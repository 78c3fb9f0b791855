#!/usr/bin/env python3
"""
Reduced hypergraph and projection tests for hyperlap
"""

import sys
from fractions import Fraction

import pytest

from helpers import example_graph, run_all

from complexes.embedded import betti_exact
from reduction.reduce import (
    boundary_chain,
    chain_map_defect,
    induced_homology_rank,
    induced_homology_ranks,
    pi_chain_map,
    pi_matrix,
    pi_of_chain,
    pi_sequence,
    reduce,
)
from structures.hyperdigraph import Hyperdigraph, complete_hyperdigraph, normalize_hypergraph, relabel
from utils.errors import ChainMapError


def test_reduce_forgets_directions():
    h = Hyperdigraph(3, [(0, 1), (1, 0), (2, 1, 0), (2,)])
    reduced = reduce(h)
    assert set(reduced.all_edges()) == {(2,), (0, 1), (0, 1, 2)}
    assert reduced.is_hypergraph


def test_pi_sequence_signs():
    assert pi_sequence((0, 1, 2)) == {(0, 1, 2): 1}
    assert pi_sequence((1, 0, 2)) == {(0, 1, 2): -1}
    assert pi_sequence((2, 0, 1)) == {(0, 1, 2): 1}


def test_pi_chain_map_cancels():
    h = Hyperdigraph(2, [(0, 1), (1, 0)])
    assert pi_chain_map(h, {(0, 1): 1, (1, 0): 1}) == {}
    assert pi_chain_map(h, {(0, 1): 2, (1, 0): -1}) == {(0, 1): Fraction(3)}
    with pytest.raises(ChainMapError):
        pi_chain_map(h, {(0, 2): 1})


def test_pi_matrix():
    h = Hyperdigraph(3, [(0, 1), (1, 0), (2, 1)])
    matrix = pi_matrix(h, 1)
    assert matrix.to_lists() == [[1, -1, 0], [0, 0, -1]]


def test_chain_map_identity_on_all_sequences():
    """pi d = d pi on every sequence of up to four vertices"""
    print("🧪 Testing pi commutes with the boundary")
    for edge in complete_hyperdigraph(4, 3).all_edges():
        assert chain_map_defect(edge) == {}, edge


def test_boundary_and_pi_of_chain():
    x = {(1, 0): 1}
    assert boundary_chain(x) == {(0,): 1, (1,): -1}
    assert pi_of_chain(boundary_chain(x)) == boundary_chain(pi_of_chain(x))


def test_counterexample_not_injective():
    print("🧪 Testing induced homology counterexamples")
    result = induced_homology_rank(example_graph("reduction_h1"), 1)
    assert (result.rank, result.source_betti, result.target_betti) == (0, 1, 0)


def test_counterexample_not_surjective():
    result = induced_homology_rank(example_graph("reduction_h2"), 2)
    assert (result.rank, result.source_betti, result.target_betti) == (0, 0, 1)


def test_hypergraph_input_gives_identity():
    h = normalize_hypergraph(reduce(example_graph("hypergraph_six_vertices")))
    for result in induced_homology_ranks(h):
        assert result.rank == result.source_betti == result.target_betti
        assert result.rank == betti_exact(h, result.p)


def test_rank_is_bounded():
    for name in ("hyperdigraph_six_vertices", "complete_three", "shuffle_five"):
        for result in induced_homology_ranks(example_graph(name)):
            assert 0 <= result.rank <= min(result.source_betti, result.target_betti), (name, result)


def test_relabeling_commutes_with_pi():
    """reduce then relabel equals relabel then reduce, sign by sign"""
    h = example_graph("hyperdigraph_six_vertices")
    mapping = {0: 3, 1: 0, 2: 5, 3: 1, 4: 2, 5: 4}
    moved = relabel(h, mapping)
    for edge in h.all_edges():
        ((face, sign),) = pi_sequence(edge).items()
        oriented = pi_sequence(tuple(mapping[v] for v in face))
        pushed = {key: sign * c for key, c in oriented.items()}
        assert pushed == pi_sequence(tuple(mapping[v] for v in edge))
    assert set(reduce(moved).all_edges()) == {
        tuple(sorted(mapping[v] for v in e)) for e in reduce(h).all_edges()
    }


if __name__ == "__main__":
    sys.exit(run_all(globals()))
