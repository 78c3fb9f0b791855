#!/usr/bin/env python3
"""
Ambient boundary matrix tests for hyperlap
"""

import sys

import pytest

from helpers import example_graph, run_all

from complexes.chains import ambient_boundary_matrix, boundary_matrix, boundary_of_edge
from structures.hyperdigraph import Hyperdigraph, complete_hyperdigraph
from utils.errors import InputError
from utils.random_complexes import make_rng, random_hyperdigraph


def test_boundary_of_edge_signs():
    assert boundary_of_edge((0,)) == []
    assert boundary_of_edge((2, 0)) == [((0,), 1), ((2,), -1)]
    assert boundary_of_edge((1, 4, 3)) == [((4, 3), 1), ((1, 3), -1), ((1, 4), 1)]


def test_boundary_rows_in_first_occurrence_order():
    matrix, faces = boundary_matrix([(0, 1), (1, 2)])
    assert faces == ((1,), (0,), (2,))
    assert matrix.to_lists() == [[1, -1], [-1, 0], [0, 1]]


def test_boundary_with_fixed_faces_drops_others():
    matrix, faces = boundary_matrix([(0, 1), (1, 2)], faces=[(0,), (1,)])
    assert faces == ((0,), (1,))
    assert matrix.to_lists() == [[-1, 0], [1, -1]]


def test_boundary_squared_is_zero():
    """d_{p-1} d_p = 0 on all sequences of four vertices"""
    print("🧪 Testing d∘d = 0")
    h = complete_hyperdigraph(4, 3)
    for p in (2, 3):
        outer, faces = boundary_matrix(h.edges(p))
        inner, _ = boundary_matrix(faces)
        assert (inner @ outer).is_zero()


def test_forbidden_rows_split():
    print("🧪 Testing hyperedge / non-hyperedge face rows")
    h = example_graph("hyperdigraph_triangle")
    ambient = ambient_boundary_matrix(h, 1)
    forbidden = [ambient.face_labels[i] for i in ambient.forbidden_rows]
    allowed = [ambient.face_labels[i] for i in ambient.hyperedge_rows]
    assert forbidden == [(2,)]
    assert sorted(allowed) == [(0,), (1,)]
    assert ambient.forbidden_matrix.to_lists() == [[0, 1, -1]]


def test_aligned_reindexes_rows():
    h = Hyperdigraph(3, [(0,), (1,), (0, 1), (1, 2)])
    ambient = ambient_boundary_matrix(h, 1)
    aligned = ambient.aligned(h.edges(0))
    assert aligned.to_lists() == [[-1, 0], [1, -1]]
    assert ambient.aligned(()).shape == (0, 2)


def test_negative_dimension_rejected():
    with pytest.raises(InputError):
        ambient_boundary_matrix(Hyperdigraph(1, [(0,)]), -1)


def test_boundary_columns_have_one_entry_per_face():
    """Distinct vertices give distinct faces, so no entry of a column cancels"""
    print("🧪 Testing boundary column support")
    h = complete_hyperdigraph(5, 3)
    for p in (1, 2, 3):
        matrix, _ = boundary_matrix(h.edges(p))
        for j, column in enumerate(matrix.columns()):
            assert sum(1 for x in column if x != 0) == p + 1, h.edges(p)[j]
            assert all(x in (1, -1) for x in column if x != 0)
    rng = make_rng(31)
    for _ in range(10):
        random = random_hyperdigraph(rng, max_vertices=6, max_dim=3)
        for p in range(1, random.max_dim + 1):
            ambient = ambient_boundary_matrix(random, p)
            for column in ambient.matrix.columns():
                assert sum(1 for x in column if x != 0) == p + 1


if __name__ == "__main__":
    sys.exit(run_all(globals()))
