#!/usr/bin/env python3
"""
Embedded chain complex tests for hyperlap

Omega_p bases, orthonormal bases, boundary representation matrices and
exact Betti numbers on the worked examples.
"""

import sys
from fractions import Fraction

import numpy as np
import pytest

from helpers import example_graph, run_all

from complexes.embedded import EmbeddedComplex, betti_exact, compute_omega, orthonormalize
from linalg.exact import RationalMatrix, in_span, rank, span_contains, span_equal
from structures.hyperdigraph import Hyperdigraph
from utils.errors import InputError, RankDeficiencyError
from utils.random_complexes import make_rng, random_hyperdigraph


def test_omega_of_triangle_hypergraph():
    """Inf_1 = span{{1,2}, {1,3} - {2,3}}; the 2-simplex itself is infimum"""
    print("🧪 Testing infimum chain complex of the hypergraph triangle")
    h = example_graph("hypergraph_triangle")
    complex_ = EmbeddedComplex(h)
    assert complex_.generators(1) == ((0, 1), (0, 2), (1, 2))
    expected = RationalMatrix.from_columns([[1, 0, 0], [0, 1, -1]], rows=3)
    assert span_equal(complex_.exact_basis(1), expected)
    assert complex_.dim(0) == 2
    assert complex_.dim(2) == 1

    q = complex_.ortho_basis(1)
    assert np.allclose(q[:, 0], [1, 0, 0])
    assert np.allclose(q[:, 1], [0, 1 / np.sqrt(2), -1 / np.sqrt(2)])


def test_boundary_rep_of_triangle_hypergraph():
    h = example_graph("hypergraph_triangle")
    b1 = EmbeddedComplex(h).boundary_rep(1)
    expected = np.array([[-1, 1], [-1 / np.sqrt(2), 1 / np.sqrt(2)]])
    assert b1.shape == (2, 2)
    assert np.allclose(b1, expected, atol=1e-12)


def test_boundary_rep_of_six_vertex_hypergraph():
    """B_1 rows: standard boundaries of the six edges among 1..5"""
    h = example_graph("hypergraph_six_vertices")
    complex_ = EmbeddedComplex(h)
    assert complex_.generators(0) == ((1,), (2,), (3,), (4,), (5,))
    b1 = complex_.boundary_rep(1)
    assert b1.shape == (6, 5)
    assert np.allclose(b1[0], [-1, 1, 0, 0, 0])
    assert np.allclose(b1[1], [-1, 0, 0, 1, 0])
    assert np.allclose(b1[5], [0, 0, -1, 1, 0])
    assert complex_.dim(2) == 2


def test_empty_omega_shapes():
    """dim Omega_p = 0 gives a 0 x dim Omega_{p-1} matrix"""
    h = example_graph("hyperdigraph_triangle")
    complex_ = EmbeddedComplex(h)
    assert complex_.dim(2) == 0
    assert complex_.boundary_rep(2).shape == (0, complex_.dim(1))
    assert complex_.boundary_rep(0).shape == (2, 0)


def test_omega_zero_without_vertex_edges():
    h = example_graph("two_vertex_cycle")
    complex_ = EmbeddedComplex(h)
    assert complex_.dim(0) == 0
    assert complex_.dim(1) == 1
    assert complex_.exact_basis(1).column(0) == (1, 1)


def test_betti_numbers_of_worked_examples():
    print("🧪 Testing exact Betti numbers")
    cases = {
        "hypergraph_six_vertices": [1, 0, 0],
        "two_vertex_cycle": [0, 1],
        "hyperdigraph_triangle": [1, 1, 0],
        "hyperdigraph_six_vertices": [1, 1, 0],
        "complete_three": [1, 0, 2],
        "shuffle_five": [0, 2, 0],
    }
    for name, expected in cases.items():
        complex_ = EmbeddedComplex(example_graph(name), max_dim=len(expected) - 1)
        actual = [betti_exact(complex_, p) for p in range(len(expected))]
        assert actual == expected, f"{name}: {actual} != {expected}"


def test_shuffle_five_dimensions():
    complex_ = EmbeddedComplex(example_graph("shuffle_five"))
    assert complex_.dim(0) == 0
    assert complex_.dim(1) == 3
    assert complex_.dim(2) == 1


def test_betti_from_hyperdigraph_or_complex():
    h = example_graph("hyperdigraph_triangle")
    assert betti_exact(h, 1) == betti_exact(EmbeddedComplex(h), 1) == 1


def test_compute_omega_matches_direct_kernel():
    h = Hyperdigraph(3, [(0, 1), (1, 2), (0, 1, 2)])
    omega = compute_omega(h, 2)
    assert omega.shape == (1, 0)
    assert compute_omega(h, 0).shape == (0, 0)


def test_orthonormalize_rejects_dependent_columns():
    dependent = RationalMatrix.from_columns([[1, 1], [2, 2]], rows=2)
    with pytest.raises(RankDeficiencyError):
        orthonormalize(dependent)
    q = orthonormalize(RationalMatrix.from_columns([[0, -3], [Fraction(1), 1]], rows=2))
    assert np.allclose(q.T @ q, np.eye(2))
    assert q[1, 0] > 0


def test_grade_out_of_range():
    complex_ = EmbeddedComplex(example_graph("hypergraph_triangle"), max_dim=1)
    with pytest.raises(InputError):
        complex_.grade(3)
    with pytest.raises(InputError):
        EmbeddedComplex(example_graph("hypergraph_triangle"), max_dim=-1)


WORKED_EXAMPLES = (
    "hypergraph_triangle",
    "hypergraph_six_vertices",
    "hyperdigraph_triangle",
    "hyperdigraph_six_vertices",
    "complete_three",
    "shuffle_five",
    "five_vertex_fan",
)


def sample_complexes(seed: int, count: int = 10):
    for name in WORKED_EXAMPLES:
        yield name, EmbeddedComplex(example_graph(name))
    rng = make_rng(seed)
    for i in range(count):
        yield f"random-{i}", EmbeddedComplex(random_hyperdigraph(rng, max_vertices=5, max_dim=2))


def test_omega_is_the_largest_allowed_subspace():
    """dim Omega_p = |F_p| - rank of the non-hyperedge face rows"""
    print("🧪 Testing Omega_p maximality")
    for name, complex_ in sample_complexes(41):
        for p in range(complex_.max_dim + 2):
            grade = complex_.grade(p)
            forbidden = grade.ambient.forbidden_matrix
            assert grade.dim == len(grade.generators) - rank(forbidden), (name, p)
            if forbidden.rows:
                assert (forbidden @ grade.exact_basis).is_zero(), (name, p)


def test_boundary_of_omega_stays_in_omega():
    print("🧪 Testing d(Omega_p) inside Omega_{p-1}")
    for name, complex_ in sample_complexes(42):
        for p in range(1, complex_.max_dim + 2):
            image = complex_.grade(p).boundary_exact
            assert span_contains(complex_.exact_basis(p - 1), image), (name, p)
            for j in range(image.cols):
                assert in_span(image.column(j), complex_.exact_basis(p - 1)), (name, p, j)


def test_boundary_reps_compose_to_zero():
    """Rows index Omega_p, so d_{p-1} d_p = 0 reads B_p B_{p-1} = 0"""
    for name, complex_ in sample_complexes(43):
        for p in range(2, complex_.max_dim + 2):
            composed = complex_.boundary_rep(p) @ complex_.boundary_rep(p - 1)
            assert composed.shape == (complex_.dim(p), complex_.dim(p - 2))
            assert np.allclose(composed, 0.0, atol=1e-9), (name, p)


if __name__ == "__main__":
    sys.exit(run_all(globals()))
