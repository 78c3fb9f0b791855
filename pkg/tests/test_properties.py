#!/usr/bin/env python3
"""
Randomized property tests for hyperlap

Every property runs over config.PROPERTY_INSTANCES seeded hyperdigraphs
(PROPERTY_SEED / PROPERTY_INSTANCES in the environment change the sample).
Instances stay small so exact arithmetic keeps the run short.
"""

import sys

import numpy as np
from scipy.stats import ortho_group

from helpers import assert_spectrum, run_all

import config
from commands.check import check_diagonal
from complexes.chains import boundary_matrix
from complexes.embedded import EmbeddedComplex, betti_exact, boundary_rep
from persistence.cache import SnapshotCache
from persistence.persistent import persistent_betti_exact, persistent_harmonic_dim
from reduction.reduce import chain_map_defect, induced_homology_ranks
from spectral.laplacian import (
    connectivity_check,
    count_zeros,
    hodge_dimensions,
    laplacian_from_boundaries,
    laplacian_matrix,
    spectrum,
)
from structures.hyperdigraph import relabel
from utils.random_complexes import make_rng, random_filtration, random_hyperdigraph, random_injection


def instances(offset: int = 0, **kwargs):
    rng = make_rng(config.PROPERTY_SEED + offset)
    for _ in range(config.PROPERTY_INSTANCES):
        yield rng, random_hyperdigraph(rng, **kwargs)


def random_rotation(rng, size: int) -> np.ndarray:
    if size == 0:
        return np.zeros((0, 0))
    if size == 1:
        return np.array([[rng.choice([-1.0, 1.0])]])
    return ortho_group.rvs(size, random_state=rng)


def test_boundary_squares_to_zero():
    print("🧪 Testing d d = 0 on random hyperdigraphs")
    for _, h in instances(0, max_vertices=7, max_dim=3):
        for p in range(2, h.max_dim + 1):
            outer, faces = boundary_matrix(h.edges(p))
            inner, _ = boundary_matrix(faces)
            assert inner.rows == 0 or (inner @ outer).is_zero(), h


def test_zero_count_equals_betti():
    print("🧪 Testing zero eigenvalue counts against exact Betti numbers")
    for _, h in instances(1, max_vertices=6, max_dim=3):
        complex_ = EmbeddedComplex(h)
        for p in complex_.dims:
            eigenvalues = spectrum(laplacian_matrix(complex_, p))
            assert count_zeros(eigenvalues) == betti_exact(complex_, p), (h, p)
            dims = hodge_dimensions(complex_, p)
            assert dims["dim"] == dims["betti"] + dims["rank_boundary"] + dims["rank_coboundary"], (h, p)


def test_spectrum_ignores_choice_of_orthonormal_basis():
    """Rotating every Omega_p basis conjugates L_p"""
    print("🧪 Testing spectra under orthonormal re-basing")
    for rng, h in instances(2, max_vertices=5, max_dim=2):
        complex_ = EmbeddedComplex(h)
        top = complex_.max_dim + 1
        rotated = {
            p: complex_.ortho_basis(p) @ random_rotation(rng, complex_.dim(p)) for p in range(top + 1)
        }

        def rotated_boundary(p: int) -> np.ndarray:
            grade = complex_.grade(p)
            if p == 0:
                return np.zeros((grade.dim, 0))
            return boundary_rep(rotated[p], rotated[p - 1], grade.ambient, complex_.generators(p - 1))

        for p in complex_.dims:
            laplacian = laplacian_from_boundaries(rotated_boundary(p), rotated_boundary(p + 1))
            assert_spectrum(spectrum(laplacian), spectrum(laplacian_matrix(complex_, p)))


def test_spectrum_ignores_vertex_names():
    for rng, h in instances(3, max_vertices=5, max_dim=2):
        moved = relabel(h, random_injection(rng, h.n_vertices, h.n_vertices + 2))
        original, renamed = EmbeddedComplex(h), EmbeddedComplex(moved)
        assert original.max_dim == renamed.max_dim
        for p in original.dims:
            assert_spectrum(
                spectrum(laplacian_matrix(renamed, p)), spectrum(laplacian_matrix(original, p))
            )


def test_pi_is_a_chain_map():
    print("🧪 Testing pi d = d pi on random edges")
    for _, h in instances(4, max_vertices=6, max_dim=3):
        for edge in h.all_edges():
            assert chain_map_defect(edge) == {}, edge


def test_induced_rank_is_bounded():
    for _, h in instances(5, max_vertices=5, max_dim=2):
        for result in induced_homology_ranks(h):
            assert 0 <= result.rank <= min(result.source_betti, result.target_betti), (h, result)


def test_connectivity_matches_second_eigenvalue():
    print("🧪 Testing connectivity against lambda_0(2)")
    for _, h in instances(6, max_vertices=6, max_dim=2, all_vertices=True):
        report = connectivity_check(h)
        assert report.lambda0_2_positive == report.connected, (h, report)


def test_harmonic_persistence_matches_persistent_betti():
    print("🧪 Testing harmonic persistence on random filtrations")
    for rng, h in instances(7, max_vertices=5, max_dim=2):
        f = random_filtration(rng, h)
        cache = SnapshotCache(max_entries=16)
        values = f.critical_values
        for i, a in enumerate(values):
            for b in values[i:]:
                for p in range(2):
                    harmonic = persistent_harmonic_dim(f, a, b, p, cache=cache)
                    assert harmonic == persistent_betti_exact(f, a, b, p, cache=cache), (h, a, b, p)


def test_persistent_betti_bounded_by_snapshots():
    for rng, h in instances(8, max_vertices=5, max_dim=2):
        f = random_filtration(rng, h)
        cache = SnapshotCache(max_entries=16)
        values = f.critical_values
        for i, a in enumerate(values):
            for b in values[i:]:
                for p in range(2):
                    pair = persistent_betti_exact(f, a, b, p, cache=cache)
                    assert 0 <= pair <= persistent_betti_exact(f, a, a, p, cache=cache)


def test_diagonal_persistent_spectrum_equals_snapshot():
    rng = make_rng(config.PROPERTY_SEED + 9)
    cache = SnapshotCache(max_entries=32)
    for _ in range(config.PROPERTY_INSTANCES):
        h = random_hyperdigraph(rng, max_vertices=5, max_dim=2)
        check_diagonal(random_filtration(rng, h), cache, None)
        cache.clear()


if __name__ == "__main__":
    sys.exit(run_all(globals()))
