"""
Check command implementation
Randomized consistency harness over seeded hyperdigraphs and filtrations
"""

import json
import logging
from typing import Dict, Optional

import numpy as np

import config
from commands.output import write_output
from complexes.chains import boundary_matrix
from complexes.embedded import EmbeddedComplex
from persistence.cache import SnapshotCache
from persistence.persistent import persistent_laplacian
from reduction.reduce import chain_map_defect
from spectral.laplacian import laplacian_matrix, spectrum, summarize
from utils.errors import ChainMapError, ConsistencyError
from utils.random_complexes import make_rng, random_filtration, random_hyperdigraph

logger = logging.getLogger(__name__)


def check_boundary_squared(h) -> None:
    for p in range(2, h.max_dim + 1):
        outer, faces = boundary_matrix(h.edges(p))
        inner, _ = boundary_matrix(faces)
        if inner.rows and not (inner @ outer).is_zero():
            raise ConsistencyError(f"d_{p - 1} d_{p} != 0 on {h!r}", code="boundary_squared")


def check_chain_map(h) -> None:
    for edge in h.all_edges():
        defect = chain_map_defect(edge)
        if defect:
            raise ChainMapError(f"pi d != d pi on {edge}: {defect}")


def check_diagonal(filtration, cache: SnapshotCache, zero_tol: Optional[float]) -> None:
    for c in filtration.critical_values:
        snapshot = EmbeddedComplex(filtration.snapshot(c), max_dim=2)
        for p in range(3):
            _, entry = persistent_laplacian(filtration, c, c, p, cache=cache, max_dim=2, zero_tol=zero_tol)
            expected = spectrum(laplacian_matrix(snapshot, p))
            if len(expected) != len(entry.spectrum) or (
                len(expected) and np.max(np.abs(expected - np.array(entry.spectrum))) > 1e-9
            ):
                raise ConsistencyError(
                    f"Diagonal persistent spectrum differs from snapshot spectrum at {c}, p={p}",
                    code="diagonal",
                )


def run_checks(instances: int, seed: int, zero_tol: Optional[float] = None) -> Dict[str, int]:
    """Run every check on `instances` random complexes; raises on the first failure"""
    rng = make_rng(seed)
    counts = {"boundary_squared": 0, "zero_count": 0, "chain_map": 0, "diagonal": 0}
    cache = SnapshotCache(max_entries=64)
    for i in range(instances):
        h = random_hyperdigraph(rng, max_vertices=6, max_dim=3)
        check_boundary_squared(h)
        counts["boundary_squared"] += 1
        summarize(EmbeddedComplex(h), zero_tol=zero_tol, label=f"instance {i}")
        counts["zero_count"] += 1
        check_chain_map(h)
        counts["chain_map"] += 1
        check_diagonal(random_filtration(rng, h), cache, zero_tol)
        counts["diagonal"] += 1
        cache.clear()
    return counts


def check_command(args) -> int:
    """Randomized consistency checks - check [--instances N]"""
    instances = args.instances or config.PROPERTY_INSTANCES
    seed = config.PROPERTY_SEED if args.seed is None else args.seed
    logger.info(f"🧪 Running consistency checks on {instances} random complexes (seed {seed})")
    counts = run_checks(instances, seed, args.zero_tol)
    report = {"seed": seed, "instances": instances, "passed": counts}
    write_output((json.dumps(report, indent=2) + "\n").encode("utf-8"), args.output)
    logger.info("✅ All consistency checks passed")
    return 0
