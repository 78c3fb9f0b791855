"""
Protein-ligand complex builder for hyperlap
Turns parsed atoms into a hyperdigraph: ligand atoms plus nearby protein carbons,
edges pointing from lower to higher electronegativity
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.spatial.distance import cdist

import config
from formats.pdb import AtomRecord
from persistence.filtration import Filtration, distance_filtration
from structures.hyperdigraph import Hyperdigraph
from structures.hyperedges import Edge
from utils.errors import (
    EmptySelectionError,
    InputError,
    MalformedDocumentError,
    UnknownElementError,
)

logger = logging.getLogger(__name__)

DEFAULT_ELECTRONEGATIVITY: Dict[str, float] = {
    "H": 2.2,
    "S": 2.44,
    "C": 2.5,
    "N": 3.07,
    "O": 3.5,
}

CHAIN2 = "chain2"
NO_TWO_EDGES = "none"
TWO_EDGE_RULES = (CHAIN2, NO_TWO_EDGES)


def load_electronegativity(path: Optional[Union[str, Path]] = None) -> Dict[str, float]:
    """Default table, overridden by a JSON sidecar {element: value} when given"""
    table = dict(DEFAULT_ELECTRONEGATIVITY)
    path = path or config.ELECTRONEGATIVITY_FILE
    if not path:
        return table
    try:
        overrides = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise MalformedDocumentError(f"Cannot read electronegativity table {path}: {e}")
    if not isinstance(overrides, dict):
        raise MalformedDocumentError("Electronegativity table must be a JSON object")
    for element, value in overrides.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise MalformedDocumentError(f"Electronegativity of {element} must be a number")
        table[element[:1].upper() + element[1:].lower()] = float(value)
    logger.info(f"Loaded {len(overrides)} electronegativity overrides from {path}")
    return table


def orient(u: int, v: int, chi_u: float, chi_v: float) -> List[Edge]:
    """Low-to-high electronegativity; equal values give both directions"""
    if chi_u < chi_v:
        return [(u, v)]
    if chi_v < chi_u:
        return [(v, u)]
    return [(u, v), (v, u)]


def chain2_edges(edges: Sequence[Edge]) -> List[Edge]:
    """(u, v, w) for every composable pair (u, v), (v, w) with u != w"""
    outgoing: Dict[int, List[int]] = {}
    for u, v in edges:
        outgoing.setdefault(u, []).append(v)
    triples = []
    for u, v in edges:
        for w in outgoing.get(v, ()):
            if w != u:
                triples.append((u, v, w))
    return triples


@dataclass
class LigandSite:
    """The hyperdigraph of a binding site and the atoms behind its vertices"""

    hyperdigraph: Hyperdigraph
    atoms: List[AtomRecord]
    n_ligand: int

    @property
    def labels(self) -> List[str]:
        return [atom.label for atom in self.atoms]

    def filtration(self) -> Filtration:
        """Distance filtration; 0-hyperedges enter at 0"""
        return distance_filtration(self.hyperdigraph, name="pdb-distance")


def select_ligand(atoms: Sequence[AtomRecord], ligand_resname: str) -> List[AtomRecord]:
    target = ligand_resname.strip().upper()
    return [atom for atom in atoms if atom.resname.upper() == target]


def build_ligand_site(
    atoms: Sequence[AtomRecord],
    ligand_resname: str,
    cutoff: Optional[float] = None,
    covalent_cutoff: Optional[float] = None,
    two_edge_rule: str = NO_TWO_EDGES,
    electronegativity: Optional[Dict[str, float]] = None,
) -> LigandSite:
    """Vertices: ligand atoms, then protein carbons within cutoff of the ligand.

    1-hyperedges join ligand atoms to those carbons (within cutoff) and ligand
    atoms to each other (within the covalent distance). Protein-protein pairs
    never get an edge.
    """
    cutoff = config.CONTACT_CUTOFF if cutoff is None else cutoff
    covalent_cutoff = config.COVALENT_CUTOFF if covalent_cutoff is None else covalent_cutoff
    if not cutoff > 0:
        raise InputError(f"Contact cutoff must be positive, got {cutoff}")
    if not covalent_cutoff > 0:
        raise InputError(f"Covalent cutoff must be positive, got {covalent_cutoff}")
    if two_edge_rule not in TWO_EDGE_RULES:
        raise InputError(f"Unknown two-edge rule '{two_edge_rule}'")
    table = electronegativity or DEFAULT_ELECTRONEGATIVITY

    ligand = select_ligand(atoms, ligand_resname)
    if not ligand:
        raise EmptySelectionError(f"No atoms with residue name '{ligand_resname}'")
    ligand_xyz = np.array([a.position for a in ligand])

    candidates = [
        a for a in atoms
        if not a.is_hetatm and a.element == "C" and a.resname.upper() != ligand_resname.strip().upper()
    ]
    if candidates:
        candidate_xyz = np.array([a.position for a in candidates])
        near = cdist(candidate_xyz, ligand_xyz).min(axis=1) <= cutoff
        protein = [a for a, keep in zip(candidates, near) if keep]
    else:
        protein = []

    vertices = ligand + protein
    chi = []
    for atom in vertices:
        if atom.element not in table:
            raise UnknownElementError(atom.element)
        chi.append(table[atom.element])

    coords = np.array([a.position for a in vertices])
    n_ligand = len(ligand)
    edges: List[Edge] = [(i,) for i in range(len(vertices))]

    one_edges: List[Edge] = []
    if protein:
        contact = cdist(ligand_xyz, coords[n_ligand:])
        for i, j in zip(*np.nonzero(contact <= cutoff)):
            u, v = int(i), int(j) + n_ligand
            one_edges.extend(orient(u, v, chi[u], chi[v]))
    internal = cdist(ligand_xyz, ligand_xyz)
    for i, j in zip(*np.nonzero(np.triu(internal <= covalent_cutoff, k=1))):
        u, v = int(i), int(j)
        one_edges.extend(orient(u, v, chi[u], chi[v]))
    edges.extend(one_edges)

    if two_edge_rule == CHAIN2:
        edges.extend(chain2_edges(one_edges))

    h = Hyperdigraph(len(vertices), edges, coords)
    logger.info(
        f"🧬 Ligand site '{ligand_resname}': {n_ligand} ligand atoms, {len(protein)} protein carbons, "
        f"edges by dimension {h.grade_sizes()}"
    )
    return LigandSite(h, list(vertices), n_ligand)


def build_complex_from_pdb(
    atoms: Sequence[AtomRecord],
    ligand_resname: str,
    cutoff: Optional[float] = None,
    two_edge_rule: str = NO_TWO_EDGES,
    covalent_cutoff: Optional[float] = None,
    electronegativity: Optional[Dict[str, float]] = None,
) -> Hyperdigraph:
    return build_ligand_site(
        atoms, ligand_resname, cutoff, covalent_cutoff, two_edge_rule, electronegativity
    ).hyperdigraph


__all__ = [
    "DEFAULT_ELECTRONEGATIVITY",
    "CHAIN2",
    "NO_TWO_EDGES",
    "TWO_EDGE_RULES",
    "load_electronegativity",
    "orient",
    "chain2_edges",
    "LigandSite",
    "select_ligand",
    "build_ligand_site",
    "build_complex_from_pdb",
]
