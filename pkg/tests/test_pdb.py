#!/usr/bin/env python3
"""
PDB parsing and binding-site complex tests for hyperlap

Uses tests/fixtures/ligand_site.pdb: a three-atom PUT ligand fragment, five
protein carbons (three near the ligand), two protein non-carbons and a water.
"""

import json
import sys
import tempfile
from pathlib import Path

import pytest

from helpers import FIXTURES, run_all

from formats.pdb import element_from_name, parse_atom_line, parse_pdb, read_pdb_file
from formats.pdb_complex import (
    CHAIN2,
    NO_TWO_EDGES,
    build_complex_from_pdb,
    build_ligand_site,
    chain2_edges,
    load_electronegativity,
    orient,
)
from persistence.cache import SnapshotCache
from persistence.sweep import SweepMode, sweep
from utils.errors import EmptySelectionError, MalformedDocumentError, PDBParseError, UnknownElementError

FIXTURE = FIXTURES / "ligand_site.pdb"


def atoms():
    return read_pdb_file(FIXTURE)


def test_fixture_records():
    print("🧪 Testing PDB fixture parsing")
    records = atoms()
    assert len(records) == 11
    ligand = [a for a in records if a.resname == "PUT"]
    assert [a.name for a in ligand] == ["N1", "C1", "C2"]
    assert all(a.is_hetatm for a in ligand)
    assert ligand[0].element == "N"
    assert ligand[2].position == (3.0, 0.0, 0.0)


def test_blank_element_falls_back_to_name():
    line = "HETATM    9  N1  PUT A 301       0.000   0.000   0.000  1.00 15.00"
    record = parse_atom_line(line, 1)
    assert record.element == "N"
    assert element_from_name("1HB") == "H"


def test_short_line_reports_line_number():
    text = "REMARK short file\nATOM      1  CA  ALA A   1      11.104   6.134\n"
    with pytest.raises(PDBParseError) as excinfo:
        parse_pdb(text)
    assert excinfo.value.line_number == 2
    assert excinfo.value.exit_code == 2


def test_bad_number_rejected():
    line = "ATOM      1  CA  ALA A   1      11.104   abcde  -2.000  1.00 20.00           C"
    with pytest.raises(PDBParseError):
        parse_atom_line(line, 7)


def test_orientation_by_electronegativity():
    assert orient(0, 1, 2.5, 3.07) == [(0, 1)]
    assert orient(0, 1, 3.5, 2.5) == [(1, 0)]
    assert orient(0, 1, 2.5, 2.5) == [(0, 1), (1, 0)]


def test_chain2_edges():
    triples = chain2_edges([(0, 1), (1, 2), (1, 0), (2, 3)])
    assert sorted(triples) == [(0, 1, 2), (1, 2, 3)]


def test_binding_site_vertices_and_edges():
    print("🧪 Testing binding site construction")
    site = build_ligand_site(atoms(), "PUT", two_edge_rule=NO_TWO_EDGES)
    h = site.hyperdigraph
    assert site.n_ligand == 3
    assert [a.name for a in site.atoms] == ["N1", "C1", "C2", "CA", "CA", "CB"]
    assert h.edges(0) == tuple((i,) for i in range(6))
    assert set(h.edges(1)) == {
        (3, 0), (1, 3), (3, 1), (1, 4), (4, 1), (2, 4), (4, 2), (2, 5), (5, 2),
        (1, 0), (1, 2), (2, 1),
    }
    assert h.edges(2) == ()
    assert h.has_coords


def test_chain2_rule_adds_triples():
    h = build_complex_from_pdb(atoms(), "put", two_edge_rule=CHAIN2)
    assert len(h.edges(1)) == 12
    assert len(h.edges(2)) == 18
    assert (3, 1, 4) in h and (1, 3, 1) not in h


def test_empty_ligand_and_unknown_element():
    with pytest.raises(EmptySelectionError):
        build_ligand_site(atoms(), "XYZ")
    with pytest.raises(UnknownElementError):
        build_ligand_site(atoms(), "PUT", electronegativity={"C": 2.5})


def test_electronegativity_sidecar():
    with tempfile.TemporaryDirectory() as tmp:
        sidecar = Path(tmp) / "chi.json"
        sidecar.write_text(json.dumps({"n": 2.0}), encoding="utf-8")
        table = load_electronegativity(sidecar)
        assert table["N"] == 2.0 and table["C"] == 2.5
        site = build_ligand_site(atoms(), "PUT", electronegativity=table)
        assert (0, 3) in site.hyperdigraph and (3, 0) not in site.hyperdigraph

        broken = Path(tmp) / "broken.json"
        broken.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(MalformedDocumentError):
            load_electronegativity(broken)


def test_diagonal_sweep_over_fixture():
    """β_0 never increases along the distance filtration"""
    print("🧪 Testing PDB diagonal sweep")
    site = build_ligand_site(atoms(), "PUT", two_edge_rule=CHAIN2)
    rows = sweep(site.filtration(), SweepMode.diagonal(), dims=(0, 1, 2), cache=SnapshotCache(32))
    assert rows[0].a == 0.0
    assert rows[0].entries[0].betti == 6
    betti_0 = [row.entries[0].betti for row in rows]
    assert all(x >= y for x, y in zip(betti_0, betti_0[1:]))
    assert betti_0[-1] == 1


if __name__ == "__main__":
    sys.exit(run_all(globals()))
