"""
Formats module for hyperlap
Contains complex documents, the PDB reader, the binding-site builder and result emitters
"""

from .complex_doc import parse_complex, read_complex, read_complex_file, dump_complex
from .pdb import AtomRecord, parse_pdb, read_pdb_file
from .pdb_complex import build_complex_from_pdb, build_ligand_site, load_electronegativity
from .emit import emit

__all__ = [
    "parse_complex",
    "read_complex",
    "read_complex_file",
    "dump_complex",
    "AtomRecord",
    "parse_pdb",
    "read_pdb_file",
    "build_complex_from_pdb",
    "build_ligand_site",
    "load_electronegativity",
    "emit",
]
