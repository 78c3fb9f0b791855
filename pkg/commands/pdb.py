"""
PDB command implementation
"""

import logging

from commands.output import parse_dims, write_output
from formats.emit import emit
from formats.pdb import read_pdb_file
from formats.pdb_complex import build_ligand_site, load_electronegativity
from persistence.sweep import SweepMode, sweep

logger = logging.getLogger(__name__)


def pdb_command(args) -> int:
    """Protein-ligand binding site curves from a PDB file"""
    logger.info(f"PDB command for {args.file}, ligand {args.ligand_resname}")
    dims = parse_dims(args.dims)
    atoms = read_pdb_file(args.file)
    site = build_ligand_site(
        atoms,
        args.ligand_resname,
        cutoff=args.cutoff,
        covalent_cutoff=args.covalent,
        two_edge_rule=args.two_edges,
        electronegativity=load_electronegativity(args.electronegativity),
    )
    rows = sweep(site.filtration(), SweepMode.diagonal(), dims, zero_tol=args.zero_tol)
    write_output(emit(rows, args.format, "curves", diagonal=True, dims=dims), args.output)
    logger.info(f"✅ PDB command emitted {len(rows)} snapshots")
    return 0
