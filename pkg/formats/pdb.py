"""
PDB parser module for hyperlap
Fixed-column reader for ATOM/HETATM records; every other record type is ignored
"""

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import List, Union

from utils.errors import PDBParseError

logger = logging.getLogger(__name__)

# 0-based half-open column slices of the PDB ATOM/HETATM record
RECORD = slice(0, 6)
SERIAL = slice(6, 11)
NAME = slice(12, 16)
RESNAME = slice(17, 20)
CHAIN = 21
RESSEQ = slice(22, 26)
X = slice(30, 38)
Y = slice(38, 46)
Z = slice(46, 54)
ELEMENT = slice(76, 78)

COORDINATE_END = 54


@dataclass(frozen=True)
class AtomRecord:
    serial: int
    name: str
    resname: str
    chain: str
    resseq: int
    x: float
    y: float
    z: float
    element: str
    is_hetatm: bool

    @property
    def position(self):
        return (self.x, self.y, self.z)

    @property
    def label(self) -> str:
        return f"{self.chain}:{self.resname}{self.resseq}:{self.name}#{self.serial}"


def element_from_name(name: str) -> str:
    """First alphabetic character of the atom name"""
    for char in name:
        if char.isalpha():
            return char.upper()
    return ""


def _normalize_element(symbol: str) -> str:
    symbol = symbol.strip()
    return symbol[:1].upper() + symbol[1:].lower() if symbol else ""


def parse_atom_line(line: str, line_number: int) -> AtomRecord:
    """One ATOM/HETATM line by byte position"""
    line = line.rstrip("\r\n")
    if len(line) < COORDINATE_END:
        raise PDBParseError(
            f"{line[RECORD].strip()} record is {len(line)} characters, "
            f"coordinates need {COORDINATE_END}",
            line_number,
        )
    try:
        serial = int(line[SERIAL])
        resseq = int(line[RESSEQ])
        x, y, z = float(line[X]), float(line[Y]), float(line[Z])
    except ValueError as e:
        raise PDBParseError(f"bad numeric field ({e})", line_number)
    if not all(math.isfinite(v) for v in (x, y, z)):
        raise PDBParseError("coordinates must be finite", line_number)

    name = line[NAME].strip()
    element = _normalize_element(line[ELEMENT]) or element_from_name(name)
    if not element:
        raise PDBParseError(f"cannot derive an element for atom '{name}'", line_number)

    return AtomRecord(
        serial=serial,
        name=name,
        resname=line[RESNAME].strip(),
        chain=line[CHAIN].strip(),
        resseq=resseq,
        x=x,
        y=y,
        z=z,
        element=element,
        is_hetatm=line[RECORD].strip() == "HETATM",
    )


def parse_pdb(text: str) -> List[AtomRecord]:
    atoms = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        record = line[RECORD].strip()
        if record in ("ATOM", "HETATM"):
            atoms.append(parse_atom_line(line, line_number))
    logger.debug(f"Parsed {len(atoms)} atom records")
    return atoms


def read_pdb_file(path: Union[str, Path]) -> List[AtomRecord]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8", errors="replace")
    except OSError as e:
        raise PDBParseError(f"cannot read {path}: {e}", 0)
    atoms = parse_pdb(text)
    logger.info(f"📄 Read {len(atoms)} atoms from {path.name}")
    return atoms


__all__ = [
    "AtomRecord",
    "element_from_name",
    "parse_atom_line",
    "parse_pdb",
    "read_pdb_file",
]
