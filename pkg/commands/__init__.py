"""
Commands module for hyperlap
Contains all command-line subcommands
"""

from .spectra import spectra_command
from .persist import persist_command
from .pdb import pdb_command
from .reduce import reduce_command
from .classify import classify_command
from .check import check_command
from .errors import on_command_error

__all__ = [
    "spectra_command",
    "persist_command",
    "pdb_command",
    "reduce_command",
    "classify_command",
    "check_command",
    "on_command_error",
]
