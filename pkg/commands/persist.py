"""
Persist command implementation
"""

import logging

from commands.output import parse_dims, parse_mode, write_output
from formats.complex_doc import read_complex_file
from formats.emit import emit
from persistence.filtration import FILTRATION_BUILDERS, values_filtration
from persistence.sweep import DIAGONAL, sweep

logger = logging.getLogger(__name__)


def build_filtration(parsed, kind: str):
    """Filtration of a parsed document by kind: distance, volume or values"""
    label = parsed.name or kind
    if kind == "values":
        return values_filtration(parsed.hyperdigraph, parsed.values, name=label)
    return FILTRATION_BUILDERS[kind](parsed.hyperdigraph, name=label)


def persist_command(args) -> int:
    """Persistent Betti numbers and spectra over a filtration sweep"""
    logger.info(f"Persist command for {args.input} ({args.filtration}, mode {' '.join(args.mode)})")
    mode = parse_mode(args.mode)
    dims = parse_dims(args.dims)
    parsed = read_complex_file(args.input)
    filtration = build_filtration(parsed, args.filtration)
    rows = sweep(filtration, mode, dims, zero_tol=args.zero_tol)
    payload = emit(rows, args.format, "curves", diagonal=mode.kind == DIAGONAL, dims=dims)
    write_output(payload, args.output)
    logger.info(f"✅ Persist command emitted {len(rows)} rows")
    return 0
