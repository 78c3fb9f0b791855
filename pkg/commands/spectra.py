"""
Spectra command implementation
"""

import logging

from complexes.embedded import EmbeddedComplex
from commands.output import write_output
from formats.complex_doc import read_complex_file
from formats.emit import emit
from spectral.laplacian import summarize

logger = logging.getLogger(__name__)


def spectra_command(args) -> int:
    """Laplacian spectra and Betti numbers of one complex - spectra --input <file>"""
    logger.info(f"Spectra command for {args.input}")
    parsed = read_complex_file(args.input)
    complex_ = EmbeddedComplex(parsed.hyperdigraph, max_dim=args.max_dim)
    summary = summarize(complex_, zero_tol=args.zero_tol, label=parsed.name or args.input)
    write_output(emit(summary, args.format, "spectra"), args.output)
    logger.info(
        f"✅ Betti numbers {[summary[p].betti for p in sorted(summary)]} for {parsed.name or args.input}"
    )
    return 0
