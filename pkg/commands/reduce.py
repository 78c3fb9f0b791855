"""
Reduce command implementation
"""

import json
import logging

from commands.output import write_output
from formats.complex_doc import complex_to_document, read_complex_file
from reduction.reduce import induced_homology_ranks, reduce

logger = logging.getLogger(__name__)


def reduce_command(args) -> int:
    """Reduced hypergraph plus the rank of the induced homology map per dimension"""
    logger.info(f"Reduce command for {args.input}")
    parsed = read_complex_file(args.input)
    reduced = reduce(parsed.hyperdigraph)
    induced = induced_homology_ranks(parsed.hyperdigraph, args.max_dim)
    document = {
        "reduced": complex_to_document(reduced, parsed.labels, directed=False, name=parsed.name).to_dict(),
        "induced": [item.to_dict() for item in induced],
    }
    write_output((json.dumps(document, indent=2) + "\n").encode("utf-8"), args.output)
    logger.info(f"✅ Reduced {len(parsed.hyperdigraph)} directed edges to {len(reduced)} hyperedges")
    return 0
