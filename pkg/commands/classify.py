"""
Classify command implementation
"""

import json
import logging

from commands.output import write_output
from formats.complex_doc import read_complex_file
from structures.hyperdigraph import classify_structure

logger = logging.getLogger(__name__)


def classify_command(args) -> int:
    """Which object families (graph, simplicial complex, path complex, ...) the input belongs to"""
    parsed = read_complex_file(args.input)
    report = classify_structure(parsed.hyperdigraph)
    write_output((json.dumps(report.to_dict(), indent=2) + "\n").encode("utf-8"), args.output)
    return 0
