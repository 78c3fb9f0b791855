"""
Shared helpers for hyperlap commands
Argument parsing for dimension lists and sweep modes, and result output
"""

import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from persistence.sweep import DIAGONAL, GRID, PAIRS, SweepMode
from utils.errors import InputError

logger = logging.getLogger(__name__)


def parse_dims(text: Optional[str], default: Sequence[int] = (0, 1, 2)) -> List[int]:
    """'0,1,2' -> [0, 1, 2]"""
    if text is None:
        return list(default)
    try:
        dims = sorted({int(part) for part in text.split(",") if part.strip()})
    except ValueError:
        raise InputError(f"--dims expects comma-separated integers, got '{text}'")
    if not dims or dims[0] < 0:
        raise InputError(f"--dims expects non-negative integers, got '{text}'")
    return dims


def _parse_float(token: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise InputError(f"Expected a number, got '{token}'")


def parse_mode(tokens: Sequence[str]) -> SweepMode:
    """--mode diagonal | pairs a:b,... | grid <step>"""
    if not tokens:
        raise InputError("--mode needs a value")
    kind, rest = tokens[0], list(tokens[1:])
    if kind == DIAGONAL:
        if rest:
            raise InputError("--mode diagonal takes no argument")
        return SweepMode.diagonal()
    if kind == PAIRS:
        specs = [s for token in rest for s in token.split(",") if s.strip()]
        if not specs:
            raise InputError("--mode pairs needs a list like 0:1,1:2")
        pairs = []
        for spec in specs:
            if spec.count(":") != 1:
                raise InputError(f"Pair '{spec}' must look like a:b")
            a, b = spec.split(":")
            pairs.append((_parse_float(a), _parse_float(b)))
        return SweepMode.from_pairs(pairs)
    if kind == GRID:
        if len(rest) != 1:
            raise InputError("--mode grid needs exactly one step value")
        return SweepMode.grid(_parse_float(rest[0]))
    raise InputError(f"Unknown mode '{kind}' (expected diagonal, pairs or grid)")


def write_output(payload: bytes, output: Optional[str] = None):
    """Write to the given file, or to stdout"""
    if output:
        path = Path(output)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(payload)
        except OSError as e:
            raise InputError(f"Cannot write {path}: {e}")
        logger.info(f"💾 Wrote {len(payload)} bytes to {path}")
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()


__all__ = ["parse_dims", "parse_mode", "write_output"]
