"""
Result emitters for hyperlap
JSON and CSV renderings of spectral summaries and persistence sweeps
"""

import io
import json
import logging
import math
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from persistence.sweep import SweepRow
from spectral.laplacian import SpectralSummary

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.6g"
# Magnitudes below this print as 0
ZERO_FLOOR = 1e-9
DEFAULT_DIMS = (0, 1, 2)


def round6(value: Optional[float]) -> Optional[float]:
    """Six significant digits; round-off noise and -0.0 print as 0.0"""
    if value is None:
        return None
    if abs(value) < ZERO_FLOOR:
        return 0.0
    rounded = float(FLOAT_FORMAT % value)
    return 0.0 if rounded == 0 else rounded


def _entry_json(entry) -> Dict[str, Any]:
    return {
        "betti": entry.betti,
        "spectrum": [round6(x) for x in entry.spectrum],
        "lambda_min_nonzero": round6(entry.lambda_min_nonzero),
    }


def spectra_to_json(summary: Dict[int, SpectralSummary]) -> str:
    """{dimension: {betti, spectrum, lambda_min_nonzero}} for one complex"""
    document = {str(p): _entry_json(entry) for p, entry in sorted(summary.items())}
    return json.dumps(document, indent=2) + "\n"


def sweep_to_json(rows: Sequence[SweepRow], diagonal: bool) -> str:
    """One object per snapshot (diagonal) or per (a, b) pair"""
    document = []
    for row in rows:
        item: Dict[str, Any] = {"param": round6(row.a)} if diagonal else {"a": round6(row.a), "b": round6(row.b)}
        item["dimensions"] = {str(p): _entry_json(e) for p, e in sorted(row.entries.items())}
        document.append(item)
    return json.dumps(document, indent=2) + "\n"


def _to_csv(frame: pd.DataFrame) -> str:
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, na_rep="", float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def curve_columns(dims: Sequence[int], diagonal: bool) -> List[str]:
    params = ["param"] if diagonal else ["a", "b"]
    return params + [f"beta{p}" for p in dims] + [f"lambda{p}" for p in dims]


def sweep_to_csv(rows: Sequence[SweepRow], diagonal: bool, dims: Sequence[int] = DEFAULT_DIMS) -> str:
    """Betti and smallest-nonzero-eigenvalue curves, one row per snapshot or pair"""
    dims = list(dims)
    columns = curve_columns(dims, diagonal)
    records = []
    for row in rows:
        record: Dict[str, Any] = {"param": row.a} if diagonal else {"a": row.a, "b": row.b}
        for p in dims:
            record[f"beta{p}"] = row.entries[p].betti
        for p in dims:
            value = row.entries[p].lambda_min_nonzero
            record[f"lambda{p}"] = math.nan if value is None else value
        records.append(record)
    frame = pd.DataFrame(records, columns=columns)
    for p in dims:
        frame[f"beta{p}"] = frame[f"beta{p}"].astype("int64")
    return _to_csv(frame)


def spectra_to_csv(summary: Dict[int, SpectralSummary]) -> str:
    """One row per dimension; the spectrum is a space-separated list"""
    columns = ["dim", "dim_omega", "betti", "lambda_min_nonzero", "fiedler", "spectrum"]
    records = [
        {
            "dim": p,
            "dim_omega": entry.dim,
            "betti": entry.betti,
            "lambda_min_nonzero": math.nan if entry.lambda_min_nonzero is None else entry.lambda_min_nonzero,
            "fiedler": math.nan if entry.fiedler is None else entry.fiedler,
            "spectrum": " ".join(FLOAT_FORMAT % round6(x) for x in entry.spectrum),
        }
        for p, entry in sorted(summary.items())
    ]
    return _to_csv(pd.DataFrame(records, columns=columns))


def emit(results, fmt: str = "json", kind: str = "spectra", diagonal: bool = True, dims: Sequence[int] = DEFAULT_DIMS) -> bytes:
    """Render results as UTF-8 bytes.

    Args:
        results: a per-dimension summary dict (kind "spectra") or sweep rows (kind "curves")
        fmt: "json" or "csv"
        kind: "spectra" or "curves"
        diagonal: curves come from a diagonal sweep (one parameter column)
        dims: dimensions shown in curve CSV columns
    """
    if kind == "spectra":
        text = spectra_to_json(results) if fmt == "json" else spectra_to_csv(results)
    elif kind == "curves":
        text = sweep_to_json(results, diagonal) if fmt == "json" else sweep_to_csv(results, diagonal, dims)
    else:
        raise ValueError(f"Unknown result kind '{kind}'")
    return text.encode("utf-8")


__all__ = [
    "FLOAT_FORMAT",
    "round6",
    "spectra_to_json",
    "sweep_to_json",
    "curve_columns",
    "sweep_to_csv",
    "spectra_to_csv",
    "emit",
]
