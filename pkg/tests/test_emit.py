#!/usr/bin/env python3
"""
Result emitter tests for hyperlap
"""

import json
import math
import sys

import pytest

from helpers import example_graph, run_all

from complexes.embedded import EmbeddedComplex
from formats.emit import curve_columns, emit, round6, spectra_to_csv, sweep_to_csv, sweep_to_json
from persistence.cache import SnapshotCache
from persistence.filtration import volume_filtration
from persistence.sweep import SweepMode, sweep
from spectral.laplacian import summarize


def triangle_rows(mode: SweepMode, dims=(0, 1, 2)):
    f = volume_filtration(example_graph("volume_triangle"))
    return sweep(f, mode, dims=dims, cache=SnapshotCache(16))


def test_round6():
    assert round6(None) is None
    assert round6(1.0442123456) == 1.04421
    assert round6(-1e-20) == 0.0
    assert math.copysign(1.0, round6(-0.0)) == 1.0
    assert round6(2.9999999999) == 3.0


def test_spectra_json():
    summary = summarize(EmbeddedComplex(example_graph("hypergraph_triangle")))
    data = json.loads(emit(summary, "json", "spectra"))
    assert sorted(data) == ["0", "1", "2"]
    assert data["0"] == {"betti": 1, "spectrum": [0.0, 3.0], "lambda_min_nonzero": 3.0}
    assert data["2"]["spectrum"] == [3.0]


def test_spectra_csv():
    summary = summarize(EmbeddedComplex(example_graph("hyperdigraph_triangle")))
    lines = spectra_to_csv(summary).splitlines()
    assert lines[0] == "dim,dim_omega,betti,lambda_min_nonzero,fiedler,spectrum"
    assert lines[1] == "0,2,1,3,3,0 3"
    assert lines[3] == "2,0,0,,,"


def test_curve_columns():
    assert curve_columns([0, 1], True) == ["param", "beta0", "beta1", "lambda0", "lambda1"]
    assert curve_columns([2], False) == ["a", "b", "beta2", "lambda2"]


def test_diagonal_csv():
    """Missing smallest nonzero eigenvalues are empty cells"""
    print("🧪 Testing diagonal curve CSV")
    text = sweep_to_csv(triangle_rows(SweepMode.diagonal()), diagonal=True)
    assert text.splitlines() == [
        "param,beta0,beta1,beta2,lambda0,lambda1,lambda2",
        "0,3,0,0,,,",
        "1.41421,2,0,0,2,2,",
        "1.73205,2,0,0,2,2,",
        "2.23607,1,0,0,3,3,3",
    ]
    assert text.endswith("\n") and "\r" not in text


def test_pairs_csv_and_json():
    rows = triangle_rows(SweepMode.from_pairs([(0.0, 5.0)]), dims=(0,))
    assert sweep_to_csv(rows, diagonal=False, dims=(0,)).splitlines() == [
        "a,b,beta0,lambda0",
        "0,5,1,3",
    ]
    data = json.loads(sweep_to_json(rows, diagonal=False))
    assert data == [
        {"a": 0.0, "b": 5.0, "dimensions": {"0": {"betti": 1, "spectrum": [0.0, 3.0, 3.0], "lambda_min_nonzero": 3.0}}}
    ]


def test_diagonal_json_uses_param():
    data = json.loads(emit(triangle_rows(SweepMode.diagonal(), dims=(0,)), "json", "curves", diagonal=True, dims=(0,)))
    assert [item["param"] for item in data] == [0.0, 1.41421, 1.73205, 2.23607]
    assert data[0]["dimensions"]["0"]["lambda_min_nonzero"] is None


def test_empty_sweep_csv_has_header_only():
    assert sweep_to_csv([], diagonal=True, dims=(0,)) == "param,beta0,lambda0\n"


def test_unknown_kind():
    with pytest.raises(ValueError):
        emit({}, "json", "histogram")


def test_repeated_sweeps_emit_identical_bytes():
    print("🧪 Testing byte-identical repeated output")
    first = emit(triangle_rows(SweepMode.diagonal()), "csv", "curves", diagonal=True)
    second = emit(triangle_rows(SweepMode.diagonal()), "csv", "curves", diagonal=True)
    assert isinstance(first, bytes)
    assert first == second
    pairs = SweepMode.from_pairs([(0.0, 2.0), (1.5, 2.5)])
    assert emit(triangle_rows(pairs), "json", "curves", diagonal=False) == emit(
        triangle_rows(pairs), "json", "curves", diagonal=False
    )
    summaries = [summarize(EmbeddedComplex(example_graph("hyperdigraph_six_vertices"))) for _ in range(2)]
    assert emit(summaries[0], "csv") == emit(summaries[1], "csv")


if __name__ == "__main__":
    sys.exit(run_all(globals()))
