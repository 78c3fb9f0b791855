"""
Shared helpers for the hyperlap test scripts

Every test module is pytest-collectable and can also be run directly
(python tests/test_xxx.py), in which case run_all prints a summary.
"""

import sys
import traceback
from datetime import datetime
from pathlib import Path

import numpy as np

# Add the project root to the Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from formats.complex_doc import read_complex_file  # noqa: E402

EXAMPLES = project_root / "assets" / "examples"
FIXTURES = Path(__file__).parent / "fixtures"


def load_example(name: str):
    """ParsedComplex of assets/examples/<name>.json"""
    return read_complex_file(EXAMPLES / f"{name}.json")


def example_graph(name: str):
    return load_example(name).hyperdigraph


def assert_spectrum(actual, expected, tol: float = 1e-9):
    actual = np.asarray(actual, dtype=float)
    expected = np.sort(np.asarray(expected, dtype=float))
    assert actual.shape == expected.shape, f"{actual} vs {expected}"
    assert np.max(np.abs(actual - expected), initial=0.0) <= tol, f"{actual} vs {expected}"


def run_all(namespace: dict) -> int:
    """Run every test_* callable in namespace, print a summary and return an exit code"""
    tests = [(name, func) for name, func in namespace.items() if name.startswith("test_") and callable(func)]
    passed = 0
    failed = []

    for test_name, test_func in tests:
        try:
            test_func()
            print(f"✅ PASS {test_name}")
            passed += 1
        except Exception as e:
            print(f"❌ FAIL {test_name}: {type(e).__name__} {e}")
            traceback.print_exc()
            failed.append(test_name)

    total = passed + len(failed)
    print("\n" + "=" * 50)
    print("📊 TEST SUMMARY")
    print("=" * 50)
    print(f"Total Tests: {total}")
    print(f"Passed: {passed}")
    print(f"Failed: {len(failed)}")
    if total:
        print(f"Success Rate: {(passed / total * 100):.1f}%")
    for name in failed:
        print(f"  - {name}")
    print(f"\nCompleted at: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    return 0 if not failed else 1
