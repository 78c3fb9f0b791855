"""
Utilities module for hyperlap
Contains the error hierarchy and helpers shared across packages
"""

from .errors import (
    HyperlapError,
    InputError,
    ConsistencyError,
    ZeroCountMismatchError,
    exit_code_for,
)

__all__ = [
    "HyperlapError",
    "InputError",
    "ConsistencyError",
    "ZeroCountMismatchError",
    "exit_code_for",
]
