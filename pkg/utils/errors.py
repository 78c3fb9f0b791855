"""
Error types for hyperlap
Every failure carries a short machine code and the CLI exit code it maps to
"""

from typing import Optional

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_INPUT = 2
EXIT_CONSISTENCY = 3


class HyperlapError(Exception):
    """Base class for all hyperlap errors"""

    code = "error"
    exit_code = EXIT_UNEXPECTED

    def __init__(self, message: str, code: Optional[str] = None):
        super().__init__(message)
        if code:
            self.code = code

    def to_dict(self):
        return {"code": self.code, "message": str(self)}


class InputError(HyperlapError):
    """Bad input: documents, PDB files, CLI arguments"""

    code = "invalid_argument"
    exit_code = EXIT_INPUT


class MalformedDocumentError(InputError):
    code = "malformed_document"


class DuplicateLabelError(InputError):
    code = "duplicate_label"


class UnknownLabelError(InputError):
    code = "unknown_label"


class RepeatedVertexError(InputError):
    code = "repeated_vertex"


class DuplicateEdgeError(InputError):
    code = "duplicate_edge"


class MissingCoordinatesError(InputError):
    code = "missing_coordinates"


class PDBParseError(InputError):
    """A malformed ATOM/HETATM line, with its 1-based line number"""

    code = "pdb_parse"

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class UnknownElementError(InputError):
    code = "unknown_element"

    def __init__(self, element: str):
        super().__init__(f"No electronegativity known for element '{element}'")
        self.element = element


class EmptySelectionError(InputError):
    code = "empty_selection"


class FiltrationOrderError(InputError):
    code = "filtration_order"

    def __init__(self, a: float, b: float):
        super().__init__(f"Persistence pair needs a <= b, got a={a}, b={b}")
        self.a = a
        self.b = b


class ConsistencyError(HyperlapError):
    """An internal cross-check failed; the numbers cannot be trusted"""

    code = "consistency"
    exit_code = EXIT_CONSISTENCY


class ZeroCountMismatchError(ConsistencyError):
    code = "zero_count_mismatch"

    def __init__(self, p: int, zero_count: int, betti: int, label: str = ""):
        where = f" ({label})" if label else ""
        super().__init__(
            f"Dimension {p}{where}: {zero_count} numeric zero eigenvalues "
            f"but exact Betti number is {betti}"
        )
        self.p = p
        self.zero_count = zero_count
        self.betti = betti


class OmegaResidualError(ConsistencyError):
    code = "omega_residual"


class RankDeficiencyError(ConsistencyError):
    code = "rank_deficiency"


class EigensolverError(ConsistencyError):
    code = "eigensolver"


class ChainMapError(ConsistencyError):
    code = "chain_map"


def exit_code_for(error: BaseException) -> int:
    """Map any exception to the process exit code"""
    if isinstance(error, HyperlapError):
        return error.exit_code
    return EXIT_UNEXPECTED
