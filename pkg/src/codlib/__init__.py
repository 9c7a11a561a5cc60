"""Complex orthogonal designs: construction, verification, canonical forms,
and the parity-system obstruction to the even-column extension."""

from .bitvec import BitVec
from .model import (
    CodMatrix,
    Entry,
    VerificationReport,
    row_id,
    verify_numeric,
    verify_symbolic,
    zero_pattern,
)
from .generator import (
    ExtensionResult,
    InconsistencyCertificate,
    ParitySolution,
    ParitySystem,
    build_extension_system,
    check_certificate,
    construct_g,
    extend_g,
    solve_parity,
    theta,
)
from .equivalence import (
    ColPerm,
    ConjVar,
    EquivOp,
    NegCol,
    NegRow,
    NegVar,
    RenameVar,
    RowPerm,
    apply_op,
    canonicalize,
    equivalent,
    scramble,
)
from .analysis import (
    BjForm,
    BoundsReport,
    StructuralReport,
    bounds,
    extract_bj,
    max_rate,
    min_delay,
    shares_alamouti,
    structural_report,
)
from .oracle import EquivalenceClass, SearchSpec, enumerate_cods
from .errors import (
    BudgetExceededError,
    DesignError,
    InvalidDesignError,
    MalformedFileError,
    MixedConjugationError,
    ParameterError,
)

__all__ = [
    "BitVec",
    "CodMatrix",
    "Entry",
    "VerificationReport",
    "row_id",
    "verify_numeric",
    "verify_symbolic",
    "zero_pattern",
    "ExtensionResult",
    "InconsistencyCertificate",
    "ParitySolution",
    "ParitySystem",
    "build_extension_system",
    "check_certificate",
    "construct_g",
    "extend_g",
    "solve_parity",
    "theta",
    "ColPerm",
    "ConjVar",
    "EquivOp",
    "NegCol",
    "NegRow",
    "NegVar",
    "RenameVar",
    "RowPerm",
    "apply_op",
    "canonicalize",
    "equivalent",
    "scramble",
    "BjForm",
    "BoundsReport",
    "StructuralReport",
    "bounds",
    "extract_bj",
    "max_rate",
    "min_delay",
    "shares_alamouti",
    "structural_report",
    "EquivalenceClass",
    "SearchSpec",
    "enumerate_cods",
    "BudgetExceededError",
    "DesignError",
    "InvalidDesignError",
    "MalformedFileError",
    "MixedConjugationError",
    "ParameterError",
]
