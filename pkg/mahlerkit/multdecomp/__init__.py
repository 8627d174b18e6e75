"""Multiplicativity analysis, the (p, g, r, chi) decomposition and the
root-of-unity identities used to study multiplicative Mahler sequences."""

from .decomposition import (
    AutomaticityReport,
    DecompositionError,
    MultiplicativeDecomposition,
    ObstructionReport,
    ObstructionStatus,
    PrimeSplitReport,
    canonicalize,
    decompose,
    is_automatic_decomposition,
    mahler_obstruction,
    prime_split_check,
    synthesize,
)
from .identities import (
    AveragingCheck,
    CoprimalityReport,
    GqReport,
    IdentityMismatchError,
    QRootReport,
    coprimality_probe,
    gq_series,
    h_series,
    q_root_probe,
    twisted_norm,
    unit_root_avg_check,
)
from .multiplicativity import (
    MultiplicativityReport,
    MultStatus,
    NotMultiplicativeError,
    check_multiplicative,
    completely_multiplicative_at,
)

__all__ = [
    "AutomaticityReport",
    "AveragingCheck",
    "CoprimalityReport",
    "DecompositionError",
    "GqReport",
    "IdentityMismatchError",
    "MultStatus",
    "MultiplicativeDecomposition",
    "MultiplicativityReport",
    "NotMultiplicativeError",
    "ObstructionReport",
    "ObstructionStatus",
    "PrimeSplitReport",
    "QRootReport",
    "canonicalize",
    "check_multiplicative",
    "completely_multiplicative_at",
    "coprimality_probe",
    "decompose",
    "gq_series",
    "h_series",
    "is_automatic_decomposition",
    "mahler_obstruction",
    "prime_split_check",
    "q_root_probe",
    "synthesize",
    "twisted_norm",
    "unit_root_avg_check",
]
