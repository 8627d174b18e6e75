"""Mahler equations, their transformations and denominator certificates."""

from .denominators import (
    DenominatorCertificate,
    DenominatorVerdict,
    PreceqResult,
    PreceqStatus,
    default_s_max,
    denominator_upper_bound,
    equivalent,
    preceq,
)
from .equations import (
    EquationError,
    MahlerEquation,
    VerificationResult,
    clear_fractional,
    product_regularization,
    rational_equation,
    reduce_rational_equation,
    residual_series,
    substitute_equation,
    twist_equation,
    verify_equation,
)

__all__ = [
    "DenominatorCertificate",
    "DenominatorVerdict",
    "EquationError",
    "MahlerEquation",
    "PreceqResult",
    "PreceqStatus",
    "VerificationResult",
    "clear_fractional",
    "default_s_max",
    "denominator_upper_bound",
    "equivalent",
    "preceq",
    "product_regularization",
    "rational_equation",
    "reduce_rational_equation",
    "residual_series",
    "substitute_equation",
    "twist_equation",
    "verify_equation",
]
