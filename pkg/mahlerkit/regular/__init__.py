"""Linear representations of k-regular sequences and k-kernel guessing."""

from .kernel import (
    AutomaticWithKernelSize,
    ExceedsHorizon,
    GuessResult,
    KernelBasis,
    KernelGuessError,
    NoRepWithinBounds,
    default_horizon,
    is_automatic_probe,
    kernel_guess,
    kernel_sequence,
    ladder_lrs,
    linrep_sum,
    subsequence_ap,
)
from .linrep import LinRep, LinRepShapeError, base_digits, linrep_eval, linrep_values

__all__ = [
    "AutomaticWithKernelSize",
    "ExceedsHorizon",
    "GuessResult",
    "KernelBasis",
    "KernelGuessError",
    "LinRep",
    "LinRepShapeError",
    "NoRepWithinBounds",
    "base_digits",
    "default_horizon",
    "is_automatic_probe",
    "kernel_guess",
    "kernel_sequence",
    "ladder_lrs",
    "linrep_eval",
    "linrep_sum",
    "linrep_values",
    "subsequence_ap",
]
