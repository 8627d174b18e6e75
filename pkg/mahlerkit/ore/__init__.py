"""Skew polynomial arithmetic in the Mahler operator and operator guessing."""

from .fracpoly import FracPoly
from .guessing import GuessedOperator, GuessingError, minimal_inhomogeneous_operator
from .operators import (
    FaithfulnessReport,
    FractionalCoefficientError,
    OreBaseMismatchError,
    OreDivisionByZeroError,
    OrePoly,
    apply_operator,
    clear_denominators,
    faithfulness_probe,
    ore_add,
    ore_divmod,
    ore_mul,
    ore_scalar,
    to_equation,
)

__all__ = [
    "FaithfulnessReport",
    "FracPoly",
    "FractionalCoefficientError",
    "GuessedOperator",
    "GuessingError",
    "OreBaseMismatchError",
    "OreDivisionByZeroError",
    "OrePoly",
    "apply_operator",
    "clear_denominators",
    "faithfulness_probe",
    "minimal_inhomogeneous_operator",
    "ore_add",
    "ore_divmod",
    "ore_mul",
    "ore_scalar",
    "to_equation",
]
