"""Linear recurrences, eventual periodicity and the power-periodic split."""

from .periodic import (
    ChiClass,
    ChiClassification,
    DichotomyViolation,
    EventuallyPeriodic,
    NotWithinRange,
    PeriodicityInputError,
    classify_mult_ev_periodic,
    detect_eventually_periodic,
    expand_table,
    multiplicativity_witness,
    power_periodic_decompose,
)
from .recurrence import (
    BMResult,
    LRSSpec,
    RecurrenceShapeError,
    berlekamp_massey,
    lrs_to_rational,
    lrs_values,
)

__all__ = [
    "BMResult",
    "ChiClass",
    "ChiClassification",
    "DichotomyViolation",
    "EventuallyPeriodic",
    "LRSSpec",
    "NotWithinRange",
    "PeriodicityInputError",
    "RecurrenceShapeError",
    "berlekamp_massey",
    "classify_mult_ev_periodic",
    "detect_eventually_periodic",
    "expand_table",
    "lrs_to_rational",
    "lrs_values",
    "multiplicativity_witness",
    "power_periodic_decompose",
]
