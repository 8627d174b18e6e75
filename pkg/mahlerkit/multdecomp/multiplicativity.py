"""Multiplicativity reports for finite tables f(0..N)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from sympy import primerange

from mahlerkit.lrs import multiplicativity_witness

logger = logging.getLogger(__name__)


class NotMultiplicativeError(ValueError):
    """Raised when a sequence fails f(mn) = f(m) f(n) on a coprime pair."""

    def __init__(self, witness: Tuple[int, int]):
        self.witness = witness
        super().__init__(f"f(mn) != f(m) f(n) for coprime (m, n) = {witness}")


class MultStatus(str, Enum):
    MULTIPLICATIVE = "Multiplicative"
    COUNTEREXAMPLE = "Counterexample"


@dataclass(frozen=True)
class MultiplicativityReport:
    bound: int
    status: MultStatus
    counterexample: Optional[Tuple[int, int]]
    bad_primes: Tuple[int, ...]
    completely_multiplicative_primes: Tuple[int, ...]

    @property
    def is_multiplicative(self) -> bool:
        return self.status is MultStatus.MULTIPLICATIVE


def _ladder_breaks(values: Sequence[Fraction], q: int) -> bool:
    bound = len(values) - 1
    power = q * q
    previous = values[q]
    while power <= bound:
        if values[power] != values[q] * previous:
            return True
        previous = values[power]
        power *= q
    return False


def check_multiplicative(values: Sequence[Fraction]) -> MultiplicativityReport:
    """Exhaustive coprime-pair check and prime-power ladder analysis of f(1..N).

    ``values[0]`` is ignored; a prime q is bad when f(q^i) != f(q) f(q^(i-1))
    for some q^i <= N.
    """
    bound = len(values) - 1
    if bound < 2:
        raise ValueError("check_multiplicative needs f(1..N) with N >= 2")
    witness = multiplicativity_witness(list(values[1:]))
    bad, complete = [], []
    for q in primerange(2, bound + 1):
        (bad if _ladder_breaks(values, int(q)) else complete).append(int(q))
    status = MultStatus.MULTIPLICATIVE if witness is None else MultStatus.COUNTEREXAMPLE
    logger.debug("multiplicativity to %s: %s, %s bad primes", bound, status.value, len(bad))
    return MultiplicativityReport(bound, status, witness, tuple(bad), tuple(complete))


def completely_multiplicative_at(values: Sequence[Fraction], q: int) -> bool:
    """f(qn) = f(q) f(n) for every qn <= N."""
    bound = len(values) - 1
    return all(values[q * n] == values[q] * values[n] for n in range(1, bound // q + 1))
