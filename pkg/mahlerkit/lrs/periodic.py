"""Eventually periodic tables and the n^r * chi(n) decomposition."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Any, List, Optional, Sequence, Tuple

from mahlerkit.exactalg import parse_rational

logger = logging.getLogger(__name__)

DEFAULT_R_MAX = 8


class PeriodicityInputError(ValueError):
    """Raised when periodicity detection receives no values."""


class DichotomyViolation(RuntimeError):
    """A multiplicative eventually periodic table that is neither periodic
    nor eventually zero; the input data cannot be what it claims to be."""


@dataclass(frozen=True)
class EventuallyPeriodic:
    """pre, then per repeated forever; the first entry is the value at n = 1."""

    pre: Tuple[Fraction, ...]
    per: Tuple[Fraction, ...]
    evidence: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if not self.per:
            raise ValueError("the period must be nonempty")

    @classmethod
    def of(cls, pre: Sequence[Any], per: Sequence[Any], evidence: int = 0) -> "EventuallyPeriodic":
        return cls(tuple(parse_rational(c) for c in pre), tuple(parse_rational(c) for c in per), evidence)

    @classmethod
    def zero(cls) -> "EventuallyPeriodic":
        return cls((), (Fraction(0),))

    def term(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("tables are indexed from n = 1")
        if n <= len(self.pre):
            return self.pre[n - 1]
        return self.per[(n - 1 - len(self.pre)) % len(self.per)]

    def is_eventually_zero(self) -> bool:
        return not any(self.per)

    def is_zero(self) -> bool:
        return self.is_eventually_zero() and not any(self.pre)

    def masked(self, p: int) -> "EventuallyPeriodic":
        """Zero on multiples of p, re-detected over enough terms to stay exact."""
        count = len(self.pre) + 4 * len(self.per) * p + p
        values = [Fraction(0) if n % p == 0 else self.term(n) for n in range(1, count + 1)]
        detected = detect_eventually_periodic(values)
        assert isinstance(detected, EventuallyPeriodic)
        return detected

    def minimal(self) -> "EventuallyPeriodic":
        detected = detect_eventually_periodic(expand_table(self, len(self.pre) + 3 * len(self.per)))
        assert isinstance(detected, EventuallyPeriodic)
        return detected


@dataclass(frozen=True)
class NotWithinRange:
    length: int


def expand_table(chi: EventuallyPeriodic, count: int) -> List[Fraction]:
    """chi(1..count)."""
    return [chi.term(n) for n in range(1, count + 1)]


def detect_eventually_periodic(values: Sequence[Any]) -> EventuallyPeriodic | NotWithinRange:
    """Shortest (preperiod, period) pair consistent with ``values`` (read as
    h(1), h(2), ...) that shows at least two full repetitions of the period.

    Pairs are ranked by preperiod plus period length, then by period, so a
    short period that only fits the last few terms does not beat the real one.

    Raises:
        PeriodicityInputError: on empty input.
    """
    h = [parse_rational(v) for v in values]
    length = len(h)
    if not length:
        raise PeriodicityInputError("cannot detect periodicity of an empty table")
    best: Optional[Tuple[int, int]] = None
    for p in range(1, length // 2 + 1):
        if best is not None and p >= sum(best):
            break
        s = length - p
        while s > 0 and h[s - 1] == h[s - 1 + p]:
            s -= 1
        if length - s >= 2 * p and (best is None or s + p < sum(best)):
            best = (s, p)
    if best is None:
        return NotWithinRange(length)
    s, p = best
    return EventuallyPeriodic(tuple(h[:s]), tuple(h[s : s + p]), length)


def power_periodic_decompose(
    values: Sequence[Any], r_max: int = DEFAULT_R_MAX
) -> Optional[Tuple[int, EventuallyPeriodic]]:
    """Smallest r <= r_max with n -> h(n) / n^r eventually periodic on h(1..N).

    Returns None when no exponent works within the range.
    """
    h = [parse_rational(v) for v in values]
    for r in range(r_max + 1):
        detected = detect_eventually_periodic([h[n - 1] / n**r for n in range(1, len(h) + 1)])
        if isinstance(detected, EventuallyPeriodic):
            logger.debug("power-periodic split with r=%s, period %s", r, len(detected.per))
            return r, detected
    return None


class ChiClass(str, Enum):
    PERIODIC = "Periodic"
    EVENTUALLY_ZERO = "EventuallyZero"
    NOT_MULTIPLICATIVE = "NotMultiplicative"


@dataclass(frozen=True)
class ChiClassification:
    kind: ChiClass
    checked_up_to: int
    witness: Optional[Tuple[int, int]] = None


def multiplicativity_witness(values: Sequence[Fraction]) -> Optional[Tuple[int, int]]:
    """First coprime pair m <= n with f(mn) != f(m) f(n), for values f(1..N)."""
    bound = len(values)
    for m in range(1, bound + 1):
        if m * m > bound:
            break
        for n in range(m, bound // m + 1):
            if gcd(m, n) == 1 and values[m * n - 1] != values[m - 1] * values[n - 1]:
                return m, n
    return None


def classify_mult_ev_periodic(chi: EventuallyPeriodic, check_range: Optional[int] = None) -> ChiClassification:
    """Periodic or eventually zero for a multiplicative table.

    Raises:
        DichotomyViolation: if chi is multiplicative on the range but neither.
    """
    bound = check_range or max(64, 2 * (len(chi.pre) + len(chi.per)) ** 2)
    witness = multiplicativity_witness(expand_table(chi, bound))
    if witness is not None:
        return ChiClassification(ChiClass.NOT_MULTIPLICATIVE, bound, witness)
    if chi.is_eventually_zero():
        return ChiClassification(ChiClass.EVENTUALLY_ZERO, bound)
    if not chi.minimal().pre:
        return ChiClassification(ChiClass.PERIODIC, bound)
    raise DichotomyViolation(
        f"classification dichotomy violated: table with preperiod {len(chi.minimal().pre)} "
        "is multiplicative but neither periodic nor eventually zero"
    )
