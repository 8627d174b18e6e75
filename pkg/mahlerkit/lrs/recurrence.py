"""Linear recurrence sequences and Berlekamp-Massey over the rationals."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple

from mahlerkit.exactalg import UniPoly, parse_rational

logger = logging.getLogger(__name__)


class RecurrenceShapeError(ValueError):
    """Raised when the number of initial values differs from the recurrence order."""


@dataclass(frozen=True)
class LRSSpec:
    """f(n) = sum_{i=1}^d rec[i-1] f(n-i) for n >= d, with f(0..d-1) = init."""

    rec: Tuple[Fraction, ...]
    init: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.rec) != len(self.init):
            raise RecurrenceShapeError(
                f"order {len(self.rec)} recurrence needs {len(self.rec)} initial values, got {len(self.init)}"
            )

    @classmethod
    def of(cls, rec: Sequence[Any], init: Sequence[Any]) -> "LRSSpec":
        return cls(tuple(parse_rational(c) for c in rec), tuple(parse_rational(c) for c in init))

    @property
    def order(self) -> int:
        return len(self.rec)


@dataclass(frozen=True)
class BMResult:
    spec: LRSSpec
    unique: bool


def lrs_values(spec: LRSSpec, order: int) -> List[Fraction]:
    """f(0..order)."""
    out = list(spec.init[: order + 1])
    d = spec.order
    for n in range(len(out), order + 1):
        out.append(sum((spec.rec[i] * out[n - 1 - i] for i in range(d) if spec.rec[i]), Fraction(0)))
    return out


def berlekamp_massey(values: Sequence[Any]) -> BMResult:
    """Shortest recurrence generating ``values``.

    The minimal recurrence is unique when twice its order does not exceed the
    number of values; ``BMResult.unique`` records whether that holds.
    """
    s = [parse_rational(v) for v in values]
    c: List[Fraction] = [Fraction(1)]
    b: List[Fraction] = [Fraction(1)]
    length, shift, last = 0, 1, Fraction(1)
    for n, value in enumerate(s):
        discrepancy = value + sum((c[i] * s[n - i] for i in range(1, length + 1) if i < len(c)), Fraction(0))
        if not discrepancy:
            shift += 1
            continue
        factor = discrepancy / last
        previous = list(c)
        needed = len(b) + shift
        if len(c) < needed:
            c.extend([Fraction(0)] * (needed - len(c)))
        for i, bi in enumerate(b):
            c[i + shift] -= factor * bi
        if 2 * length <= n:
            length = n + 1 - length
            b, last, shift = previous, discrepancy, 1
        else:
            shift += 1
    c.extend([Fraction(0)] * (length + 1 - len(c)))
    rec = tuple(-c[i] for i in range(1, length + 1))
    spec = LRSSpec(rec, tuple(s[:length]))
    unique = 2 * length <= len(s)
    logger.debug("berlekamp-massey: order %s from %s values (unique=%s)", length, len(s), unique)
    return BMResult(spec, unique)


def lrs_to_rational(spec: LRSSpec) -> Tuple[UniPoly, UniPoly]:
    """Generating function P/Q with Q = 1 - sum c_i x^i and deg P < order."""
    q = UniPoly.of([Fraction(1)] + [-c for c in spec.rec])
    values = lrs_values(spec, spec.order - 1)
    p = [
        sum((q.coeff(i) * values[n - i] for i in range(n + 1)), Fraction(0))
        for n in range(spec.order)
    ]
    return UniPoly.of(p), q
