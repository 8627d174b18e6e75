"""The (p, g, r, chi) form f(p^i m) = g(i) m^r chi(m) of multiplicative sequences."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from sympy import factorint

from mahlerkit.exactalg import QQ
from mahlerkit.lrs import (
    EventuallyPeriodic,
    LRSSpec,
    berlekamp_massey,
    detect_eventually_periodic,
    lrs_values,
    power_periodic_decompose,
)
from mahlerkit.lrs.periodic import DEFAULT_R_MAX
from mahlerkit.regular import AutomaticWithKernelSize, ExceedsHorizon, is_automatic_probe
from mahlerkit.series import TruncSeries, mahler_subst, scalar_mul, series_sum

from .multiplicativity import NotMultiplicativeError, check_multiplicative

logger = logging.getLogger(__name__)

LRS_PROBE_LENGTH = 400
ZERO_G = LRSSpec((Fraction(0),), (Fraction(1),))


class DecompositionError(RuntimeError):
    """Raised when no decomposition reproduces the data; ``index`` is the
    first n where re-synthesis disagrees, when there is one."""

    def __init__(self, message: str, index: Optional[int] = None):
        self.index = index
        super().__init__(message if index is None else f"{message} (first mismatch at n={index})")


@dataclass(frozen=True)
class MultiplicativeDecomposition:
    p: int
    g: LRSSpec
    r: int
    chi: EventuallyPeriodic
    verified_bound: int = field(default=0, compare=False)
    ambiguous: bool = False


def _val(n: int, p: int) -> tuple[int, int]:
    i = 0
    while n % p == 0:
        n //= p
        i += 1
    return i, n


def synthesize(dec: MultiplicativeDecomposition, order: int) -> List[Fraction]:
    """f(0..order) with f(0) = 0."""
    if order < 0:
        return []
    top = 0
    while dec.p ** (top + 1) <= order:
        top += 1
    g = lrs_values(dec.g, top)
    g += [Fraction(0)] * (top + 1 - len(g))
    out = [Fraction(0)]
    for n in range(1, order + 1):
        i, m = _val(n, dec.p)
        out.append(g[i] * m**dec.r * dec.chi.term(m))
    return out


def _zero_form(p: int, bound: int) -> MultiplicativeDecomposition:
    return MultiplicativeDecomposition(p, ZERO_G, 0, EventuallyPeriodic.zero(), bound)


def canonicalize(dec: MultiplicativeDecomposition) -> MultiplicativeDecomposition:
    """Scale g(0) to 1, minimize g, zero chi on multiples of p and minimize it.

    When chi is eventually zero, n^r is folded into chi with r = 0 and the
    result is flagged ambiguous: r is then not determined by f.
    """
    g0 = lrs_values(dec.g, 0)
    if not g0 or not g0[0] or dec.chi.is_zero():
        return _zero_form(dec.p, dec.verified_bound)
    c = g0[0]
    chi = EventuallyPeriodic.of([c * x for x in dec.chi.pre], [c * x for x in dec.chi.per]).masked(dec.p)
    if chi.is_zero():
        return _zero_form(dec.p, dec.verified_bound)
    g = berlekamp_massey([x / c for x in lrs_values(dec.g, 2 * dec.g.order + 1)]).spec
    r, ambiguous = dec.r, dec.ambiguous
    if chi.is_eventually_zero():
        pre = [Fraction(n) ** r * x for n, x in enumerate(chi.pre, start=1)]
        chi = EventuallyPeriodic.of(pre, chi.per).minimal()
        r, ambiguous = 0, True
    return MultiplicativeDecomposition(dec.p, g, r, chi, dec.verified_bound, ambiguous)


def _verified(dec: MultiplicativeDecomposition, values: Sequence[Fraction]) -> MultiplicativeDecomposition:
    bound = len(values) - 1
    rebuilt = synthesize(dec, bound)
    mismatch = next((n for n in range(1, bound + 1) if rebuilt[n] != values[n]), None)
    if mismatch is not None:
        raise DecompositionError("re-synthesis disagrees with the data", mismatch)
    return canonicalize(replace(dec, verified_bound=bound))


def _prime_power_base(k: int) -> Optional[int]:
    factors = factorint(k)
    return int(next(iter(factors))) if len(factors) == 1 else None


def decompose(
    values: Sequence[Fraction],
    k: int,
    p_override: Optional[int] = None,
    r_max: int = DEFAULT_R_MAX,
) -> MultiplicativeDecomposition:
    """Decompose a multiplicative f(0..N) (``values[0]`` is ignored).

    For k = p^e the prime p is forced; otherwise f must look like a linear
    recurrence sequence and p defaults to 2. The output is re-synthesized and
    compared on 1..N before it is canonicalized.

    Raises:
        NotMultiplicativeError: if a coprime counterexample exists in range.
        DecompositionError: if no decomposition within the bounds reproduces f.
    """
    values = [Fraction(v) for v in values]
    bound = len(values) - 1
    report = check_multiplicative(values)
    if not report.is_multiplicative:
        assert report.counterexample is not None
        raise NotMultiplicativeError(report.counterexample)

    forced = _prime_power_base(k)
    p = forced or p_override or 2
    if not any(values[1:]):
        return _zero_form(p, bound)

    if forced is not None:
        ladder = []
        power = 1
        while power <= bound:
            ladder.append(values[power])
            power *= p
        g = berlekamp_massey(ladder).spec
        masked = [Fraction(0) if n % p == 0 else values[n] for n in range(1, bound + 1)]
        split = power_periodic_decompose(masked, r_max)
        if split is None:
            raise DecompositionError(f"f restricted to n coprime to {p} is not n^r times a periodic table")
        r, chi = split
        logger.info("prime-power branch: p=%s, g of order %s, r=%s", p, g.order, r)
        return _verified(MultiplicativeDecomposition(p, g, r, chi), values)

    probe = berlekamp_massey(values[: min(bound, LRS_PROBE_LENGTH) + 1])
    if not probe.unique:
        raise DecompositionError(f"k={k} is not a prime power and f is not a recurrence sequence within range")
    split = power_periodic_decompose(values[1:], r_max)
    if split is None:
        raise DecompositionError("f is not n^r times an eventually periodic table")
    r, chi0 = split
    count = 2 * (len(chi0.pre) + len(chi0.per)) + 8
    g = berlekamp_massey([Fraction(p) ** (r * i) * chi0.term(p**i) for i in range(count)]).spec
    logger.info("recurrence branch: p=%s, r=%s, period %s", p, r, len(chi0.per))
    return _verified(MultiplicativeDecomposition(p, g, r, chi0.masked(p)), values)


@dataclass(frozen=True)
class PrimeSplitReport:
    ok: bool
    order: int
    mismatch_exponent: Optional[int] = None


def prime_split_check(values: Sequence[Fraction], p: int) -> PrimeSplitReport:
    """F(x) = sum_i f(p^i) H(x^(p^i)), H the part of F on exponents prime to p."""
    bound = len(values) - 1
    f = TruncSeries.of(values, QQ)
    h = TruncSeries.of([Fraction(0) if n % p == 0 else Fraction(values[n]) for n in range(bound + 1)], QQ)
    terms = []
    power = 1
    while power <= bound:
        terms.append(scalar_mul(values[power], mahler_subst(h, power, cap=bound)))
        power *= p
    rhs = series_sum(terms)
    mismatch = next((n for n in range(1, bound + 1) if f[n] != rhs[n]), None)
    return PrimeSplitReport(mismatch is None, bound, mismatch)


@dataclass(frozen=True)
class AutomaticityReport:
    predicted: bool
    probe: Union[AutomaticWithKernelSize, ExceedsHorizon]

    @property
    def consistent(self) -> bool:
        return self.predicted == isinstance(self.probe, AutomaticWithKernelSize)


def is_automatic_decomposition(dec: MultiplicativeDecomposition, order: int) -> AutomaticityReport:
    """r = 0 with g eventually periodic makes the synthesized sequence
    p-automatic; compare that prediction with a kernel probe."""
    g_table = lrs_values(dec.g, 4 * dec.g.order + 8)[1:]
    predicted = (dec.r == 0 or dec.chi.is_zero()) and isinstance(
        detect_eventually_periodic(g_table), EventuallyPeriodic
    )
    return AutomaticityReport(predicted, is_automatic_probe(synthesize(dec, order), dec.p))


class ObstructionStatus(str, Enum):
    NOT_MULTIPLICATIVE = "NotMultiplicative"
    DECOMPOSED = "Decomposed"
    NO_STRUCTURE = "NoMahlerStructureWithinBounds"


@dataclass(frozen=True)
class ObstructionReport:
    status: ObstructionStatus
    decomposition: Optional[MultiplicativeDecomposition] = None
    detail: str = ""


def mahler_obstruction(values: Sequence[Fraction], k: int, r_max: int = DEFAULT_R_MAX) -> ObstructionReport:
    """A multiplicative sequence without a decomposition has no Mahler
    structure for this k within the search bounds."""
    try:
        dec = decompose(values, k, r_max=r_max)
    except NotMultiplicativeError as exc:
        return ObstructionReport(ObstructionStatus.NOT_MULTIPLICATIVE, detail=str(exc))
    except DecompositionError as exc:
        return ObstructionReport(ObstructionStatus.NO_STRUCTURE, detail=str(exc))
    return ObstructionReport(ObstructionStatus.DECOMPOSED, dec)
