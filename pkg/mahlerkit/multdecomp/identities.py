"""Root-of-unity averaging identities and the coprimality probes behind them.

Throughout, omega is the generator zeta_q of Q(zeta_q) and F = sum f(n) x^n.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from sympy import isprime

from mahlerkit.exactalg import CycloElem, CyclotomicField, UniPoly, poly_gcd, poly_product
from mahlerkit.series import (
    SequenceSpec,
    TruncSeries,
    mahler_subst,
    scalar_mul,
    sequence_values,
    series_sub,
    series_sum,
    twist_series,
)

logger = logging.getLogger(__name__)

Source = Union[SequenceSpec, Sequence[Fraction]]


class IdentityMismatchError(RuntimeError):
    """Two independent computations of the same series disagree."""

    def __init__(self, exponent: int):
        self.exponent = exponent
        super().__init__(f"dual computations of H differ at x^{exponent}")


def _series(source: Source, order: int) -> TruncSeries:
    if isinstance(source, (list, tuple)):
        if len(source) < order + 1:
            raise ValueError(f"need f(0..{order}), got {len(source)} values")
        values = list(source[: order + 1])
    else:
        values = sequence_values(source, order)  # type: ignore[arg-type]
    return TruncSeries.of([Fraction(v) for v in values])


def _check_q(q: int) -> None:
    if q < 3 or not isprime(q):
        raise ValueError(f"q must be an odd prime, got {q}")


def _twist_sum(series: TruncSeries, q: int, weight: int = 0) -> TruncSeries:
    """sum_j omega^(-weight*j) F(omega^j x)."""
    zeta = CycloElem.zeta(q)
    terms = []
    for j in range(q):
        twisted = twist_series(series, zeta, j).to_field(CyclotomicField(q))
        terms.append(scalar_mul(zeta ** (-weight * j), twisted) if weight else twisted)
    return series_sum(terms)


@dataclass(frozen=True)
class GqReport:
    series: TruncSeries
    supported_on_q2: bool
    offending_exponent: Optional[int] = None


def gq_series(source: Source, q: int, order: int) -> GqReport:
    """G_q = sum_j F(omega^j x) - q f(q) F(x^q) and whether its support lies
    on exponents divisible by q^2."""
    _check_q(q)
    f = _series(source, order)
    fq = f[q] if q <= order else Fraction(0)
    g = series_sub(_twist_sum(f, q), scalar_mul(q * fq, mahler_subst(f, q, cap=order)))
    offending = next((n for n, c in enumerate(g.coeffs) if c and n % (q * q)), None)
    logger.debug("G_%s to order %s: offending exponent %s", q, order, offending)
    return GqReport(g, offending is None, offending)


def h_series(source: Source, q: int, order: int) -> TruncSeries:
    """H = sum_j omega^(-j) F(omega^j x), checked against sum_m q f(qm+1) x^(qm+1).

    Raises:
        IdentityMismatchError: if the two computations differ.
    """
    _check_q(q)
    f = _series(source, order)
    h = _twist_sum(f, q, weight=1)
    for n in range(order + 1):
        expected = q * f[n] if n % q == 1 else 0
        if h[n] != expected:
            raise IdentityMismatchError(n)
    return h


@dataclass(frozen=True)
class AveragingCheck:
    holds: bool
    order: int
    fails_at: Optional[int] = None


def unit_root_avg_check(source: Source, q: int, order: int) -> AveragingCheck:
    """sum_j F(omega^j x) = q f(q) F(x^q), exactly through x^order."""
    _check_q(q)
    f = _series(source, order)
    fq = f[q] if q <= order else Fraction(0)
    lhs = _twist_sum(f, q)
    rhs = scalar_mul(q * fq, mahler_subst(f, q, cap=order))
    fails_at = next((n for n in range(order + 1) if lhs[n] != rhs[n]), None)
    return AveragingCheck(fails_at is None, order, fails_at)


def _is_monomial(p: UniPoly) -> bool:
    return not p.is_zero() and p.degree() == p.valuation()


@dataclass(frozen=True)
class CoprimalityReport:
    checked: int
    violations: Tuple[Tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def coprimality_probe(p: UniPoly, q: int, k: int, i_max: int = 3, n_max: int = 3) -> CoprimalityReport:
    """gcd(P(x^(k^i)), P(omega^j x^n)) over Q(zeta_q) is a power of x for
    0 <= i <= i_max, 1 <= n <= n_max and 1 <= j < q.

    Intended for P whose roots are rational, so Q(zeta_q) meets the
    splitting field of P only in Q.
    """
    _check_q(q)
    field = CyclotomicField(q)
    zeta = CycloElem.zeta(q)
    base = p.to_field(field)
    twisted = [base.twist(zeta**j) for j in range(1, q)]
    violations: List[Tuple[int, int, int]] = []
    checked = 0
    for i in range(i_max + 1):
        left = base.compose_power(k**i)
        for n in range(1, n_max + 1):
            for j, tw in enumerate(twisted, start=1):
                checked += 1
                if not _is_monomial(poly_gcd(left, tw.compose_power(n))):
                    violations.append((i, n, j))
    logger.debug("coprimality probe: %s gcds, %s violations", checked, len(violations))
    return CoprimalityReport(checked, tuple(violations))


def twisted_norm(p: UniPoly, q: int) -> UniPoly:
    """prod_{j=1}^{q-1} P(omega^j y), which has rational coefficients."""
    zeta = CycloElem.zeta(q)
    field = CyclotomicField(q)
    product = poly_product((p.to_field(field).twist(zeta**j) for j in range(1, q)), field)
    return UniPoly.of([c.as_rational() for c in product.coeffs])


@dataclass(frozen=True)
class QRootReport:
    ok: bool
    searched_up_to: int
    divides_at: Optional[int] = None


def q_root_probe(p: UniPoly, q_poly: UniPoly, q: int, k: int, e_max: int = 2) -> QRootReport:
    """Q(x^(q^2)) must not divide prod_{i<=e} prod_{j<q} P(x^(q k^i)) P(omega^j x^(k^i))
    for non-monomial Q, rational-root P and gcd(2k, q) = 1.

    The j = 0 factor P(x^(k^i)) is kept apart from the rational norm of
    the others, so the product is computed over Q.
    """
    _check_q(q)
    if _is_monomial(q_poly):
        raise ValueError("Q must not be a monomial")
    target = q_poly.compose_power(q * q)
    norm = twisted_norm(p, q)
    product = UniPoly.one()
    for e in range(e_max + 1):
        s = k**e
        product = product * p.compose_power(q * s) ** q * p.compose_power(s) * norm.compose_power(s)
        if target.divides(product):
            return QRootReport(False, e, e)
    return QRootReport(True, e_max)
