"""Denominator upper-bound certificates and the bounded preorder check."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from mahlerkit.exactalg import (
    NegligibilityCertificate,
    UniPoly,
    ZeroPolynomialError,
    factor_negligible,
    poly_gcd,
)

from .equations import EquationError, MahlerEquation

logger = logging.getLogger(__name__)

DEFAULT_MAX_PRODUCT_DEGREE = 4096


class DenominatorVerdict(str, Enum):
    REGULAR_CERTIFIED = "RegularCertified"
    NOT_REGULAR_GIVEN_CANDIDATE_EXACT = "NotRegularGivenCandidateExact"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class DenominatorCertificate:
    """A multiple of the Mahler denominator, normalized so its lowest
    nonzero coefficient is 1, with the verdict it supports."""

    candidate: UniPoly
    provenance: Tuple[str, ...]
    verdict: DenominatorVerdict
    negligibility: NegligibilityCertificate


def denominator_upper_bound(eqs: Sequence[MahlerEquation], assert_exact: bool = False) -> DenominatorCertificate:
    """Gcd of the P_0 coefficients of equations already verified for one series.

    A negligible candidate certifies regularity, since the true denominator
    divides it. Otherwise the verdict stays Unknown unless the caller asserts
    the candidate is exact.

    Raises:
        EquationError: on an empty list, mismatched bases or P_0 = 0.
    """
    if not eqs:
        raise EquationError("denominator_upper_bound needs at least one equation")
    bases = {eq.k for eq in eqs}
    if len(bases) != 1:
        raise EquationError(f"equations use different bases {sorted(bases)}")
    k = eqs[0].k
    candidate = UniPoly.zero()
    provenance: Tuple[str, ...] = ()
    for eq in eqs:
        p0 = eq.coeffs[0]
        if p0.is_zero():
            raise EquationError("every equation needs P_0 != 0")
        candidate = poly_gcd(candidate, p0)
        provenance += eq.provenance + ("gcd",)
    candidate = candidate.normalize_lowest()
    certificate = factor_negligible(candidate, k)
    if certificate.negligible:
        verdict = DenominatorVerdict.REGULAR_CERTIFIED
    elif assert_exact:
        verdict = DenominatorVerdict.NOT_REGULAR_GIVEN_CANDIDATE_EXACT
    else:
        verdict = DenominatorVerdict.UNKNOWN
    logger.info("denominator candidate of degree %s: %s", candidate.degree(), verdict.value)
    return DenominatorCertificate(candidate, provenance, verdict, certificate)


class PreceqStatus(str, Enum):
    HOLDS = "HoldsWithWitness"
    FAILS_WITHIN_BOUND = "FailsWithinBound"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class PreceqResult:
    status: PreceqStatus
    witness: Optional[UniPoly] = None
    s: Optional[int] = None
    searched_up_to: int = -1

    @property
    def holds(self) -> bool:
        return self.status is PreceqStatus.HOLDS


def default_s_max(p: UniPoly, k: int) -> int:
    """1 + ceil(log_k(1 + deg P)), computed with integers."""
    target = 1 + max(p.degree(), 0)
    exponent, power = 0, 1
    while power < target:
        power *= k
        exponent += 1
    return 1 + exponent


def preceq(
    p: UniPoly,
    q: UniPoly,
    k: int,
    s_max: Optional[int] = None,
    max_degree: int = DEFAULT_MAX_PRODUCT_DEGREE,
) -> PreceqResult:
    """Search s = 0..s_max for a negligible A with P | A * prod_{i<=s} Q(x^(k^i)).

    The smallest such A is P / gcd(P, product); the check never claims a
    global failure, and reports Unknown if the product outgrows ``max_degree``
    before the bound is reached.

    Raises:
        ZeroPolynomialError: if P or Q is zero.
    """
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomialError("preceq needs nonzero inputs")
    if s_max is None:
        s_max = default_s_max(p, k)
    product = UniPoly.one(q.field)
    for s in range(s_max + 1):
        factor = q.compose_power(k**s)
        if product.degree() + factor.degree() > max_degree:
            logger.debug("preceq product exceeds degree %s at s=%s", max_degree, s)
            return PreceqResult(PreceqStatus.UNKNOWN, searched_up_to=s - 1)
        product = product * factor
        cofactor = p.exact_div(poly_gcd(p, product))
        if factor_negligible(cofactor, k).negligible:
            return PreceqResult(PreceqStatus.HOLDS, witness=cofactor.normalize_lowest(), s=s, searched_up_to=s)
    return PreceqResult(PreceqStatus.FAILS_WITHIN_BOUND, searched_up_to=s_max)


def equivalent(p: UniPoly, q: UniPoly, k: int, s_max: Optional[int] = None) -> bool:
    """P ~ Q, witnessed within the search bound in both directions."""
    return preceq(p, q, k, s_max).holds and preceq(q, p, k, s_max).holds
