"""Cyclotomic polynomials, negligibility certificates and twists."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm, log
from typing import Any, Tuple

from sympy import isprime, primitive_root, sieve

from .fields import CycloElem, FieldMismatchError, cyclotomic_coefficients
from .poly import UniPoly, ZeroPolynomialError

logger = logging.getLogger(__name__)

_MIN_PROBE_PRIME = 1000


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> UniPoly:
    """Phi_d over the rationals, monic of degree phi(d)."""
    return UniPoly(tuple(Fraction(c) for c in cyclotomic_coefficients(d)))


@dataclass(frozen=True)
class NegligibilityCertificate:
    """Split P = unit * x^a * prod Phi_d^m * residual with residual monic.

    ``negligible`` is true iff the residual is constant and every listed
    order d shares a factor with k.
    """

    k: int
    x_power: int
    cyclotomic_factors: Tuple[Tuple[int, int], ...]
    residual: UniPoly
    unit: Fraction
    negligible: bool

    def reassemble(self) -> UniPoly:
        result = self.residual.scale(self.unit).shift(self.x_power)
        for d, mult in self.cyclotomic_factors:
            result = result * cyclotomic_poly(d) ** mult
        return result


@lru_cache(maxsize=None)
def _probe_root(d: int) -> Tuple[int, int]:
    """A prime p = 1 mod d together with an element of exact order d modulo p."""
    m = max(1, _MIN_PROBE_PRIME // d)
    while not isprime(m * d + 1):
        m += 1
    p = m * d + 1
    return p, pow(primitive_root(p), (p - 1) // d, p)


def _integer_coefficients(p: UniPoly) -> list[int]:
    denominator = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * denominator) for c in p.coeffs]
    content = gcd(*ints)
    return [c // content for c in ints]


def _may_vanish_at_root_of_unity(ints: list[int], d: int) -> bool:
    # Gauss's lemma: Phi_d | P over Q implies P(zeta) = 0 in F_p for zeta of order d.
    p, zeta = _probe_root(d)
    acc = 0
    for c in reversed(ints):
        acc = (acc * zeta + c) % p
    return acc == 0


def _order_bound(degree: int) -> int:
    """Every d with phi(d) <= degree lies below the returned bound (Rosser-Schoenfeld)."""
    bound = max(2 * degree + 2, 30)
    while bound / (1.7811 * log(log(bound)) + 3 / log(log(bound))) <= degree:
        bound *= 2
    return bound


@lru_cache(maxsize=4096)
def _cyclotomic_split(coeffs: Tuple[Fraction, ...]) -> Tuple[int, Tuple[Tuple[int, int], ...], UniPoly]:
    poly = UniPoly(coeffs)
    a, rest = poly.strip_x()
    factors = []
    degree = rest.degree()
    if degree > 0:
        bound = _order_bound(degree)
        ints = _integer_coefficients(rest)
        for d, phi in enumerate(sieve.totientrange(1, bound + 1), start=1):
            if phi > rest.degree():
                continue
            mult = 0
            while rest.degree() >= phi and _may_vanish_at_root_of_unity(ints, d):
                quotient, remainder = divmod(rest, cyclotomic_poly(d))
                if not remainder.is_zero():
                    break
                rest = quotient
                ints = _integer_coefficients(rest)
                mult += 1
            if mult:
                factors.append((d, mult))
    return a, tuple(factors), rest


def factor_negligible(poly: UniPoly, k: int) -> NegligibilityCertificate:
    """Certify whether every nonzero root of ``poly`` is a root of unity whose
    order shares a factor with ``k``.

    Args:
        poly: nonzero polynomial with rational coefficients.
        k: Mahler base, at least 2.

    Returns:
        NegligibilityCertificate splitting off the x-power and all cyclotomic factors.

    Raises:
        ZeroPolynomialError: on the zero polynomial.
        FieldMismatchError: if a coefficient is irrational.
    """
    if poly.is_zero():
        raise ZeroPolynomialError("zero input")
    if k < 2:
        raise ValueError("k must be at least 2")
    try:
        coeffs = tuple(c.as_rational() if isinstance(c, CycloElem) else Fraction(c) for c in poly.coeffs)
    except FieldMismatchError as exc:
        raise FieldMismatchError("negligibility needs rational coefficients") from exc
    x_power, factors, rest = _cyclotomic_split(coeffs)
    unit = rest.lead()
    residual = rest.monic()
    negligible = residual.degree() == 0 and all(gcd(d, k) > 1 for d, _ in factors)
    logger.debug("factor_negligible k=%s a=%s factors=%s residual_deg=%s", k, x_power, factors, residual.degree())
    return NegligibilityCertificate(
        k=k,
        x_power=x_power,
        cyclotomic_factors=factors,
        residual=residual,
        unit=unit,
        negligible=negligible,
    )


def is_negligible(poly: UniPoly, k: int) -> bool:
    return factor_negligible(poly, k).negligible


def twist_poly(poly: UniPoly, omega: Any, j: int) -> UniPoly:
    """Multiply the coefficient of x^m by omega^(j*m)."""
    if j == 0:
        return poly
    return poly.twist(omega**j)
