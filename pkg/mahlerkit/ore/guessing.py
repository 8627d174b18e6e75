"""Search for a minimal operator M with M*F rational, by exact linear algebra."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple, Union

from mahlerkit.exactalg import UniPoly, poly_gcd, qq_matrix, to_fractions
from mahlerkit.mahler.equations import MahlerEquation, verify_equation
from mahlerkit.series import SequenceSpec, TruncSeries, spec_to_series

from .fracpoly import FracPoly
from .operators import OrePoly

logger = logging.getLogger(__name__)

SAFETY_MARGIN = 8


class GuessingError(RuntimeError):
    """Raised when the truncation is too short or no operator exists within the bounds."""


@dataclass(frozen=True)
class GuessedOperator:
    """``operator`` has coprime polynomial coefficients and ``operator * F == rational``
    holds through ``verified_order``. ``profile`` is the Mahler degree and the total
    coefficient degree of the search bound the operator was found at."""

    operator: OrePoly
    rational: FracPoly
    verified_order: int
    profile: Tuple[int, int]

    @property
    def mahler_degree(self) -> int:
        return self.operator.degree()


def _substituted_coeff(series: TruncSeries, power: int, n: int) -> Fraction:
    if n < 0 or n % power:
        return Fraction(0)
    return series[n // power]


def _degree_profiles(d: int, dx: int) -> List[Tuple[int, ...]]:
    """Bounds (e_0..e_d), ordered by total degree, then lexicographically."""
    return sorted(product(range(dx + 1), repeat=d + 1), key=lambda es: (sum(es), es))


def _system(series: TruncSeries, k: int, degrees: Sequence[int], dr: int) -> List[List[Fraction]]:
    # columns: t_{i,j} for j <= degrees[i], then a_0..a_dr
    rows = []
    for n in range(series.order + 1):
        row = [_substituted_coeff(series, k**i, n - j) for i, e in enumerate(degrees) for j in range(e + 1)]
        row.extend(Fraction(-1) if n == m else Fraction(0) for m in range(dr + 1))
        rows.append(row)
    return rows


def _split(vector: Sequence[Fraction], degrees: Sequence[int]) -> Tuple[List[UniPoly], UniPoly]:
    polys = []
    start = 0
    for e in degrees:
        polys.append(UniPoly.of(vector[start : start + e + 1]))
        start += e + 1
    return polys, UniPoly.of(vector[start:])


def _normalize(polys: Sequence[UniPoly], inhom: UniPoly) -> Tuple[List[UniPoly], FracPoly]:
    content = UniPoly.zero()
    for p in polys:
        content = poly_gcd(content, p)
    polys = [p.exact_div(content) for p in polys]
    lowest = next(p for p in polys if not p.is_zero())
    scale = 1 / lowest.coeffs[lowest.valuation()]
    return [p.scale(scale) for p in polys], FracPoly.of(inhom.scale(scale), content)


def minimal_inhomogeneous_operator(
    source: Union[SequenceSpec, TruncSeries],
    k: int,
    dm: int = 2,
    dx: int = 4,
    dr: int = 4,
    order: Optional[int] = None,
) -> GuessedOperator:
    """Find M = sum_{i<=d} T_i(x) M_k^i with coprime T_i and a rational R with M*F = R.

    The search solves T_0 F + ... + T_d F(x^{k^d}) = A for polynomials with
    deg T_i <= e_i and deg A <= dr. Profiles go by increasing Mahler degree d,
    then by increasing e_0 + ... + e_d, then lexicographically; within a
    profile the nullspace vector with the lowest free column is taken. The
    T_i are then divided by their gcd g, so R = A / g, and scaled so the
    lowest coefficient of the first nonzero T_i is 1.

    Args:
        source: Sequence specification or an already truncated series.
        k: Mahler base.
        dm: Bound on the degree in M_k.
        dx: Bound on each coefficient degree.
        dr: Bound on the degree of the polynomial A.
        order: Truncation order; required when ``source`` is a specification.

    Raises:
        GuessingError: if the truncation is too short or nothing is found.
    """
    if isinstance(source, TruncSeries):
        series = source
    else:
        if order is None:
            raise GuessingError("an order is required to expand a sequence specification")
        series = spec_to_series(source, order)
    needed = (dm + 1) * (dx + 1) + dr + 1 + SAFETY_MARGIN
    if series.order + 1 < needed:
        raise GuessingError(f"order {series.order} too short for bounds (need {needed - 1})")
    for d in range(dm + 1):
        for degrees in _degree_profiles(d, dx):
            unknowns = sum(e + 1 for e in degrees)
            basis = to_fractions(qq_matrix(_system(series, k, degrees, dr)).nullspace())
            candidates = [v for v in basis if any(v[:unknowns])]
            if not candidates:
                continue
            polys, inhom = _split(candidates[0], degrees)
            result = verify_equation(MahlerEquation(k, tuple(polys), inhom), series)
            if not result.ok:
                logger.debug("profile %s failed verification at %s", degrees, result.mismatch_exponent)
                continue
            polys, rational = _normalize(polys, inhom)
            logger.info("operator found with Mahler degree %s, coefficient degrees %s", d, degrees)
            return GuessedOperator(OrePoly.from_polys(k, polys), rational, result.order, (d, sum(degrees)))
    raise GuessingError(f"no operator with deg_M <= {dm} and coefficient degree <= {dx}")
