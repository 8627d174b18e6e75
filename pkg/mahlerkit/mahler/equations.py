"""Mahler equations sum_i P_i(x) F(x^(k^i)) = A(x) and their transformations."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

from mahlerkit.exactalg import UniPoly, poly_gcd
from mahlerkit.series import TruncSeries, mahler_subst, poly_mul_series, series_sub, series_sum

logger = logging.getLogger(__name__)


class EquationError(ValueError):
    """Raised for malformed equations or violated transformation preconditions."""


@dataclass(frozen=True)
class MahlerEquation:
    """Coefficients P_0..P_n in the summed convention; a homogeneous
    P_0 F(x) = P_1 F(x^k) is stored as ``(P_0, -P_1)``.
    """

    k: int
    coeffs: Tuple[UniPoly, ...]
    inhom: UniPoly = field(default_factory=UniPoly.zero)
    provenance: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.k < 2:
            raise EquationError(f"base k must be at least 2, got {self.k}")
        if not self.coeffs:
            raise EquationError("an equation needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_homogeneous(self) -> bool:
        return self.inhom.is_zero()

    def with_step(self, step: str, **changes: Any) -> "MahlerEquation":
        data = {"k": self.k, "coeffs": self.coeffs, "inhom": self.inhom}
        data.update(changes)
        return MahlerEquation(provenance=self.provenance + (step,), **data)

    def trimmed(self) -> "MahlerEquation":
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        return MahlerEquation(self.k, tuple(coeffs), self.inhom, self.provenance)

    def scaled(self, c: Any) -> "MahlerEquation":
        return MahlerEquation(
            self.k, tuple(p.scale(c) for p in self.coeffs), self.inhom.scale(c), self.provenance
        )

    def multiplied(self, factor: UniPoly) -> "MahlerEquation":
        return MahlerEquation(
            self.k, tuple(p * factor for p in self.coeffs), self.inhom * factor, self.provenance
        )


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    order: int
    mismatch_exponent: Optional[int] = None
    mismatch_value: Any = None


def residual_series(eq: MahlerEquation, series: TruncSeries) -> TruncSeries:
    """sum_i P_i F(x^(k^i)) - A with its provable truncation order."""
    target = min(
        series.order * eq.k**i + (0 if p.is_zero() else p.valuation())
        for i, p in enumerate(eq.coeffs)
    )
    terms = [
        poly_mul_series(p, mahler_subst(series, eq.k**i, cap=target))
        for i, p in enumerate(eq.coeffs)
    ]
    total = series_sum(terms)
    return series_sub(total, TruncSeries.from_poly(eq.inhom, total.order))


def verify_equation(eq: MahlerEquation, series: TruncSeries) -> VerificationResult:
    """Check the equation against a truncated solution.

    Returns:
        VerificationResult whose ``order`` is the largest N' such that the
        residual vanishes through x^N'; on failure the first nonzero exponent
        and coefficient are reported.

    Raises:
        EquationError: if the truncation is too short to test even order 0.
    """
    residual = residual_series(eq, series)
    if residual.order < 0:
        raise EquationError("truncation too short to test order 0")
    hit = residual.first_nonzero()
    if hit is None:
        return VerificationResult(ok=True, order=residual.order)
    exponent, value = hit
    logger.debug("equation fails at exponent %s (value %s)", exponent, value)
    return VerificationResult(ok=False, order=exponent - 1, mismatch_exponent=exponent, mismatch_value=value)


def rational_equation(p: UniPoly, q: UniPoly, k: int) -> MahlerEquation:
    """Order-1 equation P(x^k)Q(x) F(x) = P(x)Q(x^k) F(x^k) for F = P/Q."""
    if q.is_zero() or not q.coeff(0):
        raise EquationError("rational_equation needs Q(0) != 0")
    p0 = p.compose_power(k) * q
    p1 = p * q.compose_power(k)
    return MahlerEquation(k, (p0, -p1), provenance=(f"rational(k={k})",))


def reduce_rational_equation(p: UniPoly, q: UniPoly, k: int, n: int) -> MahlerEquation:
    """Equation for F = P/Q at base k^n with both sides divided by
    gcd(P(x^(k^n))Q(x), P(x)Q(x^(k^n))), scaled so P_0 has lowest coefficient 1.
    """
    if n < 1:
        raise EquationError("n must be at least 1")
    if q.is_zero() or not q.coeff(0):
        raise EquationError("reduce_rational_equation needs Q(0) != 0")
    if poly_gcd(p, q).degree() > 0:
        raise EquationError("P and Q must be coprime")
    base = k**n
    p0 = p.compose_power(base) * q
    p1 = p * q.compose_power(base)
    if p0.is_zero():
        # F = 0: the trivial equation F(x) = F(x^K)
        return MahlerEquation(base, (UniPoly.one(), -UniPoly.one()), provenance=(f"reduce_rational(k={k},n={n})",))
    common = poly_gcd(p0, p1)
    p0, p1 = p0.exact_div(common), p1.exact_div(common)
    scale = 1 / p0.coeffs[p0.valuation()]
    return MahlerEquation(
        base,
        (p0.scale(scale), -p1.scale(scale)),
        provenance=(f"reduce_rational(k={k},n={n})",),
    )


def _minimal_index_reduction(eq: MahlerEquation) -> Tuple[MahlerEquation, List[Tuple[str, int]]]:
    # Delta_s^(k)(P_i(x) G(x^k)) = Delta_s^(k)(P_i) G(x): coefficients move down one index.
    residues: List[Tuple[str, int]] = []
    current = eq
    while current.coeffs[0].is_zero():
        lowest = next(p for p in current.coeffs if not p.is_zero())
        s = next(r for r in range(current.k) if not lowest.cartier(current.k, r).is_zero())
        coeffs = tuple(p.cartier(current.k, s) for p in current.coeffs[1:])
        current = current.with_step(
            f"cartier(k={current.k},r={s})", coeffs=coeffs, inhom=current.inhom.cartier(current.k, s)
        )
        residues.append(("k", s))
    return current, residues


def substitute_equation(eq: MahlerEquation, l: int) -> Tuple[MahlerEquation, List[Tuple[str, int]]]:
    """Rewrite an equation for F in K[[x^l]] with coefficients that are
    polynomials in x^l.

    The caller asserts F lies in K[[x^l]]; verification catches violations.

    Returns:
        The new equation (Q_0 != 0) and the Cartier residues used, as
        ("k", s) for minimal-index steps and ("l", r) for the final step.

    Raises:
        EquationError: if every coefficient vanishes.
    """
    if l < 1:
        raise EquationError("l must be at least 1")
    if all(p.is_zero() for p in eq.coeffs):
        raise EquationError("all coefficients are zero")
    reduced, residues = _minimal_index_reduction(eq)
    p0 = reduced.coeffs[0]
    r = next(r for r in range(l) if not p0.cartier(l, r).is_zero())
    coeffs = tuple(p.cartier(l, r).compose_power(l) for p in reduced.coeffs)
    inhom = reduced.inhom.cartier(l, r).compose_power(l)
    residues.append(("l", r))
    logger.debug("substitute_equation l=%s residues=%s", l, residues)
    result = reduced.with_step(f"substitute(l={l},r={r})", coeffs=coeffs, inhom=inhom)
    return result.trimmed(), residues


def clear_fractional(eq: MahlerEquation, l: int) -> MahlerEquation:
    """Clear a ramified equation whose coefficients are polynomials in t = x^(1/l).

    In t the equation is a Mahler equation for F(t^l), which lies in K[[t^l]];
    substituting and compressing t^l back to x gives polynomial coefficients.

    Raises:
        EquationError: if every coefficient vanishes.
    """
    if l == 1:
        return eq
    substituted, _ = substitute_equation(eq, l)
    coeffs = tuple(p.cartier(l, 0) for p in substituted.coeffs)
    return substituted.with_step(
        f"clear_fractional(l={l})", coeffs=coeffs, inhom=substituted.inhom.cartier(l, 0)
    )


def twist_equation(eq: MahlerEquation, omega: Any) -> MahlerEquation:
    """Equation satisfied by F(omega x), valid when omega^k = omega.

    Raises:
        EquationError: if omega^k != omega.
    """
    if omega**eq.k != omega:
        raise EquationError("twist needs omega^k = omega")
    if omega == 1:
        return eq
    return eq.with_step(
        "twist",
        coeffs=tuple(p.twist(omega) for p in eq.coeffs),
        inhom=eq.inhom.twist(omega),
    )


def product_regularization(eq: MahlerEquation) -> MahlerEquation:
    """Equation for D*F with D = prod_{j>=0} P0hat(x^(k^j)), where P_0 = c x^a P0hat
    and P0hat(0) = 1. The new P_0 is c x^a and coefficient i is
    P_i * prod_{j=1}^{i-1} P0hat(x^(k^j)).

    Raises:
        EquationError: for inhomogeneous input or P_0 = 0.
    """
    if not eq.is_homogeneous:
        raise EquationError("product regularization needs a homogeneous equation")
    p0 = eq.coeffs[0]
    if p0.is_zero():
        raise EquationError("product regularization needs P_0 != 0")
    a, rest = p0.strip_x()
    c = rest.coeff(0)
    hat = rest.scale(1 / c)
    coeffs: List[UniPoly] = [UniPoly.monomial(a, c, p0.field)]
    running = UniPoly.one(p0.field)
    for i, p in enumerate(eq.coeffs[1:], start=1):
        if i >= 2:
            running = running * hat.compose_power(eq.k ** (i - 1))
        coeffs.append(p * running)
    return eq.with_step("product_regularization", coeffs=tuple(coeffs))

