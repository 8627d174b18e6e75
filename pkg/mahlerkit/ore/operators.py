"""Skew polynomials in the Mahler operator M_k with rational-function coefficients.

Coefficients are written on the left and multiplication obeys
M_k * r(x) = r(x^k) * M_k.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from mahlerkit.exactalg import UniPoly, poly_lcm
from mahlerkit.mahler.equations import MahlerEquation, residual_series
from mahlerkit.series import TruncSeries

from .fracpoly import FracPoly

logger = logging.getLogger(__name__)


class OreBaseMismatchError(ValueError):
    """Raised when operators over different bases k are combined."""


class OreDivisionByZeroError(ZeroDivisionError):
    """Raised on division by the zero operator."""


class FractionalCoefficientError(ValueError):
    """Raised when an operator with non-polynomial coefficients is applied to a series."""


@dataclass(frozen=True, eq=False)
class OrePoly:
    """sum_i coeffs[i] * M_k^i; the zero operator has degree -1 (standing for -inf)."""

    k: int
    coeffs: Tuple[FracPoly, ...] = field(default=())

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_polys(cls, k: int, polys: Sequence[UniPoly]) -> "OrePoly":
        return cls(k, tuple(FracPoly.of(p) for p in polys))

    @classmethod
    def one(cls, k: int) -> "OrePoly":
        return cls(k, (FracPoly.one(),))

    @classmethod
    def shift(cls, k: int, n: int = 1) -> "OrePoly":
        """M_k^n."""
        return cls(k, (FracPoly.zero(),) * n + (FracPoly.one(),))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> FracPoly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else FracPoly.zero()

    def has_polynomial_coefficients(self) -> bool:
        return all(c.is_polynomial() for c in self.coeffs)

    def _check(self, other: "OrePoly") -> None:
        if self.k != other.k:
            raise OreBaseMismatchError(f"operators over bases {self.k} and {other.k}")

    def __add__(self, other: "OrePoly") -> "OrePoly":
        return ore_add(self, other)

    def __sub__(self, other: "OrePoly") -> "OrePoly":
        return ore_add(self, -other)

    def __neg__(self) -> "OrePoly":
        return OrePoly(self.k, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "OrePoly") -> "OrePoly":
        return ore_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.k == other.k and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.k, self.coeffs))

    def __repr__(self) -> str:
        terms = [f"[{c!r}]*M^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return f"OrePoly(k={self.k}: {' + '.join(terms) or '0'})"


def ore_add(f: OrePoly, g: OrePoly) -> OrePoly:
    f._check(g)
    size = max(len(f.coeffs), len(g.coeffs))
    return OrePoly(f.k, tuple(f.coeff(i) + g.coeff(i) for i in range(size)))


def ore_scalar(c: FracPoly, f: OrePoly) -> OrePoly:
    """Left multiplication by a rational function."""
    return OrePoly(f.k, tuple(c * a for a in f.coeffs))


def ore_mul(f: OrePoly, g: OrePoly) -> OrePoly:
    """Product with M_k^i * r = sigma^i(r) * M_k^i.

    Raises:
        OreBaseMismatchError: if the bases differ.
    """
    f._check(g)
    if f.is_zero() or g.is_zero():
        return OrePoly(f.k)
    out: List[FracPoly] = [FracPoly.zero()] * (f.degree() + g.degree() + 1)
    for i, a in enumerate(f.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(g.coeffs):
            if not b.is_zero():
                out[i + j] = out[i + j] + a * b.sigma(f.k**i)
    return OrePoly(f.k, tuple(out))


def ore_divmod(f: OrePoly, g: OrePoly) -> Tuple[OrePoly, OrePoly]:
    """Division f = q*g + r with deg r < deg g.

    Raises:
        OreDivisionByZeroError: if g is zero.
        OreBaseMismatchError: if the bases differ.
    """
    f._check(g)
    if g.is_zero():
        raise OreDivisionByZeroError("division by the zero operator")
    quotient = OrePoly(f.k)
    remainder = f
    lead = g.coeffs[-1]
    while remainder.degree() >= g.degree():
        m = remainder.degree() - g.degree()
        c = remainder.coeffs[-1] / lead.sigma(f.k**m)
        term = OrePoly(f.k, (FracPoly.zero(),) * m + (c,))
        quotient = quotient + term
        remainder = remainder - ore_mul(term, g)
    return quotient, remainder


def clear_denominators(f: OrePoly) -> Tuple[UniPoly, OrePoly]:
    """Return (c, c*f) with c the lcm of the coefficient denominators,
    normalized so its lowest nonzero coefficient is 1."""
    c = UniPoly.one()
    for a in f.coeffs:
        c = poly_lcm(c, a.den)
    c = c.normalize_lowest()
    return c, ore_scalar(FracPoly.of(c), f)


def to_equation(f: OrePoly) -> MahlerEquation:
    if not f.has_polynomial_coefficients():
        raise FractionalCoefficientError("clear denominators before applying the operator")
    coeffs = tuple(a.num.scale(1 / a.den.lead()) for a in f.coeffs) or (UniPoly.zero(),)
    return MahlerEquation(f.k, coeffs)


def apply_operator(f: OrePoly, series: TruncSeries) -> TruncSeries:
    """sum_i P_i(x) F(x^(k^i)) with tracked truncation.

    Raises:
        FractionalCoefficientError: if some coefficient is not a polynomial.
    """
    return residual_series(to_equation(f), series)


@dataclass(frozen=True)
class FaithfulnessReport:
    bases: Tuple[int, ...]
    probe_exponent: int
    checked: int
    collisions: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.collisions


def faithfulness_probe(bases: Sequence[int], max_power: int = 3, max_coeff_degree: int = 3) -> FaithfulnessReport:
    """Apply every monomial x^a M_{b_1}^{e_1} ... M_{b_r}^{e_r} to x^l with
    l > max_coeff_degree and check the images are pairwise distinct monomials."""
    bases = tuple(bases)
    l = max_coeff_degree + 1
    probe = UniPoly.monomial(l)
    images: Dict[int, Tuple[int, ...]] = {}
    collisions = []
    checked = 0
    for exponents in itertools.product(range(max_power + 1), repeat=len(bases)):
        image = probe
        for b, e in zip(bases, exponents):
            image = image.compose_power(b**e)
        for a in range(max_coeff_degree + 1):
            shifted = image.shift(a)
            checked += 1
            exponent = shifted.degree()
            label = (a,) + exponents
            if exponent in images:
                collisions.append((images[exponent], label))
            else:
                images[exponent] = label
    logger.debug("faithfulness probe over bases %s: %s monomials", bases, checked)
    return FaithfulnessReport(bases, l, checked, tuple(collisions))
