"""Rational functions kept in lowest terms with a monic denominator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from mahlerkit.exactalg import PolynomialDivisionError, UniPoly, poly_gcd


@dataclass(frozen=True, slots=True, eq=False)
class FracPoly:
    num: UniPoly
    den: UniPoly

    @classmethod
    def of(cls, num: UniPoly, den: UniPoly | None = None) -> "FracPoly":
        if den is None:
            den = UniPoly.one(num.field)
        if den.is_zero():
            raise PolynomialDivisionError("zero denominator")
        if num.is_zero():
            return cls(UniPoly.zero(num.field), UniPoly.one(den.field))
        g = poly_gcd(num, den)
        num, den = num.exact_div(g), den.exact_div(g)
        lead = den.lead()
        return cls(num.scale(1 / lead), den.scale(1 / lead))

    @classmethod
    def from_poly(cls, poly: UniPoly) -> "FracPoly":
        return cls.of(poly)

    @classmethod
    def zero(cls) -> "FracPoly":
        return cls(UniPoly.zero(), UniPoly.one())

    @classmethod
    def one(cls) -> "FracPoly":
        return cls(UniPoly.one(), UniPoly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def __add__(self, other: "FracPoly") -> "FracPoly":
        return FracPoly.of(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "FracPoly":
        return FracPoly(-self.num, self.den)

    def __sub__(self, other: "FracPoly") -> "FracPoly":
        return self + (-other)

    def __mul__(self, other: Any) -> "FracPoly":
        if isinstance(other, FracPoly):
            return FracPoly.of(self.num * other.num, self.den * other.den)
        if isinstance(other, UniPoly):
            return FracPoly.of(self.num * other, self.den)
        return FracPoly.of(self.num.scale(other), self.den)

    def __truediv__(self, other: "FracPoly") -> "FracPoly":
        if other.is_zero():
            raise PolynomialDivisionError("division by the zero rational function")
        return FracPoly.of(self.num * other.den, self.den * other.num)

    def sigma(self, k: int) -> "FracPoly":
        """The Mahler endomorphism x -> x^k."""
        return FracPoly(self.num.compose_power(k), self.den.compose_power(k))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"
