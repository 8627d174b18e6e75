"""Dense univariate polynomials over Q or a cyclotomic field."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Tuple

from .fields import QQ, Field, common_field, field_of


class ZeroPolynomialError(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


class PolynomialDivisionError(ZeroDivisionError):
    """Raised on division by the zero polynomial or an inexact exact-division."""


@dataclass(frozen=True, slots=True, eq=False)
class UniPoly:
    """Polynomial with ``coeffs[i]`` the coefficient of x^i.

    Trailing zeros are stripped on construction, so the zero polynomial has
    empty coefficients and degree -1.
    """

    coeffs: Tuple[Any, ...]
    field: Field = QQ

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        end = len(coeffs)
        while end and not coeffs[end - 1]:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def of(cls, coeffs: Iterable[Any], field: Field | None = None) -> "UniPoly":
        """Build a polynomial, coercing every coefficient into ``field``.

        When ``field`` is omitted it is inferred from the coefficients.
        """
        items = list(coeffs)
        if field is None:
            field = QQ
            for c in items:
                field = common_field(field, field_of(c))
        return cls(tuple(field.coerce(c) for c in items), field)

    @classmethod
    def zero(cls, field: Field = QQ) -> "UniPoly":
        return cls((), field)

    @classmethod
    def one(cls, field: Field = QQ) -> "UniPoly":
        return cls((field.one(),), field)

    @classmethod
    def monomial(cls, n: int, c: Any = 1, field: Field = QQ) -> "UniPoly":
        return cls((field.zero(),) * n + (field.coerce(c),), field)

    @classmethod
    def x(cls, field: Field = QQ) -> "UniPoly":
        return cls.monomial(1, 1, field)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lead(self) -> Any:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, n: int) -> Any:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.field.zero()

    def valuation(self) -> int:
        """Exponent of the lowest nonzero term."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ZeroPolynomialError("valuation of the zero polynomial")

    def to_field(self, field: Field) -> "UniPoly":
        if field == self.field:
            return self
        return UniPoly(tuple(field.coerce(c) for c in self.coeffs), field)

    def _align(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        field = common_field(self.field, other.field)
        return self.to_field(field), other.to_field(field)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self._align(other)
        if len(a.coeffs) < len(b.coeffs):
            a, b = b, a
        out = list(a.coeffs)
        for i, c in enumerate(b.coeffs):
            out[i] = out[i] + c
        return UniPoly(tuple(out), a.field)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs), self.field)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: Any) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return self.scale(other)
        a, b = self._align(other)
        if a.is_zero() or b.is_zero():
            return UniPoly.zero(a.field)
        zero = a.field.zero()
        out = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ai in enumerate(a.coeffs):
            if not ai:
                continue
            for j, bj in enumerate(b.coeffs):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return UniPoly(tuple(out), a.field)

    def __rmul__(self, other: Any) -> "UniPoly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.one(self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c: Any) -> "UniPoly":
        field = common_field(self.field, field_of(c))
        c = field.coerce(c)
        return UniPoly(tuple(field.coerce(a) * c for a in self.coeffs), field)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == UniPoly.of([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(hash(c) for c in self.coeffs))

    def __divmod__(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return poly_divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        quotient, remainder = poly_divmod(self, other)
        if not remainder.is_zero():
            raise PolynomialDivisionError("division is not exact")
        return quotient

    def divides(self, other: "UniPoly") -> bool:
        return poly_divmod(other, self)[1].is_zero()

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead())

    def normalize_lowest(self) -> "UniPoly":
        """Scale so that the lowest nonzero coefficient is 1."""
        if self.is_zero():
            return self
        return self.scale(1 / self.coeffs[self.valuation()])

    def shift(self, a: int) -> "UniPoly":
        """Multiply by x^a."""
        if self.is_zero() or a == 0:
            return self
        return UniPoly((self.field.zero(),) * a + self.coeffs, self.field)

    def strip_x(self) -> Tuple[int, "UniPoly"]:
        """Split off the largest power of x: returns (a, P / x^a)."""
        a = self.valuation()
        return a, UniPoly(self.coeffs[a:], self.field)

    def compose_power(self, m: int) -> "UniPoly":
        """Return P(x^m)."""
        if m < 1:
            raise ValueError("compose_power needs m >= 1")
        if m == 1 or self.is_constant():
            return self
        zero = self.field.zero()
        out = [zero] * (m * self.degree() + 1)
        for i, c in enumerate(self.coeffs):
            out[m * i] = c
        return UniPoly(tuple(out), self.field)

    def cartier(self, l: int, r: int) -> "UniPoly":
        """Coefficients at exponents l*n + r, reindexed by n."""
        if l < 1 or not 0 <= r < l:
            raise ValueError(f"residue {r} out of range for modulus {l}")
        return UniPoly(self.coeffs[r::l], self.field)

    def twist(self, omega: Any) -> "UniPoly":
        """Return P(omega x)."""
        field = common_field(self.field, field_of(omega))
        power = field.one()
        omega = field.coerce(omega)
        out = []
        for c in self.coeffs:
            out.append(field.coerce(c) * power)
            power = power * omega
        return UniPoly(tuple(out), field)

    def eval(self, point: Any) -> Any:
        result: Any = self.field.zero()
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def __call__(self, point: Any) -> Any:
        return self.eval(point)

    def __repr__(self) -> str:
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return f"UniPoly({' + '.join(terms)})"


def poly_divmod(a: UniPoly, b: UniPoly) -> Tuple[UniPoly, UniPoly]:
    """Euclidean division a = q*b + r with deg r < deg b.

    Raises:
        PolynomialDivisionError: if b is the zero polynomial.
    """
    if b.is_zero():
        raise PolynomialDivisionError("division by the zero polynomial")
    a, b = a._align(b)
    field = a.field
    remainder = list(a.coeffs)
    db = b.degree()
    if len(remainder) <= db:
        return UniPoly.zero(field), a
    inv = 1 / b.lead()
    quotient = [field.zero()] * (len(remainder) - db)
    for i in range(len(remainder) - 1, db - 1, -1):
        c = remainder[i]
        if not c:
            continue
        c = c * inv
        quotient[i - db] = c
        for j, bj in enumerate(b.coeffs):
            if bj:
                remainder[i - db + j] = remainder[i - db + j] - c * bj
    return UniPoly(tuple(quotient), field), UniPoly(tuple(remainder[:db]), field)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor; gcd(P, 0) is monic(P) and gcd(0, 0) is 0."""
    a, b = a._align(b)
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.is_zero() or b.is_zero():
        return UniPoly.zero(common_field(a.field, b.field))
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def poly_mul(a: UniPoly, b: UniPoly) -> UniPoly:
    return a * b


def poly_eval(p: UniPoly, point: Any) -> Any:
    return p.eval(point)


def compose_power(p: UniPoly, m: int) -> UniPoly:
    return p.compose_power(m)


def poly_product(polys: Iterable[UniPoly], field: Field = QQ) -> UniPoly:
    result = UniPoly.one(field)
    for p in polys:
        result = result * p
    return result
