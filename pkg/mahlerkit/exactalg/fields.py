"""Coefficient fields: the rationals and cyclotomic extensions Q(zeta_d)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

from sympy import cyclotomic_poly

from .rational import parse_rational


class FieldMismatchError(ValueError):
    """Raised when elements of incompatible coefficient fields are combined."""


@lru_cache(maxsize=None)
def cyclotomic_coefficients(d: int) -> Tuple[int, ...]:
    """Integer coefficients of the d-th cyclotomic polynomial, lowest degree first."""
    if d < 1:
        raise ValueError("cyclotomic order must be positive")
    return tuple(int(c) for c in reversed(cyclotomic_poly(d, polys=True).all_coeffs()))


def euler_phi(d: int) -> int:
    return len(cyclotomic_coefficients(d)) - 1


def reduce_mod_cyclotomic(coeffs: Sequence, d: int) -> List:
    """Reduce a coefficient list modulo Phi_d; the result has length phi(d)."""
    modulus = cyclotomic_coefficients(d)
    phi = len(modulus) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, phi - 1, -1):
        c = work[i]
        if c:
            for j in range(phi):
                work[i - phi + j] -= c * modulus[j]
    work = work[:phi]
    work.extend([0] * (phi - len(work)))
    return work


def _trim(coeffs: List[Fraction]) -> List[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _raw_divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [], a
    inv = 1 / b[-1]
    quotient = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        quotient[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return quotient, _trim(a[: len(b) - 1])


def _raw_sub(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _raw_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


Scalar = Union[int, Fraction]


@dataclass(frozen=True, slots=True, eq=False)
class CycloElem:
    """Element of Q(zeta_d), stored as its residue modulo Phi_d."""

    conductor: int
    coeffs: Tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, d: int, coeffs: Iterable) -> "CycloElem":
        reduced = reduce_mod_cyclotomic([parse_rational(c) for c in coeffs], d)
        return cls(d, tuple(Fraction(c) for c in reduced))

    @classmethod
    def scalar(cls, d: int, value: Scalar | str) -> "CycloElem":
        phi = euler_phi(d)
        return cls(d, (parse_rational(value),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zeta(cls, d: int) -> "CycloElem":
        return cls.from_coeffs(d, [0, 1])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise FieldMismatchError(f"{self!r} is not rational")
        return self.coeffs[0]

    def _lift(self, other: object) -> "CycloElem":
        if isinstance(other, CycloElem):
            if other.conductor != self.conductor:
                if other.is_rational():
                    return CycloElem.scalar(self.conductor, other.coeffs[0])
                if self.is_rational():
                    raise _Promote(other.conductor)
                raise FieldMismatchError(
                    f"cannot combine Q(zeta_{self.conductor}) with Q(zeta_{other.conductor})"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycloElem.scalar(self.conductor, other)
        raise TypeError(type(other).__name__)

    def _binary(self, other: object, op: str) -> "CycloElem":
        try:
            rhs = self._lift(other)
        except _Promote as promote:
            return CycloElem.scalar(promote.conductor, self.coeffs[0])._binary(other, op)
        except TypeError:
            return NotImplemented  # type: ignore[return-value]
        if op == "+":
            return CycloElem(self.conductor, tuple(a + b for a, b in zip(self.coeffs, rhs.coeffs)))
        if op == "-":
            return CycloElem(self.conductor, tuple(a - b for a, b in zip(self.coeffs, rhs.coeffs)))
        if rhs.is_rational():
            c = rhs.coeffs[0]
            return CycloElem(self.conductor, tuple(a * c for a in self.coeffs))
        if self.is_rational():
            c = self.coeffs[0]
            return CycloElem(self.conductor, tuple(c * b for b in rhs.coeffs))
        product = _raw_mul(list(self.coeffs), list(rhs.coeffs))
        return CycloElem(self.conductor, tuple(reduce_mod_cyclotomic(product, self.conductor)))

    def __add__(self, other: object) -> "CycloElem":
        return self._binary(other, "+")

    def __radd__(self, other: object) -> "CycloElem":
        return self._binary(other, "+")

    def __sub__(self, other: object) -> "CycloElem":
        return self._binary(other, "-")

    def __rsub__(self, other: object) -> "CycloElem":
        return (-self)._binary(other, "+")

    def __mul__(self, other: object) -> "CycloElem":
        return self._binary(other, "*")

    def __rmul__(self, other: object) -> "CycloElem":
        return self._binary(other, "*")

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.conductor, tuple(-a for a in self.coeffs))

    def __truediv__(self, other: object) -> "CycloElem":
        if isinstance(other, CycloElem):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycloElem(self.conductor, tuple(a / other for a in self.coeffs))
        return NotImplemented

    def __rtruediv__(self, other: object) -> "CycloElem":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "CycloElem":
        base = self if exponent >= 0 else self.inverse()
        n = abs(exponent)
        result = CycloElem.scalar(self.conductor, 1)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "CycloElem":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloElem.scalar(self.conductor, 1 / self.coeffs[0])
        r0 = [Fraction(c) for c in cyclotomic_coefficients(self.conductor)]
        r1 = _trim(list(self.coeffs))
        s0: List[Fraction] = []
        s1: List[Fraction] = [Fraction(1)]
        while r1:
            quotient, remainder = _raw_divmod(r0, r1)
            r0, r1 = r1, remainder
            s0, s1 = s1, _raw_sub(s0, _raw_mul(quotient, s1))
        # r0 is a nonzero constant since Phi_d is irreducible
        scale = 1 / r0[0]
        return CycloElem.from_coeffs(self.conductor, [c * scale for c in s0])

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloElem):
            if other.conductor == self.conductor:
                return self.coeffs == other.coeffs
            return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"CycloElem({self.conductor}: {' + '.join(terms) or '0'})"


class _Promote(Exception):
    def __init__(self, conductor: int) -> None:
        super().__init__(conductor)
        self.conductor = conductor


@dataclass(frozen=True)
class RationalField:
    """The field Q, elements represented as Fraction."""

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: object) -> Fraction:
        if isinstance(value, CycloElem):
            return value.as_rational()
        return parse_rational(value)  # type: ignore[arg-type]

    def __str__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class CyclotomicField:
    """The field Q(zeta_d) with zeta_d a primitive d-th root of unity."""

    conductor: int

    def __post_init__(self) -> None:
        if self.conductor < 1:
            raise ValueError("conductor must be positive")

    @property
    def degree(self) -> int:
        return euler_phi(self.conductor)

    def zero(self) -> CycloElem:
        return CycloElem.scalar(self.conductor, 0)

    def one(self) -> CycloElem:
        return CycloElem.scalar(self.conductor, 1)

    def gen(self) -> CycloElem:
        return CycloElem.zeta(self.conductor)

    def coerce(self, value: object) -> CycloElem:
        if isinstance(value, CycloElem):
            if value.conductor == self.conductor:
                return value
            if value.is_rational():
                return CycloElem.scalar(self.conductor, value.coeffs[0])
            raise FieldMismatchError(
                f"element of Q(zeta_{value.conductor}) does not live in Q(zeta_{self.conductor})"
            )
        return CycloElem.scalar(self.conductor, parse_rational(value))  # type: ignore[arg-type]

    def __str__(self) -> str:
        return f"Q(zeta_{self.conductor})"


Field = Union[RationalField, CyclotomicField]

QQ = RationalField()


def common_field(a: Field, b: Field) -> Field:
    """Smallest of the two fields containing both; Q embeds into every Q(zeta_d)."""
    if a == b:
        return a
    if isinstance(a, RationalField):
        return b
    if isinstance(b, RationalField):
        return a
    raise FieldMismatchError(f"incompatible fields {a} and {b}")


def field_of(value: object) -> Field:
    if isinstance(value, CycloElem):
        return CyclotomicField(value.conductor)
    return QQ
