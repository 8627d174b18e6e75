"""Sequence specifications: every kind can produce f(0..N) exactly.

Multiplicative conventions index from 1, so built-in arithmetic generators
set f(0) = 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator
from sympy import divisor_sigma, isprime, legendre_symbol, mobius, totient

from mahlerkit.exactalg import parse_rational
from mahlerkit.io.schemas import (
    Coefficient,
    DecompositionModel,
    LinRepModel,
    LRSModel,
    poly_from_json,
)

from .truncated import TruncSeries, TruncationError, rational_to_series


class _SequenceBase(BaseModel):
    model_config = ConfigDict(extra="forbid")

    def values(self, order: int) -> List[Fraction]:  # pragma: no cover - abstract
        raise NotImplementedError

    def _tabulate(self, order: int, term) -> List[Fraction]:
        return [Fraction(0)] + [Fraction(term(n)) for n in range(1, order + 1)]


class ValuesSequence(_SequenceBase):
    """Explicit list; ``offset`` 1 means the first value is f(1) and f(0) = 0."""

    kind: Literal["values"] = "values"
    values_: List[Union[int, str]] = Field(..., alias="values")
    offset: Literal[0, 1] = 1

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    @field_validator("values_")
    @classmethod
    def _normalize(cls, value: List[Union[int, str]]) -> List[str]:
        return [str(parse_rational(v)) for v in value]

    def values(self, order: int) -> List[Fraction]:
        known = [parse_rational(v) for v in self.values_]
        if self.offset == 1:
            known = [Fraction(0)] + known
        if len(known) < order + 1:
            raise TruncationError(f"only {len(known)} values available, {order + 1} requested")
        return known[: order + 1]

    @property
    def available_order(self) -> int:
        return len(self.values_) - (1 - self.offset)


class RationalSequence(_SequenceBase):
    kind: Literal["rational"] = "rational"
    num: List[Coefficient]
    den: List[Coefficient]

    def values(self, order: int) -> List[Fraction]:
        series = rational_to_series(poly_from_json(self.num), poly_from_json(self.den), order)
        return list(series.coeffs)


class LinRepSequence(_SequenceBase):
    kind: Literal["linrep"] = "linrep"
    rep: LinRepModel

    def values(self, order: int) -> List[Fraction]:
        from mahlerkit.regular.linrep import linrep_values

        return linrep_values(self.rep.to_domain(), order)


class LRSSequence(_SequenceBase):
    kind: Literal["lrs"] = "lrs"
    lrs: LRSModel

    def values(self, order: int) -> List[Fraction]:
        from mahlerkit.lrs.recurrence import lrs_values

        return lrs_values(self.lrs.to_domain(), order)


class DecompositionSequence(_SequenceBase):
    kind: Literal["decomposition"] = "decomposition"
    decomposition: DecompositionModel

    def values(self, order: int) -> List[Fraction]:
        from mahlerkit.multdecomp.decomposition import synthesize

        return synthesize(self.decomposition.to_domain(), order)


class IdentitySequence(_SequenceBase):
    kind: Literal["identity"] = "identity"

    def values(self, order: int) -> List[Fraction]:
        return [Fraction(n) for n in range(order + 1)]


class ConstantSequence(_SequenceBase):
    kind: Literal["constant"] = "constant"
    value: Union[int, str] = 1
    offset: Literal[0, 1] = 1

    def values(self, order: int) -> List[Fraction]:
        c = parse_rational(self.value)
        head = [c] if self.offset == 0 else [Fraction(0)]
        return (head + [c] * order)[: order + 1]


class TwoAdicPowerSequence(_SequenceBase):
    """f(n) = 2^val_2(n)."""

    kind: Literal["two_adic_power"] = "two_adic_power"

    def values(self, order: int) -> List[Fraction]:
        return self._tabulate(order, lambda n: n & -n)


class OddPartSequence(_SequenceBase):
    """f(n) = n / 2^val_2(n)."""

    kind: Literal["odd_part"] = "odd_part"

    def values(self, order: int) -> List[Fraction]:
        return self._tabulate(order, lambda n: n // (n & -n))


class PrincipalCharacterSequence(_SequenceBase):
    kind: Literal["principal_character"] = "principal_character"
    modulus: int = Field(..., ge=1)

    def values(self, order: int) -> List[Fraction]:
        return self._tabulate(order, lambda n: 1 if gcd(n, self.modulus) == 1 else 0)


class QuadraticCharacterSequence(_SequenceBase):
    """Legendre symbol (n / q) for an odd prime q."""

    kind: Literal["quadratic_character"] = "quadratic_character"
    prime: int = Field(..., ge=3)

    @field_validator("prime")
    @classmethod
    def _odd_prime(cls, value: int) -> int:
        if not isprime(value):
            raise ValueError(f"{value} is not an odd prime")
        return value

    def values(self, order: int) -> List[Fraction]:
        q = self.prime
        return self._tabulate(order, lambda n: int(legendre_symbol(n % q, q)) if n % q else 0)


class LacunarySequence(_SequenceBase):
    """Coefficients of sum_{j>=0} x^(k^j)."""

    kind: Literal["lacunary"] = "lacunary"
    k: int = Field(default=2, ge=2)

    def values(self, order: int) -> List[Fraction]:
        out = [Fraction(0)] * (order + 1)
        power = 1
        while power <= order:
            out[power] = Fraction(1)
            power *= self.k
        return out


class DivisorSigmaSequence(_SequenceBase):
    kind: Literal["divisor_sigma"] = "divisor_sigma"
    power: int = Field(default=1, ge=0)

    def values(self, order: int) -> List[Fraction]:
        return self._tabulate(order, lambda n: int(divisor_sigma(n, self.power)))


class TotientSequence(_SequenceBase):
    kind: Literal["totient"] = "totient"

    def values(self, order: int) -> List[Fraction]:
        return self._tabulate(order, lambda n: int(totient(n)))


class MobiusSequence(_SequenceBase):
    kind: Literal["mobius"] = "mobius"

    def values(self, order: int) -> List[Fraction]:
        return self._tabulate(order, lambda n: int(mobius(n)))


SequenceSpec = Annotated[
    Union[
        ValuesSequence,
        RationalSequence,
        LinRepSequence,
        LRSSequence,
        DecompositionSequence,
        IdentitySequence,
        ConstantSequence,
        TwoAdicPowerSequence,
        OddPartSequence,
        PrincipalCharacterSequence,
        QuadraticCharacterSequence,
        LacunarySequence,
        DivisorSigmaSequence,
        TotientSequence,
        MobiusSequence,
    ],
    Field(discriminator="kind"),
]

SEQUENCE_SPEC_ADAPTER: TypeAdapter = TypeAdapter(SequenceSpec)


def parse_sequence_spec(data: dict) -> SequenceSpec:
    return SEQUENCE_SPEC_ADAPTER.validate_python(data)


def sequence_values(spec: SequenceSpec, order: int) -> List[Fraction]:
    """f(0..order) for the given spec."""
    return spec.values(order)


def spec_to_series(spec: SequenceSpec, order: int) -> TruncSeries:
    return TruncSeries(tuple(sequence_values(spec, order)), order)
