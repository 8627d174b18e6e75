"""Pydantic wire models for every JSON document mahlerkit reads or writes.

Rationals travel as canonical strings ("3", "-1/2"); integers are accepted on
input and normalized by the validators.
"""

from __future__ import annotations

from typing import Any, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from mahlerkit.exactalg import (
    CycloElem,
    UniPoly,
    format_rational,
    parse_rational,
)

RationalToken = Union[int, str]


def _canonical(value: Any) -> str:
    return format_rational(parse_rational(value))


def _canonical_list(values: List[Any]) -> List[str]:
    return [_canonical(v) for v in values]


class CycloModel(BaseModel):
    """Element of Q(zeta_d) as its residue coefficients modulo Phi_d."""

    model_config = ConfigDict(extra="forbid")

    conductor: int = Field(..., ge=1)
    coeffs: List[RationalToken]

    @field_validator("coeffs")
    @classmethod
    def _normalize(cls, value: List[Any]) -> List[str]:
        return _canonical_list(value)

    def to_domain(self) -> CycloElem:
        return CycloElem.from_coeffs(self.conductor, [parse_rational(c) for c in self.coeffs])

    @classmethod
    def from_domain(cls, elem: CycloElem) -> "CycloModel":
        return cls(conductor=elem.conductor, coeffs=[format_rational(c) for c in elem.coeffs])


Coefficient = Union[int, str, CycloModel]


def scalar_to_json(value: Any) -> Any:
    if isinstance(value, CycloElem):
        if value.is_rational():
            return format_rational(value.coeffs[0])
        return CycloModel.from_domain(value).model_dump()
    return format_rational(value)


def scalar_from_json(value: Any) -> Any:
    if isinstance(value, CycloModel):
        return value.to_domain()
    if isinstance(value, dict):
        return CycloModel.model_validate(value).to_domain()
    return parse_rational(value)


def poly_to_json(poly: UniPoly) -> List[Any]:
    return [scalar_to_json(c) for c in poly.coeffs]


def poly_from_json(coeffs: List[Any]) -> UniPoly:
    return UniPoly.of([scalar_from_json(c) for c in coeffs])


class SeriesModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    order: int = Field(..., ge=-1)
    coeffs: List[Coefficient]

    @field_validator("coeffs")
    @classmethod
    def _normalize(cls, value: List[Any]) -> List[Any]:
        return [v if isinstance(v, CycloModel) else _canonical(v) for v in value]

    def to_domain(self):
        from mahlerkit.series.truncated import TruncSeries

        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"series of order {self.order} needs {self.order + 1} coefficients")
        return TruncSeries.of([scalar_from_json(c) for c in self.coeffs])

    @classmethod
    def from_domain(cls, series) -> "SeriesModel":
        return cls(order=series.order, coeffs=[scalar_to_json(c) for c in series.coeffs])


class EquationModel(BaseModel):
    """Mahler equation sum_i P_i(x) F(x^(k^i)) = A(x).

    ``ramification`` l > 1 marks coefficients written in the variable x^(1/l).
    """

    model_config = ConfigDict(extra="forbid")

    k: int = Field(..., ge=2)
    coeffs: List[List[Coefficient]] = Field(..., min_length=1)
    inhom: List[Coefficient] = Field(default_factory=list)
    ramification: int = Field(default=1, ge=1)

    def to_domain(self):
        from mahlerkit.mahler.equations import MahlerEquation

        return MahlerEquation(
            k=self.k,
            coeffs=tuple(poly_from_json(c) for c in self.coeffs),
            inhom=poly_from_json(self.inhom),
        )

    @classmethod
    def from_domain(cls, eq) -> "EquationModel":
        return cls(k=eq.k, coeffs=[poly_to_json(p) for p in eq.coeffs], inhom=poly_to_json(eq.inhom))


class FracPolyModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    num: List[Coefficient]
    den: List[Coefficient] = Field(default_factory=lambda: ["1"])

    def to_domain(self):
        from mahlerkit.ore.fracpoly import FracPoly

        return FracPoly.of(poly_from_json(self.num), poly_from_json(self.den))

    @classmethod
    def from_domain(cls, frac) -> "FracPolyModel":
        return cls(num=poly_to_json(frac.num), den=poly_to_json(frac.den))


class OperatorModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    k: int = Field(..., ge=2)
    coeffs: List[FracPolyModel]

    def to_domain(self):
        from mahlerkit.ore.operators import OrePoly

        return OrePoly(self.k, tuple(c.to_domain() for c in self.coeffs))

    @classmethod
    def from_domain(cls, op) -> "OperatorModel":
        return cls(k=op.k, coeffs=[FracPolyModel.from_domain(c) for c in op.coeffs])


class LinRepModel(BaseModel):
    """Base-k linear representation (u, A_0..A_{k-1}, v)."""

    model_config = ConfigDict(extra="forbid")

    k: int = Field(..., ge=2)
    u: List[RationalToken]
    mats: List[List[List[RationalToken]]]
    v: List[RationalToken]

    @field_validator("u", "v")
    @classmethod
    def _normalize_vector(cls, value: List[Any]) -> List[str]:
        return _canonical_list(value)

    @field_validator("mats")
    @classmethod
    def _normalize_mats(cls, value: List[List[List[Any]]]) -> List[List[List[str]]]:
        return [[_canonical_list(row) for row in mat] for mat in value]

    def to_domain(self):
        from mahlerkit.regular.linrep import LinRep

        return LinRep.of(
            self.k,
            [parse_rational(c) for c in self.u],
            [[[parse_rational(c) for c in row] for row in mat] for mat in self.mats],
            [parse_rational(c) for c in self.v],
        )

    @classmethod
    def from_domain(cls, rep) -> "LinRepModel":
        return cls(
            k=rep.k,
            u=[format_rational(c) for c in rep.u],
            mats=[[[format_rational(c) for c in row] for row in mat] for mat in rep.mats],
            v=[format_rational(c) for c in rep.v],
        )


class LRSModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rec: List[RationalToken]
    init: List[RationalToken]

    @field_validator("rec", "init")
    @classmethod
    def _normalize(cls, value: List[Any]) -> List[str]:
        return _canonical_list(value)

    def to_domain(self):
        from mahlerkit.lrs.recurrence import LRSSpec

        return LRSSpec.of(self.rec, self.init)

    @classmethod
    def from_domain(cls, spec) -> "LRSModel":
        return cls(rec=[format_rational(c) for c in spec.rec], init=[format_rational(c) for c in spec.init])


class ChiModel(BaseModel):
    """Eventually periodic table: ``pre`` then ``per`` repeated, indexed from n = 1."""

    model_config = ConfigDict(extra="forbid")

    pre: List[RationalToken] = Field(default_factory=list)
    per: List[RationalToken] = Field(..., min_length=1)

    @field_validator("pre", "per")
    @classmethod
    def _normalize(cls, value: List[Any]) -> List[str]:
        return _canonical_list(value)

    def to_domain(self):
        from mahlerkit.lrs.periodic import EventuallyPeriodic

        return EventuallyPeriodic.of(self.pre, self.per)

    @classmethod
    def from_domain(cls, chi) -> "ChiModel":
        return cls(pre=[format_rational(c) for c in chi.pre], per=[format_rational(c) for c in chi.per])


class DecompositionModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    p: int = Field(..., ge=2)
    g: LRSModel
    r: int = Field(..., ge=0)
    chi: ChiModel
    verified_bound: Optional[int] = None
    ambiguous: bool = False

    @field_validator("p")
    @classmethod
    def _prime(cls, value: int) -> int:
        from sympy import isprime

        if not isprime(value):
            raise ValueError(f"p must be prime, got {value}")
        return value

    def to_domain(self):
        from mahlerkit.multdecomp.decomposition import MultiplicativeDecomposition

        return MultiplicativeDecomposition(
            p=self.p,
            g=self.g.to_domain(),
            r=self.r,
            chi=self.chi.to_domain(),
            verified_bound=self.verified_bound or 0,
            ambiguous=self.ambiguous,
        )

    @classmethod
    def from_domain(cls, dec) -> "DecompositionModel":
        return cls(
            p=dec.p,
            g=LRSModel.from_domain(dec.g),
            r=dec.r,
            chi=ChiModel.from_domain(dec.chi),
            verified_bound=dec.verified_bound or None,
            ambiguous=dec.ambiguous,
        )
