"""Exact coefficient arithmetic: rationals, cyclotomic fields, dense polynomials."""

from .cyclotomic import (
    NegligibilityCertificate,
    cyclotomic_poly,
    factor_negligible,
    is_negligible,
    twist_poly,
)
from .fields import (
    QQ,
    CycloElem,
    CyclotomicField,
    Field,
    FieldMismatchError,
    RationalField,
    common_field,
    field_of,
)
from .matrices import qq_matrix, span_coordinates, to_fractions
from .poly import (
    PolynomialDivisionError,
    UniPoly,
    ZeroPolynomialError,
    compose_power,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_lcm,
    poly_mul,
    poly_product,
)
from .rational import format_rational, parse_rational

__all__ = [
    "QQ",
    "CycloElem",
    "CyclotomicField",
    "Field",
    "FieldMismatchError",
    "NegligibilityCertificate",
    "PolynomialDivisionError",
    "RationalField",
    "UniPoly",
    "ZeroPolynomialError",
    "common_field",
    "compose_power",
    "cyclotomic_poly",
    "factor_negligible",
    "field_of",
    "format_rational",
    "is_negligible",
    "parse_rational",
    "poly_divmod",
    "poly_eval",
    "poly_gcd",
    "poly_lcm",
    "poly_mul",
    "poly_product",
    "qq_matrix",
    "span_coordinates",
    "to_fractions",
    "twist_poly",
]
