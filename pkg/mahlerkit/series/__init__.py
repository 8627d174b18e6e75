"""Truncated power series, Cartier operators and sequence specifications."""

from .sequences import (
    SEQUENCE_SPEC_ADAPTER,
    SequenceSpec,
    parse_sequence_spec,
    sequence_values,
    spec_to_series,
)
from .truncated import (
    CartierRangeError,
    TruncSeries,
    TruncationError,
    cartier,
    infinite_product_truncated,
    mahler_subst,
    poly_mul_series,
    rational_to_series,
    scalar_mul,
    series_add,
    series_mul,
    series_sub,
    series_sum,
    twist_series,
)

__all__ = [
    "SEQUENCE_SPEC_ADAPTER",
    "CartierRangeError",
    "SequenceSpec",
    "TruncSeries",
    "TruncationError",
    "cartier",
    "infinite_product_truncated",
    "mahler_subst",
    "parse_sequence_spec",
    "poly_mul_series",
    "rational_to_series",
    "scalar_mul",
    "sequence_values",
    "series_add",
    "series_mul",
    "series_sub",
    "series_sum",
    "spec_to_series",
    "twist_series",
]
