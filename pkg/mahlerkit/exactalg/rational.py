"""Parsing and formatting of exact rational scalars."""

from __future__ import annotations

from fractions import Fraction
from typing import Final, Union
import re

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE: Final = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: RationalLike) -> Fraction:
    """Convert an integer, Fraction or ``"num/den"`` string into a reduced Fraction.

    Raises:
        ValueError: if the value is a float, a bool, or a malformed string.
    """
    if isinstance(value, bool):
        raise ValueError("booleans are not rational scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if not match:
            raise ValueError(f"Malformed rational: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise ValueError(f"Zero denominator in {value!r}")
        return Fraction(numerator, denominator)
    raise ValueError(f"Unsupported scalar type {type(value).__name__}")


def format_rational(value: Fraction | int) -> str:
    return str(Fraction(value))
