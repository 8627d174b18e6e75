"""Conversion between Fraction rows and sympy domain matrices over QQ."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def qq_matrix(rows: Sequence[Sequence[Any]]) -> DomainMatrix:
    """Exact matrix over QQ from a nonempty list of rows."""
    width = len(rows[0])
    elements = []
    for row in rows:
        converted = []
        for c in row:
            c = Fraction(c)
            converted.append(QQ(c.numerator, c.denominator))
        elements.append(converted)
    return DomainMatrix(elements, (len(elements), width), QQ)


def to_fractions(matrix: DomainMatrix) -> List[List[Fraction]]:
    return [[Fraction(int(e.p), int(e.q)) for e in row] for row in matrix.to_Matrix().tolist()]


def span_coordinates(vectors: Sequence[Sequence[Any]], target: Sequence[Any]) -> Optional[List[Fraction]]:
    """Coefficients c with sum c_i * vectors[i] == target for independent ``vectors``, or None."""
    d = len(vectors)
    if not d:
        return [] if not any(target) else None
    reduced, pivots = qq_matrix([list(col) for col in zip(*vectors, target)]).rref()
    if d in pivots:
        return None
    entries = to_fractions(reduced)
    return [entries[i][d] for i in range(d)]
