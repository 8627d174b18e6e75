"""Base-k linear representations f(n) = u A(n_l) ... A(n_0) v."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple

from mahlerkit.exactalg import parse_rational

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]


class LinRepShapeError(ValueError):
    """Raised when u, the matrices and v do not share one dimension."""


@dataclass(frozen=True)
class LinRep:
    k: int
    u: Vector
    mats: Tuple[Matrix, ...]
    v: Vector

    def __post_init__(self) -> None:
        d = len(self.u)
        if self.k < 2:
            raise LinRepShapeError(f"base must be at least 2, got {self.k}")
        if d < 1 or len(self.v) != d:
            raise LinRepShapeError(f"u has length {d}, v has length {len(self.v)}")
        if len(self.mats) != self.k:
            raise LinRepShapeError(f"expected {self.k} matrices, got {len(self.mats)}")
        for mat in self.mats:
            if len(mat) != d or any(len(row) != d for row in mat):
                raise LinRepShapeError(f"matrices must be {d}x{d}")

    @classmethod
    def of(cls, k: int, u: Sequence[Any], mats: Sequence[Sequence[Sequence[Any]]], v: Sequence[Any]) -> "LinRep":
        return cls(
            k,
            tuple(parse_rational(c) for c in u),
            tuple(tuple(tuple(parse_rational(c) for c in row) for row in mat) for mat in mats),
            tuple(parse_rational(c) for c in v),
        )

    @property
    def dim(self) -> int:
        return len(self.u)


def _row_times(row: Sequence[Fraction], mat: Matrix) -> List[Fraction]:
    d = len(row)
    return [sum((row[i] * mat[i][j] for i in range(d) if row[i]), Fraction(0)) for j in range(d)]


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def base_digits(n: int, k: int) -> List[int]:
    """Most-significant-first digits; 0 has the empty expansion."""
    digits = []
    while n:
        n, d = divmod(n, k)
        digits.append(d)
    return digits[::-1]


def linrep_eval(rep: LinRep, n: int) -> Fraction:
    """u A(n_l) ... A(n_0) v with n = (n_l ... n_0) in base k."""
    if n < 0:
        raise ValueError("linrep_eval needs n >= 0")
    row: List[Fraction] = list(rep.u)
    for digit in base_digits(n, rep.k):
        row = _row_times(row, rep.mats[digit])
    return _dot(row, rep.v)


def linrep_values(rep: LinRep, order: int) -> List[Fraction]:
    """f(0..order) from the prefix products R(n) = R(n // k) A(n % k)."""
    rows: List[List[Fraction]] = [list(rep.u)]
    for n in range(1, order + 1):
        rows.append(_row_times(rows[n // rep.k], rep.mats[n % rep.k]))
    return [_dot(row, rep.v) for row in rows[: order + 1]]
