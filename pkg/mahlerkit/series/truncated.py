"""Truncated power series with explicitly tracked truncation order."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Tuple

from mahlerkit.exactalg import QQ, Field, UniPoly, common_field, field_of

logger = logging.getLogger(__name__)


class TruncationError(ValueError):
    """Raised when a series is not known to the order an operation needs."""


class CartierRangeError(ValueError):
    """Raised when a Cartier residue lies outside [0, l)."""


@dataclass(frozen=True, slots=True, eq=False)
class TruncSeries:
    """Coefficients for exponents 0..order; higher coefficients are unknown.

    An order of -1 means no coefficient is known.
    """

    coeffs: Tuple[Any, ...]
    order: int
    field: Field = QQ

    def __post_init__(self) -> None:
        if self.order < -1:
            object.__setattr__(self, "order", -1)
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def of(cls, coeffs: Iterable[Any], field: Optional[Field] = None) -> "TruncSeries":
        items = list(coeffs)
        if field is None:
            field = QQ
            for c in items:
                field = common_field(field, field_of(c))
        return cls(tuple(field.coerce(c) for c in items), len(items) - 1, field)

    @classmethod
    def from_poly(cls, poly: UniPoly, order: int) -> "TruncSeries":
        return cls(tuple(poly.coeff(n) for n in range(order + 1)), order, poly.field)

    @classmethod
    def zero(cls, order: int, field: Field = QQ) -> "TruncSeries":
        return cls((field.zero(),) * (order + 1), order, field)

    def __getitem__(self, n: int) -> Any:
        if not 0 <= n <= self.order:
            raise TruncationError(f"coefficient {n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def to_field(self, field: Field) -> "TruncSeries":
        if field == self.field:
            return self
        return TruncSeries(tuple(field.coerce(c) for c in self.coeffs), self.order, field)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1], order, self.field)

    def valuation(self) -> Optional[int]:
        """Lowest exponent with a known nonzero coefficient, or None."""
        return next((i for i, c in enumerate(self.coeffs) if c), None)

    def first_nonzero(self) -> Optional[Tuple[int, Any]]:
        n = self.valuation()
        return None if n is None else (n, self.coeffs[n])

    def is_zero(self) -> bool:
        return self.valuation() is None

    def agrees_with(self, other: "TruncSeries") -> bool:
        order = min(self.order, other.order)
        return all(self.coeffs[n] == other.coeffs[n] for n in range(order + 1))

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return series_sub(self, other)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(tuple(-c for c in self.coeffs), self.order, self.field)

    def __mul__(self, other: Any) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, UniPoly):
            return poly_mul_series(other, self)
        return scalar_mul(other, self)

    def __rmul__(self, other: Any) -> "TruncSeries":
        if isinstance(other, UniPoly):
            return poly_mul_series(other, self)
        return scalar_mul(other, self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((self.order, tuple(hash(c) for c in self.coeffs)))

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"TruncSeries([{shown}{more}] + O(x^{self.order + 1}))"


def _align(a: TruncSeries, b: TruncSeries) -> Tuple[TruncSeries, TruncSeries]:
    field = common_field(a.field, b.field)
    return a.to_field(field), b.to_field(field)


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    a, b = _align(a, b)
    order = min(a.order, b.order)
    return TruncSeries(tuple(a.coeffs[n] + b.coeffs[n] for n in range(order + 1)), order, a.field)


def series_sub(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return series_add(a, -b)


def series_sum(items: Iterable[TruncSeries]) -> TruncSeries:
    items = list(items)
    if not items:
        raise ValueError("empty series sum")
    total = items[0]
    for item in items[1:]:
        total = series_add(total, item)
    return total


def scalar_mul(c: Any, a: TruncSeries) -> TruncSeries:
    field = common_field(a.field, field_of(c))
    c = field.coerce(c)
    return TruncSeries(tuple(c * field.coerce(x) for x in a.coeffs), a.order, field)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Product known up to min(N_a + v_b, N_b + v_a)."""
    a, b = _align(a, b)
    va, vb = a.valuation(), b.valuation()
    if va is None and vb is None:
        order = min(a.order, b.order)
    elif va is None:
        order = a.order + vb  # type: ignore[operator]
    elif vb is None:
        order = b.order + va
    else:
        order = min(a.order + vb, b.order + va)
    zero = a.field.zero()
    out: List[Any] = [zero] * (order + 1)
    for i in range(min(a.order, order) + 1):
        ai = a.coeffs[i]
        if not ai:
            continue
        for j in range(min(b.order, order - i) + 1):
            bj = b.coeffs[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return TruncSeries(tuple(out), order, a.field)


def poly_mul_series(p: UniPoly, a: TruncSeries) -> TruncSeries:
    """P * G; exact polynomials raise the known order by the x-valuation of P."""
    field = common_field(p.field, a.field)
    p, a = p.to_field(field), a.to_field(field)
    if p.is_zero():
        return TruncSeries.zero(a.order, field)
    order = a.order + p.valuation()
    zero = field.zero()
    out: List[Any] = [zero] * (order + 1)
    for i, pi in enumerate(p.coeffs):
        if not pi or i > order:
            continue
        for j in range(min(a.order, order - i) + 1):
            aj = a.coeffs[j]
            if aj:
                out[i + j] = out[i + j] + pi * aj
    return TruncSeries(tuple(out), order, field)


def cartier(g: TruncSeries, l: int, r: int) -> TruncSeries:
    """Delta_r^(l): coefficient n of the result is g(l*n + r).

    Raises:
        CartierRangeError: if r is not in [0, l).
    """
    if l < 1 or not 0 <= r < l:
        raise CartierRangeError(f"residue {r} out of range for modulus {l}")
    order = (g.order - r) // l if g.order >= r else -1
    return TruncSeries(g.coeffs[r::l][: order + 1], order, g.field)


def mahler_subst(g: TruncSeries, m: int, cap: Optional[int] = None) -> TruncSeries:
    """G(x^m), known to order N*m; ``cap`` truncates the result early."""
    if m < 1:
        raise ValueError("mahler_subst needs m >= 1")
    order = g.order * m if cap is None else min(g.order * m, cap)
    if m == 1 or g.order < 0:
        return g if order == g.order else g.truncate(order)
    zero = g.field.zero()
    out: List[Any] = [zero] * (order + 1)
    for n in range(order // m + 1):
        out[n * m] = g.coeffs[n]
    return TruncSeries(tuple(out), order, g.field)


def twist_series(g: TruncSeries, omega: Any, j: int) -> TruncSeries:
    """G(omega^j x): coefficient n multiplied by omega^(j*n)."""
    if j == 0:
        return g
    field = common_field(g.field, field_of(omega))
    step = field.coerce(omega) ** j
    power = field.one()
    out = []
    for c in g.coeffs:
        out.append(field.coerce(c) * power)
        power = power * step
    return TruncSeries(tuple(out), g.order, field)


def rational_to_series(p: UniPoly, q: UniPoly, order: int) -> TruncSeries:
    """Expansion of P/Q to the given order.

    Raises:
        ZeroDivisionError: if Q(0) = 0.
    """
    if q.is_zero() or not q.coeffs[0]:
        raise ZeroDivisionError("rational_to_series needs Q(0) != 0")
    field = common_field(p.field, q.field)
    p, q = p.to_field(field), q.to_field(field)
    inv = 1 / q.coeffs[0]
    out: List[Any] = []
    for n in range(order + 1):
        acc = p.coeff(n)
        for i in range(1, min(n, q.degree()) + 1):
            qi = q.coeffs[i]
            if qi:
                acc = acc - qi * out[n - i]
        out.append(acc * inv)
    return TruncSeries(tuple(out), order, field)


def infinite_product_truncated(p0: UniPoly, k: int, order: int) -> TruncSeries:
    """prod_{j>=0} P0(x^(k^j)) to the given order.

    Raises:
        ValueError: if P0(0) != 1.
    """
    if p0.coeff(0) != 1:
        raise ValueError("infinite product needs P0(0) = 1")
    result = TruncSeries.from_poly(UniPoly.one(p0.field), order)
    power = 1
    while power <= order:
        factor = p0.compose_power(power)
        result = poly_mul_series(factor, result).truncate(order)
        power *= k
    logger.debug("infinite product of degree-%s factor to order %s", p0.degree(), order)
    return result
