"""Tests for truncated series arithmetic and sequence specifications."""

from __future__ import annotations

from fractions import Fraction

import pytest
from pydantic import ValidationError

from mahlerkit.exactalg import CycloElem, UniPoly
from mahlerkit.series import (
    CartierRangeError,
    TruncSeries,
    TruncationError,
    cartier,
    infinite_product_truncated,
    mahler_subst,
    parse_sequence_spec,
    poly_mul_series,
    rational_to_series,
    series_mul,
    series_sum,
    spec_to_series,
    twist_series,
)


def _series(*coeffs):
    return TruncSeries.of([Fraction(c) for c in coeffs])


def test_cartier_selects_residue_class():
    result = cartier(_series(0, 1, 1, 1), 2, 1)

    assert result.order == 1
    assert list(result.coeffs) == [1, 1]


def test_cartier_identity_and_range():
    g = _series(3, 1, 4, 1, 5)

    assert cartier(g, 1, 0) == g
    with pytest.raises(CartierRangeError):
        cartier(g, 2, 2)


def test_cartier_composition_law():
    g = TruncSeries.of([Fraction(n * n - 3) for n in range(60)])

    for l, r in ((2, 1), (3, 2)):
        for m, s in ((2, 0), (3, 1)):
            assert cartier(cartier(g, m, s), l, r) == cartier(g, l * m, s + m * r)


def test_mahler_subst_and_round_trip():
    g = _series(1, 1)

    assert mahler_subst(g, 2) == _series(1, 0, 1)
    assert mahler_subst(g, 1) == g
    assert cartier(mahler_subst(_series(2, 7, 1, 8), 3), 3, 0) == _series(2, 7, 1, 8)


def test_cartier_product_rule(rng, poly):
    for _ in range(20):
        l = rng.choice([2, 3])
        r = rng.randrange(l)
        p = poly(*[rng.randint(-4, 4) for _ in range(rng.randint(1, 12))] + [1])
        g = TruncSeries.of([Fraction(rng.randint(-5, 5)) for _ in range(30)])

        lhs = cartier(poly_mul_series(p, mahler_subst(g, l)), l, r)
        rhs = poly_mul_series(p.cartier(l, r), g)

        assert lhs.agrees_with(rhs)
        assert p.cartier(l, r).degree() <= p.degree() // l


def test_twist_series_by_cube_root():
    z = CycloElem.zeta(3)
    f = _series(0, 1, 1)

    twisted = twist_series(f, z, 1)

    assert twist_series(f, z, 0) == f
    assert list(twisted.coeffs) == [0, z, z * z]


def test_sum_of_twists_keeps_multiples_of_q():
    z = CycloElem.zeta(3)
    f = _series(0, 1, 1, 1)

    total = series_sum(twist_series(f, z, j) for j in range(3))

    assert list(total.coeffs) == [0, 0, 0, 3]


def test_infinite_product_truncated():
    product = infinite_product_truncated(UniPoly.of([1, -1]), 2, 7)

    assert list(product.coeffs) == [1, -1, -1, 1, -1, 1, 1, -1]
    assert list(infinite_product_truncated(UniPoly.one(), 3, 4).coeffs) == [1, 0, 0, 0, 0]
    with pytest.raises(ValueError):
        infinite_product_truncated(UniPoly.of([2, 1]), 2, 4)


def test_infinite_product_satisfies_its_equation():
    p0 = UniPoly.of([1, -1, 2])
    d = infinite_product_truncated(p0, 2, 40)

    shifted = poly_mul_series(p0, mahler_subst(d, 2, cap=40))

    assert shifted.agrees_with(d)


def test_rational_to_series():
    assert list(rational_to_series(UniPoly.one(), UniPoly.of([1, -1]), 5).coeffs) == [1] * 6
    fib = rational_to_series(UniPoly.of([0, 1]), UniPoly.of([1, -1, -1]), 10)
    assert list(fib.coeffs) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    with pytest.raises(ZeroDivisionError):
        rational_to_series(UniPoly.one(), UniPoly.of([0, 1]), 3)


def test_product_order_is_conservative():
    x_times = series_mul(_series(0, 1), _series(1, 1, 1))

    assert x_times.order == 1
    assert poly_mul_series(UniPoly.of([0, 1]), _series(1, 1, 1)).order == 3
    with pytest.raises(TruncationError):
        _ = _series(1, 2)[2]


def test_truncations_agree_with_longer_expansions(rng):
    for _ in range(30):
        long_a = _series(*[rng.randint(-3, 3) for _ in range(60)])
        long_b = _series(*([0] * rng.randint(0, 3) + [rng.randint(-3, 3) for _ in range(57)]))
        short_a = long_a.truncate(rng.randint(5, 25))
        short_b = long_b.truncate(rng.randint(5, 25))
        pairs = [
            (series_mul(short_a, short_b), series_mul(long_a, long_b)),
            (mahler_subst(short_a, 3), mahler_subst(long_a, 3)),
            (cartier(short_a, 3, 1), cartier(long_a, 3, 1)),
            (poly_mul_series(UniPoly.of([0, 0, 1, 2]), short_b), poly_mul_series(UniPoly.of([0, 0, 1, 2]), long_b)),
        ]
        for short, long in pairs:
            assert short.order <= long.order
            assert long.truncate(short.order) == short


def test_builtin_generators():
    assert list(spec_to_series(parse_sequence_spec({"kind": "odd_part"}), 8).coeffs) == [0, 1, 1, 3, 1, 5, 3, 7, 1]
    assert list(spec_to_series(parse_sequence_spec({"kind": "two_adic_power"}), 6).coeffs) == [0, 1, 2, 1, 4, 1, 2]
    assert parse_sequence_spec({"kind": "quadratic_character", "prime": 5}).values(5) == [0, 1, -1, -1, 1, 0]
    assert parse_sequence_spec({"kind": "principal_character", "modulus": 6}).values(7) == [0, 1, 0, 0, 0, 1, 0, 1]
    assert parse_sequence_spec({"kind": "lacunary", "k": 2}).values(8) == [0, 1, 1, 0, 1, 0, 0, 0, 1]
    assert parse_sequence_spec({"kind": "mobius"}).values(6) == [0, 1, -1, -1, 0, -1, 1]
    assert parse_sequence_spec({"kind": "totient"}).values(6) == [0, 1, 1, 2, 2, 4, 2]


def test_values_sequence_offsets():
    one_based = parse_sequence_spec({"kind": "values", "values": [1, "1/2", 3]})
    zero_based = parse_sequence_spec({"kind": "values", "values": [5, 6], "offset": 0})

    assert one_based.values(3) == [0, 1, Fraction(1, 2), 3]
    assert one_based.available_order == 3
    assert zero_based.values(1) == [5, 6]
    with pytest.raises(TruncationError):
        one_based.values(4)


def test_rational_and_lrs_specs_agree():
    rational = parse_sequence_spec({"kind": "rational", "num": [0, 1], "den": [1, -1, -1]})
    lrs = parse_sequence_spec({"kind": "lrs", "lrs": {"rec": [1, 1], "init": [0, 1]}})

    assert rational.values(20) == lrs.values(20)


@pytest.mark.parametrize(
    "bad",
    [{"kind": "nope"}, {"kind": "quadratic_character", "prime": 9}, {"kind": "identity", "extra": 1}],
)
def test_invalid_specs_are_rejected(bad):
    with pytest.raises(ValidationError):
        parse_sequence_spec(bad)
