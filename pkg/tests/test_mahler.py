"""Tests for Mahler equations, their transformations and denominator certificates."""

from __future__ import annotations

from fractions import Fraction

import pytest

from mahlerkit.exactalg import UniPoly, ZeroPolynomialError, factor_negligible
from mahlerkit.mahler import (
    DenominatorVerdict,
    EquationError,
    MahlerEquation,
    PreceqStatus,
    clear_fractional,
    denominator_upper_bound,
    equivalent,
    preceq,
    product_regularization,
    rational_equation,
    reduce_rational_equation,
    substitute_equation,
    twist_equation,
    verify_equation,
)
from mahlerkit.series import (
    TruncSeries,
    infinite_product_truncated,
    rational_to_series,
    series_mul,
)

ONE = UniPoly.one()
ONE_MINUS_X = UniPoly.of([1, -1])


def _geometric(order: int) -> TruncSeries:
    return rational_to_series(ONE, ONE_MINUS_X, order)


def test_geometric_series_equation_verifies(poly):
    eq = MahlerEquation(2, (ONE_MINUS_X, -poly(1, 0, -1)))

    result = verify_equation(eq, _geometric(10))

    assert result.ok
    assert result.order == 10


def test_wrong_equation_reports_first_mismatch(poly):
    eq = MahlerEquation(2, (ONE_MINUS_X, -poly(1, 0, 0, -1)))

    result = verify_equation(eq, _geometric(10))

    assert not result.ok
    assert result.mismatch_exponent == 2
    assert result.mismatch_value == -1
    assert result.order == 1


def test_zero_series_satisfies_any_homogeneous_equation(poly):
    eq = MahlerEquation(3, (poly(1, 2), poly(0, 5), poly(7)))

    assert verify_equation(eq, TruncSeries.zero(12)).ok


def test_rational_equation(poly):
    assert rational_equation(ONE, ONE_MINUS_X, 2) == MahlerEquation(2, (ONE_MINUS_X, -poly(1, 0, -1)))
    assert rational_equation(ONE, ONE, 5) == MahlerEquation(5, (ONE, -ONE))
    with pytest.raises(EquationError):
        rational_equation(ONE, poly(0, 1), 2)


def test_rational_equation_for_fibonacci(poly):
    p, q = poly(0, 1), poly(1, -1, -1)

    assert verify_equation(rational_equation(p, q, 2), rational_to_series(p, q, 30)).ok


def test_reduce_rational_equation_divides_out_the_gcd(poly):
    eq = reduce_rational_equation(ONE, ONE_MINUS_X, 2, 1)

    assert eq.coeffs == (ONE, -poly(1, 1))
    assert verify_equation(eq, _geometric(20)).ok


def test_reduce_rational_equation_cancels_roots_fixed_by_the_base(poly):
    eq = reduce_rational_equation(ONE, poly(1, 1, 1), 2, 2)

    assert eq.k == 4
    assert all(d != 3 for d, _ in factor_negligible(eq.coeffs[0], 2).cyclotomic_factors)
    assert verify_equation(eq, rational_to_series(ONE, poly(1, 1, 1), 40)).ok


def test_reduce_rational_equation_needs_coprime_inputs(poly):
    with pytest.raises(EquationError):
        reduce_rational_equation(ONE_MINUS_X, ONE_MINUS_X, 2, 1)
    with pytest.raises(EquationError):
        reduce_rational_equation(ONE, ONE_MINUS_X, 2, 0)


def test_substitute_equation_for_series_in_x_squared(poly):
    q = poly(1, 0, -1)
    eq = rational_equation(ONE, q, 2)

    result, residues = substitute_equation(eq, 2)

    assert not result.coeffs[0].is_zero()
    assert all(not c for p in result.coeffs for n, c in enumerate(p.coeffs) if n % 2)
    assert residues[-1][0] == "l"
    assert verify_equation(result, rational_to_series(ONE, q, 20)).ok


def test_substitute_equation_moves_minimal_index_down(poly):
    eq = MahlerEquation(2, (UniPoly.zero(), poly(1, 0, -1), -poly(1, 0, 0, 0, -1)))

    result, residues = substitute_equation(eq, 1)

    assert residues == [("k", 0), ("l", 0)]
    assert result.coeffs == (ONE_MINUS_X, -poly(1, 0, -1))
    with pytest.raises(EquationError):
        substitute_equation(MahlerEquation(2, (UniPoly.zero(),)), 2)


def test_clear_fractional_handles_half_integer_exponents(poly):
    # coefficients in t = x^(1/2): (1 + t)(1 - t^2) F = 1 + t
    eq = MahlerEquation(2, (poly(1, 1) * poly(1, 0, -1),), poly(1, 1))

    cleared = clear_fractional(eq, 2)

    assert cleared.coeffs == (ONE_MINUS_X,)
    assert cleared.inhom == ONE
    assert verify_equation(cleared, _geometric(15)).ok
    assert clear_fractional(cleared, 1) is cleared


def test_twist_by_minus_one_for_base_three(poly):
    eq = MahlerEquation(3, (ONE_MINUS_X, -poly(1, 0, 0, -1)))

    twisted = twist_equation(eq, -1)

    assert twisted.coeffs == (poly(1, 1), -poly(1, 0, 0, 1))
    assert verify_equation(twisted, rational_to_series(ONE, poly(1, 1), 30)).ok
    assert twist_equation(eq, 1) is eq


def test_twist_needs_a_fixed_root_of_unity():
    with pytest.raises(EquationError):
        twist_equation(rational_equation(ONE, ONE_MINUS_X, 2), -1)


def test_denominator_upper_bound_verdicts(poly):
    single = denominator_upper_bound([rational_equation(ONE, ONE_MINUS_X, 2)])
    pair = denominator_upper_bound(
        [MahlerEquation(2, (ONE_MINUS_X, ONE)), MahlerEquation(2, (poly(1, 1), ONE))]
    )
    reduced = denominator_upper_bound([reduce_rational_equation(ONE, ONE_MINUS_X, 2, 1)])

    assert single.candidate == ONE_MINUS_X
    assert single.verdict is DenominatorVerdict.UNKNOWN
    assert pair.candidate == ONE
    assert pair.verdict is DenominatorVerdict.REGULAR_CERTIFIED
    assert reduced.verdict is DenominatorVerdict.REGULAR_CERTIFIED


def test_denominator_upper_bound_rejects_bad_input():
    with pytest.raises(EquationError):
        denominator_upper_bound([])
    with pytest.raises(EquationError):
        denominator_upper_bound([MahlerEquation(2, (ONE,)), MahlerEquation(3, (ONE,))])


def test_asserted_exact_candidate_is_not_regular():
    certificate = denominator_upper_bound([rational_equation(ONE, ONE_MINUS_X, 2)], assert_exact=True)

    assert certificate.verdict is DenominatorVerdict.NOT_REGULAR_GIVEN_CANDIDATE_EXACT


def test_preceq_examples(poly):
    negligible = preceq(poly(1, 1), ONE_MINUS_X, 2)
    reflexive = preceq(poly(1, -1, 0, 1), poly(1, -1, 0, 1), 2)
    product = preceq(ONE_MINUS_X * poly(1, 0, -1), ONE_MINUS_X, 2, s_max=1)

    assert negligible.status is PreceqStatus.HOLDS and negligible.s == 0
    assert negligible.witness == poly(1, 1)
    assert reflexive.holds and reflexive.witness == ONE and reflexive.s == 0
    assert product.holds and product.witness == ONE and product.s == 1


def test_preceq_failure_is_bounded(poly):
    result = preceq(poly(1, -2), ONE_MINUS_X, 2, s_max=2)

    assert result.status is PreceqStatus.FAILS_WITHIN_BOUND
    assert result.searched_up_to == 2
    with pytest.raises(ZeroPolynomialError):
        preceq(UniPoly.zero(), ONE, 2)


def test_preceq_is_stable_under_products_and_substitution(poly):
    p, q, r = ONE_MINUS_X * poly(1, 0, -1), ONE_MINUS_X, poly(3, 1)

    base = preceq(p, q, 2, s_max=2)

    assert base.holds
    assert preceq(p * r, q * r, 2, s_max=base.s + 1).holds
    assert preceq(p.compose_power(3), q.compose_power(3), 2, s_max=base.s + 1).holds


def test_equivalence(poly):
    assert equivalent(ONE_MINUS_X, poly(1, 0, -1), 2)
    assert not equivalent(ONE_MINUS_X, poly(1, -2), 2)


def test_product_regularization_certifies_regularity():
    eq = rational_equation(ONE, ONE_MINUS_X, 2)
    order = 40
    regularized_series = series_mul(infinite_product_truncated(ONE_MINUS_X, 2, order), _geometric(order))

    regularized = product_regularization(eq)

    assert regularized.coeffs[0] == ONE
    assert verify_equation(regularized, regularized_series.truncate(order)).ok
    assert denominator_upper_bound([regularized]).verdict is DenominatorVerdict.REGULAR_CERTIFIED


def test_product_regularization_needs_homogeneous_input():
    with pytest.raises(EquationError):
        product_regularization(MahlerEquation(2, (ONE_MINUS_X,), ONE))


def test_scaled_equation_still_verifies():
    eq = rational_equation(ONE, ONE_MINUS_X, 2).scaled(Fraction(-3, 7))

    assert verify_equation(eq, _geometric(12)).ok
