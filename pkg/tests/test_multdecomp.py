from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

import pytest
from sympy import divisor_sigma, mobius, totient

from mahlerkit.cli.corpus import character_table, regular_corpus
from mahlerkit.exactalg import UniPoly
from mahlerkit.lrs import EventuallyPeriodic, LRSSpec
from mahlerkit.multdecomp import (
    DecompositionError,
    MultiplicativeDecomposition,
    MultStatus,
    NotMultiplicativeError,
    ObstructionStatus,
    canonicalize,
    check_multiplicative,
    completely_multiplicative_at,
    coprimality_probe,
    decompose,
    gq_series,
    h_series,
    is_automatic_decomposition,
    mahler_obstruction,
    prime_split_check,
    q_root_probe,
    synthesize,
    twisted_norm,
    unit_root_avg_check,
)
from mahlerkit.regular import GuessResult, kernel_guess
from mahlerkit.series import parse_sequence_spec

ODD = EventuallyPeriodic.of([], [1, 0])
DOUBLING = LRSSpec.of([2], [1])
ONES_G = LRSSpec.of([1], [1])


def _table(term, order):
    return [Fraction(0)] + [Fraction(int(term(n))) for n in range(1, order + 1)]


def _identity(order):
    return _table(lambda n: n, order)


def _two_adic(order):
    return _table(lambda n: n & -n, order)


def _odd_part(order):
    return _table(lambda n: n // (n & -n), order)


def test_identity_is_completely_multiplicative():
    report = check_multiplicative(_identity(60))

    assert report.status is MultStatus.MULTIPLICATIVE
    assert report.bad_primes == ()
    assert report.completely_multiplicative_primes[:4] == (2, 3, 5, 7)


@pytest.mark.parametrize("values", [_two_adic(64), _odd_part(64)])
def test_two_adic_ladders_hold(values):
    report = check_multiplicative(values)

    assert report.is_multiplicative
    assert 2 not in report.bad_primes


def test_bad_primes_follow_the_ladder():
    assert check_multiplicative(_table(mobius, 30)).bad_primes == (2, 3, 5)
    assert 2 in check_multiplicative(_table(lambda n: divisor_sigma(n), 30)).bad_primes
    assert 2 in check_multiplicative(_table(totient, 30)).bad_primes


def test_counterexample_is_a_coprime_pair():
    report = check_multiplicative(_table(lambda n: n + 1, 30))

    assert report.status is MultStatus.COUNTEREXAMPLE
    assert report.counterexample == (1, 1)
    with pytest.raises(ValueError):
        check_multiplicative([Fraction(0), Fraction(1)])


def test_completely_multiplicative_at():
    assert completely_multiplicative_at(_identity(40), 3)
    assert not completely_multiplicative_at(_table(mobius, 40), 2)


def test_decompose_two_adic_power():
    dec = decompose(_two_adic(256), 2)

    assert dec == MultiplicativeDecomposition(2, DOUBLING, 0, ODD)
    assert dec.verified_bound == 256
    assert not dec.ambiguous


def test_decompose_odd_part():
    assert decompose(_odd_part(256), 2) == MultiplicativeDecomposition(2, ONES_G, 1, ODD)


def test_decompose_identity_through_the_recurrence_branch():
    assert decompose(_identity(200), 6) == MultiplicativeDecomposition(2, DOUBLING, 1, ODD)
    assert decompose(_identity(200), 6, p_override=3).p == 3


def test_decompose_prime_power_base_forces_the_prime():
    assert decompose(_odd_part(256), 4).p == 2


def test_decompose_zero_sequence():
    dec = decompose([Fraction(0)] * 50, 3)

    assert dec.chi.is_zero()
    assert dec.p == 3


def test_decompose_rejects_non_multiplicative_input():
    with pytest.raises(NotMultiplicativeError) as excinfo:
        decompose(_table(lambda n: n + 1, 40), 2)

    assert excinfo.value.witness == (1, 1)


def test_decompose_reports_missing_structure():
    with pytest.raises(DecompositionError):
        decompose(_table(totient, 200), 2)
    with pytest.raises(DecompositionError):
        decompose(_odd_part(200), 2, r_max=0)


def test_decomposition_error_carries_the_index():
    error = DecompositionError("re-synthesis disagrees with the data", 17)

    assert error.index == 17
    assert "n=17" in str(error)


def test_synthesize_constant_ladder():
    dec = MultiplicativeDecomposition(2, ONES_G, 0, ODD)

    assert synthesize(dec, 20) == [Fraction(0)] + [Fraction(1)] * 20


def test_synthesize_valuation_plus_one():
    dec = MultiplicativeDecomposition(2, LRSSpec.of([2, -1], [1, 2]), 0, ODD)

    values = synthesize(dec, 64)

    assert values[12] == 3
    assert values[1:] == [Fraction((n & -n).bit_length()) for n in range(1, 65)]


def test_synthesize_with_character_table():
    chi = character_table(1, 5).masked(3)
    dec = MultiplicativeDecomposition(3, ONES_G, 2, chi)

    values = synthesize(dec, 6)

    assert values[1:] == [1, -4, 1, 16, 0, -4]
    assert synthesize(dec, -1) == []


@pytest.mark.parametrize("dec", regular_corpus(), ids=lambda dec: f"g{dec.g.rec}-chi{len(dec.chi.per)}")
def test_round_trip_through_synthesis(dec):
    values = synthesize(dec, 1024)

    assert check_multiplicative(values).is_multiplicative
    assert decompose(values, dec.p) == canonicalize(dec)


@pytest.mark.parametrize("dec", regular_corpus()[:3])
def test_synthesized_sequences_are_regular(dec):
    bound = dec.g.order + len(dec.chi.per) + 2

    assert isinstance(kernel_guess(synthesize(dec, 1024), dec.p, max_dim=bound), GuessResult)


def test_canonical_decomposition_is_a_fixed_point():
    dec = MultiplicativeDecomposition(2, DOUBLING, 0, ODD)

    assert canonicalize(dec) == dec


def test_canonicalize_normalizes_chi_and_g():
    dec = MultiplicativeDecomposition(2, LRSSpec.of([2], [3]), 0, EventuallyPeriodic.of([], [1]))

    canonical = canonicalize(dec)

    assert canonical == MultiplicativeDecomposition(2, DOUBLING, 0, EventuallyPeriodic.of([], [3, 0]))
    assert synthesize(canonical, 100) == synthesize(dec, 100)


def test_canonicalize_flags_eventually_zero_chi():
    dec = MultiplicativeDecomposition(2, ONES_G, 1, EventuallyPeriodic.of([1, 0, 1], [0]))

    canonical = canonicalize(dec)

    assert canonical.ambiguous
    assert canonical.r == 0
    assert canonical.chi == EventuallyPeriodic.of([1, 0, 3], [0])
    assert synthesize(canonical, 50) == synthesize(dec, 50)


def test_canonicalize_zero():
    dec = MultiplicativeDecomposition(5, LRSSpec.of([1], [0]), 2, ODD)

    assert canonicalize(dec).chi.is_zero()
    assert canonicalize(replace(dec, g=ONES_G, chi=EventuallyPeriodic.zero())).g == LRSSpec.of([0], [1])


def test_prime_split():
    assert prime_split_check(_identity(100), 2).ok
    assert prime_split_check(_table(mobius, 100), 3).ok

    report = prime_split_check(_table(lambda n: n + 1, 30), 2)

    assert not report.ok
    assert report.mismatch_exponent == 1


def test_automaticity_prediction():
    growing = is_automatic_decomposition(MultiplicativeDecomposition(2, DOUBLING, 0, ODD), 255)
    constant = is_automatic_decomposition(MultiplicativeDecomposition(2, ONES_G, 0, ODD), 255)

    assert not growing.predicted
    assert growing.consistent
    assert constant.predicted
    assert constant.probe.size == 2
    assert constant.consistent


def test_mahler_obstruction():
    assert mahler_obstruction(_two_adic(128), 2).status is ObstructionStatus.DECOMPOSED
    assert mahler_obstruction(_table(lambda n: divisor_sigma(n), 200), 2).status is ObstructionStatus.NO_STRUCTURE
    assert mahler_obstruction(_table(totient, 200), 2).status is ObstructionStatus.NO_STRUCTURE

    report = mahler_obstruction(_table(lambda n: n + 1, 40), 2)

    assert report.status is ObstructionStatus.NOT_MULTIPLICATIVE
    assert report.decomposition is None


@pytest.mark.parametrize("kind", ["identity", "constant", "odd_part", "mobius"])
@pytest.mark.parametrize("q", [3, 5])
def test_gq_support(kind, q):
    spec = parse_sequence_spec({"kind": kind})

    report = gq_series(spec, q, 80)

    assert report.supported_on_q2
    assert report.offending_exponent is None


def test_gq_of_identity_vanishes():
    assert gq_series(parse_sequence_spec({"kind": "identity"}), 3, 60).series.is_zero()


def test_gq_detects_non_multiplicative_data():
    report = gq_series(_table(lambda n: n + 1, 40), 3, 40)

    assert not report.supported_on_q2
    assert report.offending_exponent == 3


def test_h_series():
    ones = h_series(parse_sequence_spec({"kind": "constant"}), 3, 30)
    zero = h_series([Fraction(0)] * 31, 3, 30)

    assert ones[4] == 3
    assert ones[3] == 0
    assert zero.is_zero()
    assert h_series(parse_sequence_spec({"kind": "totient"}), 5, 60)[11] == 5 * 10


def test_identities_reject_q_that_is_not_an_odd_prime():
    with pytest.raises(ValueError):
        gq_series([Fraction(1)] * 10, 4, 9)
    with pytest.raises(ValueError):
        unit_root_avg_check([Fraction(1)] * 10, 2, 9)
    with pytest.raises(ValueError):
        h_series([Fraction(1)] * 5, 3, 9)
    for composite in (9, 15):
        with pytest.raises(ValueError):
            gq_series([Fraction(1)] * 40, composite, 30)
        with pytest.raises(ValueError):
            unit_root_avg_check([Fraction(1)] * 40, composite, 30)


@pytest.mark.parametrize(
    "kind, q",
    [("identity", 3), ("constant", 5), ("two_adic_power", 3), ("odd_part", 7)],
)
def test_averaging_identity_holds(kind, q):
    result = unit_root_avg_check(parse_sequence_spec({"kind": kind}), q, 300)

    assert result.holds
    assert result.order == 300


def test_averaging_identity_fails_without_complete_multiplicativity():
    result = unit_root_avg_check(parse_sequence_spec({"kind": "mobius"}), 3, 100)

    assert not result.holds
    assert result.fails_at == 9


@pytest.mark.parametrize(
    "p, q, k, bound",
    [
        (UniPoly.of([1, -1]), 5, 2, 3),
        (UniPoly.x(), 5, 2, 3),
        (UniPoly.of([2, -3, 1]), 5, 3, 2),
    ],
)
def test_coprimality_probe(p, q, k, bound):
    report = coprimality_probe(p, q, k, i_max=bound, n_max=bound)

    assert report.ok
    assert report.checked == (bound + 1) * bound * (q - 1)


def test_twisted_norm():
    assert twisted_norm(UniPoly.of([1, -1]), 3) == UniPoly.of([1, 1, 1])


def test_q_root_probe():
    one_minus_x = UniPoly.of([1, -1])

    coprime = q_root_probe(one_minus_x, one_minus_x, 3, 2)
    shared = q_root_probe(one_minus_x, one_minus_x, 3, 3)

    assert coprime.ok
    assert coprime.searched_up_to == 2
    assert not shared.ok
    assert shared.divides_at == 1
    with pytest.raises(ValueError):
        q_root_probe(one_minus_x, UniPoly.x(), 3, 2)
