"""Acceptance report: twelve criteria run over the deterministic corpus."""

from __future__ import annotations

import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Dict, List, Optional, Tuple

from mahlerkit.config import RunConfig
from mahlerkit.exactalg import UniPoly, cyclotomic_poly, factor_negligible, poly_gcd
from mahlerkit.lrs import (
    ChiClass,
    EventuallyPeriodic,
    LRSSpec,
    berlekamp_massey,
    classify_mult_ev_periodic,
    lrs_values,
)
from mahlerkit.mahler import (
    MahlerEquation,
    rational_equation,
    reduce_rational_equation,
    substitute_equation,
    verify_equation,
)
from mahlerkit.multdecomp import (
    MultiplicativeDecomposition,
    canonicalize,
    coprimality_probe,
    decompose,
    gq_series,
    h_series,
    synthesize,
    unit_root_avg_check,
)
from mahlerkit.ore import FracPoly, OrePoly, faithfulness_probe, minimal_inhomogeneous_operator, ore_divmod, ore_mul
from mahlerkit.regular import GuessResult, kernel_guess, linrep_values, subsequence_ap
from mahlerkit.series import (
    TruncSeries,
    cartier,
    mahler_subst,
    parse_sequence_spec,
    poly_mul_series,
    rational_to_series,
    scalar_mul,
    series_add,
)

from .corpus import character_table, decomposition_corpus, multiplicative_members, random_poly, regular_corpus

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, str, Any]


@dataclass
class CriterionResult:
    id: str
    title: str
    passed: bool
    detail: str
    witness: Any = None
    seconds: Optional[float] = None

    def to_dict(self, timings: bool) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "id": self.id,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "witness": self.witness,
        }
        if timings:
            data["seconds"] = round(self.seconds or 0.0, 3)
        return data


def _rng(config: RunConfig, salt: int) -> random.Random:
    return random.Random(config.seed * 100 + salt)


def c01_decomposition_round_trip(config: RunConfig) -> Outcome:
    order = 5000
    corpus = decomposition_corpus(config.seed, 25)
    for index, dec in enumerate(corpus):
        recovered = canonicalize(decompose(synthesize(dec, order), dec.p))
        if recovered != canonicalize(dec):
            return False, f"decomposition {index} did not round-trip", index
    return True, f"{len(corpus)} decompositions recovered at N={order}", None


def c02_canonical_examples(config: RunConfig) -> Outcome:
    order = 1024
    odd = EventuallyPeriodic.of([], [1, 0])
    expected = {
        "odd_part": MultiplicativeDecomposition(2, LRSSpec.of([1], [1]), 1, odd),
        "two_adic_power": MultiplicativeDecomposition(2, LRSSpec.of([2], [1]), 0, odd),
    }
    for kind, target in expected.items():
        values = parse_sequence_spec({"kind": kind}).values(order)
        if decompose(values, 2) != target:
            return False, f"{kind} decomposed differently", kind
    return True, "both examples decompose exactly", None


def c03_cartier_suite(config: RunConfig) -> Outcome:
    rng = _rng(config, 3)
    for trial in range(200):
        l = rng.choice([2, 3])
        r = rng.randrange(l)
        m, s = rng.choice([2, 3]), 0
        s = rng.randrange(m)
        p = random_poly(rng, 8)
        g = TruncSeries.from_poly(random_poly(rng, 12), 40)
        h = TruncSeries.from_poly(random_poly(rng, 12), 40)
        a, b = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))
        linear = cartier(series_add(scalar_mul(a, g), scalar_mul(b, h)), l, r)
        if linear != series_add(scalar_mul(a, cartier(g, l, r)), scalar_mul(b, cartier(h, l, r))):
            return False, "linearity failed", trial
        product = cartier(poly_mul_series(p, mahler_subst(g, l)), l, r)
        if not product.agrees_with(poly_mul_series(p.cartier(l, r), g)):
            return False, "product rule failed", trial
        if cartier(cartier(g, m, s), l, r) != cartier(g, l * m, s + m * r):
            return False, "composition law failed", trial
        if p.cartier(l, r).degree() > p.degree() // l:
            return False, "degree bound failed", trial
    return True, "200 instances", None


def c04_negligibility_table(config: RunConfig) -> Outcome:
    for k in (2, 3, 4, 6, 10, 12):
        for d in range(1, 61):
            if factor_negligible(cyclotomic_poly(d), k).negligible != (gcd(d, k) > 1):
                return False, f"Phi_{d} misclassified for k={k}", [d, k]
    return True, "d <= 60, six bases", None


def _coprime_pair(rng: random.Random, degree: int) -> Tuple[UniPoly, UniPoly]:
    p = random_poly(rng, degree)
    q = random_poly(rng, degree, nonzero_constant=True)
    common = poly_gcd(p, q)
    if common.degree() > 0:
        p, q = p.exact_div(common), q.exact_div(common)
    return p, q


def c05_rational_pipeline(config: RunConfig) -> Outcome:
    rng = _rng(config, 5)
    k = config.k
    for trial in range(50):
        p, q = _coprime_pair(rng, 6)
        if not verify_equation(rational_equation(p, q, k), rational_to_series(p, q, 200)).ok:
            return False, "rational_equation failed verification", trial
        for n in (1, 2):
            p0 = reduce_rational_equation(p, q, k, n).coeffs[0]
            bad = [d for d, _ in factor_negligible(p0, k).cyclotomic_factors if d <= 12 and gcd(d, k) == 1]
            if bad:
                return False, f"P_0 keeps Phi_{bad[0]} at n={n}", trial
    return True, "50 pairs", None


def c06_substitution(config: RunConfig) -> Outcome:
    rng = _rng(config, 6)
    k, order = config.k, 400
    for trial in range(20):
        l = rng.choice([2, 3])
        p, q = _coprime_pair(rng, 3)
        base = rational_equation(p, q, k)
        lifted = MahlerEquation(k, tuple(c.compose_power(l) for c in base.coeffs))
        noisy = lifted.multiplied(random_poly(rng, 3, nonzero_constant=True))
        series = rational_to_series(p.compose_power(l), q.compose_power(l), order)
        result, _ = substitute_equation(noisy, l)
        if any(c and n % l for poly in result.coeffs for n, c in enumerate(poly.coeffs)):
            return False, "coefficients are not polynomials in x^l", trial
        check = verify_equation(result, series)
        if not check.ok or check.order < 100:
            return False, f"substituted equation verified only to {check.order}", trial
    return True, "20 substitutions", None


def _random_operator(rng: random.Random, k: int, degree: int, coeff_degree: int) -> OrePoly:
    coeffs = [FracPoly.of(random_poly(rng, coeff_degree)) for _ in range(rng.randint(0, degree) + 1)]
    return OrePoly(k, tuple(coeffs))


def c07_ore_suite(config: RunConfig) -> Outcome:
    rng = _rng(config, 7)
    for trial in range(300):
        f = _random_operator(rng, 2, 3, 2)
        g = _random_operator(rng, 2, 2, 2)
        q, r = ore_divmod(f, g)
        if ore_mul(q, g) + r != f or r.degree() >= g.degree():
            return False, "division identity failed", trial
        if ore_mul(f, g).degree() != f.degree() + g.degree():
            return False, "degree additivity failed", trial
    for k in (2, 3):
        if not faithfulness_probe([k]).ok:
            return False, f"faithfulness probe failed for k={k}", k
    if not faithfulness_probe([2, 3]).ok:
        return False, "faithfulness probe failed for bases (2, 3)", [2, 3]
    return True, "300 divisions and products", None


def c08_operator_guessing(config: RunConfig) -> Outcome:
    rational = parse_sequence_spec({"kind": "rational", "num": [1], "den": [1, -1]})
    found = minimal_inhomogeneous_operator(rational, 2, order=64)
    if found.mahler_degree != 0:
        return False, "1/(1-x) needs a Mahler degree 0 operator", found.mahler_degree
    lacunary = parse_sequence_spec({"kind": "lacunary", "k": 2})
    found = minimal_inhomogeneous_operator(lacunary, 2, order=512)
    if found.mahler_degree != 1 or found.verified_order < 512:
        return False, "lacunary series needs a Mahler degree 1 operator", found.mahler_degree
    return True, "both operators found", None


def c09_identities(config: RunConfig) -> Outcome:
    members = multiplicative_members()
    for name, spec in members.items():
        for q in (3, 5):
            if not gq_series(spec, q, 200).supported_on_q2:
                return False, f"G_{q} support fails for {name}", name
            h_series(spec, q, 200)
    for name in ("identity", "ones"):
        for q in (3, 5, 7):
            check = unit_root_avg_check(members[name], q, 300)
            if not check.holds:
                return False, f"averaging identity fails for {name} at q={q}", check.fails_at
    return True, f"{len(members)} sequences", None


def c10_coprimality(config: RunConfig) -> Outcome:
    one = UniPoly.of([1])
    x = UniPoly.x()
    polys = [one - x, (one - x) * (one.scale(2) - x), one - x.scale(2)]
    for p in polys:
        for k in (2, 3):
            for q in (5, 7):
                report = coprimality_probe(p, q, k)
                if not report.ok:
                    return False, f"non-monomial gcd for P={p!r}, k={k}, q={q}", list(report.violations[0])
    return True, "zero violations", None


def c11_regular_guessing(config: RunConfig) -> Outcome:
    train, test = 2048, 10_000
    for index, dec in enumerate(regular_corpus()):
        guess = kernel_guess(synthesize(dec, train), dec.p, max_dim=10)
        if not isinstance(guess, GuessResult):
            return False, f"no representation for regular member {index}", index
        if linrep_values(guess.rep, test) != synthesize(dec, test):
            return False, f"held-out prediction failed for member {index}", index
    for kind in ("identity", "two_adic_power"):
        values = parse_sequence_spec({"kind": kind}).values(3 * train + 2)
        for a, b in ((2, 1), (3, 2)):
            sub = subsequence_ap(values, a, b, 2, max_dim=10)
            expected = values[b::a]
            if not isinstance(sub, GuessResult) or linrep_values(sub.rep, len(expected) - 1) != expected:
                return False, f"subsequence ({a}, {b}) of {kind} failed", [a, b]
    return True, f"{len(regular_corpus())} members, two progressions", None


def c12_lrs_periodicity(config: RunConfig) -> Outcome:
    rng = _rng(config, 12)
    for trial in range(50):
        order = rng.randint(1, 6)
        rec = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(order)]
        if not rec[-1]:
            rec[-1] = Fraction(1)
        spec = LRSSpec(tuple(rec), tuple(Fraction(rng.randint(-5, 5)) for _ in range(order)))
        found = berlekamp_massey(lrs_values(spec, 4 * order - 1)).spec
        if found.order > order or lrs_values(found, 8 * order) != lrs_values(spec, 8 * order):
            return False, "recurrence not recovered", trial
    for modulus in range(1, 9):
        if classify_mult_ev_periodic(character_table(modulus)).kind is not ChiClass.PERIODIC:
            return False, f"principal character mod {modulus} not periodic", modulus
    for pre in ([1], [1, 1], [1, 0, 1]):
        if classify_mult_ev_periodic(EventuallyPeriodic.of(pre, [0])).kind is not ChiClass.EVENTUALLY_ZERO:
            return False, "truncated table not eventually zero", pre
    return True, "50 recurrences, dichotomy respected", None


CRITERIA: List[Tuple[str, str, Callable[[RunConfig], Outcome]]] = [
    ("C01", "decomposition round trip", c01_decomposition_round_trip),
    ("C02", "canonical examples", c02_canonical_examples),
    ("C03", "Cartier suite", c03_cartier_suite),
    ("C04", "negligibility table", c04_negligibility_table),
    ("C05", "rational-equation pipeline", c05_rational_pipeline),
    ("C06", "substitution", c06_substitution),
    ("C07", "Ore suite", c07_ore_suite),
    ("C08", "minimal operator guessing", c08_operator_guessing),
    ("C09", "cyclotomic identities", c09_identities),
    ("C10", "coprimality probe", c10_coprimality),
    ("C11", "regular guessing", c11_regular_guessing),
    ("C12", "LRS and periodicity", c12_lrs_periodicity),
]


def _run_one(config: RunConfig, cid: str, title: str, check: Callable[[RunConfig], Outcome]) -> CriterionResult:
    started = time.perf_counter()
    try:
        passed, detail, witness = check(config)
    except Exception as exc:  # noqa: BLE001
        logger.warning("criterion %s raised %s", cid, exc)
        passed, detail, witness = False, f"{type(exc).__name__}: {exc}", None
    return CriterionResult(cid, title, passed, detail, witness, time.perf_counter() - started)


def run_report(config: RunConfig, only: Optional[List[str]] = None) -> Dict[str, Any]:
    """Run the selected criteria (all by default) and return the report document."""
    selected = [c for c in CRITERIA if only is None or c[0] in only]
    results: List[CriterionResult] = []
    if config.workers <= 1:
        results = [_run_one(config, *criterion) for criterion in selected]
    else:
        with ThreadPoolExecutor(max_workers=config.workers, thread_name_prefix="criterion") as executor:
            future_map = {executor.submit(_run_one, config, *criterion): criterion[0] for criterion in selected}
            for future in as_completed(future_map):
                results.append(future.result())
    results.sort(key=lambda result: result.id)
    logger.info("report: %s of %s criteria passed", sum(r.passed for r in results), len(results))
    return {
        "seed": config.seed,
        "criteria": [r.to_dict(config.timings) for r in results],
        "passed": all(r.passed for r in results),
    }
