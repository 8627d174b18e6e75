"""Deterministic test corpus for the acceptance report."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional

from sympy import legendre_symbol

from mahlerkit.exactalg import UniPoly
from mahlerkit.lrs import EventuallyPeriodic, LRSSpec
from mahlerkit.multdecomp import MultiplicativeDecomposition
from mahlerkit.series import SequenceSpec, parse_sequence_spec

DEFAULT_SEED = 20240601


def random_lrs(rng: random.Random, max_order: int = 3) -> LRSSpec:
    """Recurrence with g(0) = 1 and a nonzero last coefficient."""
    order = rng.randint(1, max_order)
    rec = [rng.randint(-2, 2) for _ in range(order)]
    if not rec[-1]:
        rec[-1] = 1
    init = [1] + [rng.randint(-3, 3) for _ in range(order - 1)]
    return LRSSpec.of(rec, init)


def character_table(modulus: int, quadratic: Optional[int] = None) -> EventuallyPeriodic:
    """Principal character mod ``modulus``, times the Legendre symbol mod ``quadratic``."""
    period = modulus * (quadratic or 1)
    per = []
    for n in range(1, period + 1):
        value = 1 if gcd(n, modulus) == 1 else 0
        if quadratic is not None:
            value *= int(legendre_symbol(n % quadratic, quadratic)) if n % quadratic else 0
        per.append(value)
    return EventuallyPeriodic.of([], per).minimal()


def random_decomposition(rng: random.Random, primes=(2, 3, 5), max_r: int = 3) -> MultiplicativeDecomposition:
    p = rng.choice(primes)
    chi = character_table(rng.randint(1, 8), rng.choice([None, 5, 7])).masked(p)
    return MultiplicativeDecomposition(p, random_lrs(rng), rng.randint(0, max_r), chi)


def decomposition_corpus(seed: int = DEFAULT_SEED, count: int = 25) -> List[MultiplicativeDecomposition]:
    rng = random.Random(seed)
    return [random_decomposition(rng) for _ in range(count)]


def regular_corpus() -> List[MultiplicativeDecomposition]:
    """Small p = 2 decompositions whose kernels stay low-dimensional."""
    odd = EventuallyPeriodic.of([], [1, 0])
    return [
        MultiplicativeDecomposition(2, LRSSpec.of([2], [1]), 0, odd),
        MultiplicativeDecomposition(2, LRSSpec.of([1], [1]), 1, odd),
        MultiplicativeDecomposition(2, LRSSpec.of([2, -1], [1, 2]), 0, odd),
        MultiplicativeDecomposition(2, LRSSpec.of([-1], [1]), 0, character_table(3).masked(2)),
        MultiplicativeDecomposition(2, LRSSpec.of([0], [1]), 0, character_table(1, 5).masked(2)),
    ]


def multiplicative_members() -> Dict[str, SequenceSpec]:
    raw = {
        "identity": {"kind": "identity"},
        "ones": {"kind": "constant", "value": 1},
        "two_adic_power": {"kind": "two_adic_power"},
        "odd_part": {"kind": "odd_part"},
        "principal_mod_4": {"kind": "principal_character", "modulus": 4},
        "legendre_mod_5": {"kind": "quadratic_character", "prime": 5},
        "mobius": {"kind": "mobius"},
        "totient": {"kind": "totient"},
    }
    return {name: parse_sequence_spec(data) for name, data in raw.items()}


def random_poly(rng: random.Random, max_degree: int, bound: int = 3, nonzero_constant: bool = False) -> UniPoly:
    degree = rng.randint(0, max_degree)
    coeffs = [rng.randint(-bound, bound) for _ in range(degree + 1)]
    if nonzero_constant and not coeffs[0]:
        coeffs[0] = 1
    if not coeffs[-1]:
        coeffs[-1] = 1
    return UniPoly.of([Fraction(c) for c in coeffs])
