"""Guessing linear representations from the k-kernel of a sequence."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Deque, Dict, List, Optional, Sequence, Tuple, Union

from mahlerkit.exactalg import qq_matrix, span_coordinates
from mahlerkit.lrs.recurrence import BMResult, berlekamp_massey

from .linrep import LinRep, linrep_eval, linrep_values

logger = logging.getLogger(__name__)

Node = Tuple[int, int]


class KernelGuessError(ValueError):
    """Raised when too few values are available to compare kernel sequences."""


@dataclass(frozen=True)
class KernelBasis:
    """Basis nodes (e, r) standing for n -> f(k^e n + r), and for every basis
    element and digit i the coordinates of its child n -> b(kn + i)."""

    nodes: Tuple[Node, ...]
    children: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]
    window: int


@dataclass(frozen=True)
class GuessResult:
    rep: LinRep
    basis: KernelBasis
    verified_bound: int


@dataclass(frozen=True)
class NoRepWithinBounds:
    max_dim: int
    window: int
    reason: str


def kernel_sequence(values: Sequence[Fraction], k: int, e: int, r: int) -> List[Fraction]:
    """n -> f(k^e n + r) for every index available in ``values``."""
    if not 0 <= r < k**e:
        raise ValueError(f"residue {r} out of range for k^e = {k**e}")
    return list(values[r :: k**e])


def _window_vector(values: Sequence[Fraction], k: int, node: Node, window: int) -> List[Fraction]:
    e, r = node
    step = k**e
    last = step * (window - 1) + r
    if last >= len(values):
        raise KernelGuessError(f"kernel node {node} needs f({last}), only {len(values) - 1} available")
    return list(values[r : last + 1 : step])


def _zero_rep(k: int) -> LinRep:
    one = ((Fraction(1),),)
    return LinRep(k, (Fraction(0),), (one,) * k, (Fraction(1),))


def _guess_at_window(
    values: Sequence[Fraction], k: int, max_dim: int, window: int
) -> Union[Tuple[LinRep, KernelBasis], NoRepWithinBounds]:
    vectors: List[List[Fraction]] = []
    nodes: List[Node] = []
    queue: Deque[Node] = deque([(0, 0)])
    while queue:
        node = queue.popleft()
        vector = _window_vector(values, k, node, window)
        if qq_matrix(vectors + [vector]).rank() == len(vectors):
            continue
        vectors.append(vector)
        nodes.append(node)
        if len(nodes) > max_dim:
            return NoRepWithinBounds(max_dim, window, f"kernel rank exceeds {max_dim}")
        e, r = node
        queue.extend((e + 1, r + i * k**e) for i in range(k))
    if not nodes:
        return _zero_rep(k), KernelBasis((), (), window)

    children = []
    for e, r in nodes:
        row = []
        for i in range(k):
            coords = span_coordinates(vectors, _window_vector(values, k, (e + 1, r + i * k**e), window))
            if coords is None:
                raise KernelGuessError(f"child {i} of node {(e, r)} left the span")
            row.append(tuple(coords))
        children.append(tuple(row))

    d = len(nodes)
    # V(kn + i) = B_i V(n) for the basis vector V; transpose to get u A(...) v
    mats = tuple(
        tuple(tuple(children[j][i][l] for j in range(d)) for l in range(d)) for i in range(k)
    )
    u = tuple(Fraction(values[r]) for _, r in nodes)
    v = tuple(Fraction(1 if j == 0 else 0) for j in range(d))
    return LinRep(k, u, mats, v), KernelBasis(tuple(nodes), tuple(children), window)


def kernel_guess(
    values: Sequence[Fraction], k: int, max_dim: int = 8
) -> Union[GuessResult, NoRepWithinBounds]:
    """Guess a representation of f from f(0..N) and verify it on every n <= N.

    Kernel sequences are compared on a window of 2*max_dim values, doubled
    while verification fails and the data still allows it.

    Raises:
        KernelGuessError: if the first window does not fit in the data.
    """
    values = [Fraction(v) for v in values]
    order = len(values) - 1
    window = 2 * max_dim
    first = True
    while True:
        try:
            outcome = _guess_at_window(values, k, max_dim, window)
        except KernelGuessError:
            if first:
                raise
            return NoRepWithinBounds(max_dim, window // 2, "verification failed on every window that fits")
        if isinstance(outcome, NoRepWithinBounds):
            logger.debug("no representation of dimension <= %s (window %s)", max_dim, window)
            return outcome
        rep, basis = outcome
        if linrep_values(rep, order) == values:
            logger.debug("kernel guess dimension %s verified to %s", rep.dim, order)
            return GuessResult(rep, basis, order)
        first = False
        if k * 2 * window > order + 1:
            return NoRepWithinBounds(max_dim, window, "verification failed on every window that fits")
        window *= 2


def subsequence_ap(
    source: Union[LinRep, Sequence[Fraction]],
    a: int,
    b: int,
    k: Optional[int] = None,
    max_dim: int = 8,
    order: Optional[int] = None,
) -> Union[GuessResult, NoRepWithinBounds]:
    """Representation of n -> f(an + b), by evaluation and re-guessing.

    ``order`` is the number of terms of the subsequence to guess from when
    ``source`` is a representation; plain values use every available term.
    """
    if a < 1 or not 0 <= b < a:
        raise ValueError(f"need a >= 1 and 0 <= b < a, got a={a}, b={b}")
    if isinstance(source, LinRep):
        k = source.k if k is None else k
        count = order if order is not None else 64 * max_dim
        values = linrep_values(source, a * count + b)
    else:
        if k is None:
            raise ValueError("k is required when guessing from values")
        values = list(source)
    return kernel_guess(values[b::a], k, max_dim)


def linrep_sum(
    f: LinRep, g: LinRep, order: int, max_dim: Optional[int] = None
) -> Union[GuessResult, NoRepWithinBounds]:
    """Representation of f + g of dimension at most dim f + dim g."""
    if f.k != g.k:
        raise ValueError(f"bases differ: {f.k} and {g.k}")
    bound = f.dim + g.dim if max_dim is None else max_dim
    total = [x + y for x, y in zip(linrep_values(f, order), linrep_values(g, order))]
    return kernel_guess(total, f.k, bound)


@dataclass(frozen=True)
class AutomaticWithKernelSize:
    size: int
    depth: int


@dataclass(frozen=True)
class ExceedsHorizon:
    horizon: int
    distinct_seen: int


def default_horizon(order: int, k: int, min_length: int = 16) -> int:
    """Largest depth e whose kernel sequences still have ``min_length`` values."""
    e = 0
    while (order + 1) // k ** (e + 1) >= min_length:
        e += 1
    return e


def is_automatic_probe(
    values: Sequence[Fraction], k: int, horizon: Optional[int] = None
) -> Union[AutomaticWithKernelSize, ExceedsHorizon]:
    """Count distinct kernel sequences breadth-first down to depth ``horizon``.

    All sequences are compared on the first (N + 1) // k^horizon values, the
    range every node down to that depth provides.
    """
    order = len(values) - 1
    if horizon is None:
        horizon = default_horizon(order, k)
    length = (order + 1) // k**horizon
    if length < 1:
        raise KernelGuessError(f"horizon {horizon} leaves no values to compare")
    seen: Dict[Tuple[Fraction, ...], Node] = {}
    frontier: List[Node] = [(0, 0)]
    for depth in range(horizon + 1):
        fresh: List[Node] = []
        for e, r in frontier:
            key = tuple(values[r : r + k**e * length : k**e])
            if key not in seen:
                seen[key] = (e, r)
                fresh.append((e, r))
        if not fresh:
            return AutomaticWithKernelSize(len(seen), depth)
        frontier = [(e + 1, r + i * k**e) for e, r in fresh for i in range(k)]
    logger.debug("kernel still growing at depth %s with %s sequences", horizon, len(seen))
    return ExceedsHorizon(horizon, len(seen))


def ladder_lrs(rep: LinRep, digit: int = 1) -> BMResult:
    """i -> f(digit * k^i) = (u A(digit)) A(0)^i v, recovered as a recurrence."""
    if not 1 <= digit < rep.k:
        raise ValueError(f"digit must lie in [1, {rep.k})")
    count = 2 * rep.dim + 2
    return berlekamp_massey([linrep_eval(rep, digit * rep.k**i) for i in range(count)])
