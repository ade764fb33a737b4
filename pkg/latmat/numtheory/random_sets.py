"""Seeded random gcd-closed sets."""

import logging
import random
from itertools import combinations
from math import lcm

from sympy import primerange

from ..constants import DEFAULT_VALUE_BOUND, LOG_MESSAGES, MAX_GENERATION_ATTEMPTS
from ..utils import get_settings
from .counterexamples import gcd_closure
from .exceptions import ExhaustionError

logger = logging.getLogger(__name__)

PRIME_POOL_LIMIT = 32
ANTICHAIN_WEIGHT = 0.5


def _maximal(elements: set[int]) -> list[int]:
    return sorted(x for x in elements if not any(y != x and y % x == 0 for y in elements))


def _antichain_draw(rng: random.Random, value_bound: int) -> list[int]:
    """Products of distinct prime pairs, sometimes topped by their lcm.

    The pair products are pairwise incomparable, so the lcm covers all of
    them once the batch is closed under gcd. Returns fewer than two values
    when the bound leaves no room.
    """
    pool = list(primerange(2, min(value_bound, PRIME_POOL_LIMIT) + 1))
    if len(pool) < 3:
        return []
    primes = rng.sample(pool, rng.randint(3, min(4, len(pool))))
    pairs = [p * q for p, q in combinations(primes, 2) if p * q <= value_bound]
    if len(pairs) < 2:
        return []
    batch = rng.sample(pairs, rng.randint(2, len(pairs)))
    top = lcm(*batch)
    if rng.random() < 0.5 and top <= value_bound:
        batch.append(top)
    return batch


def random_gcd_closed(
    n: int,
    value_bound: int = DEFAULT_VALUE_BOUND,
    seed: int | None = None,
    antichain_weight: float = ANTICHAIN_WEIGHT,
) -> tuple[int, ...]:
    """A gcd-closed set of n distinct integers in [1, value_bound].

    Each draw is either one uniform value or, with probability
    ``antichain_weight``, an antichain of prime-pair products (see
    ``_antichain_draw``). A draw is closed under gcd together with the
    current set; an antichain draw that would overshoot n is replaced by a
    uniform one.
    Overshoot from a uniform draw is trimmed by deleting random maximal
    elements, which keeps the set gcd-closed.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= antichain_weight <= 1:
        raise ValueError(f"antichain_weight must lie in [0, 1], got {antichain_weight}")
    if value_bound < n:
        raise ExhaustionError(n, value_bound)
    rng = random.Random(get_settings().default_seed if seed is None else seed)

    current: set[int] = set()
    draws = 0
    while len(current) < n:
        if draws == MAX_GENERATION_ATTEMPTS:
            raise ExhaustionError(n, value_bound)
        draws += 1
        batch = _antichain_draw(rng, value_bound) if rng.random() < antichain_weight else []
        if len(batch) >= 2:
            closed = set(gcd_closure(current | set(batch)))
            if len(closed) <= n:
                current = closed
                continue
        current = set(gcd_closure(current | {rng.randint(1, value_bound)}))

    if len(current) > n:
        logger.debug(LOG_MESSAGES["random_trim"].format(size=len(current)))
    while len(current) > n:
        current.remove(rng.choice(_maximal(current)))
    return tuple(sorted(current))
