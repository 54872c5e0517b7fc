"""
Seeded parameter draws and ordered parallel sweeps.

Draws are reproducible from a seed: candidates come from one random.Random
stream, are evaluated (optionally on a thread pool) and kept in draw order.
Candidates whose evaluation raises a PreconditionError are rejected and
replaced by further draws from the same stream.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple, TypeVar, Union

from AW_Forge.errors import PreconditionError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# Rounds of redraws before giving up on filling the requested count
MAX_DRAW_ROUNDS = 25


def random_rational(
    rng: random.Random,
    low: int = -6,
    high: int = 6,
    max_denominator: int = 5,
    nonzero: bool = False,
) -> Fraction:
    """
    Small rational in [low, high] with denominator at most ``max_denominator``.

    Args:
        rng: Random stream
        low, high: Inclusive bounds
        max_denominator: Largest denominator drawn
        nonzero: Redraw zeros
    """
    while True:
        denominator = rng.randint(1, max_denominator)
        value = Fraction(rng.randint(low * denominator, high * denominator), denominator)
        if value != 0 or not nonzero:
            return value


def run_sweep(func: Callable[[T], R], items: Sequence[T], threads: int = 1) -> List[R]:
    """
    Apply ``func`` to every item, results in item order.

    Args:
        func: Work function
        items: Inputs
        threads: Worker threads (1 runs inline)
    """
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))


def _guarded(func: Callable[[T], R]) -> Callable[[T], Union[R, PreconditionError]]:
    def call(item: T):
        try:
            return func(item)
        except PreconditionError as e:
            return e

    return call


def draw_parameters(
    sampler: Callable[[random.Random], T],
    evaluate: Callable[[T], R],
    count: int,
    seed: int,
    threads: int = 1,
) -> Tuple[List[Tuple[T, R]], int]:
    """
    Draw ``count`` admissible parameter sets and evaluate them.

    Args:
        sampler: Produces one candidate from the random stream
        evaluate: Work applied to each candidate; PreconditionError rejects it
        count: Accepted draws wanted
        seed: Seed of the random stream
        threads: Worker threads for the evaluations

    Returns:
        ([(params, result), ...] in draw order, number of rejected candidates)
    """
    rng = random.Random(seed)
    accepted: List[Tuple[T, R]] = []
    rejected = 0
    guarded = _guarded(evaluate)

    for _ in range(MAX_DRAW_ROUNDS):
        needed = count - len(accepted)
        if needed <= 0:
            break
        batch = [sampler(rng) for _ in range(needed)]
        for params, outcome in zip(batch, run_sweep(guarded, batch, threads)):
            if isinstance(outcome, PreconditionError):
                rejected += 1
                logger.warning(f"Rejected draw {params}: {outcome}")
            else:
                accepted.append((params, outcome))

    if len(accepted) < count:
        logger.warning(f"Only {len(accepted)}/{count} draws accepted after {rejected} rejections")
    else:
        logger.info(f"Accepted {count} draws ({rejected} rejected)")
    return accepted, rejected
