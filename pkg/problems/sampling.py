"""
Seeded random generation for problem data and starting points.

All randomness goes through numpy's PCG64 bit generator, named explicitly
rather than taken from ``default_rng`` so that a seed always selects the
same portable 64-bit stream. Problem data and start points use separate
streams derived from the same seed, so changing the number of starts never
changes the problem.
"""
import numpy as np

PROBLEM_STREAM = 0
START_STREAM = 1
ORACLE_STREAM = 2


def make_generator(seed: int, stream: int = PROBLEM_STREAM) -> np.random.Generator:
    """Return a PCG64-backed generator for ``(seed, stream)``."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(stream,))
    return np.random.Generator(np.random.PCG64(sequence))


def sample_box(seed: int, count: int, n: int, low: float, high: float) -> np.ndarray:
    """
    Draw ``count`` points uniformly from [low, high]^n.

    Returns:
        Array of shape (count, n)
    """
    rng = make_generator(seed, START_STREAM)
    return rng.uniform(low, high, size=(count, n))
