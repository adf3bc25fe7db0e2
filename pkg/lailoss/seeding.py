"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Every random draw in the package comes from generator(seed, stream, *counters):

        rng = generator(42, "shuffle", epoch)

    Streams are independent Philox sequences, so adding draws to one
    subsystem never shifts another (split, init, shuffle, noise, generator).

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# seeding.py - one root seed expanded into per-subsystem counter-based streams
import numpy as np

STREAMS = {
    "split": 0,
    "init": 1,
    "shuffle": 2,
    "noise": 3,
    "generator": 4,
}

_U64 = 2 ** 64


def generator(seed: int, stream: str, *counters: int) -> np.random.Generator:
    """Philox generator keyed on (seed, stream, *counters).

    Any 64-bit seed is accepted; negative values wrap modulo 2**64.
    """
    key = [int(seed) % _U64, STREAMS[stream], *(int(c) for c in counters)]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(key)))
