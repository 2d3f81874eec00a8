"""Deterministic random stream derivation.

Every random choice in the package flows through numpy's PCG64 bit
generator.  Independent streams are derived by hashing (seed, purpose
tag, *indices) through numpy's SeedSequence, so any result is
reproducible from its user-facing 64-bit seed alone, and streams for
different purposes or shard indices never collide.
"""

from __future__ import annotations

import numpy as np

# Purpose tags. Frozen: serialized outputs depend on these values.
W_RANDOM = 1
ERDOS_RENYI = 2
UNIFORM_ATTACHMENT = 3
MONTE_CARLO = 4
CUT_HEURISTIC = 5
CUT_DISTANCE = 6
EXTREMAL = 7
CUT_EVAL = 8

_MAX_SEED = (1 << 64) - 1


def check_seed(seed: int) -> int:
    if not isinstance(seed, (int, np.integer)):
        raise ValueError(f"seed must be an integer, got {type(seed).__name__}")
    if not 0 <= seed <= _MAX_SEED:
        raise ValueError(f"seed must fit in an unsigned 64-bit integer, got {seed}")
    return int(seed)


def substream(seed: int, *key: int) -> np.random.Generator:
    """Generator for the stream identified by (seed, *key)."""
    entropy = [check_seed(seed)]
    entropy.extend(int(k) for k in key)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))
