"""Counter-based random streams for reproducible, order-independent trials.

Every randomized battery draws trial i from its own Philox stream keyed by
the run seed and offset by a counter, so results never depend on scheduling
and distinct batteries (distinguished by tag) never share a stream.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def trial_stream(seed: int, index: int, tag: int = 0) -> np.random.Generator:
    """Independent generator for trial `index` of the battery `tag` under `seed`."""
    if index < 0:
        raise ValueError("trial index must be non-negative")
    key = [int(seed) & _MASK64, int(tag) & _MASK64]
    # 2^128 draws per trial stream; streams cannot overlap
    return np.random.Generator(np.random.Philox(key=key, counter=int(index) << 128))
