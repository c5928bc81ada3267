"""Seeded sampling with an explicitly specified generator.

The point streams produced here are part of the CLI's reproducibility
contract, so the generator is pinned down exactly rather than delegated to
a library whose stream may change:

* 64-bit linear congruential generator,
  ``state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64``
  (Knuth's MMIX constants), seeded with the user's seed taken mod 2^64;
* each draw advances the state once and yields the top 53 bits as a float,
  ``u = (state >> 11) / 2^53`` in [0, 1);
* a point stream of dimension n emits coordinates point-major:
  point 0's n coordinates, then point 1's, and so on, each mapped to
  ``lo + u * (hi - lo)``.
"""

from __future__ import annotations

import numpy as np

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1
_INV53 = 1.0 / (1 << 53)


class Lcg64:
    """Minimal deterministic uniform generator (see module docstring)."""

    def __init__(self, seed: int):
        self.state = int(seed) & _MASK

    def next_float(self) -> float:
        """Next uniform draw in [0, 1)."""
        self.state = (_MULT * self.state + _INC) & _MASK
        return (self.state >> 11) * _INV53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + self.next_float() * (hi - lo)


def sample_points(dimension: int, count: int, seed: int,
                  lo: float, hi: float) -> np.ndarray:
    """(count, dimension) array of LCG-uniform points in [lo, hi]^dimension."""
    gen = Lcg64(seed)
    out = np.empty((count, dimension))
    for i in range(count):
        for j in range(dimension):
            out[i, j] = gen.uniform(lo, hi)
    return out
