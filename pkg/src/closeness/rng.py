"""SplitMix64, the fixed PRNG behind every random corpus.

The algorithm is fully specified by its constants, so corpora can be
regenerated bit-for-bit in any language.  Do not swap it out: that would
silently change every random graph id's meaning.

Derived draws:

* ``next_float()``  -> ``(x >> 11) * 2**-53`` in ``[0, 1)``
* ``below(k)``      -> rejection sampling on ``x`` against ``2**64 - 2**64 % k``,
                       then ``x % k``
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k
