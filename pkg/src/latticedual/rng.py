"""SplitMix64: a tiny, portable, seedable 64-bit generator.

Chosen because it is pure integer arithmetic (identical output on every
platform) and splits into independent substreams trivially: the substream for
trial ``i`` of master seed ``s`` is seeded with ``mix64(s) ^ mix64(GAMMA * (i + 1))``.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return mix64(self._state)

    def uniform(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0**-53)

    def bernoulli(self, p: float) -> bool:
        return self.uniform() < p

    def randrange(self, n: int) -> int:
        """Integer in [0, n).  Modulo bias is negligible for the small n used here."""
        return self.next_u64() % n


def substream(seed: int, index: int) -> SplitMix64:
    """Independent generator for one trial of a seeded run."""
    return SplitMix64(mix64(seed) ^ mix64((_GAMMA * (index + 1)) & _MASK))
