"""Counter-based SplitMix64 streams.

Every random draw in the package comes from here so that campaigns replay
bit-for-bit across runs (and across implementations that follow the same
recipe, documented in ``docs/rng.md``).

Draw ``k`` (0-based) of the stream keyed by ``key`` is
``mix64(key + (k + 1) * 0x9E3779B97F4A7C15 mod 2**64)``, which is exactly the
k-th output of a SplitMix64 generator seeded with ``key``.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

T = TypeVar("T")

M64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M64
    return z ^ (z >> 31)


def draw(key: int, counter: int) -> int:
    return mix64(key + (counter + 1) * GOLDEN)


def derive_key(seed: int, *labels: int) -> int:
    """Key of the substream addressed by ``labels`` under ``seed``."""
    key = seed & M64
    for label in labels:
        key = mix64(key ^ mix64(label & M64))
    return key


class CounterRNG:
    """Sequential view over one counter-based stream."""

    def __init__(self, key: int) -> None:
        self.key = key & M64
        self.counter = 0

    @classmethod
    def from_seed(cls, seed: int, *labels: int) -> "CounterRNG":
        return cls(derive_key(seed, *labels))

    def u64(self) -> int:
        out = draw(self.key, self.counter)
        self.counter += 1
        return out

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.u64() >> 11) * (1.0 / (1 << 53))

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection on the top bits."""
        if n <= 0:
            raise ValueError("randrange requires n > 0")
        if n == 1:
            return 0
        k = (n - 1).bit_length()
        while True:
            x = self.u64() >> (64 - k)
            if x < n:
                return x

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.randrange(hi - lo + 1)

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, seq: Sequence[T], k: int) -> list[T]:
        pool = list(seq)
        if k > len(pool):
            raise ValueError("sample larger than population")
        for i in range(k):
            j = i + self.randrange(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def bernoulli(self, p: float) -> bool:
        return self.random() < p
