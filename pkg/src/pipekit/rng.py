"""Platform-independent random stream: splitmix64 seeding a xoshiro256** generator.

Uniform reals are (x >> 11) * 2**-53 for each 64-bit output x, giving values in
[0, 1) with 53 random bits. All arithmetic is done on Python ints masked to 64
bits, so results do not depend on numpy's RNG or the platform.
"""
from __future__ import annotations

import numpy as np

MASK = (1 << 64) - 1


def _rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & MASK


def splitmix64(state: int):
    """Return (next_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return state, z ^ (z >> 31)


class Xoshiro256:
    """xoshiro256** seeded by four splitmix64 outputs of ``seed``."""

    def __init__(self, seed: int):
        st = int(seed) & MASK
        s = []
        for _ in range(4):
            st, out = splitmix64(st)
            s.append(out)
        self.s = s

    def next_u64(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & MASK, 7) * 9) & MASK
        t = (s[1] << 17) & MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float, shape=()) -> np.ndarray:
        """Row-major fill of ``shape`` with lo + (hi - lo) * u."""
        size = int(np.prod(shape)) if shape else 1
        vals = np.array([self.random() for _ in range(size)], dtype=float)
        out = lo + (hi - lo) * vals
        return out.reshape(shape) if shape else out[0]

    def integers(self, hi: int) -> int:
        """Uniform integer in [0, hi) by rejection on the top bits."""
        if hi <= 0:
            raise ValueError("hi must be positive")
        bits = max(1, (hi - 1).bit_length())
        while True:
            x = self.next_u64() >> (64 - bits)
            if x < hi:
                return x

    def permutation(self, n: int) -> list[int]:
        """Fisher-Yates shuffle of range(n)."""
        p = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.integers(i + 1)
            p[i], p[j] = p[j], p[i]
        return p
