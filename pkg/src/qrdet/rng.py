"""SplitMix64: a 64-bit-state generator whose output is fixed by its seed alone.

Used instead of :mod:`random` so that seeded draws are reproducible from the
published algorithm, independent of the Python version.
"""

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

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], by rejection so there is no modulo bias."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError(f"empty range [{lo}, {hi}]")
        limit = (1 << 64) - (1 << 64) % span
        while True:
            z = self.next_u64()
            if z < limit:
                return lo + z % span

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]


def derive_seed(seed: int, *keys: int) -> int:
    """Mix extra integer keys into a seed, giving an independent stream per key."""
    state = seed & _MASK
    for k in keys:
        state = SplitMix64(state ^ (k & _MASK)).next_u64()
    return state
