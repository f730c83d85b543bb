"""Deterministic PRNG: splitmix64.

Fixed algorithm so that generated corpora are byte-identical across runs and
platforms.  State advances by the 64-bit golden-ratio increment; outputs are
finalized with the standard two-round xor-multiply mix.
"""

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = seed & _MASK

    def next_u64(self):
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def split(self):
        """Independent child generator; used to give parallel tasks their own seeds."""
        return SplitMix64(self.next_u64())

    def below(self, n):
        """Uniform-ish integer in [0, n); n must be positive."""
        return self.next_u64() % n

    def choice(self, items):
        return items[self.below(len(items))]

    def chance(self, num, den):
        """True with probability num/den."""
        return self.below(den) < num

    def shuffled(self, items):
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.below(i + 1)
            out[i], out[j] = out[j], out[i]
        return out
