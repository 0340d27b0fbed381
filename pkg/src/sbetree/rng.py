"""SplitMix64 generator and seed mixing.

SplitMix64 (Steele, Lea & Flood, 2014; constants as in Vigna's reference C
code) is used for every random draw in this package so that experiment
outputs are bit-identical on every platform and Python version.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Stateful SplitMix64 stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return _mix(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        # largest multiple of bound that fits in 64 bits
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound


def derive_seed(master_seed: int, *keys: int) -> int:
    """Fold integer keys into ``master_seed``; used for per-trial seeds."""
    z = _mix((master_seed + GOLDEN) & MASK64)
    for k in keys:
        z = _mix(((z ^ (k & MASK64)) + GOLDEN) & MASK64)
    return z
