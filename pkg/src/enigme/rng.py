"""Deterministic pseudo-random stream: splitmix64 seeding a xoshiro256**.

The algorithm pair is fixed so that the same 64-bit seed yields the same
draw sequence on every platform and in every implementation.  Not suitable
for cryptography.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

from .model import ContractViolation

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15

T = TypeVar("T")


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class RngStream:
    """xoshiro256** stream initialised from a 64-bit seed via splitmix64.

    A stream is an exclusively-owned mutable value: hand each worker its
    own seed instead of sharing one stream across tasks.
    """

    __slots__ = ("_s",)

    def __init__(self, seed: int):
        seed &= _MASK64
        state = seed
        s = []
        for _ in range(4):
            state = (state + _GOLDEN_GAMMA) & _MASK64
            z = state
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
            s.append((z ^ (z >> 31)) & _MASK64)
        self._s = s

    def next_u64(self) -> int:
        """Return the next raw 64-bit draw and advance the stream."""
        s = self._s
        result = (_rotl((s[1] * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s[1] << 17) & _MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def draw_range(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], both ends inclusive.

        Uses rejection sampling so every value is exactly equally likely
        (no modulo bias).  Raises ContractViolation when lo > hi.
        """
        if lo > hi:
            raise ContractViolation(f"draw_range: lo ({lo}) > hi ({hi})")
        span = hi - lo + 1
        # Largest multiple of span that fits in 64 bits; draws at or above
        # it would bias the low residues and are re-drawn.
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + (u % span)

    def choice(self, seq: Sequence[T]) -> T:
        if not seq:
            raise ContractViolation("choice: empty sequence")
        return seq[self.draw_range(0, len(seq) - 1)]

    def shuffle(self, items: list) -> None:
        """Fisher-Yates shuffle in place."""
        for i in range(len(items) - 1, 0, -1):
            j = self.draw_range(0, i)
            items[i], items[j] = items[j], items[i]

    def sample_distinct(self, lo: int, hi: int, k: int) -> list[int]:
        """k distinct integers from [lo, hi] in draw order."""
        if k > hi - lo + 1:
            raise ContractViolation("sample_distinct: k exceeds range size")
        seen: list[int] = []
        while len(seen) < k:
            v = self.draw_range(lo, hi)
            if v not in seen:
                seen.append(v)
        return seen

    def chance(self, numerator: int, denominator: int) -> bool:
        """True with probability numerator/denominator (exact, integer-only)."""
        return self.draw_range(1, denominator) <= numerator


def make_rng(seed: int) -> RngStream:
    """Build the stream for a seed; the draw sequence is a pure function of it."""
    return RngStream(seed)


def draw_range(stream: RngStream, lo: int, hi: int) -> int:
    """Functional alias for RngStream.draw_range."""
    return stream.draw_range(lo, hi)
