"""Seeded synthetic series built from uniform decimal digits.

Eight digits map to one value: a sign digit, two integer-part digits and
five fractional digits, giving values in [-99.99999, 99.99999] with exactly
five decimals. The digit source is a counter-based 64-bit mixer, so a seed
fully determines the series on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .transform import TimeSeries
from .waves import GridSpec

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
# largest multiple of 10 that fits in 64 bits; draws at or above it would
# make digits 0..5 slightly more likely than 6..9
_REJECT_ABOVE = (1 << 64) - ((1 << 64) % 10)


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class DigitStream:
    """Deterministic uniform digits 0-9 from a 64-bit seed.

    Each draw mixes an incrementing counter (splitmix-style), rejects the
    top sliver of the 64-bit range, and reduces modulo 10; rejection keeps
    every digit exactly equally likely.
    """

    def __init__(self, seed: int):
        if not isinstance(seed, (int, np.integer)) or not 0 <= seed < (1 << 64):
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
        self.seed = int(seed)
        self._state = int(seed)

    def next_digit(self) -> int:
        while True:
            self._state = (self._state + _GAMMA) & _MASK64
            z = _mix64(self._state)
            if z < _REJECT_ABOVE:
                return z % 10


def next_value(stream) -> float:
    """Map the next eight digits of a stream to one value.

    A first digit of 0-4 makes the value negative, 5-9 positive; digits two
    and three are the integer part, the last five the fractional part. A
    zero magnitude comes out as +0.0 regardless of the sign digit.
    """
    d = [stream.next_digit() for _ in range(8)]
    scaled = (
        (10 * d[1] + d[2]) * 100000
        + d[3] * 10000
        + d[4] * 1000
        + d[5] * 100
        + d[6] * 10
        + d[7]
    )
    value = scaled / 100000.0
    if d[0] <= 4 and scaled:
        return -value
    return value


@dataclass(frozen=True)
class GeneratedSeries:
    """A generated TimeSeries together with the seed that produced it."""

    series: TimeSeries
    seed: int


def generate(seed: int, n: int, grid: GridSpec) -> GeneratedSeries:
    """Draw n consecutive values from a fresh DigitStream(seed) on the grid."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n!r}")
    if grid.n != n:
        raise DimensionMismatch(f"grid is sized for {grid.n} samples, requested {n}")
    stream = DigitStream(seed)
    values = np.fromiter(
        (next_value(stream) for _ in range(n)), dtype=np.float64, count=n
    )
    return GeneratedSeries(TimeSeries(values, grid), stream.seed)
