"""
Counter-based uniform sampling.

Value i of a stream is a pure function of (seed, i): the seed and the index
are combined and pushed through the SplitMix64 finaliser, and the top 53 bits
become a double in [0, 1). Any chunk of the stream can therefore be generated
on its own, in any order, on any worker.
"""
import math

import numpy as np

from ..core.errors import InvalidRange, NonFiniteInput

_MASK64 = (1 << 64) - 1
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_UNIT = 2.0**-53


def _splitmix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def counter_bits(seed: int, start: int, stop: int) -> np.ndarray:
    """64 random bits for every index in [start, stop)"""
    key = _splitmix(np.array([seed & _MASK64], dtype=np.uint64))
    index = np.arange(start, stop, dtype=np.uint64)
    # uint64 arithmetic wraps modulo 2**64
    return _splitmix(key + (index + np.uint64(1)) * _GOLDEN)


def uniform_chunk(seed: int, a: float, b: float, start: int, stop: int) -> np.ndarray:
    """Values start..stop-1 of the uniform stream on [a, b)"""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise NonFiniteInput(f"interval [{a!r}, {b!r}) is not finite")
    if not a < b:
        raise InvalidRange(f"expected a < b, got a={a!r}, b={b!r}")
    if stop <= start:
        return np.empty(0, dtype=np.float64)

    unit = (counter_bits(seed, start, stop) >> np.uint64(11)).astype(np.float64) * _UNIT
    values = a + (b - a) * unit
    # a + (b - a) * u can round up to b
    return np.minimum(values, np.nextafter(b, a))


def uniform_samples(seed: int, a: float, b: float, count: int) -> np.ndarray:
    """``count`` deterministic uniform values on [a, b)"""
    return uniform_chunk(seed, a, b, 0, count)
