"""Keyed PN sequences from an xorshift64* generator.

The generator state is a 64-bit word (a zero seed is remapped to the
golden-ratio constant so the state never sticks at zero). Each output
word is state * 0x2545F4914F6CDD1D mod 2**64 after the usual 12/25/27
shift triple; the word's top bit picks a +1/-1 chip.
"""

import math
from dataclasses import dataclass

import numpy as np

_MASK64 = (1 << 64) - 1
_MULTIPLIER = 0x2545F4914F6CDD1D
_ZERO_SEED = 0x9E3779B97F4A7C15


class PnGenerator:
    """Deterministic stream of 64-bit words, chips, uniforms, and gaussians."""

    def __init__(self, seed):
        self.state = int(seed) & _MASK64
        if self.state == 0:
            self.state = _ZERO_SEED

    def next_u64(self):
        s = self.state
        s ^= s >> 12
        s = (s ^ (s << 25)) & _MASK64
        s ^= s >> 27
        self.state = s
        return (s * _MULTIPLIER) & _MASK64

    def next_chip(self):
        return 1 if self.next_u64() >> 63 else -1

    def chips(self, count):
        return np.array([self.next_chip() for _ in range(count)], dtype=np.int64)

    def uniforms(self, count):
        """Floats in (0, 1] built from the top 53 bits of each word."""
        words = [self.next_u64() for _ in range(count)]
        return ((np.array(words, dtype=np.uint64) >> np.uint64(11)).astype(
            np.float64
        ) + 1.0) * 2.0**-53

    def gaussians(self, count):
        """Standard normal samples via the Box-Muller transform."""
        pairs = (count + 1) // 2
        u1 = self.uniforms(pairs)
        u2 = self.uniforms(pairs)
        radius = np.sqrt(-2.0 * np.log(u1))
        angle = 2.0 * math.pi * u2
        return np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])[
            :count
        ]


@dataclass(frozen=True)
class PnPair:
    pn0: np.ndarray
    pn1: np.ndarray


@dataclass(frozen=True)
class KeySchedule:
    """Everything secret: the scrambling key and the PN seed with its mixing."""

    k1: int
    pn_seed: int
    threshold_t: int = 0
    count_a: int = 3
    count_b: int = 5

    def __post_init__(self):
        if self.count_a < 0 or self.count_b < 0:
            raise ValueError("iteration counts must be >= 0")
        if self.count_a == self.count_b:
            raise ValueError("count_a and count_b must differ")


def pn_bits(seed, length):
    """First `length` chips of the stream keyed by `seed`."""
    if length < 1:
        raise ValueError("length must be >= 1")
    return PnGenerator(seed).chips(length)


def pn_pair(pn_seed, length):
    """Two distinct chip sequences from consecutive stream windows.

    pn0 is the first window; pn1 is the next one, advancing further in
    the unlikely case the windows coincide.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    gen = PnGenerator(pn_seed)
    pn0 = gen.chips(length)
    pn1 = gen.chips(length)
    while np.array_equal(pn0, pn1):
        pn1 = gen.chips(length)
    return PnPair(pn0, pn1)


def scramble_iterations(keys, wm_bit_count, period):
    """Derive the Arnold iteration count from the key schedule.

    The chips keyed by k1 are summed; the sign against threshold_t picks
    count_a or count_b, which is then wrapped into [1, period].
    """
    if wm_bit_count < 1:
        raise ValueError("watermark bit count must be >= 1")
    if period < 1:
        raise ValueError("period must be >= 1")
    total = int(pn_bits(keys.k1, wm_bit_count).sum())
    count = keys.count_a if total > keys.threshold_t else keys.count_b
    iterations = (period + count) % period
    return iterations if iterations else period
