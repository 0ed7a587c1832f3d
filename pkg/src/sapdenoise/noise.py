"""Deterministic salt-and-pepper noise injection.

Randomness comes from SplitMix64 (Steele, Lea & Flood's 64-bit mixer,
public-domain constants below) used in counter mode: draw k for a given
seed is ``mix64(seed + (k+1) * GAMMA) mod 2**64``.  The generator is
embedded here rather than taken from the platform so that a (seed,
density, salt_fraction) triple produces the same noisy image on every
Python/numpy version, forever.

Each sample position in row-major, channel-interleaved order consumes two
consecutive draws: the first decides corruption, the second salt vs
pepper.  The draw index depends only on the position, so the stream can be
partitioned deterministically by parallel implementations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .image import Image

__all__ = ["NoiseSpec", "inject", "corruption_rate", "splitmix64_stream"]

_GAMMA = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB
_U64 = (1 << 64) - 1


@dataclass(frozen=True)
class NoiseSpec:
    """Parameters that fully determine one noise injection.

    density: probability that a sample is corrupted.
    salt_fraction: probability that a corrupted sample becomes 255 (else 0).
    seed: 64-bit stream selector.
    """

    density: float
    salt_fraction: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must be in [0, 1], got {self.density}")
        if not 0.0 <= self.salt_fraction <= 1.0:
            raise ValueError(f"salt_fraction must be in [0, 1], got {self.salt_fraction}")
        if not 0 <= self.seed <= _U64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def splitmix64_stream(seed: int, start: int, count: int) -> np.ndarray:
    """Draws [start, start+count) of the SplitMix64 counter stream, as uint64."""
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & _U64) + idx * np.uint64(_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX_A)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX_B)
    return z ^ (z >> np.uint64(31))


def _threshold_mask(draws: np.ndarray, probability: float) -> np.ndarray:
    """True with the given probability: draw < floor(p * 2**64), exact at p=0 and p=1."""
    if probability <= 0.0:
        return np.zeros(draws.shape, dtype=bool)
    if probability >= 1.0:
        return np.ones(draws.shape, dtype=bool)
    return draws < np.uint64(int(probability * (1 << 64)))


def inject(img: Image, spec: NoiseSpec) -> Image:
    """Corrupt each sample independently with probability `spec.density`.

    A corrupted sample becomes 255 with probability `spec.salt_fraction`,
    otherwise 0; uncorrupted samples are copied bit-exactly.  Channels of a
    color image are corrupted independently.  The result is a pure function
    of (img, spec).
    """
    flat = np.frombuffer(img.data, dtype=np.uint8)
    n = flat.size
    draws = splitmix64_stream(spec.seed, 0, 2 * n)
    corrupt = _threshold_mask(draws[0::2], spec.density)
    salt = _threshold_mask(draws[1::2], spec.salt_fraction)
    out = np.where(corrupt, np.where(salt, np.uint8(255), np.uint8(0)), flat)
    return Image(
        width=img.width,
        height=img.height,
        channels=img.channels,
        data=out.astype(np.uint8).tobytes(),
    )


def corruption_rate(original: Image, noisy: Image) -> float:
    """Fraction of samples where `noisy` is 0 or 255 and differs from `original`.

    Samples whose original value was already 0 or 255 and were "corrupted"
    to the same value are not counted, so this slightly undercounts the
    injected density on images containing extremes.
    """
    if (original.width, original.height, original.channels) != (
        noisy.width,
        noisy.height,
        noisy.channels,
    ):
        raise DimensionMismatchError(
            f"image shapes differ: {original.width}x{original.height}x{original.channels}"
            f" vs {noisy.width}x{noisy.height}x{noisy.channels}"
        )
    a = np.frombuffer(original.data, dtype=np.uint8)
    b = np.frombuffer(noisy.data, dtype=np.uint8)
    hits = np.count_nonzero(((b == 0) | (b == 255)) & (a != b))
    return hits / a.size
