"""Shared test data and independent oracles.

The oracles here deliberately avoid the package's kernel code paths: the
median-filter oracle sorts plain Python lists, and the SplitMix64
reference works on arbitrary-precision ints.
"""

import numpy as np

# 9x9 worked example for the adaptive filter: the center pixel (4, 4) is a
# salt impulse whose window must grow 3 -> 5 -> 7 before enough clean
# neighbors (N = 2, 3, 11) are available; the trimmed median is 118.
GOLDEN_9X9 = np.array(
    [
        [0, 0, 0, 0, 0, 0, 0, 255, 124],
        [115, 0, 118, 187, 0, 116, 115, 0, 112],
        [255, 67, 0, 0, 255, 0, 0, 255, 255],
        [255, 97, 0, 134, 0, 0, 255, 0, 0],
        [255, 0, 255, 0, 255, 123, 0, 255, 0],
        [0, 255, 0, 255, 255, 0, 255, 0, 0],
        [0, 119, 116, 255, 0, 255, 0, 0, 0],
        [0, 178, 255, 0, 255, 0, 0, 255, 0],
        [113, 255, 0, 0, 110, 234, 255, 0, 112],
    ],
    dtype=np.uint8,
)

GOLDEN_CENTER = (4, 4)
GOLDEN_RESULT = 118
GOLDEN_TRACE = ((3, 2), (5, 3), (7, 11))
GOLDEN_CLEAN_AT_7 = (67, 97, 115, 116, 116, 118, 119, 123, 134, 178, 187)


def brute_median_filter(arr: np.ndarray, side: int) -> np.ndarray:
    """Full-sort median filter oracle with truncated windows and half-up
    rounding of even-count medians."""
    h, w = arr.shape
    rad = side // 2
    out = np.empty_like(arr)
    for r in range(h):
        for c in range(w):
            block = arr[max(0, r - rad) : r + rad + 1, max(0, c - rad) : c + rad + 1]
            vals = sorted(int(v) for v in block.ravel())
            n = len(vals)
            if n % 2 == 1:
                out[r, c] = vals[n // 2]
            else:
                out[r, c] = (vals[n // 2 - 1] + vals[n // 2] + 1) // 2
    return out


_U64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB


def splitmix64_ref(seed: int, k: int) -> int:
    """Draw k of the counter-mode SplitMix64 stream, arbitrary-precision ints."""
    z = (seed + (k + 1) * _GAMMA) & _U64
    z = ((z ^ (z >> 30)) * _MIX_A) & _U64
    z = ((z ^ (z >> 27)) * _MIX_B) & _U64
    return (z ^ (z >> 31)) & _U64


def random_plane_array(rng: np.random.Generator, height: int, width: int) -> np.ndarray:
    """Uniform random uint8 plane (may legitimately contain 0s and 255s)."""
    return rng.integers(0, 256, size=(height, width), dtype=np.uint8)
