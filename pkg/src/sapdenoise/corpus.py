"""Deterministic synthetic test images.

Classic benchmark photographs are not redistributed here; these generators
produce stand-ins with comparable structure (smooth gradients, sharp
edges, periodic stripes, soft texture).  Everything is integer arithmetic
on top of the package's own SplitMix64 stream, so the generated bytes are
identical on every platform.  Intensities stay inside [1, 254]: the noise
detection rule reads 0/255 as noise, and a clean corpus should not trip it.
"""

from __future__ import annotations

import numpy as np

from .image import Image, Plane
from .noise import splitmix64_stream

__all__ = ["synthetic_plane", "synthetic_gray", "synthetic_rgb", "checkerboard"]


def _blur1d(a: np.ndarray, rad: int) -> np.ndarray:
    """Truncated-window box mean (floor division) along the last axis."""
    n = a.shape[-1]
    zeros = np.zeros(a.shape[:-1] + (1,), dtype=np.int64)
    p = np.concatenate([zeros, np.cumsum(a, axis=-1, dtype=np.int64)], axis=-1)
    idx = np.arange(n)
    lo = np.maximum(idx - rad, 0)
    hi = np.minimum(idx + rad + 1, n)
    return (p[..., hi] - p[..., lo]) // (hi - lo)


def _box_blur(a: np.ndarray, rad: int) -> np.ndarray:
    return _blur1d(_blur1d(a, rad).T, rad).T


def _texture(width: int, height: int, seed: int, amplitude: int) -> np.ndarray:
    """Smooth zero-centered field in roughly [-amplitude, amplitude]."""
    raw = (splitmix64_stream(seed, 0, width * height) & np.uint64(0xFF)).astype(np.int64)
    field = _box_blur(_box_blur(raw.reshape(height, width), 4), 4)
    return ((field - 127) * amplitude) // 64


def synthetic_plane(width: int = 512, height: int = 512, seed: int = 7) -> Plane:
    """One grayscale test plane: gradient + disks + stripe band + texture."""
    yy, xx = np.mgrid[0:height, 0:width].astype(np.int64)
    img = 30 + (120 * xx) // max(width - 1, 1) + (70 * yy) // max(height - 1, 1)

    # three hard-edged disks at fixed relative positions
    for fx, fy, fr, value in ((0.30, 0.28, 0.16, 205), (0.72, 0.62, 0.20, 58), (0.45, 0.80, 0.10, 150)):
        cx, cy, rr = int(fx * width), int(fy * height), int(fr * min(width, height))
        img[(xx - cx) ** 2 + (yy - cy) ** 2 <= rr * rr] = value

    # triangular-wave stripes across a horizontal band
    band = slice((2 * height) // 10, (35 * height) // 100)
    period = max(width // 16, 2)
    tri = np.abs((xx[band, :] % (2 * period)) - period)
    img[band, :] += (36 * tri) // period - 18

    img += _texture(width, height, seed, amplitude=12)
    return Plane.from_array(np.clip(img, 1, 254).astype(np.uint8))


def checkerboard(width: int = 256, height: int = 256, tile: int = 16) -> Image:
    """Two-tone checkerboard (60/200): dense hard edges, worst case for
    median filters at fine tile sizes."""
    if tile < 1:
        raise ValueError(f"tile must be >= 1, got {tile}")
    yy, xx = np.mgrid[0:height, 0:width]
    arr = np.where(((xx // tile) + (yy // tile)) % 2 == 0, 60, 200).astype(np.uint8)
    return Image.from_array(arr)


def synthetic_gray(width: int = 512, height: int = 512, seed: int = 7) -> Image:
    p = synthetic_plane(width, height, seed)
    return Image(width=p.width, height=p.height, channels=1, data=p.data)


def synthetic_rgb(width: int = 128, height: int = 128, seed: int = 7) -> Image:
    """Color test image: independently textured channels, shared geometry."""
    channels = [synthetic_plane(width, height, seed + k).to_array() for k in range(3)]
    return Image.from_array(np.stack(channels, axis=-1))
