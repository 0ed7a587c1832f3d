"""Pixel buffers and bit-exact binary PGM/PPM (netpbm) I/O.

Images are 8-bit, row-major, channel-interleaved, and immutable once
constructed, so they can be shared freely across threads and processes.
Only the binary variants P5 (grayscale) and P6 (RGB) with maxval 255 are
supported: they round-trip byte-for-byte, which keeps golden files honest.
Header comments (``#`` to end of line) are accepted on load and never
written on save.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, PnmParseError

__all__ = [
    "Image",
    "Plane",
    "load_pnm",
    "save_pnm",
    "read_image",
    "write_image",
    "split_channels",
    "merge_channels",
]


@dataclass(frozen=True)
class Plane:
    """Single-channel raster: `height` rows of `width` intensities in [0, 255]."""

    width: int
    height: int
    data: bytes

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"plane dimensions must be >= 1, got {self.width}x{self.height}")
        if len(self.data) != self.width * self.height:
            raise ValueError(
                f"plane data length {len(self.data)} != width*height = {self.width * self.height}"
            )

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "Plane":
        arr = _as_u8(arr, ndim=2)
        return cls(width=arr.shape[1], height=arr.shape[0], data=arr.tobytes())

    def to_array(self) -> np.ndarray:
        """Zero-copy read-only (height, width) uint8 view."""
        return np.frombuffer(self.data, dtype=np.uint8).reshape(self.height, self.width)


@dataclass(frozen=True)
class Image:
    """1- or 3-channel raster with interleaved samples (RGB order for color)."""

    width: int
    height: int
    channels: int
    data: bytes

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"image dimensions must be >= 1, got {self.width}x{self.height}")
        if self.channels not in (1, 3):
            raise ValueError(f"channels must be 1 or 3, got {self.channels}")
        if len(self.data) != self.width * self.height * self.channels:
            raise ValueError(
                f"image data length {len(self.data)} != "
                f"width*height*channels = {self.width * self.height * self.channels}"
            )

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "Image":
        """Build from a (H, W), (H, W, 1) or (H, W, 3) integer array."""
        if arr.ndim == 2:
            arr = arr[:, :, np.newaxis]
        arr = _as_u8(arr, ndim=3)
        if arr.shape[2] not in (1, 3):
            raise ValueError(f"expected 1 or 3 channels, got {arr.shape[2]}")
        return cls(
            width=arr.shape[1],
            height=arr.shape[0],
            channels=arr.shape[2],
            data=arr.tobytes(),
        )

    def to_array(self) -> np.ndarray:
        """Zero-copy read-only (height, width, channels) uint8 view."""
        return np.frombuffer(self.data, dtype=np.uint8).reshape(
            self.height, self.width, self.channels
        )


def _as_u8(arr: np.ndarray, ndim: int) -> np.ndarray:
    arr = np.asarray(arr)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-D array, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError(f"expected integer intensities, got dtype {arr.dtype}")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("intensities must lie in [0, 255]")
        arr = arr.astype(np.uint8)
    return np.ascontiguousarray(arr)


# --- binary PGM/PPM -------------------------------------------------------

_MAGIC_CHANNELS = {b"P5": 1, b"P6": 3}
_WHITESPACE = b" \t\n\r\x0b\x0c"


def load_pnm(data: bytes) -> Image:
    """Decode a binary PGM (P5) or PPM (P6) byte string with maxval 255.

    Raises PnmParseError (carrying the byte offset) on malformed headers,
    unsupported maxval, or truncated pixel data.
    """
    if len(data) < 2:
        raise PnmParseError(0, "not a PNM file (too short for a magic number)")
    magic = bytes(data[:2])
    if magic not in _MAGIC_CHANNELS:
        raise PnmParseError(0, f"unsupported magic {magic!r}, expected b'P5' or b'P6'")
    channels = _MAGIC_CHANNELS[magic]

    pos = 2
    width, pos = _read_header_int(data, pos, "width")
    height, pos = _read_header_int(data, pos, "height")
    maxval_pos = _skip_space(data, pos)
    maxval, pos = _read_header_int(data, pos, "maxval")
    if maxval != 255:
        raise PnmParseError(maxval_pos, f"unsupported maxval {maxval}, only 255 is supported")
    if width < 1 or height < 1:
        raise PnmParseError(2, f"dimensions must be positive, got {width}x{height}")
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise PnmParseError(pos, "expected a single whitespace byte after maxval")
    pos += 1

    expected = width * height * channels
    raw = data[pos : pos + expected]
    if len(raw) < expected:
        raise PnmParseError(
            pos + len(raw), f"truncated pixel data: expected {expected} bytes, found {len(raw)}"
        )
    return Image(width=width, height=height, channels=channels, data=bytes(raw))


def save_pnm(img: Image) -> bytes:
    """Canonical encoding: magic, newline, "W H", newline, "255", newline, raw samples."""
    magic = b"P5" if img.channels == 1 else b"P6"
    header = magic + b"\n" + f"{img.width} {img.height}".encode("ascii") + b"\n255\n"
    return header + img.data


def read_image(path) -> Image:
    with open(path, "rb") as fh:
        return load_pnm(fh.read())


def write_image(path, img: Image) -> None:
    with open(path, "wb") as fh:
        fh.write(save_pnm(img))


def _skip_space(data: bytes, pos: int) -> int:
    """Advance past whitespace and '#' comments; returns the new position."""
    n = len(data)
    while pos < n:
        b = data[pos]
        if b in _WHITESPACE:
            pos += 1
        elif b == 0x23:  # '#'
            while pos < n and data[pos] != 0x0A:
                pos += 1
        else:
            break
    return pos


def _read_header_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    pos = _skip_space(data, pos)
    start = pos
    while pos < len(data) and 0x30 <= data[pos] <= 0x39:
        pos += 1
    if pos == start:
        raise PnmParseError(start, f"expected decimal {what}")
    return int(data[start:pos]), pos


# --- channel plumbing -----------------------------------------------------


def split_channels(img: Image) -> list[Plane]:
    """One Plane per channel, in storage order."""
    arr = img.to_array()
    return [Plane.from_array(arr[:, :, k]) for k in range(img.channels)]


def merge_channels(planes: list[Plane]) -> Image:
    """Inverse of split_channels; accepts 1 or 3 same-sized planes."""
    if len(planes) not in (1, 3):
        raise ValueError(f"expected 1 or 3 planes, got {len(planes)}")
    first = planes[0]
    for p in planes[1:]:
        if (p.width, p.height) != (first.width, first.height):
            raise DimensionMismatchError(
                f"plane dimensions differ: {p.width}x{p.height} vs {first.width}x{first.height}"
            )
    stacked = np.stack([p.to_array() for p in planes], axis=-1)
    return Image.from_array(stacked)
