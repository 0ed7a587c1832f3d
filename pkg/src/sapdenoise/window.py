"""Window extraction and the integer rank statistics shared by all filters.

Rounding rule used throughout the package: a mean (including the even-count
median, which is the mean of the two middle values) is rounded half-up to
the nearest integer and clamped to [0, 255].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .image import Plane

__all__ = ["WindowView", "extract_window", "median_int", "mean_int"]


@dataclass(frozen=True)
class WindowView:
    """One window extraction around a processing pixel.

    values: in-bounds intensities of the side x side square, row-major.
    clean_values: sorted subset with 0 and 255 removed.
    """

    center: tuple[int, int]
    side: int
    values: tuple[int, ...]
    clean_values: tuple[int, ...]

    @property
    def clean_count(self) -> int:
        return len(self.clean_values)


def extract_window(plane: Plane, row: int, col: int, side: int) -> WindowView:
    """In-bounds values of the odd `side`-sized square centered at (row, col).

    Windows overlapping the border are truncated: out-of-bounds neighbors
    are simply absent, no padding values are invented.
    """
    if side < 1 or side % 2 == 0:
        raise ValueError(f"side must be odd and >= 1, got {side}")
    if not (0 <= row < plane.height and 0 <= col < plane.width):
        raise ValueError(f"center ({row}, {col}) out of bounds for {plane.width}x{plane.height}")
    rad = side // 2
    arr = plane.to_array()
    block = arr[max(0, row - rad) : row + rad + 1, max(0, col - rad) : col + rad + 1]
    values = tuple(int(v) for v in block.ravel())
    clean = tuple(sorted(v for v in values if 0 < v < 255))
    return WindowView(center=(row, col), side=side, values=values, clean_values=clean)


def median_int(values: Sequence[int]) -> int:
    """Median of intensities: middle element, or half-up mean of the two middles."""
    n = len(values)
    if n == 0:
        raise ValueError("median_int: empty input")
    ordered = sorted(values)
    if n % 2 == 1:
        return ordered[n // 2]
    return (ordered[n // 2 - 1] + ordered[n // 2] + 1) // 2


def mean_int(values: Sequence[int]) -> int:
    """Arithmetic mean rounded half-up, clamped to [0, 255]."""
    n = len(values)
    if n == 0:
        raise ValueError("mean_int: empty input")
    m = (2 * sum(values) + n) // (2 * n)
    return min(255, max(0, m))
