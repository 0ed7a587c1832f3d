"""Pure-Python kernel backend.

Reference implementations of the per-pixel window filters over 2-D uint8
arrays.  The compiled extension in ``_kernels.pyx`` implements the same
contracts with histogram-based selection; outputs of the two backends must
be bit-identical, which the test suite enforces.  This backend is plain
and slow on full-size images; it exists for environments without a C
compiler and as the readable mirror of the compiled code.

All filters read only the input array and write a fresh output, so results
do not depend on pixel traversal order.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def _window(src: np.ndarray, r: int, c: int, rad: int) -> np.ndarray:
    h, w = src.shape
    return src[max(0, r - rad) : min(h, r + rad + 1), max(0, c - rad) : min(w, c + rad + 1)]


def _median_sorted(ordered: np.ndarray) -> int:
    n = ordered.size
    if n % 2 == 1:
        return int(ordered[n // 2])
    return (int(ordered[n // 2 - 1]) + int(ordered[n // 2]) + 1) // 2


def _median(vals: np.ndarray) -> int:
    return _median_sorted(np.sort(vals))


def _mean_halfup(vals: np.ndarray) -> int:
    n = vals.size
    s = int(vals.sum(dtype=np.int64))
    return (2 * s + n) // (2 * n)


def _clean(vals: np.ndarray) -> np.ndarray:
    return vals[(vals > 0) & (vals < 255)]


def _prepare(src: np.ndarray) -> np.ndarray:
    src = np.asarray(src)
    if src.ndim != 2 or src.dtype != np.uint8:
        raise ValueError("kernel input must be a 2-D uint8 array")
    return np.ascontiguousarray(src)


def _noisy_positions(src: np.ndarray):
    rows, cols = np.nonzero((src == 0) | (src == 255))
    return zip(rows.tolist(), cols.tolist())


def pa(src: np.ndarray, w_init: int, h_step: int, w_max: int) -> np.ndarray:
    """Adaptive growing-window trimmed-median filter.

    Pixels strictly inside (0, 255) are copied.  For a 0/255 pixel the
    window grows from w_init by h_step until the count N of clean values
    reaches the nominal side length W, in which case the pixel becomes the
    median of the clean values.  If the window tops out at w_max with
    N < W: mean of clean values if any exist; else mean of the whole
    window when it mixes 0s and 255s; else 255 for an all-0 window and 0
    for an all-255 window.
    """
    src = _prepare(src)
    out = src.copy()
    for r, c in _noisy_positions(src):
        side = w_init
        while True:
            vals = _window(src, r, c, side // 2).ravel()
            clean = _clean(vals)
            if clean.size >= side:
                out[r, c] = _median(clean)
                break
            if side >= w_max:
                if clean.size >= 1:
                    out[r, c] = _mean_halfup(clean)
                elif (vals == 0).any() and (vals == 255).any():
                    out[r, c] = _mean_halfup(vals)
                elif (vals == 0).all():
                    out[r, c] = 255
                else:
                    out[r, c] = 0
                break
            side += h_step
    return out


def mdbptgmf(src: np.ndarray) -> np.ndarray:
    """Fixed 3x3 decision filter: all-0 window -> 255, all-255 -> 0,
    only extremes of both kinds -> window mean, otherwise trimmed median."""
    src = _prepare(src)
    out = src.copy()
    for r, c in _noisy_positions(src):
        vals = _window(src, r, c, 1).ravel()
        if (vals == 0).all():
            out[r, c] = 255
        elif (vals == 255).all():
            out[r, c] = 0
        else:
            clean = _clean(vals)
            if clean.size == 0:
                out[r, c] = _mean_halfup(vals)
            else:
                out[r, c] = _median(clean)
    return out


def mf(src: np.ndarray, side: int) -> np.ndarray:
    """Plain median filter: every pixel becomes the median of its window."""
    src = _prepare(src)
    out = np.empty_like(src)
    h, w = src.shape
    for r in range(h):
        for c in range(w):
            out[r, c] = _median(_window(src, r, c, side // 2).ravel())
    return out


def amf(src: np.ndarray, w_max: int) -> np.ndarray:
    """Two-level adaptive median filter (Hwang-Haddad scheme).

    Level A grows the window by 2 until the window median is strictly
    between the window min and max; level B then keeps the pixel if it is
    itself strictly between min and max, else outputs the median.  If the
    window reaches w_max without a valid median, the median is output
    (the textbook variant of the exhaustion rule).
    """
    src = _prepare(src)
    out = np.empty_like(src)
    h, w = src.shape
    for r in range(h):
        for c in range(w):
            p = int(src[r, c])
            side = 3
            while True:
                vals = _window(src, r, c, side // 2).ravel()
                vmin = int(vals.min())
                vmax = int(vals.max())
                vmed = _median(vals)
                if vmin < vmed < vmax:
                    out[r, c] = p if vmin < p < vmax else vmed
                    break
                if side >= w_max:
                    out[r, c] = vmed
                    break
                side += 2
    return out


def mdbutmf(src: np.ndarray) -> np.ndarray:
    """Fixed 3x3 trimmed-median filter: a noisy pixel whose window is all
    0s/255s becomes the window mean, otherwise the trimmed median."""
    src = _prepare(src)
    out = src.copy()
    for r, c in _noisy_positions(src):
        vals = _window(src, r, c, 1).ravel()
        clean = _clean(vals)
        if clean.size == 0:
            out[r, c] = _mean_halfup(vals)
        else:
            out[r, c] = _median(clean)
    return out


def awmf(src: np.ndarray, w_max: int) -> np.ndarray:
    """Approximation of the adaptive weighted mean filter.

    The window grows by 2 until its min and max match those of the
    previous size (or w_max is reached).  A pixel equal to the final
    window's min or max is replaced by the uniform mean of the window's
    clean values (mean of the whole window if none exist); other pixels
    are kept.  Uniform weights stand in for the original weighting scheme,
    hence the "awmf-approx" designator.
    """
    src = _prepare(src)
    out = np.empty_like(src)
    h, w = src.shape
    for r in range(h):
        for c in range(w):
            p = int(src[r, c])
            side = 3
            vals = _window(src, r, c, side // 2).ravel()
            vmin = int(vals.min())
            vmax = int(vals.max())
            while side < w_max:
                side += 2
                vals = _window(src, r, c, side // 2).ravel()
                nmin = int(vals.min())
                nmax = int(vals.max())
                stable = nmin == vmin and nmax == vmax
                vmin, vmax = nmin, nmax
                if stable:
                    break
            if p == vmin or p == vmax:
                clean = _clean(vals)
                out[r, c] = _mean_halfup(clean) if clean.size else _mean_halfup(vals)
            else:
                out[r, c] = p
    return out
