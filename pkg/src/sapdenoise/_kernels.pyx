# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Same per-pixel window filters as ``_kernels_py``, written around a 256-bin
window histogram instead of sorting: medians and trimmed statistics become
rank walks over the histogram.  Outputs must be bit-identical to the pure
backend; the test suite compares them directly.
"""

import numpy as np

from libc.string cimport memset

ctypedef unsigned char u8

BACKEND_NAME = "cython"


cdef inline int _collect(const u8[:, ::1] src, Py_ssize_t r, Py_ssize_t c,
                         int rad, int* hist) noexcept nogil:
    """Histogram the in-bounds window; returns the in-bounds pixel count."""
    cdef Py_ssize_t nrows = src.shape[0], ncols = src.shape[1]
    cdef Py_ssize_t r0 = r - rad, r1 = r + rad, c0 = c - rad, c1 = c + rad, rr, cc
    if r0 < 0:
        r0 = 0
    if c0 < 0:
        c0 = 0
    if r1 >= nrows:
        r1 = nrows - 1
    if c1 >= ncols:
        c1 = ncols - 1
    memset(hist, 0, 256 * sizeof(int))
    for rr in range(r0, r1 + 1):
        for cc in range(c0, c1 + 1):
            hist[src[rr, cc]] += 1
    return <int>((r1 - r0 + 1) * (c1 - c0 + 1))


cdef inline int _rank_value(const int* hist, int lo, int hi, int k) noexcept nogil:
    """Value with 0-based rank k among histogrammed values in [lo, hi]."""
    cdef int v, acc = 0
    for v in range(lo, hi + 1):
        acc += hist[v]
        if acc > k:
            return v
    return hi


cdef inline int _median_hist(const int* hist, int lo, int hi, int n) noexcept nogil:
    """Median with half-up rounding of the two middles for even n (n >= 1)."""
    cdef int a, b
    if n & 1:
        return _rank_value(hist, lo, hi, n >> 1)
    a = _rank_value(hist, lo, hi, (n >> 1) - 1)
    b = _rank_value(hist, lo, hi, n >> 1)
    return (a + b + 1) >> 1


cdef inline long long _sum_hist(const int* hist, int lo, int hi) noexcept nogil:
    cdef int v
    cdef long long s = 0
    for v in range(lo, hi + 1):
        s += <long long>v * hist[v]
    return s


cdef inline int _mean_halfup(long long s, long long n) noexcept nogil:
    return <int>((2 * s + n) // (2 * n))


cdef inline int _min_value(const int* hist) noexcept nogil:
    cdef int v
    for v in range(256):
        if hist[v] > 0:
            return v
    return 255


cdef inline int _max_value(const int* hist) noexcept nogil:
    cdef int v
    for v in range(255, -1, -1):
        if hist[v] > 0:
            return v
    return 0


def pa(const u8[:, ::1] src, int w_init, int h_step, int w_max):
    """Adaptive growing-window trimmed-median filter (see _kernels_py.pa)."""
    cdef Py_ssize_t nrows = src.shape[0], ncols = src.shape[1], r, c
    out_arr = np.empty((nrows, ncols), dtype=np.uint8)
    cdef u8[:, ::1] out = out_arr
    cdef int hist[256]
    cdef int p, side, total, n_clean, repl
    with nogil:
        for r in range(nrows):
            for c in range(ncols):
                p = src[r, c]
                if 0 < p < 255:
                    out[r, c] = <u8>p
                    continue
                side = w_init
                while True:
                    total = _collect(src, r, c, side >> 1, hist)
                    n_clean = total - hist[0] - hist[255]
                    if n_clean >= side:
                        repl = _median_hist(hist, 1, 254, n_clean)
                        break
                    if side >= w_max:
                        if n_clean >= 1:
                            repl = _mean_halfup(_sum_hist(hist, 1, 254), n_clean)
                        elif hist[0] > 0 and hist[255] > 0:
                            repl = _mean_halfup(_sum_hist(hist, 0, 255), total)
                        elif hist[0] == total:
                            repl = 255
                        else:
                            repl = 0
                        break
                    side += h_step
                out[r, c] = <u8>repl
    return out_arr


def mdbptgmf(const u8[:, ::1] src):
    """Fixed 3x3 decision filter (see _kernels_py.mdbptgmf)."""
    cdef Py_ssize_t nrows = src.shape[0], ncols = src.shape[1], r, c
    out_arr = np.empty((nrows, ncols), dtype=np.uint8)
    cdef u8[:, ::1] out = out_arr
    cdef int hist[256]
    cdef int p, total, n_clean, repl
    with nogil:
        for r in range(nrows):
            for c in range(ncols):
                p = src[r, c]
                if 0 < p < 255:
                    out[r, c] = <u8>p
                    continue
                total = _collect(src, r, c, 1, hist)
                if hist[0] == total:
                    repl = 255
                elif hist[255] == total:
                    repl = 0
                else:
                    n_clean = total - hist[0] - hist[255]
                    if n_clean == 0:
                        repl = _mean_halfup(_sum_hist(hist, 0, 255), total)
                    else:
                        repl = _median_hist(hist, 1, 254, n_clean)
                out[r, c] = <u8>repl
    return out_arr


def mf(const u8[:, ::1] src, int side):
    """Plain median filter over truncated windows."""
    cdef Py_ssize_t nrows = src.shape[0], ncols = src.shape[1], r, c
    out_arr = np.empty((nrows, ncols), dtype=np.uint8)
    cdef u8[:, ::1] out = out_arr
    cdef int hist[256]
    cdef int total, rad = side >> 1
    with nogil:
        for r in range(nrows):
            for c in range(ncols):
                total = _collect(src, r, c, rad, hist)
                out[r, c] = <u8>_median_hist(hist, 0, 255, total)
    return out_arr


def amf(const u8[:, ::1] src, int w_max):
    """Two-level adaptive median filter (see _kernels_py.amf)."""
    cdef Py_ssize_t nrows = src.shape[0], ncols = src.shape[1], r, c
    out_arr = np.empty((nrows, ncols), dtype=np.uint8)
    cdef u8[:, ::1] out = out_arr
    cdef int hist[256]
    cdef int p, side, total, vmin, vmax, vmed, repl
    with nogil:
        for r in range(nrows):
            for c in range(ncols):
                p = src[r, c]
                side = 3
                while True:
                    total = _collect(src, r, c, side >> 1, hist)
                    vmin = _min_value(hist)
                    vmax = _max_value(hist)
                    vmed = _median_hist(hist, 0, 255, total)
                    if vmin < vmed < vmax:
                        repl = p if vmin < p < vmax else vmed
                        break
                    if side >= w_max:
                        repl = vmed
                        break
                    side += 2
                out[r, c] = <u8>repl
    return out_arr


def mdbutmf(const u8[:, ::1] src):
    """Fixed 3x3 trimmed-median filter (see _kernels_py.mdbutmf)."""
    cdef Py_ssize_t nrows = src.shape[0], ncols = src.shape[1], r, c
    out_arr = np.empty((nrows, ncols), dtype=np.uint8)
    cdef u8[:, ::1] out = out_arr
    cdef int hist[256]
    cdef int p, total, n_clean, repl
    with nogil:
        for r in range(nrows):
            for c in range(ncols):
                p = src[r, c]
                if 0 < p < 255:
                    out[r, c] = <u8>p
                    continue
                total = _collect(src, r, c, 1, hist)
                n_clean = total - hist[0] - hist[255]
                if n_clean == 0:
                    repl = _mean_halfup(_sum_hist(hist, 0, 255), total)
                else:
                    repl = _median_hist(hist, 1, 254, n_clean)
                out[r, c] = <u8>repl
    return out_arr


def awmf(const u8[:, ::1] src, int w_max):
    """Uniform-weight approximation of the adaptive weighted mean filter
    (see _kernels_py.awmf)."""
    cdef Py_ssize_t nrows = src.shape[0], ncols = src.shape[1], r, c
    out_arr = np.empty((nrows, ncols), dtype=np.uint8)
    cdef u8[:, ::1] out = out_arr
    cdef int hist[256]
    cdef int p, side, total, vmin, vmax, nmin, nmax, n_clean, repl
    cdef bint stable
    with nogil:
        for r in range(nrows):
            for c in range(ncols):
                p = src[r, c]
                side = 3
                total = _collect(src, r, c, 1, hist)
                vmin = _min_value(hist)
                vmax = _max_value(hist)
                while side < w_max:
                    side += 2
                    total = _collect(src, r, c, side >> 1, hist)
                    nmin = _min_value(hist)
                    nmax = _max_value(hist)
                    stable = nmin == vmin and nmax == vmax
                    vmin = nmin
                    vmax = nmax
                    if stable:
                        break
                if p == vmin or p == vmax:
                    n_clean = total - hist[0] - hist[255]
                    if n_clean > 0:
                        repl = _mean_halfup(_sum_hist(hist, 1, 254), n_clean)
                    else:
                        repl = _mean_halfup(_sum_hist(hist, 0, 255), total)
                else:
                    repl = p
                out[r, c] = <u8>repl
    return out_arr
