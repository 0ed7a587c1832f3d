"""Restoration quality metrics: MSE, PSNR and the image enhancement factor.

Definitions (Y = original, Yhat = restored, eta = noisy):

    MSE  = sum((Y - Yhat)^2) / sample_count
    PSNR = 10 * log10(255^2 / MSE)            [dB; +inf when MSE = 0]
    IEF  = sum((eta - Y)^2) / sum((Yhat - Y)^2)   [+inf when restored = original]

Color images pool every channel sample into one sum, so the denominator is
width * height * channels.  Squared-difference sums are accumulated in
64-bit integers (exact for 8-bit data); floating point enters only in the
final division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, MetricUndefinedError
from .image import Image

__all__ = ["MetricsReport", "mse", "psnr_db", "ief", "compute_report"]

_PEAK_SQ = 255.0 * 255.0


@dataclass(frozen=True)
class MetricsReport:
    """Quality of one (original, restored, noisy) triple.

    ief is None when no noisy image was supplied.
    """

    mse: float
    psnr_db: float
    ief: float | None = None


def _check_shapes(a: Image, b: Image) -> None:
    if (a.width, a.height, a.channels) != (b.width, b.height, b.channels):
        raise DimensionMismatchError(
            f"image shapes differ: {a.width}x{a.height}x{a.channels}"
            f" vs {b.width}x{b.height}x{b.channels}"
        )


def _sq_error_sum(a: Image, b: Image) -> int:
    _check_shapes(a, b)
    da = np.frombuffer(a.data, dtype=np.uint8).astype(np.int64)
    db = np.frombuffer(b.data, dtype=np.uint8).astype(np.int64)
    diff = da - db
    return int(np.dot(diff, diff))


def mse(original: Image, restored: Image) -> float:
    """Mean squared intensity difference over all samples of all channels."""
    return _sq_error_sum(original, restored) / (
        original.width * original.height * original.channels
    )


def psnr_db(original: Image, restored: Image) -> float:
    """Peak signal-to-noise ratio in dB; +inf for identical images."""
    err = mse(original, restored)
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(_PEAK_SQ / err)


def ief(original: Image, restored: Image, noisy: Image) -> float:
    """Ratio of noisy-image error energy to restored-image error energy.

    Raises MetricUndefinedError when noisy == original (zero numerator);
    returns +inf for a perfect restoration of a genuinely noisy image.
    """
    num = _sq_error_sum(noisy, original)
    den = _sq_error_sum(restored, original)
    if num == 0:
        raise MetricUndefinedError("IEF undefined: noisy image is identical to the original")
    if den == 0:
        return math.inf
    return num / den


def compute_report(original: Image, restored: Image, noisy: Image | None = None) -> MetricsReport:
    e = mse(original, restored)
    p = math.inf if e == 0.0 else 10.0 * math.log10(_PEAK_SQ / e)
    f = ief(original, restored, noisy) if noisy is not None else None
    return MetricsReport(mse=e, psnr_db=p, ief=f)
