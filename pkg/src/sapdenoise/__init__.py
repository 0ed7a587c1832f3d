"""Salt-and-pepper denoising: adaptive-window trimmed-median filtering,
five comparator filters, quality metrics, and a reproducible benchmark CLI.

The per-pixel window kernels run on a compiled extension when available
and on a pure-Python mirror otherwise; see `backend_name()`.
"""

from ._backend import available_backends, backend_name
from .corpus import checkerboard, synthetic_gray, synthetic_plane, synthetic_rgb
from .errors import (
    DimensionMismatchError,
    MetricUndefinedError,
    PnmParseError,
    UnknownFilterError,
)
from .filters import (
    FILTER_NAMES,
    FilterParams,
    GrowthTrace,
    apply_to_image,
    apply_to_plane,
    filter_amf,
    filter_awmf,
    filter_mdbptgmf,
    filter_mdbutmf,
    filter_mf,
    filter_pa,
    pa_trace,
)
from .image import (
    Image,
    Plane,
    load_pnm,
    merge_channels,
    read_image,
    save_pnm,
    split_channels,
    write_image,
)
from .metrics import MetricsReport, compute_report, ief, mse, psnr_db
from .noise import NoiseSpec, corruption_rate, inject, splitmix64_stream
from .sweep import DEFAULT_DENSITIES, SweepPlan, SweepRecord, run_sweep, write_csv
from .window import WindowView, extract_window, mean_int, median_int

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatchError",
    "MetricUndefinedError",
    "PnmParseError",
    "UnknownFilterError",
    "Image",
    "Plane",
    "load_pnm",
    "save_pnm",
    "read_image",
    "write_image",
    "split_channels",
    "merge_channels",
    "NoiseSpec",
    "inject",
    "corruption_rate",
    "splitmix64_stream",
    "WindowView",
    "extract_window",
    "median_int",
    "mean_int",
    "FILTER_NAMES",
    "FilterParams",
    "GrowthTrace",
    "filter_pa",
    "filter_mdbptgmf",
    "filter_mf",
    "filter_amf",
    "filter_mdbutmf",
    "filter_awmf",
    "apply_to_plane",
    "apply_to_image",
    "pa_trace",
    "MetricsReport",
    "mse",
    "psnr_db",
    "ief",
    "compute_report",
    "DEFAULT_DENSITIES",
    "SweepPlan",
    "SweepRecord",
    "run_sweep",
    "write_csv",
    "synthetic_plane",
    "synthetic_gray",
    "synthetic_rgb",
    "checkerboard",
    "backend_name",
    "available_backends",
    "__version__",
]
