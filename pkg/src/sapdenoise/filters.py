"""The denoising filters and their shared conventions.

Six filters are exposed under fixed designators (used by the CLI and in
CSV output): "mf", "amf", "mdbutmf", "mdbptgmf", "awmf-approx", "pa".
All of them are pure functions from an input plane to a fresh output
plane: windows always read the original input, never earlier replacements,
so output is independent of traversal order and parallel runs are
bit-identical to serial ones.

Shared conventions:
  * 0 and 255 are treated as noise by the decision-based filters; values
    in [1, 254] are "clean".  Pixels that were legitimately 0 or 255 in
    the source image are indistinguishable from noise under this rule and
    will be rewritten; that is inherent to the method.
  * Windows overlapping the border are truncated to in-bounds pixels.
    Adaptive size tests compare against the nominal side length.
  * Means and even-count medians round half-up (see window.median_int).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .errors import UnknownFilterError
from .image import Image, Plane, merge_channels, split_channels
from .window import extract_window, mean_int, median_int

__all__ = [
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
]

FILTER_NAMES = ("mf", "amf", "mdbutmf", "mdbptgmf", "awmf-approx", "pa")


@dataclass(frozen=True)
class FilterParams:
    """Adaptive-window geometry: start side, growth step, size cap.

    Defaults (3, 2, 9) are the constants of the adaptive filter; the CLI
    maps --w-init/--h/--w-max here.  w_init doubles as the fixed side of
    "mf", and w_max caps "amf" and "awmf-approx".
    """

    w_init: int = 3
    h: int = 2
    w_max: int = 9

    def __post_init__(self):
        if self.w_init < 3 or self.w_init % 2 == 0:
            raise ValueError(f"w_init must be odd and >= 3, got {self.w_init}")
        if self.h < 2 or self.h % 2 == 1:
            raise ValueError(f"h must be even and >= 2, got {self.h}")
        if self.w_max < self.w_init or self.w_max % 2 == 0:
            raise ValueError(f"w_max must be odd and >= w_init, got {self.w_max}")
        if (self.w_max - self.w_init) % self.h != 0:
            raise ValueError("w_max - w_init must be divisible by h")


def _check_odd(name: str, value: int, minimum: int = 3) -> None:
    if value < minimum or value % 2 == 0:
        raise ValueError(f"{name} must be odd and >= {minimum}, got {value}")


def _run(kernel, plane: Plane, *args) -> Plane:
    out = kernel(plane.to_array(), *args)
    return Plane(width=plane.width, height=plane.height, data=out.tobytes())


def filter_pa(plane: Plane, params: FilterParams = FilterParams()) -> Plane:
    """Adaptive growing-window trimmed-median filter (designator "pa")."""
    return _run(_backend.kernels.pa, plane, params.w_init, params.h, params.w_max)


def filter_mdbptgmf(plane: Plane) -> Plane:
    """Fixed 3x3 decision filter with salt/pepper flip rules (designator "mdbptgmf")."""
    return _run(_backend.kernels.mdbptgmf, plane)


def filter_mf(plane: Plane, side: int = 3) -> Plane:
    """Unconditional median filter (designator "mf")."""
    _check_odd("side", side)
    return _run(_backend.kernels.mf, plane, side)


def filter_amf(plane: Plane, w_max: int = 9) -> Plane:
    """Two-level adaptive median filter (designator "amf")."""
    _check_odd("w_max", w_max)
    return _run(_backend.kernels.amf, plane, w_max)


def filter_mdbutmf(plane: Plane) -> Plane:
    """Fixed 3x3 trimmed-median filter (designator "mdbutmf")."""
    return _run(_backend.kernels.mdbutmf, plane)


def filter_awmf(plane: Plane, w_max: int = 9) -> Plane:
    """Uniform-weight adaptive mean filter (designator "awmf-approx").

    The published filter's weighting scheme is not reproduced here, only
    the grow-until-extremes-stabilize detection; the designator carries an
    "-approx" suffix to keep that visible in benchmark output.
    """
    _check_odd("w_max", w_max)
    return _run(_backend.kernels.awmf, plane, w_max)


def apply_to_plane(name: str, plane: Plane, params: FilterParams = FilterParams()) -> Plane:
    """Run the designated filter on one plane."""
    if name == "pa":
        return filter_pa(plane, params)
    if name == "mdbptgmf":
        return filter_mdbptgmf(plane)
    if name == "mf":
        return filter_mf(plane, side=params.w_init)
    if name == "amf":
        return filter_amf(plane, w_max=params.w_max)
    if name == "mdbutmf":
        return filter_mdbutmf(plane)
    if name == "awmf-approx":
        return filter_awmf(plane, w_max=params.w_max)
    raise UnknownFilterError(
        f"unknown filter {name!r}; valid designators: {', '.join(FILTER_NAMES)}"
    )


def apply_to_image(name: str, img: Image, params: FilterParams = FilterParams()) -> Image:
    """Run the designated filter on each channel independently."""
    planes = [apply_to_plane(name, p, params) for p in split_channels(img)]
    return merge_channels(planes)


# --- growth tracing -------------------------------------------------------


@dataclass(frozen=True)
class GrowthTrace:
    """How the adaptive filter handled one pixel.

    steps: (side, clean_count) per window extraction, in growth order.
    rule: "unchanged", "median-clean", "mean-clean", "mean-window",
          "fill-salt" (all-0 window -> 255) or "fill-pepper" (all-255 -> 0).
    """

    row: int
    col: int
    original: int
    steps: tuple[tuple[int, int], ...]
    rule: str
    result: int


def pa_trace(plane: Plane, row: int, col: int, params: FilterParams = FilterParams()) -> GrowthTrace:
    """Trace the adaptive filter's decision at one pixel.

    Runs the growth loop through the pure window primitives, independent of
    the kernel backends; `result` always equals the filtered pixel.
    """
    original = plane.to_array()[row, col]
    p = int(original)
    if 0 < p < 255:
        return GrowthTrace(row, col, p, steps=(), rule="unchanged", result=p)

    steps = []
    side = params.w_init
    while True:
        view = extract_window(plane, row, col, side)
        steps.append((side, view.clean_count))
        if view.clean_count >= side:
            return GrowthTrace(
                row, col, p, tuple(steps), "median-clean", median_int(view.clean_values)
            )
        if side >= params.w_max:
            if view.clean_count >= 1:
                return GrowthTrace(
                    row, col, p, tuple(steps), "mean-clean", mean_int(view.clean_values)
                )
            if 0 in view.values and 255 in view.values:
                return GrowthTrace(row, col, p, tuple(steps), "mean-window", mean_int(view.values))
            if all(v == 0 for v in view.values):
                return GrowthTrace(row, col, p, tuple(steps), "fill-salt", 255)
            return GrowthTrace(row, col, p, tuple(steps), "fill-pepper", 0)
        side += params.h
