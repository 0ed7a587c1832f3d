"""Benchmark sweep: images x densities x seeds x filters -> CSV.

For every (image, density, seed) the sweep injects one noisy image and
runs each requested filter against it, so all filters in a row group see
the same corruption.  Records are emitted in plan order (images outermost,
then densities, seeds, filters) regardless of how they were computed, and
the CSV is written to a temporary file and renamed, so a failed run never
leaves a partial file behind.

CSV schema (exact header)::

    image,filter,density,seed,mse,psnr_db,ief,runtime_ms

Floats carry four decimals; infinities are written as the literal "inf".
Everything except runtime_ms is a pure function of the plan.
"""

from __future__ import annotations

import csv
import math
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from multiprocessing import get_context
from pathlib import Path

from .filters import FILTER_NAMES, FilterParams, apply_to_image
from .image import Image, read_image
from .metrics import compute_report
from .noise import NoiseSpec, inject

__all__ = [
    "DEFAULT_DENSITIES",
    "SweepPlan",
    "SweepRecord",
    "run_sweep",
    "write_csv",
    "format_value",
]

DEFAULT_DENSITIES = tuple(i / 10 for i in range(1, 10))

CSV_HEADER = ("image", "filter", "density", "seed", "mse", "psnr_db", "ief", "runtime_ms")


@dataclass(frozen=True)
class SweepPlan:
    """Full description of one benchmark run."""

    images: tuple[Path, ...]
    csv_path: Path
    densities: tuple[float, ...] = DEFAULT_DENSITIES
    filters: tuple[str, ...] = FILTER_NAMES
    seeds: tuple[int, ...] = (1,)
    salt_fraction: float = 0.5
    params: FilterParams = field(default_factory=FilterParams)
    jobs: int = 1

    def __post_init__(self):
        if not self.images:
            raise ValueError("sweep plan needs at least one input image")
        if not self.seeds:
            raise ValueError("sweep plan needs at least one seed")
        for d in self.densities:
            if not 0.0 < d <= 1.0:
                raise ValueError(f"densities must lie in (0, 1], got {d}")
        unknown = [f for f in self.filters if f not in FILTER_NAMES]
        if unknown:
            raise ValueError(
                f"unknown filters {unknown}; valid designators: {', '.join(FILTER_NAMES)}"
            )
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")


@dataclass(frozen=True)
class SweepRecord:
    """One CSV row: quality of one filter on one noisy realization."""

    image: str
    filter: str
    density: float
    seed: int
    mse: float
    psnr_db: float
    ief: float
    runtime_ms: float


def _run_combo(task) -> SweepRecord:
    """Worker body; module-level so process pools can pickle it."""
    name, original, density, seed, salt_fraction, filter_name, params = task
    noisy = inject(original, NoiseSpec(density=density, salt_fraction=salt_fraction, seed=seed))
    t0 = time.perf_counter()
    restored = apply_to_image(filter_name, noisy, params)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    report = compute_report(original, restored, noisy)
    return SweepRecord(
        image=name,
        filter=filter_name,
        density=density,
        seed=seed,
        mse=report.mse,
        psnr_db=report.psnr_db,
        ief=report.ief,
        runtime_ms=elapsed_ms,
    )


def _tasks(plan: SweepPlan, loaded: list[tuple[str, Image]]):
    for name, img in loaded:
        for density in plan.densities:
            for seed in plan.seeds:
                for filter_name in plan.filters:
                    yield (name, img, density, seed, plan.salt_fraction, filter_name, plan.params)


def run_sweep(plan: SweepPlan) -> list[SweepRecord]:
    """Execute the plan and return records in plan order.

    All images are loaded up front so an unreadable input aborts before any
    filtering happens.  jobs > 1 distributes combinations over worker
    processes; since every combination is a pure function of the plan, the
    records are identical to a serial run.
    """
    loaded = [(path.name, read_image(path)) for path in plan.images]
    tasks = list(_tasks(plan, loaded))
    if plan.jobs == 1:
        return [_run_combo(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=plan.jobs, mp_context=get_context("spawn")) as pool:
        return list(pool.map(_run_combo, tasks, chunksize=1))


def format_value(x: float) -> str:
    return "inf" if math.isinf(x) else f"{x:.4f}"


def write_csv(records: list[SweepRecord], csv_path: Path) -> None:
    """Write records atomically (temp file + rename)."""
    csv_path = Path(csv_path)
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=csv_path.parent, suffix=".csv.tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_HEADER)
            for rec in records:
                writer.writerow(
                    [
                        rec.image,
                        rec.filter,
                        format_value(rec.density),
                        str(rec.seed),
                        format_value(rec.mse),
                        format_value(rec.psnr_db),
                        format_value(rec.ief),
                        format_value(rec.runtime_ms),
                    ]
                )
        os.replace(tmp_name, csv_path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
