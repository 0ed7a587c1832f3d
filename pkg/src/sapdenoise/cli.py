"""Command-line interface.

Subcommands: add-noise, denoise, metrics, sweep.  Exit codes: 0 success,
1 usage error (bad flags, unknown filter, invalid values), 2 I/O or image
parse error, 3 undefined metric (IEF when the noisy image equals the
original).

The sweep subcommand also accepts a flat ``key = value`` config file
mirroring its flags (keys: images, densities, filters, seeds, csv,
salt_fraction, w_init, h, w_max, jobs; lists are comma-separated).  Flags
override config values, so a committed config plus a couple of overrides
reproduces a benchmark exactly.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import MetricUndefinedError, PnmParseError
from .filters import FILTER_NAMES, FilterParams, apply_to_image, pa_trace
from .image import read_image, split_channels, write_image
from .metrics import compute_report
from .noise import NoiseSpec, corruption_rate, inject
from .sweep import DEFAULT_DENSITIES, SweepPlan, format_value, run_sweep, write_csv

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_METRIC = 3

_CONFIG_KEYS = (
    "images",
    "densities",
    "filters",
    "seeds",
    "csv",
    "salt_fraction",
    "w_init",
    "h",
    "w_max",
    "jobs",
)


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage failures exit with the documented code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sapdenoise", allow_abbrev=False, description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("add-noise", allow_abbrev=False, help="inject salt-and-pepper noise")
    p.add_argument("--input", required=True, help="input PGM/PPM path")
    p.add_argument("--output", required=True, help="output PGM/PPM path")
    p.add_argument("--density", type=float, required=True, help="corruption probability in [0,1]")
    p.add_argument("--salt-fraction", type=float, default=0.5, help="P(corrupted sample = 255)")
    p.add_argument("--seed", type=int, default=1, help="64-bit stream seed")
    p.set_defaults(func=cmd_add_noise)

    p = sub.add_parser("denoise", allow_abbrev=False, help="run one filter on an image")
    p.add_argument("--input", required=True, help="input PGM/PPM path")
    p.add_argument("--output", required=True, help="output PGM/PPM path")
    p.add_argument("--filter", required=True, help=f"one of: {', '.join(FILTER_NAMES)}")
    p.add_argument("--w-init", type=int, default=3, help="initial window side (also mf's side)")
    p.add_argument("--h", type=int, default=2, help="window growth step")
    p.add_argument("--w-max", type=int, default=9, help="maximum window side")
    p.add_argument(
        "--trace",
        metavar="ROW,COL",
        help="print the adaptive growth trace for one pixel (pa only, channel 0)",
    )
    p.set_defaults(func=cmd_denoise)

    p = sub.add_parser("metrics", allow_abbrev=False, help="compare restored image to original")
    p.add_argument("--original", required=True)
    p.add_argument("--restored", required=True)
    p.add_argument("--noisy", help="noisy image; enables the IEF line")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("sweep", allow_abbrev=False, help="density sweep benchmark -> CSV")
    p.add_argument("--config", help="key=value config file; flags override it")
    p.add_argument(
        "--input", action="append", help="input image path (repeatable)", metavar="PATH"
    )
    p.add_argument("--densities", help="comma-separated densities in (0,1]")
    p.add_argument("--filters", help="comma-separated filter designators")
    p.add_argument("--seeds", help="comma-separated seeds")
    p.add_argument("--csv", help="output CSV path")
    p.add_argument("--salt-fraction", type=float, default=None)
    p.add_argument("--w-init", type=int, default=None)
    p.add_argument("--h", type=int, default=None)
    p.add_argument("--w-max", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default 1)")
    p.set_defaults(func=cmd_sweep)

    return parser


def cmd_add_noise(args) -> int:
    img = read_image(args.input)
    spec = NoiseSpec(density=args.density, salt_fraction=args.salt_fraction, seed=args.seed)
    noisy = inject(img, spec)
    write_image(args.output, noisy)
    print(f"corruption_rate: {corruption_rate(img, noisy):.4f}")
    return EXIT_OK


def cmd_denoise(args) -> int:
    params = FilterParams(w_init=args.w_init, h=args.h, w_max=args.w_max)
    img = read_image(args.input)
    if args.trace is not None:
        if args.filter != "pa":
            raise ValueError("--trace is only meaningful with --filter pa")
        row, col = _parse_trace(args.trace)
        trace = pa_trace(split_channels(img)[0], row, col, params)
        where = f"({trace.row},{trace.col})"
        print(f"trace {where}: original={trace.original}")
        for side, clean in trace.steps:
            print(f"trace {where}: side={side} clean={clean}")
        print(f"trace {where}: rule={trace.rule} result={trace.result}")
    restored = apply_to_image(args.filter, img, params)
    write_image(args.output, restored)
    return EXIT_OK


def cmd_metrics(args) -> int:
    original = read_image(args.original)
    restored = read_image(args.restored)
    noisy = read_image(args.noisy) if args.noisy else None
    report = compute_report(original, restored, noisy)
    print(f"mse: {format_value(report.mse)}")
    print(f"psnr_db: {format_value(report.psnr_db)}")
    if report.ief is not None:
        print(f"ief: {format_value(report.ief)}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = _load_config(Path(args.config)) if args.config else {}

    images = args.input or _split_list(cfg.get("images", ""))
    if not images:
        raise ValueError("no input images: pass --input or an 'images' config entry")
    csv_path = args.csv or cfg.get("csv")
    if not csv_path:
        raise ValueError("no CSV output path: pass --csv or a 'csv' config entry")

    densities = _pick(args.densities, cfg, "densities", _parse_floats, DEFAULT_DENSITIES)
    filters = _pick(args.filters, cfg, "filters", lambda s: tuple(_split_list(s)), FILTER_NAMES)
    seeds = _pick(args.seeds, cfg, "seeds", _parse_ints, (1,))
    salt_fraction = _pick(args.salt_fraction, cfg, "salt_fraction", float, 0.5)
    jobs = _pick(args.jobs, cfg, "jobs", int, 1)
    params = FilterParams(
        w_init=_pick(args.w_init, cfg, "w_init", int, 3),
        h=_pick(args.h, cfg, "h", int, 2),
        w_max=_pick(args.w_max, cfg, "w_max", int, 9),
    )

    plan = SweepPlan(
        images=tuple(Path(p) for p in images),
        csv_path=Path(csv_path),
        densities=densities,
        filters=filters,
        seeds=seeds,
        salt_fraction=salt_fraction,
        params=params,
        jobs=jobs,
    )
    records = run_sweep(plan)
    write_csv(records, plan.csv_path)
    print(f"wrote {len(records)} records to {plan.csv_path}")
    return EXIT_OK


def _split_list(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _parse_floats(text: str) -> tuple[float, ...]:
    return tuple(float(p) for p in _split_list(text))


def _parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in _split_list(text))


def _parse_trace(text: str) -> tuple[int, int]:
    parts = _split_list(text)
    if len(parts) != 2:
        raise ValueError(f"--trace expects ROW,COL, got {text!r}")
    return int(parts[0]), int(parts[1])


def _pick(flag_value, cfg: dict, key: str, parse, default):
    if flag_value is not None:
        if isinstance(flag_value, str):
            return parse(flag_value)
        return flag_value
    if key in cfg:
        return parse(cfg[key])
    return default


def _load_config(path: Path) -> dict[str, str]:
    cfg: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise ValueError(
                f"{path}:{lineno}: unknown key {key!r}; known keys: {', '.join(_CONFIG_KEYS)}"
            )
        cfg[key] = value
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (PnmParseError, OSError) as exc:
        print(f"sapdenoise: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except MetricUndefinedError as exc:
        print(f"sapdenoise: error: {exc}", file=sys.stderr)
        return EXIT_METRIC
    except ValueError as exc:
        print(f"sapdenoise: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
