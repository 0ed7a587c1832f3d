#!/usr/bin/env python3
"""Generate the synthetic test corpus under data/.

The generators are pure integer arithmetic on a fixed counter-mode PRNG,
so re-running this script always reproduces the same bytes.  Classic
benchmark photographs (Lena, cameraman, boat, ...) are not redistributed
for licensing reasons; any 8-bit binary PGM/PPM dropped into data/ works
with the CLI, e.g.:

    curl -o data/cameraman.pgm https://<your-mirror>/cameraman.pgm
    sapdenoise sweep --input data/cameraman.pgm --csv results.csv
"""

import argparse
from pathlib import Path

from sapdenoise import checkerboard, synthetic_gray, synthetic_rgb, write_image


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--out-dir",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "data",
        help="output directory (default: <repo>/data)",
    )
    parser.add_argument("--size", type=int, default=512, help="grayscale image side length")
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    outputs = {
        "gray512.pgm": synthetic_gray(args.size, args.size),
        "gray128.pgm": synthetic_gray(128, 128),
        "checker256.pgm": checkerboard(256, 256, tile=16),
        "color128.ppm": synthetic_rgb(128, 128),
    }
    for name, img in outputs.items():
        path = args.out_dir / name
        write_image(path, img)
        print(f"wrote {path} ({img.width}x{img.height}x{img.channels})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
