#!/usr/bin/env python3
"""Compare the pure-Python and compiled filter kernels.

Runs every filter on the same noisy synthetic plane with both backends,
checks that the outputs are bit-identical, and reports per-backend wall
times plus the speedup.  The pure-Python kernels are the readable
reference; the compiled ones are what the package uses by default.
"""

import argparse
import time

import numpy as np

from sapdenoise import Image, NoiseSpec, inject, synthetic_plane
from sapdenoise._backend import available_backends

CALLS = {
    "mf": lambda mod, a: mod.mf(a, 3),
    "amf": lambda mod, a: mod.amf(a, 9),
    "mdbutmf": lambda mod, a: mod.mdbutmf(a),
    "mdbptgmf": lambda mod, a: mod.mdbptgmf(a),
    "awmf-approx": lambda mod, a: mod.awmf(a, 9),
    "pa": lambda mod, a: mod.pa(a, 3, 2, 9),
}


def time_call(call, mod, arr: np.ndarray, repeats: int) -> tuple[float, np.ndarray]:
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = np.asarray(call(mod, arr))
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=256, help="test plane side length")
    parser.add_argument("--density", type=float, default=0.5, help="noise density")
    parser.add_argument("--repeats", type=int, default=3, help="timing repetitions (best-of)")
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("compiled backend not available; nothing to compare")
        return 1
    py, cy = backends["python"], backends["cython"]

    base = synthetic_plane(args.size, args.size).to_array()
    noisy = inject(Image.from_array(base), NoiseSpec(density=args.density, seed=args.seed))
    arr = noisy.to_array()[:, :, 0].copy()

    print(
        f"plane {args.size}x{args.size}, density {args.density}, "
        f"seed {args.seed}, best of {args.repeats}"
    )
    print(f"{'filter':<12} {'python':>10} {'cython':>10} {'speedup':>8}   match")
    for name, call in CALLS.items():
        t_py, out_py = time_call(call, py, arr, args.repeats)
        t_cy, out_cy = time_call(call, cy, arr, args.repeats)
        match = "yes" if np.array_equal(out_py, out_cy) else "NO"
        print(
            f"{name:<12} {t_py * 1e3:>8.1f}ms {t_cy * 1e3:>8.1f}ms "
            f"{t_py / t_cy:>7.1f}x   {match}"
        )
        if match == "NO":
            return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
