"""Benchmark the compiled streaming kernels against the pure-Python fallback.

Runs the direct and incremental stream kernels on one 256x256 plane per
available backend, plus the numpy plane engine and the full three-channel
pipeline for context.

    python benchmarks/bench_backends.py [--size 256] [--repeat 5]
"""

import argparse
import time

import numpy as np

from fuzzedge import (
    DetectConfig,
    GrayImage,
    RgbImage,
    backends,
    detect_color,
    sobel_plane_incremental,
)


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=256, help="plane side length")
    parser.add_argument("--repeat", type=int, default=5, help="repeats per timing")
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    side = args.size
    plane = GrayImage(rng.integers(0, 256, (side, side), dtype=np.uint8))
    data = plane.pixels.tobytes()
    image = RgbImage(
        plane,
        GrayImage(rng.integers(0, 256, (side, side), dtype=np.uint8)),
        GrayImage(rng.integers(0, 256, (side, side), dtype=np.uint8)),
    )

    print(f"plane: {side}x{side}, active backend: {backends.BACKEND}")
    print(f"{'kernel':<34}{'backend':<10}{'best s':>12}{'speedup':>10}")

    rows = {}
    for kernel in ("incremental", "direct"):
        for name in backends.available_backends():
            mod = backends.get_backend(name)
            # the pure path is orders of magnitude slower; one repeat is plenty
            repeat = args.repeat if name == "cython" else max(1, args.repeat // 5)
            if kernel == "incremental":
                fn = lambda: mod.stream_edge_map_incremental(data, side, side, 400.0)
            else:
                fn = lambda: mod.stream_edge_map_direct(data, side, side, 400.0, False, False)
            rows[(kernel, name)] = best_of(fn, repeat)

    for (kernel, name), secs in rows.items():
        base = rows.get((kernel, "python"), secs)
        speedup = base / secs if secs > 0 else float("inf")
        print(f"{'stream_edge_map_' + kernel:<34}{name:<10}{secs:>12.6f}{speedup:>9.1f}x")

    plane_secs = best_of(lambda: sobel_plane_incremental(plane, 400.0), args.repeat)
    print(f"{'sobel_plane_incremental (numpy)':<34}{'-':<10}{plane_secs:>12.6f}")

    e2e = best_of(lambda: detect_color(image, DetectConfig()), max(1, args.repeat // 2))
    print(f"{'detect_color 3x' + str(side) + 'x' + str(side):<34}{backends.BACKEND:<10}{e2e:>12.6f}")


if __name__ == "__main__":
    main()
