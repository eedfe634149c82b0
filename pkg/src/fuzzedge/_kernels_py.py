"""Pure-Python streaming edge-map kernels.

Fallback used when the compiled extension is absent. Each kernel feeds the
plane pixel by pixel through the reference ``WindowGenerator`` and evaluates
the Sobel stage per emitted window, exactly as the compiled core does in C.
"""

from __future__ import annotations

from .sobel import (
    IncrementalStreamEngine,
    gradient_diagonal,
    gradient_direct,
    magnitude,
)
from .stream_window import WindowGenerator


def _check_length(data, width: int, height: int) -> None:
    if len(data) != width * height:
        raise ValueError(f"data holds {len(data)} pixels, need {width * height}")


def stream_edge_map_direct(
    data: bytes,
    width: int,
    height: int,
    threshold: float,
    use_l2: bool = False,
    diagonal: bool = False,
) -> bytes:
    """Edge bits (one byte per pixel, border ring 0) via direct convolution."""
    gen = WindowGenerator(width, height)
    _check_length(data, width, height)
    bits = bytearray(width * height)
    norm = "l2" if use_l2 else "l1"
    for px in data:
        win = gen.push_pixel(px)
        if win is None:
            continue
        mag = magnitude(gradient_direct(win), norm)
        if diagonal:
            d = gradient_diagonal(win)
            mag += abs(d.gx) + abs(d.gy)
        if mag >= threshold:
            bits[win.row * width + win.col] = 1
    return bytes(bits)


def stream_edge_map_incremental(
    data: bytes, width: int, height: int, threshold: float
) -> tuple[bytes, int]:
    """L1 edge bits via the grouped-sums stream engine, plus its addition count."""
    gen = WindowGenerator(width, height)
    _check_length(data, width, height)
    eng = IncrementalStreamEngine(width, height)
    bits = bytearray(width * height)
    for px in data:
        win = gen.push_pixel(px)
        if win is not None and eng.magnitude(win) >= threshold:
            bits[win.row * width + win.col] = 1
    return bytes(bits), eng.add_count
