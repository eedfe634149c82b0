"""Gray-level histogram statistics and between-class-variance threshold selection."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image_io import GrayImage


@dataclass(frozen=True)
class Histogram256:
    """Pixel counts per gray level plus the total pixel count."""

    counts: np.ndarray  # (256,) nonnegative int64
    total: int

    def __post_init__(self):
        arr = np.asarray(self.counts, dtype=np.int64)
        if arr.shape != (256,):
            raise ValueError(f"histogram needs 256 bins, got shape {arr.shape}")
        if arr.min() < 0:
            raise ValueError("histogram counts must be nonnegative")
        if int(arr.sum()) != self.total:
            raise ValueError(
                f"counts sum to {int(arr.sum())} but total is {self.total}"
            )
        if self.total < 1:
            raise ValueError("histogram total must be positive")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "counts", arr)

    def frequencies(self) -> np.ndarray:
        """p(k) = counts[k] / total."""
        return self.counts / self.total


@dataclass(frozen=True)
class OtsuStats:
    """Class split statistics for one candidate threshold t.

    Pixels with value <= t form class 0, the rest class 1. An empty class has
    mean 0 by convention and contributes nothing to the between-class variance.
    """

    t: int
    omega0: float
    omega1: float
    mu0: float
    mu1: float
    mu: float
    sigma_b2: float


def histogram(plane: GrayImage) -> Histogram256:
    """Count pixels per gray level."""
    flat = plane.flat()
    if flat.size == 0:
        raise ValueError("cannot build a histogram of an empty plane")
    counts = np.bincount(flat, minlength=256)
    return Histogram256(counts, int(flat.size))


def otsu_stats(hist: Histogram256, t: int) -> OtsuStats:
    """Evaluate the class probabilities, means, and between-class variance at t."""
    if not 0 <= t <= 255:
        raise ValueError(f"threshold must lie in [0, 255], got {t}")
    p = hist.frequencies()
    omega0 = 0.0
    s0 = 0.0
    for i in range(t + 1):
        omega0 += p[i]
        s0 += i * p[i]
    omega1 = 0.0
    s1 = 0.0
    for i in range(t + 1, 256):
        omega1 += p[i]
        s1 += i * p[i]
    mu0 = s0 / omega0 if omega0 > 0.0 else 0.0
    mu1 = s1 / omega1 if omega1 > 0.0 else 0.0
    mu = omega0 * mu0 + omega1 * mu1
    sigma_b2 = 0.0
    if omega0 > 0.0:
        sigma_b2 += omega0 * (mu0 - mu) ** 2
    if omega1 > 0.0:
        sigma_b2 += omega1 * (mu1 - mu) ** 2
    return OtsuStats(t, float(omega0), float(omega1), float(mu0), float(mu1),
                     float(mu), float(sigma_b2))


def otsu_threshold(hist: Histogram256) -> int:
    """Smallest t maximizing the between-class variance.

    The argmax is decided in exact integer arithmetic so plateau ties always
    resolve to the smallest t, independent of floating-point summation order:
    with class totals w0, w1 and first moments s0, s1 (raw counts),

        sigma_b2(t)  is proportional to  (s0*w1 - s1*w0)**2 / (w0*w1),

    and candidates are compared by cross-multiplication. A constant image
    (single occupied bin) returns that gray value: every split scores zero
    there, and the image's only level is the one meaningful threshold.
    """
    occupied = np.flatnonzero(hist.counts)
    if occupied.size == 1:
        return int(occupied[0])

    total = hist.total
    s_total = int(np.dot(np.arange(256, dtype=np.int64), hist.counts))
    best_num = -1
    best_den = 1
    best_t = 0
    w0 = 0
    s0 = 0
    for t in range(256):
        c = int(hist.counts[t])
        w0 += c
        s0 += t * c
        w1 = total - w0
        if w0 == 0 or w1 == 0:
            num, den = 0, 1
        else:
            d = s0 * w1 - (s_total - s0) * w0
            num, den = d * d, w0 * w1
        if num * best_den > best_num * den:
            best_num, best_den, best_t = num, den, t
    return best_t
