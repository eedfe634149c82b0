"""End-to-end detection: per-channel enhancement, streaming Sobel, combination.

Each channel is (optionally) fuzzy-enhanced, then streamed pixel by pixel
through the window generator into the selected Sobel engine; the three channel
edge maps are merged per pixel into the combined map. Channels are independent
and may be processed in any order with identical results.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import backends
from .fuzzy import EnhanceConfig, MembershipSpec, PolynomialQuartic, enhance_image
from .image_io import EdgeMap, GrayImage, RgbImage
from .sobel import DEFAULT_THRESHOLD


@dataclass(frozen=True)
class DetectConfig:
    """Knobs of the detection pipeline.

    ``enhance_threshold`` fixes the gray threshold fed to threshold-dependent
    memberships; None lets each channel pick its own by the Otsu method. The
    incremental engine realizes the L1 magnitude only, so it cannot be paired
    with the L2 norm or the diagonal add-on.
    """

    fuzzy_enabled: bool = True
    membership: MembershipSpec = PolynomialQuartic()
    threshold: float = DEFAULT_THRESHOLD
    norm: str = "l1"
    engine: str = "incremental"
    combine: str = "or"
    diagonal: bool = False
    enhance_threshold: int | None = None

    def __post_init__(self):
        if self.threshold < 0:
            raise ValueError(f"decision threshold must be nonnegative, got {self.threshold}")
        if self.norm not in ("l1", "l2"):
            raise ValueError(f"unknown norm {self.norm!r}; use 'l1' or 'l2'")
        if self.engine not in ("direct", "incremental"):
            raise ValueError(f"unknown engine {self.engine!r}; use 'direct' or 'incremental'")
        if self.combine not in ("or", "majority"):
            raise ValueError(f"unknown combine rule {self.combine!r}; use 'or' or 'majority'")
        if self.engine == "incremental" and self.norm == "l2":
            raise ValueError("the incremental engine is L1-only; use engine='direct' for l2")
        if self.engine == "incremental" and self.diagonal:
            raise ValueError("the diagonal add-on needs engine='direct'")


@dataclass
class DetectStats:
    """Filled in by detect_channel/detect_color when passed in."""

    add_count: int = 0
    edge_pixels: dict[str, int] = field(default_factory=dict)


def detect_channel(
    plane: GrayImage, config: DetectConfig = DetectConfig(), stats: DetectStats | None = None
) -> EdgeMap:
    """Edge map of one channel; border ring is always 0."""
    if plane.width < 3 or plane.height < 3:
        raise ValueError(f"need at least a 3x3 plane, got {plane.width}x{plane.height}")
    work = plane
    if config.fuzzy_enabled:
        work = enhance_image(
            plane, EnhanceConfig(config.membership, config.enhance_threshold)
        )
    data = work.pixels.tobytes()
    if config.engine == "incremental":
        bits, adds = backends.stream_edge_map_incremental(
            data, work.width, work.height, config.threshold
        )
        if stats is not None:
            stats.add_count += adds
    else:
        bits = backends.stream_edge_map_direct(
            data,
            work.width,
            work.height,
            config.threshold,
            config.norm == "l2",
            config.diagonal,
        )
    arr = np.frombuffer(bits, dtype=np.uint8).reshape(work.height, work.width)
    return EdgeMap(arr)


def combine_maps(maps: tuple[EdgeMap, ...], rule: str = "or") -> EdgeMap:
    """Per-pixel OR (edge anywhere) or majority (edge in >= 2 channels)."""
    stack = np.stack([m.bits for m in maps])
    if rule == "or":
        merged = stack.max(axis=0)
    elif rule == "majority":
        merged = (stack.sum(axis=0, dtype=np.int32) >= 2).astype(np.uint8)
    else:
        raise ValueError(f"unknown combine rule {rule!r}; use 'or' or 'majority'")
    return EdgeMap(merged)


def detect_color(
    image: RgbImage, config: DetectConfig = DetectConfig(), stats: DetectStats | None = None
) -> tuple[EdgeMap, EdgeMap, EdgeMap, EdgeMap]:
    """The R, G, B channel edge maps plus their combination."""
    r_map = detect_channel(image.r, config, stats)
    g_map = detect_channel(image.g, config, stats)
    b_map = detect_channel(image.b, config, stats)
    combined = combine_maps((r_map, g_map, b_map), config.combine)
    if stats is not None:
        stats.edge_pixels.update(
            r=r_map.count(), g=g_map.count(), b=b_map.count(), combined=combined.count()
        )
    return r_map, g_map, b_map, combined
