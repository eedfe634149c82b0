"""fuzzedge: fuzzy-enhanced Sobel edge detection for RGB images.

Software model of a streaming hardware edge detector: per-channel fuzzy
contrast enhancement, a line-buffered 3x3 window generator, a grouped-sums
Sobel engine, Otsu threshold selection, and an IMPLY-logic scan detector.
"""

from .backends import BACKEND, available_backends
from .fuzzy import (
    CauchyAbs,
    CauchyEven,
    EnhanceConfig,
    MembershipSpec,
    PolynomialQuartic,
    SFunction,
    enhance_image,
    enhance_pixel,
    enhancement_lut,
    membership_value,
    non_belongingness,
    resolve_membership,
)
from .image_io import (
    EdgeMap,
    GrayImage,
    PnmError,
    PnmHeaderError,
    PnmMaxvalError,
    PnmSampleError,
    PnmTruncatedError,
    RgbImage,
    TextChannelError,
    read_pnm,
    read_text_channel,
    split_channels,
    write_pnm,
    write_text_channel,
)
from .memristor import (
    ImplyCircuit,
    imply,
    memristive_edge_map,
    xor_plane,
    xor_sequence,
    xor_trace,
)
from .otsu import Histogram256, OtsuStats, histogram, otsu_stats, otsu_threshold
from .pipeline import (
    DetectConfig,
    DetectStats,
    combine_maps,
    detect_channel,
    detect_color,
)
from .sobel import (
    H1,
    H2,
    H3,
    H4,
    GradientPair,
    IncrementalStreamEngine,
    SumPlanes,
    compute_sum_planes,
    convolve3x3,
    edge_decide,
    gradient_diagonal,
    gradient_direct,
    magnitude,
    sobel_plane_direct,
    sobel_plane_incremental,
)
from .stream_window import Window3x3, WindowGenerator, windows_of

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CauchyAbs",
    "CauchyEven",
    "DetectConfig",
    "DetectStats",
    "EdgeMap",
    "EnhanceConfig",
    "GradientPair",
    "GrayImage",
    "H1",
    "H2",
    "H3",
    "H4",
    "Histogram256",
    "ImplyCircuit",
    "IncrementalStreamEngine",
    "MembershipSpec",
    "OtsuStats",
    "PnmError",
    "PnmHeaderError",
    "PnmMaxvalError",
    "PnmSampleError",
    "PnmTruncatedError",
    "PolynomialQuartic",
    "RgbImage",
    "SFunction",
    "SumPlanes",
    "TextChannelError",
    "Window3x3",
    "WindowGenerator",
    "available_backends",
    "combine_maps",
    "compute_sum_planes",
    "convolve3x3",
    "detect_channel",
    "detect_color",
    "edge_decide",
    "enhance_image",
    "enhance_pixel",
    "enhancement_lut",
    "gradient_diagonal",
    "gradient_direct",
    "histogram",
    "imply",
    "magnitude",
    "membership_value",
    "memristive_edge_map",
    "non_belongingness",
    "otsu_stats",
    "otsu_threshold",
    "read_pnm",
    "read_text_channel",
    "resolve_membership",
    "sobel_plane_direct",
    "sobel_plane_incremental",
    "split_channels",
    "windows_of",
    "write_pnm",
    "write_text_channel",
    "xor_plane",
    "xor_sequence",
    "xor_trace",
    "__version__",
]
