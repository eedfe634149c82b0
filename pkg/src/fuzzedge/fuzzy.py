"""Fuzzy membership functions and pointwise contrast enhancement.

A membership function maps a gray level in [0, 255] to a degree in [0, 1] of
belonging to the bright ("white") set; 1 - membership is the belongingness to
the dark set. Enhancement scales the degree back to [0, 255], rounding half up,
which stretches contrast around the chosen center.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .image_io import GrayImage
from .otsu import histogram, otsu_threshold


@dataclass(frozen=True)
class PolynomialQuartic:
    """Threshold-independent contrast-boost curve on raw gray values.

    The default coefficients pin f(0) = 0 and f(255) ~ 255 while steepening
    the middle of the range, similar to a stock "increase contrast" curve.
    """

    a4: float = -2.0454098505641e-07
    a3: float = 7.615967514125e-05
    a2: float = -0.0041249658333
    a1: float = 0.4911541875107

    def raw(self, x: float) -> float:
        """The quartic itself, before any rounding or clamping."""
        return (((self.a4 * x + self.a3) * x + self.a2) * x + self.a1) * x


@dataclass(frozen=True)
class CauchyEven:
    """Bell curve 1 / (1 + alpha*(x - c)**beta) with a positive even exponent."""

    alpha: float = 1e-4
    beta: int = 2
    c: float | None = None  # None: resolved from the enhancement threshold

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.beta <= 0 or self.beta % 2 != 0:
            raise ValueError(f"beta must be a positive even integer, got {self.beta}")
        if self.c is not None and not 0 <= self.c <= 255:
            raise ValueError(f"center must lie in [0, 255], got {self.c}")


@dataclass(frozen=True)
class CauchyAbs:
    """Bell curve 1 / (1 + alpha1*|x - c|**beta1) with a real positive exponent."""

    alpha1: float = 0.01
    beta1: float = 1.0
    c: float | None = None

    def __post_init__(self):
        if not self.alpha1 > 0:
            raise ValueError(f"alpha1 must be positive, got {self.alpha1}")
        if not self.beta1 > 0:
            raise ValueError(f"beta1 must be positive, got {self.beta1}")
        if self.c is not None and not 0 <= self.c <= 255:
            raise ValueError(f"center must lie in [0, 255], got {self.c}")


@dataclass(frozen=True)
class SFunction:
    """Monotone piecewise-quadratic ramp from 0 at knot a to 1 at knot c.

    The value at the knee b is (b - a) / (c - a); with b at the midpoint this
    is the classic S-curve with half-membership at b. Knots left as None are
    derived from the enhancement threshold T as a symmetric window
    (a, b, c) = (max(0, T - 64), T, min(255, T + 64)).
    """

    a: float | None = None
    b: float | None = None
    c: float | None = None

    def __post_init__(self):
        knots = (self.a, self.b, self.c)
        if any(k is None for k in knots):
            if any(k is not None for k in knots):
                raise ValueError("either give all three knots or none")
            return
        if not (0 <= self.a <= self.b <= self.c <= 255):
            raise ValueError(f"knots must satisfy 0 <= a <= b <= c <= 255, got {knots}")


MembershipSpec = Union[PolynomialQuartic, CauchyEven, CauchyAbs, SFunction]


@dataclass(frozen=True)
class EnhanceConfig:
    """How to enhance a plane: a membership shape plus its threshold source.

    ``threshold`` None means the threshold is picked per plane by the Otsu
    method; an integer fixes it. Only threshold-dependent memberships (the
    Cauchy bells and the S-function with unset knots) consume it.
    """

    membership: MembershipSpec = PolynomialQuartic()
    threshold: int | None = None

    def __post_init__(self):
        if self.threshold is not None and not 0 <= self.threshold <= 255:
            raise ValueError(f"fixed threshold must lie in [0, 255], got {self.threshold}")


def needs_threshold(spec: MembershipSpec) -> bool:
    """True when the spec has an unresolved center or knots."""
    if isinstance(spec, (CauchyEven, CauchyAbs)):
        return spec.c is None
    if isinstance(spec, SFunction):
        return spec.a is None
    return False


def resolve_membership(spec: MembershipSpec, threshold: float) -> MembershipSpec:
    """Fill unresolved centers/knots from the given gray-level threshold."""
    if isinstance(spec, CauchyEven) and spec.c is None:
        return CauchyEven(spec.alpha, spec.beta, float(threshold))
    if isinstance(spec, CauchyAbs) and spec.c is None:
        return CauchyAbs(spec.alpha1, spec.beta1, float(threshold))
    if isinstance(spec, SFunction) and spec.a is None:
        t = float(threshold)
        return SFunction(max(0.0, t - 64.0), t, min(255.0, t + 64.0))
    return spec


def membership_value(spec: MembershipSpec, x: float) -> float:
    """Degree of membership in [0, 1] for a gray level x in [0, 255]."""
    if isinstance(spec, PolynomialQuartic):
        return min(1.0, max(0.0, spec.raw(x) / 255.0))
    if isinstance(spec, CauchyEven):
        _require_resolved(spec)
        return 1.0 / (1.0 + spec.alpha * (x - spec.c) ** spec.beta)
    if isinstance(spec, CauchyAbs):
        _require_resolved(spec)
        return 1.0 / (1.0 + spec.alpha1 * abs(x - spec.c) ** spec.beta1)
    if isinstance(spec, SFunction):
        _require_resolved(spec)
        return _s_curve(x, spec.a, spec.b, spec.c)
    raise TypeError(f"not a membership spec: {type(spec).__name__}")


def non_belongingness(spec: MembershipSpec, x: float) -> float:
    """Degree of membership in the complementary (dark) set: 1 - membership."""
    return 1.0 - membership_value(spec, x)


def _require_resolved(spec) -> None:
    if needs_threshold(spec):
        raise ValueError(
            f"{type(spec).__name__} has no center/knots; resolve_membership() "
            "against a threshold first"
        )


def _s_curve(x: float, a: float, b: float, c: float) -> float:
    # quadratics are evaluated as products of ratios in [0, 1]: the naive
    # (x-a)**2 / ((b-a)*(c-a)) form underflows for subnormal-scale knots
    if x <= a:
        return 0.0
    if x > c:
        return 1.0
    if c == a:
        return 1.0  # degenerate step at a; x > a here
    if x <= b:
        # a < b is implied: x > a and x <= b
        return ((x - a) / (b - a)) * ((x - a) / (c - a))
    # b < x <= c, so b < c
    return 1.0 - ((c - x) / (c - b)) * ((c - x) / (c - a))


def _round_half_up(v: float) -> int:
    return math.floor(v + 0.5)


def enhance_pixel(spec: MembershipSpec, x: int) -> int:
    """Map one intensity through the membership and back to 8 bits.

    The quartic is evaluated on the raw gray value directly (its coefficients
    are calibrated to [0, 255]); the other shapes scale their [0, 1] degree by
    255. The result is rounded half up and clamped to [0, 255].
    """
    if isinstance(spec, PolynomialQuartic):
        v = spec.raw(float(x))
    else:
        v = 255.0 * membership_value(spec, float(x))
    return min(255, max(0, _round_half_up(v)))


def enhancement_lut(spec: MembershipSpec) -> np.ndarray:
    """The 256-entry lookup table realizing enhance_pixel."""
    return np.array([enhance_pixel(spec, x) for x in range(256)], dtype=np.uint8)


def enhance_image(plane: GrayImage, config: EnhanceConfig = EnhanceConfig()) -> GrayImage:
    """Apply the configured membership pointwise to a plane.

    When the membership is threshold-dependent the threshold T comes from
    ``config.threshold`` or, if that is None, from the Otsu method on this
    plane; threshold-independent memberships skip the histogram pass entirely.
    """
    spec = config.membership
    if needs_threshold(spec):
        t = config.threshold
        if t is None:
            t = otsu_threshold(histogram(plane))
        spec = resolve_membership(spec, t)
    lut = enhancement_lut(spec)
    return GrayImage(lut[plane.pixels])
