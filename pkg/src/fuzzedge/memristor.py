"""Binary-state IMPLY logic: the XOR stimulation sequence and scan edge detection.

Devices are reduced to their impedance state (0 = high, 1 = low). A stateful
IMPLY step ``x = a -> x`` drives the target to 1 unless the antecedent is 1
and the target 0. XOR of two bits is realized purely by four such steps on a
five-device circuit, and the edge detector below computes every pixel
comparison through that sequence rather than native logic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .image_io import EdgeMap, GrayImage
from .otsu import histogram, otsu_threshold


def _check_bit(v: int, name: str) -> int:
    if v not in (0, 1):
        raise ValueError(f"{name} must be 0 or 1, got {v!r}")
    return v


def imply(a: int, b: int) -> int:
    """Material implication: the target's next state, 0 only for a=1, b=0."""
    _check_bit(a, "antecedent")
    _check_bit(b, "target")
    return 0 if (a == 1 and b == 0) else 1


@dataclass
class ImplyCircuit:
    """The five devices of the XOR circuit: inputs p, q and work devices r, s, t."""

    p: int
    q: int
    r: int = 0
    s: int = 0
    t: int = 0

    def __post_init__(self):
        for name in ("p", "q", "r", "s", "t"):
            _check_bit(getattr(self, name), name)


class TraceStep(NamedTuple):
    step: int
    operation: str
    r: int
    s: int
    t: int


_XOR_STEPS = (
    ("r = q -> r", "q", "r"),
    ("s = p -> s", "p", "s"),
    ("t = r -> t", "r", "t"),
    ("t = s -> t", "s", "t"),
)


def xor_trace(p: int, q: int) -> tuple[int, list[TraceStep]]:
    """Run the four-step stimulation sequence, recording device states per step.

    Work devices start as r = p, s = q, t = 0; the result is read from t.
    """
    circuit = ImplyCircuit(p=_check_bit(p, "p"), q=_check_bit(q, "q"), r=p, s=q, t=0)
    steps = []
    for i, (label, src, dst) in enumerate(_XOR_STEPS, start=1):
        setattr(circuit, dst, imply(getattr(circuit, src), getattr(circuit, dst)))
        steps.append(TraceStep(i, label, circuit.r, circuit.s, circuit.t))
    return circuit.t, steps


def xor_sequence(p: int, q: int) -> int:
    """p XOR q computed through the IMPLY stimulation sequence."""
    result, _ = xor_trace(p, q)
    return result


def _imply_plane(a: np.ndarray, x: np.ndarray) -> np.ndarray:
    # same update as imply(), batched over 0/1 uint8 planes
    return ((1 - a) | x).astype(np.uint8)


def xor_plane(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """The stimulation sequence applied elementwise to two 0/1 planes."""
    r = p.astype(np.uint8)
    s = q.astype(np.uint8)
    t = np.zeros_like(r)
    r = _imply_plane(q, r)
    s = _imply_plane(p, s)
    t = _imply_plane(r, t)
    t = _imply_plane(s, t)
    return t


def memristive_edge_map(plane: GrayImage, threshold: int | None = None) -> EdgeMap:
    """Binarize the plane and mark pixels whose right or bottom neighbour differs.

    ``threshold`` None selects it by the Otsu method; pixels >= threshold map
    to 1. Each comparison runs the XOR stimulation sequence; the left/top
    pixel of a differing pair is the one marked. The last column and row only
    have one direction to scan. Needs at least two pixels along some axis.
    """
    if plane.width < 2 and plane.height < 2:
        raise ValueError(
            f"edge scan needs a neighbour in some direction, got {plane.width}x{plane.height}"
        )
    if threshold is None:
        threshold = otsu_threshold(histogram(plane))
    elif not 0 <= threshold <= 255:
        raise ValueError(f"threshold must lie in [0, 255], got {threshold}")

    b = (plane.pixels >= threshold).astype(np.uint8)
    bits = np.zeros_like(b)
    if plane.width >= 2:
        bits[:, :-1] |= xor_plane(b[:, :-1], b[:, 1:])
    if plane.height >= 2:
        bits[:-1, :] |= xor_plane(b[:-1, :], b[1:, :])
    return EdgeMap(bits)
