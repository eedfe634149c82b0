"""Streaming 3x3 window generation from a one-pixel-per-cycle input.

Models a line-buffered hardware window generator: three 3-slot shift stages
(one per window row) chained through two FIFOs of depth width-3, so each
buffered row occupies exactly ``width`` storage elements. One pixel enters per
push; once two rows plus three pixels have streamed in, every further push
whose window center is interior emits one window.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, NamedTuple

from .image_io import GrayImage


class Window3x3(NamedTuple):
    """Nine intensities in row-major order plus the center's image coordinates."""

    p1: int
    p2: int
    p3: int
    p4: int
    p5: int
    p6: int
    p7: int
    p8: int
    p9: int
    row: int
    col: int

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(self[:9])

    def rows(self) -> tuple[tuple[int, int, int], ...]:
        return (self[0:3], self[3:6], self[6:9])


class WindowGenerator:
    """Single-owner mutable state consuming one pixel per push.

    ``fifo_capacity`` is width - 3 (253 for a 256-wide image); together with
    the three stage slots each FIFO+stage pair delays a pixel by exactly one
    full row. All per-push updates are O(1) appends/pops.
    """

    def __init__(self, width: int, height: int):
        if width < 3 or height < 3:
            raise ValueError(f"window generator needs at least 3x3, got {width}x{height}")
        self.width = width
        self.height = height
        self.fifo_capacity = width - 3
        self.pushed = 0
        self._top: deque[int] = deque()
        self._mid: deque[int] = deque()
        self._bot: deque[int] = deque()
        self._fifo_a: deque[int] = deque()  # feeds the top stage row
        self._fifo_b: deque[int] = deque()  # feeds the middle stage row

    def _stage_shift(self, stage: deque, value: int) -> int | None:
        stage.append(value)
        if len(stage) > 3:
            return stage.popleft()
        return None

    def _fifo_shift(self, fifo: deque, value: int) -> int | None:
        if self.fifo_capacity == 0:
            return value
        fifo.append(value)
        if len(fifo) > self.fifo_capacity:
            return fifo.popleft()
        return None

    def push_pixel(self, pixel: int) -> Window3x3 | None:
        """Clock one pixel in; return the emitted window, if any.

        Windows appear only for interior centers, in row-major center order;
        nothing is emitted during pipeline fill or at row-wrap positions.
        """
        if self.pushed >= self.width * self.height:
            raise ValueError("push after stream end: the whole image was already consumed")
        if not 0 <= pixel <= 255:
            raise ValueError(f"pixel value {pixel} out of [0, 255]")

        self.pushed += 1
        spill = self._stage_shift(self._bot, pixel)
        if spill is not None:
            spill = self._fifo_shift(self._fifo_b, spill)
            if spill is not None:
                spill = self._stage_shift(self._mid, spill)
                if spill is not None:
                    spill = self._fifo_shift(self._fifo_a, spill)
                    if spill is not None:
                        self._stage_shift(self._top, spill)

        n = self.pushed - 1
        r, c = divmod(n, self.width)
        if r >= 2 and c >= 2:
            # stages hold rows r-2, r-1, r at columns c-2, c-1, c
            return Window3x3(*self._top, *self._mid, *self._bot, row=r - 1, col=c - 1)
        return None

    @property
    def fifo_occupancy(self) -> tuple[int, int]:
        return len(self._fifo_a), len(self._fifo_b)


def windows_of(plane: GrayImage) -> Iterator[Window3x3]:
    """All interior windows by direct slicing, row-major by center.

    Reference oracle for the streaming generator: feeding ``plane`` pixel by
    pixel through push_pixel yields exactly this sequence.
    """
    if plane.width < 3 or plane.height < 3:
        raise ValueError(f"need at least 3x3, got {plane.width}x{plane.height}")
    px = plane.pixels
    for r in range(1, plane.height - 1):
        for c in range(1, plane.width - 1):
            block = px[r - 1 : r + 2, c - 1 : c + 2]
            yield Window3x3(*(int(v) for v in block.reshape(-1)), row=r, col=c)
