"""Image containers, PNM (P1-P6) reading/writing, and testbench text channels.

All planes are 8-bit with maxval 255. The text-channel format is headerless:
one decimal intensity per whitespace-separated token, row-major, with the
dimensions supplied out of band (they are CLI flags in the command-line tool).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class PnmError(ValueError):
    """A PNM file could not be parsed; ``offset`` is the failing byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class PnmHeaderError(PnmError):
    """Malformed magic number, dimensions, or header layout."""


class PnmMaxvalError(PnmError):
    """Header maxval is not 255."""


class PnmTruncatedError(PnmError):
    """The pixel payload ends before width*height samples."""


class PnmSampleError(PnmError):
    """A payload sample is non-numeric or out of [0, maxval]."""


class TextChannelError(ValueError):
    """A testbench text channel could not be parsed."""


def _freeze_u8(values, what: str) -> np.ndarray:
    arr = np.asarray(values)
    if arr.ndim != 2:
        raise ValueError(f"{what} must be a 2-D array, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"{what} must be at least 1x1, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError(f"{what} must hold integers, got dtype {arr.dtype}")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError(f"{what} values must lie in [0, 255]")
        arr = arr.astype(np.uint8)
    else:
        arr = arr.copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class GrayImage:
    """A rectangular plane of 8-bit intensities, row-major."""

    pixels: np.ndarray  # (height, width) uint8, read-only

    def __post_init__(self):
        object.__setattr__(self, "pixels", _freeze_u8(self.pixels, "GrayImage"))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @classmethod
    def from_flat(cls, width: int, height: int, values) -> "GrayImage":
        arr = np.asarray(values)
        if arr.size != width * height:
            raise ValueError(
                f"expected {width * height} values for {width}x{height}, got {arr.size}"
            )
        return cls(arr.reshape(height, width))

    def flat(self) -> np.ndarray:
        return self.pixels.reshape(-1)

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(
            np.array_equal(self.pixels, other.pixels)
        )

    def __hash__(self):
        return hash((self.pixels.shape, self.pixels.tobytes()))


@dataclass(frozen=True)
class RgbImage:
    """Three same-sized gray planes: the R, G and B channels of a color image."""

    r: GrayImage
    g: GrayImage
    b: GrayImage

    def __post_init__(self):
        shapes = {self.r.pixels.shape, self.g.pixels.shape, self.b.pixels.shape}
        if len(shapes) != 1:
            raise ValueError(f"channel planes differ in size: {sorted(shapes)}")

    @property
    def width(self) -> int:
        return self.r.width

    @property
    def height(self) -> int:
        return self.r.height


@dataclass(frozen=True)
class EdgeMap:
    """A binary map the same size as its source image; 1 marks an edge pixel."""

    bits: np.ndarray  # (height, width) uint8 of {0, 1}, read-only

    def __post_init__(self):
        arr = _freeze_u8(self.bits, "EdgeMap")
        if arr.size and arr.max() > 1:
            raise ValueError("EdgeMap values must be 0 or 1")
        object.__setattr__(self, "bits", arr)

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    def count(self) -> int:
        """Number of edge pixels."""
        return int(self.bits.sum())

    def __eq__(self, other):
        if not isinstance(other, EdgeMap):
            return NotImplemented
        return self.bits.shape == other.bits.shape and bool(
            np.array_equal(self.bits, other.bits)
        )

    def __hash__(self):
        return hash((self.bits.shape, self.bits.tobytes()))


_WHITESPACE = b" \t\r\n\x0b\x0c"


class _Scanner:
    """Tokenizer over PNM bytes; skips whitespace and '#' comments."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def _skip_separators(self):
        data, n = self.data, len(self.data)
        while self.pos < n:
            c = self.data[self.pos : self.pos + 1]
            if c in (b"#",):
                while self.pos < n and data[self.pos : self.pos + 1] not in (b"\n", b"\r"):
                    self.pos += 1
            elif c in _WHITESPACE:
                self.pos += 1
            else:
                return

    def token(self, what: str, err=PnmHeaderError) -> bytes:
        self._skip_separators()
        start = self.pos
        n = len(self.data)
        while self.pos < n and self.data[self.pos : self.pos + 1] not in _WHITESPACE:
            if self.data[self.pos : self.pos + 1] == b"#":
                break
            self.pos += 1
        if self.pos == start:
            raise err(f"expected {what}, found end of data", start)
        return self.data[start : self.pos]

    def integer(self, what: str, err=PnmHeaderError) -> int:
        tok_at = None
        self._skip_separators()
        tok_at = self.pos
        tok = self.token(what, err)
        try:
            return int(tok)
        except ValueError:
            raise err(f"expected {what}, got {tok!r}", tok_at) from None

    def expect_single_space(self):
        # Binary formats: exactly one whitespace byte between maxval and payload.
        if self.pos >= len(self.data) or self.data[self.pos : self.pos + 1] not in _WHITESPACE:
            raise PnmHeaderError("expected a whitespace byte before binary payload", self.pos)
        self.pos += 1


def read_pnm(data: bytes) -> GrayImage | RgbImage:
    """Parse a P2/P5 (gray) or P3/P6 (RGB) PNM file with maxval 255."""
    sc = _Scanner(data)
    magic = sc.token("PNM magic number")
    if magic not in (b"P2", b"P3", b"P5", b"P6"):
        raise PnmHeaderError(f"unsupported PNM magic {magic!r}", 0)
    width = sc.integer("width")
    height = sc.integer("height")
    if width < 1 or height < 1:
        raise PnmHeaderError(f"dimensions must be positive, got {width}x{height}", sc.pos)
    maxval_at = sc.pos
    maxval = sc.integer("maxval")
    if maxval != 255:
        raise PnmMaxvalError(f"maxval must be 255, got {maxval}", maxval_at)

    channels = 3 if magic in (b"P3", b"P6") else 1
    count = width * height * channels

    if magic in (b"P5", b"P6"):
        sc.expect_single_space()
        payload = data[sc.pos : sc.pos + count]
        if len(payload) < count:
            raise PnmTruncatedError(
                f"payload holds {len(payload)} bytes, need {count}", len(data)
            )
        samples = np.frombuffer(payload, dtype=np.uint8, count=count)
    else:
        values = np.empty(count, dtype=np.uint8)
        for i in range(count):
            at = sc.pos
            try:
                tok = sc.token("pixel sample", PnmTruncatedError)
            except PnmTruncatedError:
                raise PnmTruncatedError(f"payload holds {i} samples, need {count}", at) from None
            try:
                v = int(tok)
            except ValueError:
                raise PnmSampleError(f"non-numeric sample {tok!r}", at) from None
            if not 0 <= v <= maxval:
                raise PnmSampleError(f"sample {v} out of [0, {maxval}]", at)
            values[i] = v
        samples = values

    if channels == 1:
        return GrayImage(samples.reshape(height, width))
    rgb = samples.reshape(height, width, 3)
    return RgbImage(
        GrayImage(rgb[:, :, 0]), GrayImage(rgb[:, :, 1]), GrayImage(rgb[:, :, 2])
    )


def _ascii_rows(samples: np.ndarray, per_row: int) -> bytes:
    # one image row per line, split to stay within the customary 70 columns
    lines = []
    flat = samples.reshape(-1, per_row)
    for row in flat:
        current: list[str] = []
        length = 0
        for v in row:
            tok = str(int(v))
            if current and length + 1 + len(tok) > 70:
                lines.append(" ".join(current))
                current, length = [], 0
            current.append(tok)
            length += len(tok) + (1 if length else 0)
        lines.append(" ".join(current))
    return ("\n".join(lines) + "\n").encode("ascii")


def write_pnm(image: GrayImage | RgbImage | EdgeMap, fmt: str = "") -> bytes:
    """Serialize to one of P1..P6.

    Gray planes accept P2/P5, RGB images P3/P6, edge maps P1/P4 (PBM writes
    edge=1 as black per the format's convention). When ``fmt`` is empty the
    binary variant for the image kind is used.
    """
    if isinstance(image, GrayImage):
        fmt = fmt or "P5"
        if fmt not in ("P2", "P5"):
            raise ValueError(f"format {fmt} is incompatible with a gray plane")
        header = f"{fmt}\n{image.width} {image.height}\n255\n".encode("ascii")
        if fmt == "P5":
            return header + image.pixels.tobytes()
        return header + _ascii_rows(image.pixels, image.width)

    if isinstance(image, RgbImage):
        fmt = fmt or "P6"
        if fmt not in ("P3", "P6"):
            raise ValueError(f"format {fmt} is incompatible with an RGB image")
        interleaved = np.dstack([image.r.pixels, image.g.pixels, image.b.pixels])
        header = f"{fmt}\n{image.width} {image.height}\n255\n".encode("ascii")
        if fmt == "P6":
            return header + interleaved.tobytes()
        return header + _ascii_rows(interleaved, image.width * 3)

    if isinstance(image, EdgeMap):
        fmt = fmt or "P4"
        if fmt not in ("P1", "P4"):
            raise ValueError(f"format {fmt} is incompatible with an edge map")
        header = f"{fmt}\n{image.width} {image.height}\n".encode("ascii")
        if fmt == "P1":
            return header + _ascii_rows(image.bits, image.width)
        return header + np.packbits(image.bits, axis=1).tobytes()

    raise ValueError(f"cannot serialize {type(image).__name__} as PNM")


def read_text_channel(text: str, width: int, height: int) -> GrayImage:
    """Parse a headerless decimal channel file into a plane of the given size."""
    if width < 1 or height < 1:
        raise TextChannelError(f"dimensions must be positive, got {width}x{height}")
    need = width * height
    tokens = text.split()
    if len(tokens) < need:
        raise TextChannelError(f"channel holds {len(tokens)} values, need {need}")
    values = np.empty(need, dtype=np.uint8)
    for i in range(need):
        tok = tokens[i]
        try:
            v = int(tok)
        except ValueError:
            raise TextChannelError(f"non-numeric value {tok!r} at index {i}") from None
        if not 0 <= v <= 255:
            raise TextChannelError(f"value {v} at index {i} out of [0, 255]")
        values[i] = v
    return GrayImage.from_flat(width, height, values)


def write_text_channel(plane: GrayImage) -> str:
    """One decimal intensity per line, row-major."""
    return "\n".join(str(int(v)) for v in plane.flat()) + "\n"


def split_channels(image: RgbImage) -> tuple[GrayImage, GrayImage, GrayImage]:
    """The R, G and B planes of a color image."""
    return image.r, image.g, image.b
