import numpy as np
import pytest

from fuzzedge import GrayImage, RgbImage


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def random_plane(rng, min_side=3, max_side=64) -> GrayImage:
    h = int(rng.integers(min_side, max_side + 1))
    w = int(rng.integers(min_side, max_side + 1))
    return GrayImage(rng.integers(0, 256, (h, w), dtype=np.uint8))


def random_rgb(rng, min_side=3, max_side=64) -> RgbImage:
    h = int(rng.integers(min_side, max_side + 1))
    w = int(rng.integers(min_side, max_side + 1))
    planes = [
        GrayImage(rng.integers(0, 256, (h, w), dtype=np.uint8)) for _ in range(3)
    ]
    return RgbImage(*planes)


def two_level_plane(width=32, height=32, left=100, right=140) -> GrayImage:
    arr = np.full((height, width), left, dtype=np.uint8)
    arr[:, width // 2 :] = right
    return GrayImage(arr)
