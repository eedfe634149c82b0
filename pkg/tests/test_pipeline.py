import numpy as np
import pytest

from fuzzedge import (
    CauchyEven,
    DetectConfig,
    DetectStats,
    EdgeMap,
    EnhanceConfig,
    GrayImage,
    RgbImage,
    combine_maps,
    detect_channel,
    detect_color,
    enhance_image,
    sobel_plane_direct,
)

from conftest import random_plane, random_rgb, two_level_plane


class TestDetectConfig:
    def test_defaults(self):
        cfg = DetectConfig()
        assert cfg.fuzzy_enabled and cfg.threshold == 400.0
        assert (cfg.norm, cfg.engine, cfg.combine) == ("l1", "incremental", "or")

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"threshold": -1.0},
            {"norm": "linf"},
            {"engine": "magic"},
            {"combine": "xor"},
            {"engine": "incremental", "norm": "l2"},
            {"engine": "incremental", "diagonal": True},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            DetectConfig(**kwargs)

    def test_l2_with_direct_ok(self):
        DetectConfig(engine="direct", norm="l2", diagonal=True)


class TestDetectChannel:
    def test_constant_channel_no_edges(self):
        plane = GrayImage(np.full((8, 8), 123, dtype=np.uint8))
        for cfg in (DetectConfig(), DetectConfig(fuzzy_enabled=False, engine="direct")):
            assert detect_channel(plane, cfg).count() == 0

    def test_two_level_fuzzy_benefit(self):
        plane = two_level_plane()
        off = detect_channel(plane, DetectConfig(fuzzy_enabled=False, threshold=200))
        on = detect_channel(plane, DetectConfig(fuzzy_enabled=True, threshold=200))
        assert off.count() == 0  # raw step gradient is 4*40 = 160 < 200
        assert on.count() == 60  # enhanced step gradient 4*54 = 216: two columns x 30 rows

    def test_engines_agree(self, rng):
        for fuzzy in (False, True):
            for _ in range(8):
                plane = random_plane(rng, 3, 32)
                cfg_i = DetectConfig(fuzzy_enabled=fuzzy, threshold=300)
                cfg_d = DetectConfig(fuzzy_enabled=fuzzy, threshold=300, engine="direct")
                assert detect_channel(plane, cfg_i) == detect_channel(plane, cfg_d)

    def test_matches_plane_engine_after_enhancement(self, rng):
        plane = random_plane(rng, 3, 24)
        cfg = DetectConfig(threshold=250)
        expected = sobel_plane_direct(enhance_image(plane), 250, "l1")
        assert detect_channel(plane, cfg) == expected

    def test_border_ring_zero(self, rng):
        plane = random_plane(rng, 3, 24)
        em = detect_channel(plane, DetectConfig(threshold=0))
        assert em.bits[0, :].max() == 0 and em.bits[-1, :].max() == 0
        assert em.bits[:, 0].max() == 0 and em.bits[:, -1].max() == 0

    def test_stats_add_count(self):
        plane = two_level_plane(16, 16)
        stats = DetectStats()
        detect_channel(plane, DetectConfig(), stats)
        assert stats.add_count == 7 * 16 * 16 - 9 * 32 + 12

    def test_too_small(self):
        with pytest.raises(ValueError):
            detect_channel(GrayImage(np.zeros((2, 4), dtype=np.uint8)))


class TestCombineMaps:
    def test_or_is_union(self, rng):
        maps = [
            EdgeMap(rng.integers(0, 2, (6, 6)).astype(np.uint8)) for _ in range(3)
        ]
        merged = combine_maps(tuple(maps), "or")
        union = maps[0].bits | maps[1].bits | maps[2].bits
        assert np.array_equal(merged.bits, union)

    def test_majority(self, rng):
        maps = [
            EdgeMap(rng.integers(0, 2, (6, 6)).astype(np.uint8)) for _ in range(3)
        ]
        merged = combine_maps(tuple(maps), "majority")
        votes = maps[0].bits.astype(int) + maps[1].bits + maps[2].bits
        assert np.array_equal(merged.bits, (votes >= 2).astype(np.uint8))

    def test_majority_monotone(self, rng):
        base = [rng.integers(0, 2, (6, 6)).astype(np.uint8) for _ in range(3)]
        grown = base[0].copy()
        grown[rng.integers(0, 6), rng.integers(0, 6)] = 1
        before = combine_maps(tuple(EdgeMap(b) for b in base), "majority")
        after = combine_maps(
            (EdgeMap(grown), EdgeMap(base[1]), EdgeMap(base[2])), "majority"
        )
        assert np.all(after.bits >= before.bits)

    def test_unknown_rule(self):
        with pytest.raises(ValueError):
            combine_maps((EdgeMap(np.zeros((2, 2), dtype=np.uint8)),) * 3, "xor")


class TestDetectColor:
    def test_equal_channels_equal_maps(self, rng):
        plane = random_plane(rng, 3, 24)
        image = RgbImage(plane, plane, plane)
        r, g, b, combined = detect_color(image, DetectConfig(threshold=300))
        assert r == g == b == combined

    def test_edge_only_in_blue(self):
        flat = GrayImage(np.full((16, 16), 100, dtype=np.uint8))
        stepped = two_level_plane(16, 16, 100, 140)
        image = RgbImage(flat, flat, stepped)
        r, g, b, combined = detect_color(image, DetectConfig(threshold=200))
        assert r.count() == g.count() == 0
        assert b.count() > 0
        assert combined == b

    def test_or_union_of_channels(self, rng):
        image = random_rgb(rng, 3, 24)
        r, g, b, combined = detect_color(image, DetectConfig(threshold=350))
        assert np.array_equal(combined.bits, r.bits | g.bits | b.bits)

    def test_channel_order_independent(self, rng):
        image = random_rgb(rng, 3, 20)
        cfg = DetectConfig(threshold=300)
        first = detect_color(image, cfg)
        swapped = RgbImage(image.b, image.g, image.r)
        second = detect_color(swapped, cfg)
        assert first[0] == second[2] and first[2] == second[0]
        assert first[3] == second[3]  # the OR combination ignores channel order

    def test_per_channel_otsu_enhancement(self, rng):
        # each channel picks its own threshold for threshold-driven memberships
        dark = GrayImage(rng.integers(0, 100, (12, 12)).astype(np.uint8))
        bright = GrayImage(rng.integers(150, 256, (12, 12)).astype(np.uint8))
        mid = GrayImage(rng.integers(60, 190, (12, 12)).astype(np.uint8))
        image = RgbImage(dark, bright, mid)
        membership = CauchyEven(alpha=1e-3, beta=2)
        cfg = DetectConfig(membership=membership, threshold=250)
        r, g, b, _ = detect_color(image, cfg)
        for plane, emap in ((dark, r), (bright, g), (mid, b)):
            enhanced = enhance_image(plane, EnhanceConfig(membership))
            assert emap == sobel_plane_direct(enhanced, 250, "l1")

    def test_stats_filled(self, rng):
        image = random_rgb(rng, 4, 16)
        stats = DetectStats()
        detect_color(image, DetectConfig(threshold=300), stats)
        assert set(stats.edge_pixels) == {"r", "g", "b", "combined"}
        assert stats.add_count > 0

    def test_deterministic(self, rng):
        image = random_rgb(rng, 3, 24)
        cfg = DetectConfig()
        a = detect_color(image, cfg)
        b = detect_color(image, cfg)
        assert all(x == y for x, y in zip(a, b))
