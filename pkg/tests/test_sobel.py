import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzedge import (
    H1,
    H2,
    H3,
    H4,
    GradientPair,
    GrayImage,
    IncrementalStreamEngine,
    Window3x3,
    compute_sum_planes,
    convolve3x3,
    edge_decide,
    gradient_diagonal,
    gradient_direct,
    magnitude,
    sobel_plane_direct,
    sobel_plane_incremental,
    windows_of,
)

from conftest import random_plane


def win(values, row=1, col=1) -> Window3x3:
    return Window3x3(*values, row=row, col=col)


def nine_product_oracle(window: Window3x3, kernel) -> int:
    vals = window.values
    return sum(kernel[i // 3][i % 3] * vals[i] for i in range(9))


VERT_STEP = win([0, 0, 255, 0, 0, 255, 0, 0, 255])
HORIZ_STEP = win([0, 0, 0, 0, 0, 0, 255, 255, 255])

windows_strategy = st.lists(st.integers(0, 255), min_size=9, max_size=9).map(win)


class TestKernels:
    @pytest.mark.parametrize("kernel", [H1, H2, H3, H4])
    def test_zero_sum(self, kernel):
        assert sum(sum(row) for row in kernel) == 0

    @pytest.mark.parametrize("kernel", [H1, H2, H3, H4])
    def test_annihilates_constant(self, kernel):
        assert convolve3x3(win([77] * 9), kernel) == 0


class TestConvolve:
    def test_vertical_step_h2(self):
        assert convolve3x3(VERT_STEP, H2) == 1020  # 255 + 510 + 255

    def test_vertical_step_h1(self):
        assert convolve3x3(VERT_STEP, H1) == 0

    @settings(max_examples=150, deadline=None)
    @given(window=windows_strategy, kernel=st.sampled_from([H1, H2, H3, H4]))
    def test_matches_nine_product_oracle(self, window, kernel):
        assert convolve3x3(window, kernel) == nine_product_oracle(window, kernel)


class TestGradients:
    def test_constant(self):
        assert gradient_direct(win([9] * 9)) == (0, 0)

    def test_vertical_step(self):
        assert gradient_direct(VERT_STEP) == (1020, 0)

    def test_horizontal_step(self):
        assert gradient_direct(HORIZ_STEP) == (0, 1020)

    def test_diagonal_constant(self):
        assert gradient_diagonal(win([42] * 9)) == (0, 0)

    def test_diagonal_step_vs_oracle(self):
        w = win([0, 255, 255, 0, 0, 255, 0, 0, 0])
        assert gradient_diagonal(w) == (
            nine_product_oracle(w, H3),
            nine_product_oracle(w, H4),
        )

    @settings(max_examples=100, deadline=None)
    @given(window=windows_strategy)
    def test_diagonal_rotation_antisymmetry(self, window):
        rotated = win(window.values[::-1])
        d = gradient_diagonal(window)
        rd = gradient_diagonal(rotated)
        assert (rd.gx, rd.gy) == (-d.gx, -d.gy)

    @settings(max_examples=200, deadline=None)
    @given(window=windows_strategy)
    def test_gradient_bounds(self, window):
        g = gradient_direct(window)
        assert abs(g.gx) <= 1020 and abs(g.gy) <= 1020


class TestMagnitude:
    def test_zero(self):
        assert magnitude(GradientPair(0, 0), "l1") == 0.0
        assert magnitude(GradientPair(0, 0), "l2") == 0.0

    def test_pythagorean(self):
        assert magnitude(GradientPair(3, 4), "l2") == pytest.approx(5.0)

    def test_axis_aligned(self):
        assert magnitude(GradientPair(1020, 0), "l1") == 1020.0
        assert magnitude(GradientPair(1020, 0), "l2") == pytest.approx(1020.0)

    def test_unknown_norm(self):
        with pytest.raises(ValueError):
            magnitude(GradientPair(1, 1), "linf")

    @settings(max_examples=150, deadline=None)
    @given(gx=st.integers(-1020, 1020), gy=st.integers(-1020, 1020))
    def test_l1_dominates_l2(self, gx, gy):
        g = GradientPair(gx, gy)
        assert magnitude(g, "l1") >= magnitude(g, "l2") - 1e-9


class TestEdgeDecide:
    def test_operating_point(self):
        assert edge_decide(1020, 400) == 1

    def test_zero_magnitude(self):
        assert edge_decide(0, 1) == 0

    def test_threshold_equality_is_edge(self):
        assert edge_decide(400, 400) == 1

    def test_contrast_step_resolution(self):
        assert edge_decide(160, 200) == 0  # raw 100/140 step: 4 * 40
        assert edge_decide(216, 200) == 1  # enhanced 64/118 step: 4 * 54


class TestSumPlanes:
    def test_definitions_and_bounds(self, rng):
        plane = random_plane(rng, 3, 24)
        planes, _ = compute_sum_planes(plane)
        a = plane.pixels.astype(np.int64)
        assert np.array_equal(planes.ns_r, a[:-1, :] + a[1:, :])
        assert np.array_equal(planes.ns_c, a[:, :-1] + a[:, 1:])
        assert np.array_equal(planes.ps_r, planes.ns_r[:-1, :] + planes.ns_r[1:, :])
        assert np.array_equal(planes.ps_c, planes.ns_c[:, :-1] + planes.ns_c[:, 1:])
        assert planes.ns_r.min() >= 0 and planes.ns_r.max() <= 510
        assert planes.ps_r.min() >= 0 and planes.ps_r.max() <= 1020
        assert planes.id_r.min() >= -1020 and planes.id_r.max() <= 1020
        assert planes.id_c.min() >= -1020 and planes.id_c.max() <= 1020

    def test_interlaced_difference_matches_gradients(self, rng):
        plane = random_plane(rng, 3, 16)
        planes, _ = compute_sum_planes(plane)
        for w in windows_of(plane):
            g = gradient_direct(w)
            i, j = w.row - 1, w.col - 1
            assert abs(int(planes.id_r[i, j])) == abs(g.gx)
            assert abs(int(planes.id_c[i, j])) == abs(g.gy)


class TestPlaneEngines:
    def test_constant_plane(self):
        plane = GrayImage(np.full((8, 8), 200, dtype=np.uint8))
        em, _ = sobel_plane_incremental(plane, 1)
        assert em.count() == 0
        assert sobel_plane_direct(plane, 1).count() == 0

    def test_two_level_plane_edge_columns(self):
        arr = np.zeros((8, 8), dtype=np.uint8)
        arr[:, 4:] = 255
        em = sobel_plane_direct(GrayImage(arr), 400, "l1")
        cols = sorted(set(np.argwhere(em.bits).T[1].tolist()))
        assert cols == [3, 4]
        rows = sorted(set(np.argwhere(em.bits).T[0].tolist()))
        assert rows == list(range(1, 7))

    def test_window_level_cross_check(self, rng):
        plane = random_plane(rng, 3, 12)
        threshold = 150
        em = sobel_plane_direct(plane, threshold, "l1")
        for w in windows_of(plane):
            expected = edge_decide(magnitude(gradient_direct(w), "l1"), threshold)
            assert int(em.bits[w.row, w.col]) == expected

    def test_incremental_equals_direct(self, rng):
        for _ in range(60):
            plane = random_plane(rng, 3, 40)
            threshold = float(rng.integers(0, 900))
            em_i, _ = sobel_plane_incremental(plane, threshold)
            assert em_i == sobel_plane_direct(plane, threshold, "l1")

    def test_l1_edges_superset_of_l2(self, rng):
        plane = random_plane(rng, 8, 40)
        l1 = sobel_plane_direct(plane, 300, "l1")
        l2 = sobel_plane_direct(plane, 300, "l2")
        assert np.all(l1.bits >= l2.bits)

    def test_diagonal_adds_response(self):
        arr = np.zeros((8, 8), dtype=np.uint8)
        arr[np.triu_indices(8, 1)] = 255
        plain = sobel_plane_direct(GrayImage(arr), 400, "l1")
        boosted = sobel_plane_direct(GrayImage(arr), 400, "l1", diagonal=True)
        assert np.all(boosted.bits >= plain.bits)
        assert boosted.count() >= plain.count()

    def test_border_ring_zero(self, rng):
        plane = random_plane(rng, 3, 24)
        em, _ = sobel_plane_incremental(plane, 0)
        assert em.bits[0, :].max() == 0 and em.bits[-1, :].max() == 0
        assert em.bits[:, 0].max() == 0 and em.bits[:, -1].max() == 0
        # threshold 0 marks every interior pixel: only the border is clear
        assert em.bits[1:-1, 1:-1].min() == 1

    def test_too_small(self):
        with pytest.raises(ValueError):
            sobel_plane_direct(GrayImage(np.zeros((2, 3), dtype=np.uint8)), 1)
        with pytest.raises(ValueError):
            sobel_plane_incremental(GrayImage(np.zeros((3, 2), dtype=np.uint8)), 1)


class TestAddCount:
    def test_closed_form(self, rng):
        # one add per new ns/ps/id entry plus one per magnitude combine
        for _ in range(10):
            plane = random_plane(rng, 3, 32)
            w, h = plane.width, plane.height
            _, adds = sobel_plane_incremental(plane, 100)
            assert adds == 7 * w * h - 9 * (w + h) + 12

    def test_64x64_bound(self, rng):
        plane = GrayImage(rng.integers(0, 256, (64, 64), dtype=np.uint8))
        _, adds = sobel_plane_incremental(plane, 400)
        interior = 62 * 62
        assert adds <= 7 * interior + 6 * (64 + 64)
        assert adds / interior <= 7.5


class TestStreamEngine:
    def test_magnitudes_match_direct(self, rng):
        for _ in range(25):
            plane = random_plane(rng, 3, 24)
            eng = IncrementalStreamEngine(plane.width, plane.height)
            for w in windows_of(plane):
                assert eng.magnitude(w) == magnitude(gradient_direct(w), "l1")

    def test_add_count_equals_plane_engine(self, rng):
        # the stream schedule computes each grouped sum exactly once, so its
        # instrumented count coincides with the plane engine's
        for _ in range(10):
            plane = random_plane(rng, 3, 32)
            eng = IncrementalStreamEngine(plane.width, plane.height)
            for w in windows_of(plane):
                eng.magnitude(w)
            _, plane_adds = sobel_plane_incremental(plane, 100)
            assert eng.add_count == plane_adds

    def test_too_small(self):
        with pytest.raises(ValueError):
            IncrementalStreamEngine(2, 8)
