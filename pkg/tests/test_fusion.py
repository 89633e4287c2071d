import numpy as np
import pytest

from mrretinex.errors import DimensionMismatch
from mrretinex.fusion import MergeMode, count_black_spots, merge_pair, reconstruct, reconstruct_stages
from mrretinex.multirate import LEVEL_LABELS, ScalePyramid, expand_zero_insert


def pyramid(planes):
    return ScalePyramid(list(zip(LEVEL_LABELS, planes)))


def random_pyramid(rng, base=4, low=1.0, high=255.0):
    return pyramid([rng.uniform(low, high, (base * 2 ** k, base * 2 ** k)) for k in range(5)])


class TestMergePair:
    def test_hole_keeps_upper(self):
        out = merge_pair([[0.0]], [[True]], [[73.0]], "mask")
        assert out[0, 0] == 73

    def test_non_hole_averages(self):
        out = merge_pair([[100.0]], [[False]], [[50.0]], "mask")
        assert out[0, 0] == 75

    def test_naive_darkens_holes(self):
        out = merge_pair([[0.0]], [[True]], [[200.0]], "naive_average")
        assert out[0, 0] == 100

    def test_zero_test_uses_values(self):
        lower = np.array([[0.0, 10.0]])
        out = merge_pair(lower, [[False, True]], [[40.0, 40.0]], MergeMode.ZERO_TEST)
        np.testing.assert_array_equal(out, [[40.0, 25.0]])

    def test_mismatch(self):
        with pytest.raises(DimensionMismatch):
            merge_pair(np.zeros((2, 2)), np.zeros((2, 2), bool), np.zeros((4, 4)))
        with pytest.raises(DimensionMismatch):
            merge_pair(np.zeros((2, 2)), np.zeros((3, 3), bool), np.zeros((2, 2)))

    @pytest.mark.parametrize("text, mode", [
        ("mask", MergeMode.MASK), ("zero-test", MergeMode.ZERO_TEST), ("zero_test", MergeMode.ZERO_TEST),
        ("naive", MergeMode.NAIVE_AVERAGE), ("naive_average", MergeMode.NAIVE_AVERAGE),
    ])
    def test_parse(self, text, mode):
        assert MergeMode.parse(text) is mode

    def test_hole_dominance(self, rng):
        lower, holes = expand_zero_insert(rng.uniform(0, 255, (8, 8)))
        upper = rng.uniform(0, 255, (16, 16))
        out = merge_pair(lower, holes, upper)
        assert np.array_equal(out[holes], upper[holes])
        np.testing.assert_array_equal(out[~holes], (lower[~holes] + upper[~holes]) / 2)


class TestReconstruct:
    def test_constant_levels(self):
        out = reconstruct(pyramid([np.full((2 ** k, 2 ** k), 42.0) for k in range(1, 6)]))
        assert out.shape == (32, 32)
        assert np.all(out == 42.0)

    def test_small_stage_odd_positions(self, rng):
        pyr = random_pyramid(rng)
        first = reconstruct_stages(pyr)[0]
        small = pyr["small"]
        np.testing.assert_array_equal(first.merged[first.holes], small[first.holes])
        np.testing.assert_array_equal(first.merged[1::2, :], small[1::2, :])

    def test_cascade_matches_manual(self, rng):
        pyr = random_pyramid(rng)
        cur = pyr["tiny"]
        for label in LEVEL_LABELS[1:]:
            up = np.zeros((2 * cur.shape[0],) * 2)
            up[::2, ::2] = cur
            nxt = (up + pyr[label]) / 2
            nxt[1::2, :] = pyr[label][1::2, :]
            nxt[:, 1::2] = pyr[label][:, 1::2]
            cur = nxt
        np.testing.assert_array_equal(reconstruct(pyr), cur)

    def test_modes_agree_without_zeros(self, rng):
        for _ in range(5):
            pyr = random_pyramid(rng)
            assert np.array_equal(reconstruct(pyr, "mask"), reconstruct(pyr, "zero_test"))

    def test_modes_differ_with_genuine_zero(self, rng):
        planes = random_pyramid(rng).planes
        planes[0][0, 0] = 0.0
        pyr = pyramid(planes)
        assert not np.array_equal(reconstruct(pyr, "mask"), reconstruct(pyr, "zero_test"))

    def test_bounds(self, rng):
        out = reconstruct(random_pyramid(rng, low=0, high=255))
        assert out.min() >= 0 and out.max() <= 255

    def test_naive_defect(self, rng):
        pyr = random_pyramid(rng)
        stages_naive = reconstruct_stages(pyr, "naive_average")
        stages_mask = reconstruct_stages(pyr, "mask")
        for sn, sm in zip(stages_naive, stages_mask):
            h = sn.holes
            np.testing.assert_array_equal(sn.merged[h], sn.upper[h] / 2)
            assert np.all(sn.merged[h] < sm.merged[h])
        assert count_black_spots(stages_mask) == 0
        # 3/4 of each stage is holes: 3*(8^2+16^2+32^2+64^2)/4
        assert count_black_spots(stages_naive) == 3 * (64 + 256 + 1024 + 4096) // 4

    def test_both_zero_gives_zero(self):
        for mode in MergeMode:
            assert merge_pair([[0.0]], [[True]], [[0.0]], mode)[0, 0] == 0
