import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mrretinex.colorspace import gray_to_rgb, hsv_to_rgb, rgb_to_hsv


def px(*rgb):
    return np.array([[rgb]], dtype=float)


class TestRgbToHsv:
    def test_pure_red(self):
        np.testing.assert_array_equal(rgb_to_hsv(px(255, 0, 0))[0, 0], [0, 1, 255])

    def test_gray(self):
        h, s, v = rgb_to_hsv(px(128, 128, 128))[0, 0]
        assert (h, s, v) == (0, 0, 128)

    def test_black(self):
        h, s, v = rgb_to_hsv(px(0, 0, 0))[0, 0]
        assert (h, s, v) == (0, 0, 0)

    @pytest.mark.parametrize("rgb, hue", [
        ((0, 255, 0), 120), ((0, 0, 255), 240), ((255, 255, 0), 60),
        ((0, 255, 255), 180), ((255, 0, 255), 300), ((255, 0, 1), 360 - 60 / 255),
    ])
    def test_hues(self, rgb, hue):
        assert rgb_to_hsv(px(*rgb))[0, 0, 0] == pytest.approx(hue)

    def test_value_is_channel_max(self, rng):
        img = rng.integers(0, 256, (32, 32, 3)).astype(float)
        np.testing.assert_array_equal(rgb_to_hsv(img)[..., 2], img.max(axis=2))

    def test_ranges(self, rng):
        hsv = rgb_to_hsv(rng.uniform(0, 255, (64, 64, 3)))
        assert hsv[..., 0].min() >= 0 and hsv[..., 0].max() < 360
        assert hsv[..., 1].min() >= 0 and hsv[..., 1].max() <= 1

    def test_rejects_planes(self):
        with pytest.raises(ValueError):
            rgb_to_hsv(np.zeros((4, 4)))


class TestHsvToRgb:
    def test_primary(self):
        np.testing.assert_allclose(hsv_to_rgb(px(0, 1, 255))[0, 0], [255, 0, 0])

    @pytest.mark.parametrize("h", [0, 45, 123.4, 359.9])
    def test_achromatic_any_hue(self, h):
        np.testing.assert_allclose(hsv_to_rgb(px(h, 0, 77))[0, 0], [77, 77, 77])

    def test_clamped(self):
        out = hsv_to_rgb(px(10, 1, 300))
        assert out.max() == 255

    def test_strided_round_trip(self):
        x = np.arange(0, 256, 17, dtype=float)
        cube = np.stack(np.meshgrid(x, x, x, indexing="ij"), axis=-1).reshape(-1, 1, 3)
        back = hsv_to_rgb(rgb_to_hsv(cube))
        assert np.abs(back - cube).max() <= 1
        # float path is in fact much tighter
        assert np.abs(back - cube).max() < 1e-9

    def test_value_self_replacement_is_noop(self, rng):
        img = rng.integers(0, 256, (16, 16, 3)).astype(float)
        hsv = rgb_to_hsv(img)
        hsv[..., 2] = hsv[..., 2].copy()
        assert np.abs(np.round(hsv_to_rgb(hsv)) - img).max() <= 1


@settings(max_examples=200, deadline=None)
@given(st.tuples(*[st.integers(0, 255)] * 3))
def test_round_trip_property(rgb):
    p = px(*rgb)
    assert np.abs(hsv_to_rgb(rgb_to_hsv(p)) - p).max() <= 1


def test_gray_promotion():
    p = np.arange(6.0).reshape(2, 3)
    rgb = gray_to_rgb(p)
    assert rgb.shape == (2, 3, 3)
    for c in range(3):
        np.testing.assert_array_equal(rgb[..., c], p)
