import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import ndimage

import oracles
from mrretinex.errors import DimensionMismatch, OddDimensions, UnknownFamily, ZeroEnergyPlane
from mrretinex.wavelet import FAMILIES, assess, dwt2, filter_bank, idwt2, wavelet_energy

FAMS = sorted(FAMILIES)


class TestFilters:
    @pytest.mark.parametrize("family", FAMS)
    def test_orthonormal(self, family):
        h, g = filter_bank(family)
        assert h.sum() == pytest.approx(np.sqrt(2))
        assert np.dot(h, h) == pytest.approx(1)
        assert np.dot(g, g) == pytest.approx(1)
        assert np.dot(h, g) == pytest.approx(0, abs=1e-15)
        assert g.sum() == pytest.approx(0, abs=1e-15)

    def test_db2_has_two_vanishing_moments(self):
        _, g = filter_bank("db2")
        assert np.dot(np.arange(4), g) == pytest.approx(0, abs=1e-14)

    def test_unknown(self):
        with pytest.raises(UnknownFamily):
            filter_bank("sym8")


class TestDwt2:
    def test_haar_constant(self):
        b = dwt2(np.full((6, 4), 3.0), "haar")
        np.testing.assert_allclose(b.ll, 6.0)
        for band in (b.lh, b.hl, b.hh):
            np.testing.assert_allclose(band, 0.0, atol=1e-14)

    def test_db2_constant_has_no_detail(self):
        b = dwt2(np.full((8, 8), 5.0), "db2")
        np.testing.assert_allclose(b.ll, 10.0)
        for band in (b.lh, b.hl, b.hh):
            np.testing.assert_allclose(band, 0.0, atol=1e-12)

    def test_haar_matches_block_oracle(self, rng):
        p = rng.random((8, 6))
        b = dwt2(p, "haar")
        for got, want in zip((b.ll, b.lh, b.hl, b.hh), oracles.haar2(p)):
            np.testing.assert_allclose(got, want, atol=1e-14)

    def test_lh_sees_horizontal_edges(self):
        p = np.zeros((8, 8))
        p[3:, :] = 1.0
        b = dwt2(p, "haar")
        assert np.abs(b.lh).sum() > 0
        np.testing.assert_allclose(b.hl, 0, atol=1e-14)

    @pytest.mark.parametrize("family", FAMS)
    @pytest.mark.parametrize("side", [4, 8, 16, 32])
    def test_perfect_reconstruction(self, rng, family, side):
        p = rng.normal(size=(side, side))
        assert np.abs(idwt2(dwt2(p, family), family) - p).max() < 1e-9

    @pytest.mark.parametrize("family", FAMS)
    def test_parseval(self, rng, family):
        p = rng.normal(size=(16, 12))
        assert sum(dwt2(p, family).energies()) == pytest.approx(np.sum(p * p), abs=1e-9)

    def test_quadrant_shape(self, rng):
        b = dwt2(rng.random((10, 14)))
        assert all(x.shape == (5, 7) for x in (b.ll, b.lh, b.hl, b.hh))

    def test_odd(self):
        with pytest.raises(OddDimensions):
            dwt2(np.zeros((5, 4)))


class TestWaveletEnergy:
    def test_constant(self):
        r = wavelet_energy(np.full((8, 8), 9.0))
        assert r.awe == pytest.approx(100) and r.dwe == pytest.approx(0, abs=1e-12)

    def test_checkerboard(self):
        i, j = np.indices((4, 4))
        board = np.where((i + j) % 2, 1.0, -1.0)
        ll, lh, hl, hh = oracles.haar2(board)
        want = 100 * (np.sum(lh**2) + np.sum(hl**2) + np.sum(hh**2)) / np.sum(board**2)
        r = wavelet_energy(board, "haar")
        assert r.dwe == pytest.approx(want)
        assert r.dwe > 90

    def test_zero_plane(self):
        with pytest.raises(ZeroEnergyPlane):
            wavelet_energy(np.zeros((4, 4)))

    @pytest.mark.parametrize("family", FAMS)
    def test_partition(self, rng, family):
        for _ in range(10):
            n = 2 * rng.integers(2, 40)
            r = wavelet_energy(rng.uniform(0, 255, (n, n)), family)
            assert abs(r.awe + r.dwe - 100) < 1e-6
            assert r.awe >= 0 and r.dwe >= 0


@settings(max_examples=40, deadline=None)
@given(st.floats(-1e3, 1e3).filter(lambda a: abs(a) > 1e-3), st.integers(0, 2**31), st.sampled_from(FAMS))
def test_scale_invariance(alpha, seed, family):
    p = np.random.default_rng(seed).uniform(0, 255, (8, 8))
    a, b = wavelet_energy(p, family), wavelet_energy(alpha * p, family)
    assert a.awe == pytest.approx(b.awe, abs=1e-9)


class TestAssess:
    def test_identity(self, rng):
        p = rng.random((8, 8))
        v = assess(p, p)
        assert not v.detail_improved and not v.global_improved

    @pytest.mark.parametrize("family", FAMS)
    def test_blurred_original(self, rng, family):
        for _ in range(10):
            enhanced = rng.uniform(0, 255, (32, 32))
            original = ndimage.gaussian_filter(enhanced, 1.0, mode="wrap")
            assert assess(original, enhanced, family).detail_improved

    def test_constant_original(self, rng):
        v = assess(np.full((8, 8), 50.0), rng.uniform(0, 255, (8, 8)))
        assert v.detail_improved and not v.global_improved

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            assess(np.ones((4, 4)), np.ones((8, 8)))
