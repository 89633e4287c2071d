"""Contrast stretching, Gaussian surround kernels, SSR and MSR on a value plane.

Surround kernels span the whole plane (a 256x256 level gets a 256x256
kernel), so convolution goes through the frequency domain by default. A
direct spatial path is kept as the reference it is checked against.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import signal

from .errors import GeometryError, InvalidSigma

log = logging.getLogger(__name__)

DEFAULT_SIGMA_RATIOS = (0.06, 0.31, 0.98)
DEFAULT_WEIGHTS = (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)

__all__ = [
    "EnhanceConfig",
    "GaussianKernelSet",
    "contrast_stretch",
    "gaussian_kernel",
    "kernel_set",
    "convolve_reflect",
    "ssr",
    "msr",
    "normalize_msr",
    "enhance_level",
]


@dataclass(frozen=True)
class EnhanceConfig:
    """Parameters of the per-level enhancement.

    Attributes:
        d_max: display maximum that stretched planes are mapped onto.
        weights: MSR weight per surround scale; must sum to 1.
        sigma_ratios: surround sigma of each scale as a fraction of the level side.
        log_offset: added inside both logarithms of SSR so zeros stay finite.
        convolution: ``"fft"`` or ``"direct"``.
    """

    d_max: float = 255.0
    weights: tuple[float, float, float] = DEFAULT_WEIGHTS
    sigma_ratios: tuple[float, float, float] = DEFAULT_SIGMA_RATIOS
    log_offset: float = 1.0
    convolution: str = "fft"

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        object.__setattr__(self, "sigma_ratios", tuple(float(r) for r in self.sigma_ratios))
        if len(self.weights) != 3 or len(self.sigma_ratios) != 3:
            raise ValueError("exactly three weights and three sigma ratios are required")
        if any(w < 0 for w in self.weights) or abs(sum(self.weights) - 1.0) > 1e-12:
            raise ValueError(f"weights must be nonnegative and sum to 1, got {self.weights}")
        r = self.sigma_ratios
        if not (0 < r[0] < r[1] < r[2]):
            raise ValueError(f"sigma ratios must be positive and strictly increasing, got {r}")
        if self.log_offset <= 0:
            raise ValueError("log_offset must be positive")
        if self.d_max <= 0:
            raise ValueError("d_max must be positive")
        if self.convolution not in ("fft", "direct"):
            raise ValueError(f"unknown convolution path {self.convolution!r}")


@dataclass(frozen=True)
class GaussianKernelSet:
    size: int
    sigmas: tuple[float, float, float]
    kernels: tuple[np.ndarray, np.ndarray, np.ndarray]


def contrast_stretch(p, d_max: float = 255.0) -> np.ndarray:
    """Linearly map ``[min(p), max(p)]`` onto ``[0, d_max]``.

    A constant plane has no range to stretch and maps to all zeros.
    """
    p = np.asarray(p, dtype=np.float64)
    if p.size == 0:
        raise ValueError("cannot stretch an empty plane")
    lo, hi = p.min(), p.max()
    if hi == lo:
        log.warning("constant plane (value %g) stretched to zeros", lo)
        return np.zeros_like(p)
    if lo == 0 and hi == d_max:
        return p.copy()
    out = d_max * (p - lo) / (hi - lo)
    # pin the endpoints so min -> 0 and max -> d_max exactly
    out[p == lo] = 0.0
    out[p == hi] = d_max
    return out


def gaussian_kernel(size: int, sigma: float) -> np.ndarray:
    """Unit-sum Gaussian surround of shape ``(size, size)``.

    Samples sit on the grid ``i - (size - 1) / 2``, half-integer for even
    sizes, so the kernel is exactly mirror symmetric about both axes and the
    diagonal.
    """
    if sigma <= 0 or not np.isfinite(sigma):
        raise InvalidSigma(f"sigma must be positive and finite, got {sigma!r}")
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size!r}")
    x = np.arange(size, dtype=np.float64) - (size - 1) / 2.0
    r2 = x[:, None] ** 2 + x[None, :] ** 2
    g = np.exp(-r2 / (2.0 * sigma * sigma))
    return g / g.sum()


@lru_cache(maxsize=32)
def _cached_kernel_set(size: int, sigma_ratios: tuple[float, float, float]) -> GaussianKernelSet:
    sigmas = tuple(r * size for r in sigma_ratios)
    kernels = tuple(gaussian_kernel(size, s) for s in sigmas)
    for k in kernels:
        k.setflags(write=False)
    return GaussianKernelSet(size, sigmas, kernels)


def kernel_set(size: int, cfg: EnhanceConfig | None = None) -> GaussianKernelSet:
    """The three surround kernels for a level of side ``size`` (cached, read-only)."""
    cfg = cfg or EnhanceConfig()
    return _cached_kernel_set(int(size), cfg.sigma_ratios)


def _pad_reflect(v: np.ndarray, kshape: tuple[int, int]) -> np.ndarray:
    kr, kc = kshape
    pads = ((kr // 2, kr - 1 - kr // 2), (kc // 2, kc - 1 - kc // 2))
    return np.pad(v, pads, mode="symmetric")


def convolve_reflect(v, g, method: str = "fft") -> np.ndarray:
    """Filter ``v`` with kernel ``g`` under mirror-boundary extension.

    Output has the shape of ``v``; ``out[i, j] = sum_ab g[a, b] *
    ext[i + a - kr//2, j + b - kc//2]`` where ``ext`` is ``v`` extended by
    half-sample symmetric reflection. For the symmetric surround kernels this
    is the same as convolution.
    """
    v = np.asarray(v, dtype=np.float64)
    g = np.asarray(g, dtype=np.float64)
    padded = _pad_reflect(v, g.shape)
    if method == "fft":
        return signal.fftconvolve(padded, g[::-1, ::-1], mode="valid")
    if method == "direct":
        rows, cols = v.shape
        out = np.zeros_like(v)
        scratch = np.empty_like(v)
        for a in range(g.shape[0]):
            for b in range(g.shape[1]):
                w = g[a, b]
                if w != 0.0:
                    np.multiply(padded[a:a + rows, b:b + cols], w, out=scratch)
                    out += scratch
        return out
    raise ValueError(f"unknown convolution method {method!r}")


def ssr(v, g, log_offset: float = 1.0, method: str = "fft") -> np.ndarray:
    """Single-scale retinex: ``log2(v + off) - log2(g * v + off)``."""
    v = np.asarray(v, dtype=np.float64)
    surround = convolve_reflect(v, g, method)
    # FFT round-off can leave tiny negatives where the surround is zero
    np.maximum(surround, 0.0, out=surround)
    return np.log2(v + log_offset) - np.log2(surround + log_offset)


def msr(v, ks: GaussianKernelSet, cfg: EnhanceConfig | None = None) -> np.ndarray:
    """Weighted sum of the SSR outputs over the three surround kernels."""
    cfg = cfg or EnhanceConfig()
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (ks.size, ks.size):
        raise GeometryError(f"kernel size {ks.size} does not match plane shape {v.shape}")
    out = np.zeros_like(v)
    for w, g in zip(cfg.weights, ks.kernels):
        out += w * ssr(v, g, cfg.log_offset, cfg.convolution)
    return out


def normalize_msr(r, d_max: float = 255.0) -> np.ndarray:
    """Map a signed MSR plane onto ``[0, d_max]`` by min-max stretching."""
    return contrast_stretch(r, d_max)


def enhance_level(v, cfg: EnhanceConfig | None = None) -> np.ndarray:
    """Contrast stretch, MSR and renormalize one square pyramid level."""
    cfg = cfg or EnhanceConfig()
    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 2 or v.shape[0] != v.shape[1]:
        raise GeometryError(f"enhance_level needs a square plane, got {v.shape}")
    stretched = contrast_stretch(v, cfg.d_max)
    ks = kernel_set(v.shape[0], cfg)
    return normalize_msr(msr(stretched, ks, cfg), cfg.d_max)
