"""Reference enhancers: global histogram equalization and full-resolution MSR."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .colorspace import hsv_to_rgb, rgb_to_hsv
from .retinex import EnhanceConfig, enhance_level

__all__ = ["Histogram", "histogram", "histogram_equalize", "plain_msr_hsv", "plain_msr_enhance"]


@dataclass
class Histogram:
    bins: np.ndarray
    total: int


def _quantize(p) -> np.ndarray:
    p = np.asarray(p, dtype=np.float64)
    return np.clip(np.floor(p + 0.5), 0, 255).astype(np.int64)


def histogram(p) -> Histogram:
    """256-bin histogram of a plane after rounding to integer levels."""
    q = _quantize(p)
    bins = np.bincount(q.ravel(), minlength=256)
    return Histogram(bins=bins, total=int(q.size))


def histogram_equalize(p) -> np.ndarray:
    """Global histogram equalization: ``out = round(255 * CDF(in))``.

    The CDF is the plain cumulative fraction of pixels (no minimum-CDF
    rescaling), and rounding is half-up. A constant plane therefore maps to
    255, and a half-black/half-white plane maps 0 -> 128, 255 -> 255.
    """
    q = _quantize(p)
    hist = histogram(q)
    cdf = np.cumsum(hist.bins) / hist.total
    lut = np.floor(255.0 * cdf + 0.5)
    return lut[q]


def plain_msr_hsv(hsv, cfg: EnhanceConfig | None = None) -> np.ndarray:
    out = np.array(hsv, dtype=np.float64, copy=True)
    out[..., 2] = enhance_level(out[..., 2], cfg)
    return out


def plain_msr_enhance(img, cfg: EnhanceConfig | None = None) -> np.ndarray:
    """MSR on the full-resolution value plane, no pyramid and no fusion."""
    return hsv_to_rgb(plain_msr_hsv(rgb_to_hsv(img), cfg))
