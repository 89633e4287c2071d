"""RGB <-> HSV conversion (hexcone model).

Images are float arrays of shape ``(rows, cols, 3)``. RGB channels live in
[0, 255]. HSV images stack hue in degrees [0, 360), saturation in [0, 1] and
value in [0, 255], so the value plane can be fed straight into the
enhancement routines that assume an 8-bit display range.
"""
import numpy as np

__all__ = ["rgb_to_hsv", "hsv_to_rgb", "as_rgb", "gray_to_rgb"]


def as_rgb(img) -> np.ndarray:
    """Validate and return ``img`` as a float64 ``(rows, cols, 3)`` array."""
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError(f"expected an (rows, cols, 3) image, got shape {arr.shape}")
    return arr


def gray_to_rgb(plane) -> np.ndarray:
    """Promote a grayscale plane to RGB by channel replication."""
    p = np.asarray(plane, dtype=np.float64)
    return np.repeat(p[:, :, None], 3, axis=2)


def rgb_to_hsv(img) -> np.ndarray:
    """Convert an RGB image in [0, 255] to hexcone HSV.

    ``V`` is exactly ``max(R, G, B)``. Saturation is 0 wherever ``V`` is 0 and
    hue is 0 wherever the pixel is achromatic.
    """
    rgb = as_rgb(img)
    r, g, b = rgb[..., 0], rgb[..., 1], rgb[..., 2]
    v = rgb.max(axis=2)
    c = v - rgb.min(axis=2)

    s = np.zeros_like(v)
    np.divide(c, v, out=s, where=v > 0)

    chroma = c > 0
    safe_c = np.where(chroma, c, 1.0)
    h = np.zeros_like(v)
    # Branch order matters when two channels tie for the max.
    r_max = chroma & (v == r)
    g_max = chroma & ~r_max & (v == g)
    b_max = chroma & ~r_max & ~g_max
    h = np.where(r_max, np.mod((g - b) / safe_c, 6.0), h)
    h = np.where(g_max, (b - r) / safe_c + 2.0, h)
    h = np.where(b_max, (r - g) / safe_c + 4.0, h)
    h = h * 60.0
    h[h >= 360.0] -= 360.0

    return np.stack([h, s, v], axis=2)


def hsv_to_rgb(img) -> np.ndarray:
    """Inverse hexcone mapping; the result is clamped to [0, 255]."""
    hsv = np.asarray(img, dtype=np.float64)
    if hsv.ndim != 3 or hsv.shape[2] != 3:
        raise ValueError(f"expected an (rows, cols, 3) image, got shape {hsv.shape}")
    h, s, v = hsv[..., 0], hsv[..., 1], hsv[..., 2]

    c = v * s
    hp = np.mod(h, 360.0) / 60.0
    x = c * (1.0 - np.abs(np.mod(hp, 2.0) - 1.0))
    m = v - c
    sector = np.floor(hp).astype(int) % 6

    zero = np.zeros_like(c)
    # (r, g, b) before adding m, per sextant
    table = [
        (c, x, zero),
        (x, c, zero),
        (zero, c, x),
        (zero, x, c),
        (x, zero, c),
        (c, zero, x),
    ]
    rgb = np.empty(hsv.shape, dtype=np.float64)
    for ch in range(3):
        rgb[..., ch] = np.select([sector == k for k in range(6)], [t[ch] for t in table]) + m
    return np.clip(rgb, 0.0, 255.0)
