"""Synthetic MRI-like test images.

Each phantom is a dark, nearly empty background around an elliptical body.
The body carries a low-contrast linear gradient, a fine sinusoidal texture,
a slightly brighter inner structure and mild Gaussian noise. Values are
rounded to 8-bit levels and given a faint colour tint so the RGB/HSV path
is exercised.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np


def phantom(seed: int, size: int = 256, body_noise: float = 1.0, background_noise: float = 0.4) -> np.ndarray:
    """Return one ``(size, size, 3)`` float RGB phantom with integer values."""
    rng = np.random.default_rng(seed)
    y, x = np.mgrid[0:size, 0:size] / size

    cy, cx = rng.uniform(0.42, 0.58, 2)
    ry, rx = rng.uniform(0.25, 0.4, 2)
    body = ((x - cx) / rx) ** 2 + ((y - cy) / ry) ** 2 < 1.0

    base = rng.uniform(40, 90)
    span = rng.uniform(15, 35)
    angle = rng.uniform(0, 2 * np.pi)
    grad = base + span * (np.cos(angle) * (x - cx) + np.sin(angle) * (y - cy))

    period = rng.uniform(3, 6)
    texture = (rng.uniform(3, 6)
               * np.sin(2 * np.pi * x * size / period + rng.uniform(0, 6))
               * np.sin(2 * np.pi * y * size / period))

    iy = cy + rng.uniform(-0.1, 0.1)
    ix = cx + rng.uniform(-0.1, 0.1)
    ir = rng.uniform(0.04, 0.08)
    inner = (x - ix) ** 2 + (y - iy) ** 2 < ir * ir

    tissue = grad + texture + rng.uniform(8, 15) * inner + rng.normal(0, body_noise, grad.shape)
    background = np.abs(rng.normal(0, background_noise, grad.shape))
    plane = np.clip(np.round(np.where(body, tissue, background)), 0, 255)

    tint = rng.uniform(0.85, 1.0, 3)
    return np.round(plane[..., None] * tint)


def corpus(n: int = 20, size: int = 256, seed: int = 0) -> list[np.ndarray]:
    return [phantom(seed + k, size) for k in range(n)]


def write_corpus(directory, n: int = 20, size: int = 256, seed: int = 0, suffix: str = ".ppm") -> list[Path]:
    """Write ``n`` phantoms as ``phantom_XX<suffix>`` files and return their paths."""
    from .imageio import write_image

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for k, img in enumerate(corpus(n, size, seed)):
        p = directory / f"phantom_{k:02d}{suffix}"
        write_image(p, img)
        paths.append(p)
    return paths
