"""Read and write 8-bit PGM/PPM (P5/P6), PNG and TIFF rasters."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image

from .colorspace import gray_to_rgb

SUPPORTED_SUFFIXES = (".pgm", ".ppm", ".pnm", ".png", ".tif", ".tiff")

__all__ = ["SUPPORTED_SUFFIXES", "LoadedImage", "read_image", "write_image", "is_supported"]


@dataclass
class LoadedImage:
    rgb: np.ndarray
    format: str
    grayscale: bool


def is_supported(path) -> bool:
    return Path(path).suffix.lower() in SUPPORTED_SUFFIXES


def read_image(path) -> LoadedImage:
    """Load an image as a float64 RGB array in [0, 255].

    Grayscale files are promoted to RGB by channel replication; the
    ``grayscale`` flag remembers that so the result can be written back in
    the same container.
    """
    path = Path(path)
    with Image.open(path) as im:
        fmt = im.format or "PNG"
        if im.mode in ("L", "1"):
            plane = np.asarray(im.convert("L"), dtype=np.float64)
            return LoadedImage(gray_to_rgb(plane), fmt, True)
        if im.mode in ("I;16", "I;16B", "I"):
            raise OSError(f"{path}: only 8-bit images are supported (mode {im.mode})")
        rgb = np.asarray(im.convert("RGB"), dtype=np.float64)
    return LoadedImage(rgb, fmt, False)


def to_uint8(rgb) -> np.ndarray:
    return np.clip(np.floor(np.asarray(rgb, dtype=np.float64) + 0.5), 0, 255).astype(np.uint8)


def write_image(path, rgb, grayscale: bool = False, format: str | None = None) -> None:
    """Write a float RGB array, rounding to 8 bits.

    With ``grayscale`` the first channel is written as a single-channel
    image (P5 for PGM/PNM containers).
    """
    path = Path(path)
    data = to_uint8(rgb)
    if grayscale:
        im = Image.fromarray(data[..., 0], mode="L")
    else:
        im = Image.fromarray(data, mode="RGB")
        if path.suffix.lower() == ".pgm":
            im = im.convert("L")
    path.parent.mkdir(parents=True, exist_ok=True)
    if format is not None and path.suffix.lower() not in SUPPORTED_SUFFIXES:
        im.save(path, format=format)
    else:
        im.save(path)
