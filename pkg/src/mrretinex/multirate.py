"""Five-level decimation pyramid and the zero-insertion expander."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import IndivisibleDimensions, NonSquareOrIndivisible

LEVEL_LABELS = ("tiny", "small", "medium", "fine", "normal")
# decimation factor of each level relative to the input
LEVEL_FACTORS = (16, 8, 4, 2, 1)

__all__ = [
    "LEVEL_LABELS",
    "LEVEL_FACTORS",
    "ScalePyramid",
    "decimate",
    "expand_zero_insert",
    "build_pyramid",
]


@dataclass
class ScalePyramid:
    """Five labelled planes ordered coarsest (tiny) to finest (normal).

    ``holes`` optionally carries, per level, the boolean mask of positions
    that were zero-inserted when the next-coarser level was expanded.
    """

    levels: list[tuple[str, np.ndarray]]
    holes: dict[str, Optional[np.ndarray]] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.levels) != len(LEVEL_LABELS):
            raise ValueError(f"a pyramid has exactly {len(LEVEL_LABELS)} levels")
        sides = [p.shape[0] for _, p in self.levels]
        for (label, p), expected in zip(self.levels, LEVEL_LABELS):
            if label != expected:
                raise ValueError(f"level {label!r} out of order, expected {expected!r}")
            if p.ndim != 2 or p.shape[0] != p.shape[1]:
                raise NonSquareOrIndivisible(f"level {label!r} is not square: {p.shape}")
        for lo, hi in zip(sides, sides[1:]):
            if hi != 2 * lo:
                raise ValueError(f"level sides must double: {sides}")

    def __getitem__(self, label: str) -> np.ndarray:
        for name, plane in self.levels:
            if name == label:
                return plane
        raise KeyError(label)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.levels)

    @property
    def planes(self) -> list[np.ndarray]:
        return [p for _, p in self.levels]

    def map(self, fn) -> "ScalePyramid":
        """Return a new pyramid with ``fn`` applied to each plane."""
        return ScalePyramid([(name, fn(p)) for name, p in self.levels], dict(self.holes))


def decimate(p, factor: int, method: str = "mean") -> np.ndarray:
    """Downsample a plane by an integer factor.

    Args:
        p: 2-D plane.
        factor: positive integer dividing both sides.
        method: ``"mean"`` averages each ``factor x factor`` block;
            ``"nearest"`` keeps the top-left sample of each block.

    Raises:
        IndivisibleDimensions: if a side is not a multiple of ``factor``.
    """
    p = np.asarray(p, dtype=np.float64)
    if int(factor) != factor or factor < 1:
        raise ValueError(f"factor must be a positive integer, got {factor!r}")
    factor = int(factor)
    rows, cols = p.shape
    if rows % factor or cols % factor:
        raise IndivisibleDimensions(f"shape {p.shape} not divisible by {factor}")
    if factor == 1:
        return p.copy()
    if method == "mean":
        return p.reshape(rows // factor, factor, cols // factor, factor).mean(axis=(1, 3))
    if method == "nearest":
        return p[::factor, ::factor].copy()
    raise ValueError(f"unknown decimation method {method!r}")


def expand_zero_insert(p) -> tuple[np.ndarray, np.ndarray]:
    """Upsample by 2 with zero insertion.

    Returns the expanded plane, with the input samples at even (row, col)
    positions and exact zeros elsewhere, and the boolean hole mask that is
    True at every inserted position.
    """
    p = np.asarray(p, dtype=np.float64)
    rows, cols = p.shape
    out = np.zeros((2 * rows, 2 * cols), dtype=np.float64)
    out[::2, ::2] = p
    holes = np.ones(out.shape, dtype=bool)
    holes[::2, ::2] = False
    return out, holes


def build_pyramid(v, method: str = "mean") -> ScalePyramid:
    """Decimate a square plane into the tiny/small/medium/fine/normal levels.

    Every level is taken directly from the input; under block-mean
    decimation that equals cascading 2x steps.
    """
    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 2 or v.shape[0] != v.shape[1] or v.shape[0] % 16:
        raise NonSquareOrIndivisible(
            f"pyramid input must be square with side divisible by 16, got {v.shape}"
        )
    levels = [(label, decimate(v, f, method)) for label, f in zip(LEVEL_LABELS, LEVEL_FACTORS)]
    return ScalePyramid(levels)
