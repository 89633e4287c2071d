"""Zero-aware merge cascade that rebuilds the value plane from five enhanced levels.

Each stage expands the running result by zero insertion and merges it with
the next finer enhanced level. At an inserted position the finer pixel is
kept; elsewhere the two are averaged. ``naive_average`` skips the hole test
and averages everywhere, which darkens every inserted position to half its
value (the black-spot defect of the plain upsample-and-average merge).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .multirate import ScalePyramid, expand_zero_insert

__all__ = ["MergeMode", "MergeStage", "merge_pair", "reconstruct", "reconstruct_stages", "count_black_spots"]


class MergeMode(str, enum.Enum):
    MASK = "mask"
    ZERO_TEST = "zero_test"
    NAIVE_AVERAGE = "naive_average"

    @classmethod
    def parse(cls, value) -> "MergeMode":
        """Accept enum members, values, and the CLI spellings ``zero-test``/``naive``."""
        if isinstance(value, cls):
            return value
        aliases = {"zero-test": cls.ZERO_TEST, "naive": cls.NAIVE_AVERAGE, "naive-average": cls.NAIVE_AVERAGE}
        key = str(value).lower()
        if key in aliases:
            return aliases[key]
        return cls(key)


@dataclass
class MergeStage:
    """Inputs and output of one cascade step, kept for defect accounting."""

    label: str
    lower_expanded: np.ndarray
    holes: np.ndarray
    upper: np.ndarray
    merged: np.ndarray


def merge_pair(lower_expanded, holes, upper, mode=MergeMode.MASK) -> np.ndarray:
    """Merge an expanded coarse plane with the next finer plane.

    With ``mask`` the hole positions come from ``holes``; with ``zero_test`` a
    position is a hole iff ``lower_expanded`` is exactly 0 and ``holes`` is
    ignored; with ``naive_average`` nothing is a hole.
    """
    mode = MergeMode.parse(mode)
    lower = np.asarray(lower_expanded, dtype=np.float64)
    upper = np.asarray(upper, dtype=np.float64)
    if lower.shape != upper.shape:
        raise DimensionMismatch(f"lower {lower.shape} vs upper {upper.shape}")

    avg = (lower + upper) / 2.0
    if mode is MergeMode.NAIVE_AVERAGE:
        return avg
    if mode is MergeMode.ZERO_TEST:
        is_hole = lower == 0.0
    else:
        is_hole = np.asarray(holes, dtype=bool)
        if is_hole.shape != lower.shape:
            raise DimensionMismatch(f"hole mask {is_hole.shape} vs plane {lower.shape}")
    return np.where(is_hole, upper, avg)


def reconstruct_stages(enhanced: ScalePyramid, mode=MergeMode.MASK) -> list[MergeStage]:
    """Run the four-stage cascade and return every stage (unclamped)."""
    mode = MergeMode.parse(mode)
    planes = enhanced.planes
    labels = enhanced.labels
    current = planes[0]
    stages = []
    for label, upper in zip(labels[1:], planes[1:]):
        expanded, holes = expand_zero_insert(current)
        current = merge_pair(expanded, holes, upper, mode)
        stages.append(MergeStage(label, expanded, holes, upper, current))
    return stages


def reconstruct(enhanced: ScalePyramid, mode=MergeMode.MASK) -> np.ndarray:
    """Fuse the five enhanced levels into a normal-size plane clamped to [0, 255]."""
    return np.clip(reconstruct_stages(enhanced, mode)[-1].merged, 0.0, 255.0)


def count_black_spots(stages: list[MergeStage]) -> int:
    """Count hole positions whose merged value is ``upper / 2`` with ``upper > 0``.

    These are the inserted zeros that were averaged into the result instead
    of being replaced by the finer level.
    """
    total = 0
    for st in stages:
        darkened = st.holes & (st.upper > 0) & (st.merged == st.upper / 2.0)
        total += int(np.count_nonzero(darkened))
    return total
