"""Figures written next to benchmark reports and enhanced images."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

METHOD_ORDER = ("original", "he", "msr", "chao", "proposed")


def plot_wavelet_energy(report, path):
    """Grouped AWE and DWE bars per image, one bar per method."""
    images = list(dict.fromkeys(r.image_id for r in report.rows))
    present = {r.method for r in report.rows}
    methods = [m for m in METHOD_ORDER if m in present]
    lookup = {(r.image_id, r.method): r for r in report.rows}

    fig, axes = plt.subplots(1, 2, figsize=(11, 4))
    x = np.arange(len(images))
    width = 0.8 / max(len(methods), 1)
    for ax, attr, title in ((axes[0], "awe", "Approximate wavelet energy"),
                            (axes[1], "dwe", "Detailed wavelet energy")):
        for k, m in enumerate(methods):
            vals = [getattr(lookup[(i, m)], attr) if (i, m) in lookup else np.nan for i in images]
            ax.bar(x + (k - (len(methods) - 1) / 2) * width, vals, width, label=m)
        ax.set_xticks(x)
        ax.set_xticklabels(images, rotation=45, ha="right", fontsize=8)
        ax.set_ylabel(f"{attr.upper()} (%)")
        ax.set_title(title)
        if attr == "awe" and report.rows:
            lo = min(r.awe for r in report.rows)
            ax.set_ylim(max(0.0, lo - 1.0), 100.0)
    axes[1].legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(Path(path), dpi=120)
    plt.close(fig)
    return Path(path)


def plot_enhancement(original_rgb, result, path, title=""):
    """Original image, its value plane and the enhanced value plane side by side."""
    fig, axes = plt.subplots(1, 3, figsize=(10, 3.6))
    axes[0].imshow(np.clip(original_rgb, 0, 255).astype(np.uint8))
    axes[0].set_title("original")
    axes[1].imshow(result.hsv_in[..., 2], cmap="gray", vmin=0, vmax=255)
    axes[1].set_title("value plane")
    axes[2].imshow(result.hsv_out[..., 2], cmap="gray", vmin=0, vmax=255)
    axes[2].set_title("enhanced value plane")
    for ax in axes:
        ax.axis("off")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(Path(path), dpi=120)
    plt.close(fig)
    return Path(path)
