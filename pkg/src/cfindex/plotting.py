"""Figures for benchmark reports."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_scaling(sizes: Sequence[int], seconds: Sequence[float], path: str) -> None:
    """Log-log time against n, with ns/vertex on a second axis."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    ax1.loglog(sizes, seconds, "o-", label="measured")
    if sizes:
        ref = [seconds[0] * n / sizes[0] for n in sizes]
        ax1.loglog(sizes, ref, "--", color="grey", label="linear reference")
    ax1.set_xlabel("vertices")
    ax1.set_ylabel("seconds")
    ax1.legend()
    ax2.semilogx(sizes, [1e9 * s / n for n, s in zip(sizes, seconds)], "s-")
    ax2.set_xlabel("vertices")
    ax2.set_ylabel("ns / vertex")
    ax2.set_ylim(bottom=0)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
