"""Figures written next to JSON reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .classes import ClassReport  # noqa: E402
from .families import SpectrumReport  # noqa: E402


def _style(ax) -> None:
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    ax.tick_params(labelsize=9)


def spectrum_figure(report: SpectrumReport, path: str | Path) -> Path:
    """Bar chart: number of census graphs per observed K'(G, 3), split by order."""
    path = Path(path)
    orders = sorted({n for _, n, _ in report.rows})
    values = sorted(report.counts)
    fig, ax = plt.subplots(figsize=(6, 3.6))
    x = range(len(values))
    bottom = [0] * len(values)
    cmap = plt.get_cmap("viridis", max(len(orders), 2))
    for i, n in enumerate(orders):
        heights = [sum(1 for _, m, k in report.rows if m == n and k == v) for v in values]
        ax.bar(x, heights, bottom=bottom, color=cmap(i), label=f"n={n}", width=0.7)
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xticks(list(x))
    ax.set_xticklabels([str(v) for v in values])
    ax.set_xlabel("K'(G, 3)")
    ax.set_ylabel("graphs")
    ax.set_title(f"K' spectrum, cubic graphs n <= {report.max_n}", fontsize=10)
    ax.legend(fontsize=8, frameon=False)
    _style(ax)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def class_size_figure(report: ClassReport, path: str | Path) -> Path:
    """Colourings per edge-Kempe class."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(max(3, 0.5 * report.class_count + 2), 3.2))
    ax.bar(range(report.class_count), report.class_sizes, color="#4477aa", width=0.6)
    ax.set_xticks(range(report.class_count))
    ax.set_xlabel("class")
    ax.set_ylabel(f"colourings ({report.method})")
    ax.set_title(f"K' = {report.class_count}", fontsize=10)
    _style(ax)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
