"""Figures for campaign reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .verify import CampaignReport  # noqa: E402

STATUS_COLORS = {"pass": "#4c72b0", "vacuous_thin": "#bbbbbb", "counterexample": "#c44e52"}


def plot_verdicts(report: CampaignReport, path: str | Path) -> Path:
    """Stacked bars of verdict counts against boundary length."""
    path = Path(path)
    rows = sorted(report.by_boundary_length.items())
    xs = [n for n, _ in rows]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    bottom = [0] * len(xs)
    for status, color in STATUS_COLORS.items():
        ys = [row[status] for _, row in rows]
        ax.bar(xs, ys, bottom=bottom, color=color, label=status.replace("_", " "), width=0.8)
        bottom = [b + y for b, y in zip(bottom, ys)]
    ax.set_xlabel("boundary length")
    ax.set_ylabel("decompositions")
    ax.set_title(f"{report.theorem}: {report.maps_in_class} maps, "
                 f"{report.decompositions_tested} decompositions", fontsize=10)
    if xs:
        ax.set_xticks(xs)
    ax.spines[["top", "right"]].set_visible(False)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
