"""Operator report: zoom-out aggregates as CSV plus a rendered bar chart."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def write_problems_csv(zoom_out: dict, path: str | Path) -> Path:
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["category", "complaint_count", "upvote_count", "description"])
        for bar in zoom_out["bars"]:
            writer.writerow(
                [bar["name"], bar["complaint_count"], bar["upvote_count"], bar["description"]]
            )
        writer.writerow(["(unassigned)", zoom_out["total_unassigned"], "", ""])
    return path


def render_problems_chart(zoom_out: dict, path: str | Path) -> Path:
    """Horizontal bar chart of complaint counts per category, largest on top."""
    path = Path(path)
    bars = zoom_out["bars"]
    names = [bar["name"] for bar in bars]
    counts = [bar["complaint_count"] for bar in bars]
    upvotes = [bar["upvote_count"] for bar in bars]

    height = max(2.5, 0.6 * len(bars) + 1.5)
    fig, ax = plt.subplots(figsize=(9, height))
    if bars:
        positions = range(len(bars))
        ax.barh(positions, counts, color="#3b6ea5", label="complaints")
        ax.barh(positions, upvotes, height=0.4, color="#e0a437", label="upvotes")
        ax.set_yticks(list(positions))
        ax.set_yticklabels(names)
        ax.invert_yaxis()
        for pos, count in zip(positions, counts):
            ax.annotate(str(count), (count, pos), xytext=(4, 0), textcoords="offset points", va="center")
        ax.legend(loc="lower right")
    else:
        ax.text(0.5, 0.5, "no categorized problems yet", ha="center", va="center", transform=ax.transAxes)
        ax.set_xticks([])
        ax.set_yticks([])
    ax.set_xlabel("complaints")
    ax.set_title(
        f"Problem categories ({zoom_out['total_categorized']} categorized, "
        f"{zoom_out['total_unassigned']} unassigned)"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_report(zoom_out: dict, out_dir: str | Path) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    return [
        write_problems_csv(zoom_out, out_dir / "problems.csv"),
        render_problems_chart(zoom_out, out_dir / "problems.png"),
    ]
