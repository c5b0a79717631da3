"""Self-contained SVG line charts for aligned series pairs.

Each chart shows the term-count series on the left axis and the indicator
on the right axis, with vertical bands shading runs of Democratic years.
Output must be byte-stable across runs: the SVG hash salt is pinned and no
creation date is written.
"""

from __future__ import annotations

import matplotlib

matplotlib.rcParams["svg.hashsalt"] = "crmine"

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .timeseries import AlignedPair

COUNT_COLOR = "#1f77b4"
INDICATOR_COLOR = "#d62728"
BAND_COLOR = "#9ecae1"


def party_bands(rows) -> list[tuple[int, int]]:
    """Merge consecutive Democratic years into (start, end) spans."""
    bands: list[tuple[int, int]] = []
    for year, _, _, party in rows:
        if party != "D":
            continue
        if bands and bands[-1][1] == year - 1:
            bands[-1] = (bands[-1][0], year)
        else:
            bands.append((year, year))
    return bands


def render_pair_svg(pair: AlignedPair, path) -> None:
    years = [row[0] for row in pair.rows]
    counts = [row[1] for row in pair.rows]
    values = [row[2] for row in pair.rows]

    fig = Figure(figsize=(8.0, 4.5), dpi=100)
    FigureCanvasAgg(fig)
    ax_counts = fig.add_subplot(111)
    ax_values = ax_counts.twinx()

    for start, end in party_bands(pair.rows):
        span = ax_counts.axvspan(
            start - 0.5, end + 0.5, color=BAND_COLOR, alpha=0.3, linewidth=0, zorder=0
        )
        span.set_gid(f"party-band-{start}")

    ax_counts.plot(years, counts, color=COUNT_COLOR, linewidth=1.5, label=pair.label_x)
    ax_values.plot(years, values, color=INDICATOR_COLOR, linewidth=1.5, label=pair.label_y)

    ax_counts.set_xlabel("year")
    ax_counts.set_ylabel(pair.label_x, color=COUNT_COLOR)
    ax_values.set_ylabel(pair.label_y, color=INDICATOR_COLOR)
    ax_counts.set_title(f"{pair.label_y} vs {pair.label_x}")
    handles = (
        ax_counts.get_legend_handles_labels()[0]
        + ax_values.get_legend_handles_labels()[0]
    )
    ax_counts.legend(handles=handles, loc="upper left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
