"""Figure rendering for the report path.

Imported only when a plot is requested, so the library core stays free
of matplotlib at runtime.  PNG output is byte-stable: fixed dpi, no
Software tag, no timestamps.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_series_plot(
    path: str,
    xs,
    series: dict[str, list[float]],
    xlabel: str,
    ylabel: str,
    title: str,
    logx: bool = False,
    logy: bool = False,
) -> None:
    """One figure, one x-axis, one line per named series."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for label, ys in series.items():
        ax.plot(xs, ys, marker="o", markersize=3, linewidth=1.2, label=label)
    if logx:
        ax.set_xscale("log")
    if logy:
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    if len(series) > 1:
        ax.legend()
    fig.tight_layout()
    metadata = {"Software": None} if path.lower().endswith(".png") else None
    fig.savefig(path, dpi=150, metadata=metadata)
    plt.close(fig)
