"""Stacked bar chart: three series accumulated per category.

Scale = category count. The direct layer stacks with explicit bottom
offsets, one call per series; the wrapper layer counts long-form
occurrence rows and stacks them in a single call.
"""

from __future__ import annotations

import numpy as np

TITLE = "Stacked"
DEFAULT_SCALE = 4
SEED = 910

SERIES = ("won", "lost", "open")


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    categories = [f"t{i}" for i in range(scale)]
    counts = {
        series: [int(v) for v in rng.integers(2, 10, size=scale)] for series in SERIES
    }
    return {"categories": categories, "series": list(SERIES), "counts": counts}


def build(layer: str = "direct", scale: int | None = None, seed: int | None = None):
    import matplotlib.pyplot as plt

    data = dataset(scale, seed)
    categories = data["categories"]
    fig, ax = plt.subplots()
    if layer == "direct":
        bottom = np.zeros(len(categories))
        for series in data["series"]:
            counts = np.asarray(data["counts"][series], dtype=float)
            ax.bar(categories, counts, bottom=bottom, label=series)
            bottom = bottom + counts
        ax.legend()
    else:
        import seaborn as sns

        # long-form occurrences; the wrapper re-counts them per segment
        xs, hues = [], []
        for series in data["series"]:
            for category, count in zip(categories, data["counts"][series]):
                xs.extend([category] * count)
                hues.extend([series] * count)
        sns.histplot(x=xs, hue=hues, multiple="stack", ax=ax)
    ax.set_xlabel("team")
    ax.set_ylabel("deals")
    ax.set_title("Deal outcomes by team")
    return fig
