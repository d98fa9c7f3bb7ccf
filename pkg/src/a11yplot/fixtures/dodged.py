"""Dodged (grouped) bar chart: three series per category.

Scale = category count. The wrapper layer draws a true grouped chart in
one call; the direct layer has no grouping argument, so it places one
offset bar call per series.
"""

from __future__ import annotations

import numpy as np

TITLE = "Dodged"
DEFAULT_SCALE = 4
SEED = 405

SERIES = ("north", "south", "west")


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    categories = [f"q{i}" for i in range(scale)]
    values = {
        series: [int(v) for v in rng.integers(5, 95, size=scale)] for series in SERIES
    }
    return {"categories": categories, "series": list(SERIES), "values": values}


def build(layer: str = "direct", scale: int | None = None, seed: int | None = None):
    import matplotlib.pyplot as plt

    data = dataset(scale, seed)
    categories = data["categories"]
    fig, ax = plt.subplots()
    if layer == "direct":
        positions = np.arange(len(categories), dtype=float)
        width = 0.8 / len(data["series"])
        for i, series in enumerate(data["series"]):
            offset = (i - (len(data["series"]) - 1) / 2.0) * width
            ax.bar(positions + offset, data["values"][series], width=width, label=series)
        ax.set_xticks(positions, categories)
        ax.legend()
    else:
        import seaborn as sns

        xs, hues, ys = [], [], []
        for series in data["series"]:
            for category, value in zip(categories, data["values"][series]):
                xs.append(category)
                hues.append(series)
                ys.append(value)
        sns.barplot(x=xs, y=ys, hue=hues, errorbar=None, ax=ax)
    ax.set_xlabel("quarter")
    ax.set_ylabel("sales")
    ax.set_title("Sales by quarter and region")
    return fig
