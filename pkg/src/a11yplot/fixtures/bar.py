"""Plain bar chart: one integer value per category. Scale = category count."""

from __future__ import annotations

import numpy as np

TITLE = "Bar"
DEFAULT_SCALE = 6
SEED = 101


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    return {
        "categories": [f"c{i}" for i in range(scale)],
        "values": [int(v) for v in rng.integers(1, 100, size=scale)],
    }


def build(layer: str = "direct", scale: int | None = None, seed: int | None = None):
    import matplotlib.pyplot as plt

    data = dataset(scale, seed)
    fig, ax = plt.subplots()
    if layer == "direct":
        ax.bar(data["categories"], data["values"])
    else:
        import seaborn as sns

        sns.barplot(x=data["categories"], y=data["values"], errorbar=None, ax=ax)
    ax.set_xlabel("category")
    ax.set_ylabel("count")
    ax.set_title("Items per category")
    return fig
