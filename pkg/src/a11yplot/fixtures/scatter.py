"""Scatter cloud of correlated points. Scale = point count."""

from __future__ import annotations

import numpy as np

TITLE = "Scatter"
DEFAULT_SCALE = 60
SEED = 708


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    x = rng.normal(0.0, 1.0, size=scale)
    y = 0.6 * x + rng.normal(0.0, 0.8, size=scale)
    return {"x": x, "y": y}


def build(layer: str = "direct", scale: int | None = None, seed: int | None = None):
    import matplotlib.pyplot as plt

    data = dataset(scale, seed)
    fig, ax = plt.subplots()
    if layer == "direct":
        ax.scatter(data["x"], data["y"])
    else:
        import seaborn as sns

        sns.scatterplot(x=data["x"], y=data["y"], ax=ax)
    ax.set_xlabel("height")
    ax.set_ylabel("weight")
    ax.set_title("Height versus weight")
    return fig
