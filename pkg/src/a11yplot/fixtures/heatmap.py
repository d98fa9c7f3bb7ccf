"""Square value grid rendered as a heatmap. Scale = rows = columns."""

from __future__ import annotations

import numpy as np

TITLE = "Heatmap"
DEFAULT_SCALE = 6
SEED = 1011


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    return {"grid": rng.random((scale, scale)) * 10.0}


def build(layer: str = "direct", scale: int | None = None, seed: int | None = None):
    import matplotlib.pyplot as plt

    data = dataset(scale, seed)
    fig, ax = plt.subplots()
    if layer == "direct":
        ax.pcolormesh(data["grid"])
    else:
        import seaborn as sns

        sns.heatmap(data["grid"], ax=ax)
    ax.set_xlabel("column")
    ax.set_ylabel("row")
    ax.set_title("Intensity grid")
    return fig
