"""Histogram of normal samples over thirty bins. Scale = sample count."""

from __future__ import annotations

import numpy as np

TITLE = "Histogram"
DEFAULT_SCALE = 500
SEED = 809

BINS = 30


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    return {"samples": rng.normal(0.0, 1.0, size=scale), "bins": BINS}


def build(layer: str = "direct", scale: int | None = None, seed: int | None = None):
    import matplotlib.pyplot as plt

    data = dataset(scale, seed)
    fig, ax = plt.subplots()
    if layer == "direct":
        ax.hist(data["samples"], bins=data["bins"])
    else:
        import seaborn as sns

        sns.histplot(x=data["samples"], bins=data["bins"], ax=ax)
    ax.set_xlabel("error")
    ax.set_ylabel("frequency")
    ax.set_title("Error distribution")
    return fig
