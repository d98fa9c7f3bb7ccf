"""Single line: a random walk over evenly spaced x. Scale = point count."""

from __future__ import annotations

import numpy as np

TITLE = "Line"
DEFAULT_SCALE = 50
SEED = 304


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    x = np.arange(scale, dtype=float)
    y = np.cumsum(rng.normal(0.0, 1.0, size=scale)) + 50.0
    return {"x": x, "y": y}


def build(layer: str = "direct", scale: int | None = None, seed: int | None = None):
    import matplotlib.pyplot as plt

    data = dataset(scale, seed)
    fig, ax = plt.subplots()
    if layer == "direct":
        ax.plot(data["x"], data["y"])
    else:
        import seaborn as sns

        sns.lineplot(x=data["x"], y=data["y"], ax=ax)
    ax.set_xlabel("day")
    ax.set_ylabel("level")
    ax.set_title("Level over time")
    return fig
