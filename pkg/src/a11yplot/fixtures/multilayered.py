"""Two layers on one axes: a trend line under observed scatter points.

Scale = point count per layer.
"""

from __future__ import annotations

import numpy as np

TITLE = "Multilayered"
DEFAULT_SCALE = 40
SEED = 506


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    x = np.linspace(0.0, 10.0, scale)
    trend = 3.0 + 0.8 * x
    observed = trend + rng.normal(0.0, 0.9, size=scale)
    return {"x": x, "trend": trend, "observed": observed}


def build(layer: str = "direct", scale: int | None = None, seed: int | None = None):
    import matplotlib.pyplot as plt

    data = dataset(scale, seed)
    fig, ax = plt.subplots()
    if layer == "direct":
        ax.plot(data["x"], data["trend"])
        ax.scatter(data["x"], data["observed"])
    else:
        import seaborn as sns

        sns.lineplot(x=data["x"], y=data["trend"], ax=ax)
        sns.scatterplot(x=data["x"], y=data["observed"], ax=ax)
    ax.set_xlabel("load")
    ax.set_ylabel("latency")
    ax.set_title("Latency versus load")
    return fig
