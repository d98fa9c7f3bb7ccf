"""Two subplots side by side: a line panel and a bar panel.

Scale = line point count; the bar panel keeps a fixed ten categories.
"""

from __future__ import annotations

import numpy as np

TITLE = "Multipanel"
DEFAULT_SCALE = 40
SEED = 607

BAR_CATEGORIES = 10


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    x = np.arange(scale, dtype=float)
    y = np.cumsum(rng.normal(0.0, 0.5, size=scale))
    return {
        "x": x,
        "y": y,
        "categories": [f"m{i}" for i in range(BAR_CATEGORIES)],
        "counts": [int(v) for v in rng.integers(1, 60, size=BAR_CATEGORIES)],
    }


def build(layer: str = "direct", scale: int | None = None, seed: int | None = None):
    import matplotlib.pyplot as plt

    data = dataset(scale, seed)
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 4))
    if layer == "direct":
        left.plot(data["x"], data["y"])
        right.bar(data["categories"], data["counts"])
    else:
        import seaborn as sns

        sns.lineplot(x=data["x"], y=data["y"], ax=left)
        sns.barplot(x=data["categories"], y=data["counts"], errorbar=None, ax=right)
    left.set_xlabel("step")
    left.set_ylabel("drift")
    left.set_title("Drift")
    right.set_xlabel("machine")
    right.set_ylabel("faults")
    right.set_title("Faults")
    return fig
