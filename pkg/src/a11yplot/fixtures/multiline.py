"""Three labeled series on shared x. Scale = points per series."""

from __future__ import annotations

import numpy as np

TITLE = "Multiline"
DEFAULT_SCALE = 30
SEED = 1112

SERIES = ("alpha", "beta", "gamma")


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    x = np.arange(scale, dtype=float)
    ys = {
        series: np.cumsum(rng.normal(0.1 * (i + 1), 1.0, size=scale))
        for i, series in enumerate(SERIES)
    }
    return {"x": x, "series": list(SERIES), "ys": ys}


def build(layer: str = "direct", scale: int | None = None, seed: int | None = None):
    import matplotlib.pyplot as plt
    import numpy as np

    data = dataset(scale, seed)
    fig, ax = plt.subplots()
    if layer == "direct":
        stacked = np.column_stack([data["ys"][s] for s in data["series"]])
        lines = ax.plot(data["x"], stacked)
        for line, series in zip(lines, data["series"]):
            line.set_label(series)
        ax.legend()
    else:
        import seaborn as sns

        xs = np.tile(data["x"], len(data["series"]))
        ys = np.concatenate([data["ys"][s] for s in data["series"]])
        hues = np.repeat(data["series"], len(data["x"]))
        sns.lineplot(x=xs, y=ys, hue=hues, ax=ax)
    ax.set_xlabel("week")
    ax.set_ylabel("score")
    ax.set_title("Scores per cohort")
    return fig
