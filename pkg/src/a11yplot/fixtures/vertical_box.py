"""Vertical box plot over three groups. Scale = samples per group."""

from __future__ import annotations

import numpy as np

TITLE = "Vertical Box"
DEFAULT_SCALE = 60
SEED = 203

GROUPS = ("low", "mid", "high")


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    samples = {
        group: rng.normal(loc=10.0 + 3.0 * i, scale=2.0, size=scale)
        for i, group in enumerate(GROUPS)
    }
    return {"groups": list(GROUPS), "samples": samples}


def build(layer: str = "direct", scale: int | None = None, seed: int | None = None):
    import matplotlib.pyplot as plt

    data = dataset(scale, seed)
    fig, ax = plt.subplots()
    if layer == "direct":
        ax.boxplot(
            [data["samples"][g] for g in data["groups"]],
            tick_labels=data["groups"],
        )
    else:
        import seaborn as sns

        values = np.concatenate([data["samples"][g] for g in data["groups"]])
        labels = np.repeat(data["groups"], [len(data["samples"][g]) for g in data["groups"]])
        sns.boxplot(x=labels, y=values, ax=ax)
    ax.set_xlabel("dose")
    ax.set_ylabel("response")
    ax.set_title("Response by dose")
    return fig
