"""Horizontal box plot over three groups. Scale = samples per group."""

from __future__ import annotations

import numpy as np

TITLE = "Horizontal Box"
DEFAULT_SCALE = 60
SEED = 202

GROUPS = ("g0", "g1", "g2")


def dataset(scale: int | None = None, seed: int | None = None) -> dict:
    scale = DEFAULT_SCALE if scale is None else int(scale)
    rng = np.random.default_rng(SEED if seed is None else seed)
    samples = {
        group: rng.normal(loc=2.0 * i, scale=1.0 + 0.3 * i, size=scale)
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
            orientation="horizontal",
            tick_labels=data["groups"],
        )
    else:
        import seaborn as sns

        values = np.concatenate([data["samples"][g] for g in data["groups"]])
        labels = np.repeat(data["groups"], [len(data["samples"][g]) for g in data["groups"]])
        sns.boxplot(x=values, y=labels, orient="h", ax=ax)
    ax.set_xlabel("measurement")
    ax.set_ylabel("group")
    ax.set_title("Measurement spread by group")
    return fig
