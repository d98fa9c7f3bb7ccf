"""Reference chart corpus: twelve fixture types, two API layers each.

Each fixture module exposes ``TITLE``, ``DEFAULT_SCALE``, ``SEED``,
``dataset(scale, seed)`` (pure data, no plotting), and
``build(layer, scale, seed)`` returning a figure drawn through either
the direct (pyplot/axes) or the high-level wrapper (seaborn) API.

This package deliberately never imports its parent: benchmark baseline
processes load it standalone so the uninstrumented condition never sees
the patching machinery.
"""

from __future__ import annotations

import importlib
from dataclasses import dataclass

LAYER_DIRECT = "direct"
LAYER_WRAPPER = "wrapper"
LAYERS = (LAYER_DIRECT, LAYER_WRAPPER)


@dataclass(slots=True, frozen=True)
class FixtureRow:
    """One report row: corpus slug and its display title."""

    slug: str
    title: str


# report row order is fixed; tables and CSVs follow it
ROWS: tuple[FixtureRow, ...] = (
    FixtureRow("bar", "Bar"),
    FixtureRow("horizontal_box", "Horizontal Box"),
    FixtureRow("vertical_box", "Vertical Box"),
    FixtureRow("line", "Line"),
    FixtureRow("dodged", "Dodged"),
    FixtureRow("multilayered", "Multilayered"),
    FixtureRow("multipanel", "Multipanel"),
    FixtureRow("scatter", "Scatter"),
    FixtureRow("histogram", "Histogram"),
    FixtureRow("stacked", "Stacked"),
    FixtureRow("heatmap", "Heatmap"),
    FixtureRow("multiline", "Multiline"),
)


def slugs() -> list[str]:
    return [row.slug for row in ROWS]


def title_for(slug: str) -> str:
    for row in ROWS:
        if row.slug == slug:
            return row.title
    raise KeyError(f"unknown fixture {slug!r}; known: {', '.join(slugs())}")


def get(slug: str):
    """The fixture module for a slug."""
    if slug not in slugs():
        raise KeyError(f"unknown fixture {slug!r}; known: {', '.join(slugs())}")
    return importlib.import_module(f"{__name__}.{slug}")


def dataset(slug: str, scale: int | None = None, seed: int | None = None):
    return get(slug).dataset(scale=scale, seed=seed)


def build(
    slug: str,
    layer: str = LAYER_DIRECT,
    scale: int | None = None,
    seed: int | None = None,
):
    if layer not in LAYERS:
        raise ValueError(f"unknown API layer {layer!r}; expected one of {LAYERS}")
    return get(slug).build(layer=layer, scale=scale, seed=seed)
