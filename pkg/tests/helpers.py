"""Shared helpers for the test suite: corpus iteration, oracle comparison,
payload recovery, and the published benchmark table used as an arithmetic
reference.
"""

from __future__ import annotations

import json
import math
import xml.etree.ElementTree as ET
from pathlib import Path

from a11yplot.schema import (
    BarPoint,
    BoxStats,
    HeatmapGrid,
    HistogramBin,
    LinePoint,
    SeriesPoint,
    StackSegment,
)

ORACLES_DIR = Path(__file__).resolve().parent / "oracles"

SLUGS = (
    "bar",
    "horizontal_box",
    "vertical_box",
    "line",
    "dodged",
    "multilayered",
    "multipanel",
    "scatter",
    "histogram",
    "stacked",
    "heatmap",
    "multiline",
)
API_LAYERS = ("direct", "wrapper")
CORPUS = [(slug, api_layer) for slug in SLUGS for api_layer in API_LAYERS]


def load_oracle(slug: str, api_layer: str) -> dict:
    path = ORACLES_DIR / f"{slug}_{api_layer}.json"
    return json.loads(path.read_text(encoding="utf-8"))


def values_close(a, b, rel=1e-9) -> bool:
    if isinstance(a, str) or isinstance(b, str):
        return a == b
    return math.isclose(float(a), float(b), rel_tol=rel, abs_tol=1e-12)


def point_doc(point) -> dict:
    """A schema data point as the plain dict shape the oracles freeze."""
    if isinstance(point, (BarPoint, LinePoint)):
        return {"x": point.x, "y": point.y}
    if isinstance(point, HistogramBin):
        return {"x": point.x, "y": point.y, "xmin": point.xmin, "xmax": point.xmax}
    if isinstance(point, SeriesPoint):
        return {"x": point.x, "y": point.y, "series_label": point.series_label}
    if isinstance(point, StackSegment):
        return {"x": point.x, "fill": point.fill, "y": point.y}
    if isinstance(point, BoxStats):
        return {
            "lower_extreme": point.lower_extreme,
            "q1": point.q1,
            "median": point.median,
            "q3": point.q3,
            "upper_extreme": point.upper_extreme,
            "outliers": list(point.outliers),
        }
    if isinstance(point, HeatmapGrid):
        return {
            "values": [list(row) for row in point.values],
            "row_labels": list(point.row_labels),
            "col_labels": list(point.col_labels),
        }
    raise TypeError(f"unexpected point type {type(point).__name__}")


def deep_mismatches(got, want, path="", limit=6) -> list[str]:
    """Recursive comparison: exact strings, 1e-9 relative floats."""
    if isinstance(want, dict):
        if not isinstance(got, dict) or set(got) != set(want):
            return [f"{path}: key sets differ ({got!r} vs {want!r})"]
        out: list[str] = []
        for key in want:
            out += deep_mismatches(got[key], want[key], f"{path}.{key}", limit)
            if len(out) >= limit:
                break
        return out
    if isinstance(want, list):
        if not isinstance(got, (list, tuple)) or len(got) != len(want):
            return [f"{path}: length {len(got)} != {len(want)}"]
        out = []
        for i, (g, w) in enumerate(zip(got, want)):
            out += deep_mismatches(g, w, f"{path}[{i}]", limit)
            if len(out) >= limit:
                break
        return out
    return [] if values_close(got, want) else [f"{path}: {got!r} != {want!r}"]


def assert_matches_oracle(schema, oracle: dict) -> None:
    """Assert an extracted FigureSchema equals a frozen oracle document."""
    label = f"{oracle['fixture']}/{oracle['layer']}"
    assert len(schema.subplots) == len(oracle["subplots"]), label
    for sub, osub in zip(schema.subplots, oracle["subplots"]):
        assert (sub.row, sub.col) == (osub["row"], osub["col"]), label
        assert len(sub.layers) == len(osub["layers"]), (
            f"{label}: {len(sub.layers)} layers != {len(osub['layers'])}"
        )
        for i, (layer, olayer) in enumerate(zip(sub.layers, osub["layers"])):
            where = f"{label} layer[{i}]"
            assert layer.plot_type.value == olayer["type"], where
            got_levels = (
                list(layer.axes.x_levels) if layer.axes.x_levels is not None else None
            )
            assert got_levels == olayer["x_levels"], f"{where}: x_levels"
            got_axes = {
                "x_label": layer.axes.x_label,
                "y_label": layer.axes.y_label,
                "title": layer.axes.title,
            }
            errs = deep_mismatches(got_axes, osub["axes"], f"{where}.axes")
            errs += deep_mismatches(
                [point_doc(p) for p in layer.data], olayer["points"], f"{where}.points"
            )
            assert not errs, "\n".join(errs)


def svg_of_html(html: str) -> str:
    start = html.find("<svg")
    end = html.find("</svg>")
    assert start != -1 and end != -1, "document holds no svg"
    return html[start : end + len("</svg>")]


def payload_of_svg(svg: str) -> str | None:
    """The maidr-data attribute value, XML-unescaped, or None if absent."""
    root = ET.fromstring(svg)
    return root.get("maidr-data")


# Published reference table: (title, direct with/without, wrapper with/without)
# as (mean, std) string pairs; deltas are recomputed, never stored.
PUBLISHED_ROWS = [
    ("Bar", ("41.5", "8.3"), ("40.3", "9.2"), ("49.9", "9.6"), ("47.5", "12.2")),
    ("Horizontal Box", ("38.9", "11.9"), ("38.3", "10.7"), ("657", "20"), ("654", "19")),
    ("Vertical Box", ("40.6", "12.1"), ("39.8", "11.2"), ("658", "20"), ("653", "22")),
    ("Line", ("33.9", "4.7"), ("32.8", "4.7"), ("135", "13"), ("135", "15")),
    ("Dodged", ("15.5", "6.9"), ("14.9", "4.9"), ("276", "15"), ("272", "19")),
    ("Multilayered", ("42.4", "14.4"), ("41.4", "19.9"), ("245", "16"), ("238", "27")),
    ("Multipanel", ("85.1", "20.7"), ("83.1", "34.8"), ("178", "21"), ("171", "40")),
    ("Scatter", ("19.2", "4.7"), ("17.8", "4.6"), ("41.6", "2.4"), ("39.3", "2.8")),
    ("Histogram", ("99.1", "39.8"), ("94.2", "11.7"), ("254", "83"), ("253", "10")),
    ("Stacked", ("24.1", "6.4"), ("22.4", "5.6"), ("73", "8.8"), ("71.6", "5.4")),
    ("Heatmap", ("41.6", "1.7"), ("40.4", "3.4"), ("171", "13"), ("167", "17")),
    ("Multiline", ("21.5", "1.5"), ("20.3", "6.4"), ("431", "21"), ("429", "23")),
]
