"""Reconstruction of declarative chart semantics from live artist state.

Each user plot call is recorded against its figure; at render time the
registered extractors read the drawn artists back into LayerSchema
documents. Extraction never recomputes statistics and never mutates the
figure: the schema describes exactly what was drawn.
"""

from __future__ import annotations

import abc
import logging
import threading
import weakref
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any, ClassVar

import numpy as np
from matplotlib import ticker as mticker
from matplotlib.category import StrCategoryFormatter
from matplotlib.collections import PathCollection, QuadMesh
from matplotlib.container import BarContainer
from matplotlib.lines import Line2D

from .schema import (
    AxisInfo,
    BarPoint,
    BoxStats,
    DataPoint,
    FigureSchema,
    HeatmapGrid,
    HistogramBin,
    LayerSchema,
    LinePoint,
    PlotType,
    SeriesPoint,
    StackSegment,
    SubplotSchema,
    validate_schema,
)

log = logging.getLogger(__name__)

LAYER_SCRIPTING = "scripting"
LAYER_OBJECT = "object-oriented"
LAYER_WRAPPER = "high-level-wrapper"


class ExtractionError(RuntimeError):
    """Artist state could not be read back into a schema layer."""


# ---------------------------------------------------------------------------
# axes snapshots, for high-level wrappers whose return value is just the axes


@dataclass(slots=True)
class AxesSnapshot:
    """Identity sets of the artists present on an axes at one instant."""

    containers: set[int]
    lines: set[int]
    collections: set[int]
    patches: set[int]


@dataclass(slots=True)
class AxesDelta:
    """Artists added to an axes since a snapshot, in draw order."""

    containers: list
    lines: list
    collections: list
    patches: list


def snapshot_axes(axes) -> AxesSnapshot:
    return AxesSnapshot(
        containers={id(a) for a in axes.containers},
        lines={id(a) for a in axes.lines},
        collections={id(a) for a in axes.collections},
        patches={id(a) for a in axes.patches},
    )


def diff_axes(axes, snapshot: AxesSnapshot) -> AxesDelta:
    return AxesDelta(
        containers=[a for a in axes.containers if id(a) not in snapshot.containers],
        lines=[a for a in axes.lines if id(a) not in snapshot.lines],
        collections=[a for a in axes.collections if id(a) not in snapshot.collections],
        patches=[a for a in axes.patches if id(a) not in snapshot.patches],
    )


# ---------------------------------------------------------------------------
# shared mixin operations


_RECOGNIZED_CONTAINERS = "BarContainer or a sequence of BarContainer"


def extract_container(container) -> list:
    """Flatten a grouped artist into a draw-ordered primitive list.

    A single bar container yields its own child order. A sequence of bar
    containers (one per series of a grouped chart) is flattened
    category-major: primitives sort by bar center first, then by the
    series the container represents, so repeated calls are stable.
    """
    if isinstance(container, BarContainer):
        return list(container.patches)
    if isinstance(container, (list, tuple)):
        if not container:
            return []
        if all(isinstance(c, BarContainer) for c in container):
            units = []
            for series_index, sub in enumerate(container):
                for patch in sub.patches:
                    center = patch.get_x() + patch.get_width() / 2.0
                    units.append((center, series_index, patch))
            units.sort(key=lambda unit: (unit[0], unit[1]))
            return [patch for _, _, patch in units]
    raise ExtractionError(
        f"unrecognized container type {type(container).__name__}; "
        f"recognized: {_RECOGNIZED_CONTAINERS}"
    )


_NUMERIC_FORMATTERS = (
    mticker.ScalarFormatter,
    mticker.LogFormatter,
    mticker.PercentFormatter,
    mticker.EngFormatter,
)


def _axis_object(axes, axis: str):
    if axis == "x":
        return axes.xaxis
    if axis == "y":
        return axes.yaxis
    raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")


def axis_is_categorical(axes, axis: str) -> bool:
    formatter = _axis_object(axes, axis).get_major_formatter()
    return not isinstance(formatter, _NUMERIC_FORMATTERS)


def extract_levels(axes, axis: str = "x") -> list[str]:
    """Ordered category labels of a categorical axis.

    Labels are read from the axis ticks, so they reflect reordering or
    manual overrides applied by the user or a high-level wrapper.

    Raises
    ------
    ExtractionError
        If the named axis carries a numeric formatter (no categories).
    """
    axis_obj = _axis_object(axes, axis)
    if not axis_is_categorical(axes, axis):
        raise ExtractionError(
            f"{axis}-axis is numeric; categorical levels are undefined"
        )
    labels = [tick.get_text() for tick in axis_obj.get_ticklabels()]
    return [label for label in labels if label]


def merge_fragments(
    fragments: Sequence[Mapping[str, Any]],
    overrides: Iterable[str] = (),
) -> dict[str, Any]:
    """Combine independently computed metadata fragments into one mapping.

    Keys must be disjoint unless listed in ``overrides``, where later
    fragments win. An undeclared collision is an error naming the key.
    """
    allowed = set(overrides)
    merged: dict[str, Any] = {}
    for fragment in fragments:
        for key, value in fragment.items():
            if key in merged and key not in allowed:
                raise ExtractionError(
                    f"fragment key collision without declared override: {key!r}"
                )
            merged[key] = value
    return merged


# ---------------------------------------------------------------------------
# label resolution helpers


def _legend_entries(axes) -> list[tuple[object, str]]:
    legend = axes.get_legend()
    if legend is None:
        return []
    handles = getattr(legend, "legend_handles", None)
    if handles is None:
        handles = legend.legendHandles
    return list(zip(handles, [t.get_text() for t in legend.get_texts()]))


def _handle_color(handle):
    from matplotlib.colors import to_rgba

    for getter in ("get_facecolor", "get_color"):
        fn = getattr(handle, getter, None)
        if fn is None:
            continue
        try:
            color = fn()
        except Exception:
            continue
        try:
            arr = np.asarray(color, dtype=float)
        except (TypeError, ValueError):
            try:
                return np.asarray(to_rgba(color), dtype=float)
            except (TypeError, ValueError):
                continue
        if arr.ndim == 2 and len(arr):
            arr = arr[0]
        if arr.shape == (3,):
            arr = np.append(arr, 1.0)
        if arr.shape == (4,):
            return arr
    return None


def _colors_match(a, b) -> bool:
    if a is None or b is None:
        return False
    return bool(np.allclose(a[:3], b[:3], atol=1e-3))


def legend_label_for(axes, artist) -> str | None:
    """Legend text whose handle color matches the artist, if any."""
    color = _handle_color(artist)
    for handle, text in _legend_entries(axes):
        if text and _colors_match(_handle_color(handle), color):
            return text
    return None


def _artist_label(axes, artist, fallback: str) -> str:
    label = ""
    get_label = getattr(artist, "get_label", None)
    if get_label is not None:
        label = str(get_label() or "")
    if label and not label.startswith("_"):
        return label
    matched = legend_label_for(axes, artist)
    return matched if matched is not None else fallback


def _level_for_position(levels: list[str] | None, position: float):
    if levels:
        index = int(round(position))
        if 0 <= index < len(levels) and abs(position - index) < 0.5:
            return levels[index]
    return float(position)


# ---------------------------------------------------------------------------
# extractor hierarchy


@dataclass(slots=True)
class CallRecord:
    """Everything remembered about one user-initiated plot call."""

    target: str
    api_layer: str
    plot_type: PlotType
    args: tuple
    kwargs: dict
    result: Any
    delta: AxesDelta | None


def grid_position_of(axes) -> tuple[int, int]:
    get_spec = getattr(axes, "get_subplotspec", None)
    spec = get_spec() if get_spec is not None else None
    if spec is None:
        return (0, 0)
    return (spec.rowspan.start, spec.colspan.start)


class Extractor(abc.ABC):
    """Reads one registered plot call back out of its drawn artists.

    ``element_semantics`` states what each tracked primitive stands for:
    "point" (one primitive per data point), "series" (one per series of
    a multi-series layer), or "layer" (a single primitive carrying every
    point, vertex order = point order).
    """

    plot_type: ClassVar[PlotType]
    element_semantics: ClassVar[str] = "point"

    # mixin ops shared by all concrete extractors
    extract_container = staticmethod(extract_container)
    extract_levels = staticmethod(extract_levels)
    merge_fragments = staticmethod(merge_fragments)

    def __init__(self, axes) -> None:
        self.axes_ref = axes
        self.grid_position = grid_position_of(axes)
        self.tracked_primitives: list = []
        self.element_ids: list[str] = []
        self.call: CallRecord | None = None

    def bind_call(self, call: CallRecord) -> None:
        self.call = call
        self.tracked_primitives = list(self._resolve_primitives())

    @abc.abstractmethod
    def _resolve_primitives(self) -> list:
        """Ordered data-bearing primitives this layer is drawn with."""

    @abc.abstractmethod
    def _data_points(self) -> list[DataPoint]:
        """Schema points, in the order matching element semantics."""

    def _levels_axis(self) -> str | None:
        x_cat = axis_is_categorical(self.axes_ref, "x")
        y_cat = axis_is_categorical(self.axes_ref, "y")
        if x_cat:
            return "x"
        if y_cat:
            return "y"
        return None

    def _horizontal(self) -> bool:
        return axis_is_categorical(self.axes_ref, "y") and not axis_is_categorical(
            self.axes_ref, "x"
        )

    def _axis_info(self) -> AxisInfo:
        ax = self.axes_ref
        info = AxisInfo(
            x_label=ax.get_xlabel(), y_label=ax.get_ylabel(), title=ax.get_title()
        )
        axis = self._levels_axis()
        if axis is not None:
            levels = extract_levels(ax, axis)
            info.x_levels = levels if levels else None
        return info

    def _selector(self) -> str:
        return ",".join(f'[maidr-id="{eid}"]' for eid in self.element_ids)

    def _check_consistent(self) -> None:
        if not self.tracked_primitives:
            raise ExtractionError(
                f"{self.plot_type.value} layer has no drawn primitives"
            )
        for primitive in self.tracked_primitives:
            attached = getattr(primitive, "axes", self.axes_ref)
            if attached is None:
                raise ExtractionError(
                    f"{self.plot_type.value} layer artist was removed from its axes"
                )

    def extract(self) -> LayerSchema:
        """Build this layer's schema from current artist state.

        Read-only with respect to the figure. Requires element ids to
        have been assigned (finalize does this before extracting).
        """
        self._check_consistent()
        points = self._data_points()
        if not points:
            raise ExtractionError(
                f"{self.plot_type.value} layer extracted no data points"
            )
        merged = self.merge_fragments(
            [
                {"plot_type": self.plot_type, "axes": self._axis_info()},
                {"data": points},
                {"selector": self._selector()},
            ]
        )
        return LayerSchema(**merged)

    def point_ref(self, primitive_index: int) -> int | None:
        if self.element_semantics == "layer":
            return None
        return primitive_index


class _BarUnitsMixin:
    """Shared (patch, series, center, fill) bookkeeping for bar charts."""

    def _bar_containers(self) -> list[BarContainer]:
        call = self.call
        if call.api_layer == LAYER_WRAPPER:
            containers = [
                c for c in (call.delta.containers if call.delta else []) if isinstance(c, BarContainer)
            ]
        else:
            containers = self._containers_from_result(call.result)
        if not containers:
            raise ExtractionError(
                f"{self.plot_type.value} call produced no bar containers"
            )
        return containers

    @staticmethod
    def _containers_from_result(result) -> list[BarContainer]:
        if isinstance(result, BarContainer):
            return [result]
        # hist returns (counts, edges, container-or-list)
        if isinstance(result, tuple) and len(result) == 3:
            return _BarUnitsMixin._containers_from_result(result[2])
        if isinstance(result, (list, tuple)):
            return [c for c in result if isinstance(c, BarContainer)]
        return []

    def _bar_units(self) -> list[tuple[Any, int]]:
        # (patch, series index), category-major across series
        containers = self._bar_containers()
        horizontal = self._horizontal()
        units = []
        for series_index, container in enumerate(containers):
            for patch in container.patches:
                if horizontal:
                    center = patch.get_y() + patch.get_height() / 2.0
                else:
                    center = patch.get_x() + patch.get_width() / 2.0
                units.append((center, series_index, patch))
        units.sort(key=lambda unit: (unit[0], unit[1]))
        return [(patch, series_index) for _, series_index, patch in units]

    def _fill_labels(self, containers: list[BarContainer]) -> list[str]:
        all_containers = list(self.axes_ref.containers)
        labels = []
        for container in containers:
            try:
                fallback = f"group-{all_containers.index(container)}"
            except ValueError:
                fallback = f"group-{containers.index(container)}"
            probe = container.patches[0] if container.patches else container
            labels.append(_artist_label(self.axes_ref, probe, fallback))
        return labels

    def _patch_geometry(self, patch) -> tuple[float, float]:
        # (category-axis center, bar length along the value axis)
        if self._horizontal():
            return patch.get_y() + patch.get_height() / 2.0, float(patch.get_width())
        return patch.get_x() + patch.get_width() / 2.0, float(patch.get_height())


class BarExtractor(_BarUnitsMixin, Extractor):
    plot_type = PlotType.BAR

    def _resolve_primitives(self) -> list:
        return [patch for patch, _ in self._bar_units()]

    def _data_points(self) -> list[DataPoint]:
        axis = self._levels_axis()
        levels = extract_levels(self.axes_ref, axis) if axis else None
        points = []
        for patch, _ in self._bar_units():
            center, value = self._patch_geometry(patch)
            points.append(BarPoint(x=_level_for_position(levels, center), y=value))
        return points


class _GroupedBarExtractor(_BarUnitsMixin, Extractor):
    """Stacked and dodged charts share segment extraction wholesale."""

    def _resolve_primitives(self) -> list:
        return [patch for patch, _ in self._bar_units()]

    def _data_points(self) -> list[DataPoint]:
        axis = self._levels_axis()
        levels = extract_levels(self.axes_ref, axis) if axis else None
        fills = self._fill_labels(self._bar_containers())
        points = []
        for patch, series_index in self._bar_units():
            center, value = self._patch_geometry(patch)
            points.append(
                StackSegment(
                    x=_level_for_position(levels, center),
                    fill=fills[series_index],
                    y=value,
                )
            )
        return points


class StackedBarExtractor(_GroupedBarExtractor):
    plot_type = PlotType.STACKED_BAR


class DodgedBarExtractor(_GroupedBarExtractor):
    plot_type = PlotType.DODGED_BAR


class HistogramExtractor(_BarUnitsMixin, Extractor):
    plot_type = PlotType.HISTOGRAM

    def _resolve_primitives(self) -> list:
        return [patch for patch, _ in self._bar_units()]

    def _data_points(self) -> list[DataPoint]:
        # bin edges come from drawn patch geometry, never a re-binning
        points = []
        for patch, _ in self._bar_units():
            xmin = float(patch.get_x())
            xmax = xmin + float(patch.get_width())
            points.append(
                HistogramBin(
                    x=(xmin + xmax) / 2.0,
                    y=float(patch.get_height()),
                    xmin=xmin,
                    xmax=xmax,
                )
            )
        return points


def _data_lines(lines: Iterable) -> list[Line2D]:
    out = []
    for line in lines:
        if isinstance(line, Line2D) and len(line.get_xdata(orig=False)):
            out.append(line)
    return out


class LineExtractor(Extractor):
    plot_type = PlotType.LINE
    element_semantics = "layer"

    def _resolve_primitives(self) -> list:
        call = self.call
        if call.api_layer == LAYER_WRAPPER:
            lines = _data_lines(call.delta.lines if call.delta else [])
        else:
            lines = _data_lines(call.result if isinstance(call.result, (list, tuple)) else [])
        return lines[:1]

    def _data_points(self) -> list[DataPoint]:
        line = self.tracked_primitives[0]
        # tolist() hands back native floats in one pass; row-wise numpy
        # iteration is an order of magnitude slower at realistic sizes
        xy = np.asarray(line.get_xydata(), dtype=float).tolist()
        return [LinePoint(x=x, y=y) for x, y in xy]


class MultilineExtractor(Extractor):
    plot_type = PlotType.MULTILINE
    element_semantics = "series"

    def _resolve_primitives(self) -> list:
        call = self.call
        if call.api_layer == LAYER_WRAPPER:
            return _data_lines(call.delta.lines if call.delta else [])
        return _data_lines(call.result if isinstance(call.result, (list, tuple)) else [])

    def _series_labels(self) -> list[str]:
        return [
            _artist_label(self.axes_ref, line, f"line-{i}")
            for i, line in enumerate(self.tracked_primitives)
        ]

    def _data_points(self) -> list[DataPoint]:
        points: list[DataPoint] = []
        for line, label in zip(self.tracked_primitives, self._series_labels()):
            xy = np.asarray(line.get_xydata(), dtype=float).tolist()
            points.extend(SeriesPoint(x=x, y=y, series_label=label) for x, y in xy)
        return points


class _BoxExtractor(Extractor):
    """Five-number summaries read from whisker/box/median artists."""

    def _orientation_horizontal(self) -> bool:
        return self.plot_type is PlotType.BOX_HORIZONTAL

    def _values(self, artist) -> np.ndarray:
        data = artist.get_xdata() if self._orientation_horizontal() else artist.get_ydata()
        return np.asarray(data, dtype=float)

    def _positions(self, artist) -> np.ndarray:
        data = artist.get_ydata() if self._orientation_horizontal() else artist.get_xdata()
        return np.asarray(data, dtype=float)

    def _resolve_primitives(self) -> list:
        call = self.call
        if call.api_layer == LAYER_WRAPPER:
            boxes = [p for p in (call.delta.patches if call.delta else [])]
            boxes.sort(key=self._patch_center)
            return boxes
        if isinstance(call.result, dict) and call.result.get("boxes"):
            return list(call.result["boxes"])
        raise ExtractionError("box call result carries no box artists")

    def _patch_center(self, patch) -> float:
        vertices = patch.get_path().vertices
        column = 1 if self._orientation_horizontal() else 0
        return float(np.mean(vertices[:, column]))

    def _data_points(self) -> list[DataPoint]:
        call = self.call
        if call.api_layer == LAYER_WRAPPER:
            return self._stats_from_geometry()
        return self._stats_from_result(call.result)

    def _stats_from_result(self, result: dict) -> list[DataPoint]:
        boxes = result["boxes"]
        whiskers = result["whiskers"]
        medians = result["medians"]
        fliers = result.get("fliers") or [None] * len(boxes)
        if len(whiskers) != 2 * len(boxes):
            raise ExtractionError(
                f"box artist set inconsistent: {len(boxes)} boxes, "
                f"{len(whiskers)} whiskers"
            )
        points = []
        for i, box in enumerate(boxes):
            box_values = self._values(box)
            flier = fliers[i]
            points.append(
                BoxStats(
                    lower_extreme=float(self._values(whiskers[2 * i]).min()),
                    q1=float(box_values.min()),
                    median=float(self._values(medians[i])[0]),
                    q3=float(box_values.max()),
                    upper_extreme=float(self._values(whiskers[2 * i + 1]).max()),
                    outliers=sorted(float(v) for v in self._values(flier)) if flier is not None else [],
                )
            )
        return points

    def _stats_from_geometry(self) -> list[DataPoint]:
        # high-level wrappers return only the axes; classify the drawn
        # lines geometrically against the box bodies instead
        boxes = self.tracked_primitives
        horizontal = self._orientation_horizontal()
        val_col, pos_col = (0, 1) if horizontal else (1, 0)
        spans = []
        for patch in boxes:
            vertices = np.asarray(patch.get_path().vertices, dtype=float)
            spans.append(
                (
                    float(np.mean(vertices[:, pos_col])),
                    float(vertices[:, val_col].min()),
                    float(vertices[:, val_col].max()),
                )
            )
        centers = np.asarray([s[0] for s in spans])
        stats = [
            {"q1": q1, "q3": q3, "lo": None, "hi": None, "median": None, "outliers": []}
            for _, q1, q3 in spans
        ]
        scale = max(abs(float(centers.max())), abs(float(centers.min())), 1.0)
        lines = _data_lines(self.call.delta.lines if self.call.delta else [])
        for line in lines:
            values = self._values(line)
            positions = self._positions(line)
            group = int(np.argmin(np.abs(centers - float(np.mean(positions)))))
            entry = stats[group]
            marker = line.get_marker()
            if marker not in (None, "", "None", " "):
                entry["outliers"].extend(float(v) for v in values)
                continue
            tol = 1e-9 * scale
            if np.ptp(positions) <= tol:
                # constant category coordinate: a whisker
                if values.max() <= entry["q1"] + tol:
                    entry["lo"] = float(values.min())
                elif values.min() >= entry["q3"] - tol:
                    entry["hi"] = float(values.max())
            elif np.ptp(values) <= tol:
                # constant value coordinate: a median inside the box, or a cap
                value = float(values[0])
                if entry["q1"] - tol <= value <= entry["q3"] + tol:
                    entry["median"] = value
        points = []
        for i, entry in enumerate(stats):
            if entry["lo"] is None or entry["hi"] is None or entry["median"] is None:
                raise ExtractionError(
                    f"box group {i}: could not classify whisker/median artists"
                )
            points.append(
                BoxStats(
                    lower_extreme=entry["lo"],
                    q1=entry["q1"],
                    median=entry["median"],
                    q3=entry["q3"],
                    upper_extreme=entry["hi"],
                    outliers=sorted(entry["outliers"]),
                )
            )
        return points


class BoxVerticalExtractor(_BoxExtractor):
    plot_type = PlotType.BOX_VERTICAL


class BoxHorizontalExtractor(_BoxExtractor):
    plot_type = PlotType.BOX_HORIZONTAL


class HeatmapExtractor(Extractor):
    plot_type = PlotType.HEATMAP
    element_semantics = "layer"

    def _resolve_primitives(self) -> list:
        call = self.call
        if call.api_layer == LAYER_WRAPPER:
            meshes = [
                c for c in (call.delta.collections if call.delta else []) if isinstance(c, QuadMesh)
            ]
        else:
            meshes = [call.result] if isinstance(call.result, QuadMesh) else []
        return meshes[:1]

    def _grid_values(self) -> list[list[float]]:
        mesh = self.tracked_primitives[0]
        array = np.ma.filled(np.asarray(mesh.get_array(), dtype=float), np.nan)
        if array.ndim == 1:
            coords = mesh.get_coordinates()
            array = array.reshape(coords.shape[0] - 1, coords.shape[1] - 1)
        return [[float(v) for v in row] for row in array]

    def _grid_labels(self, axis: str, count: int) -> list[str]:
        if axis_is_categorical(self.axes_ref, axis):
            labels = [
                t.get_text() for t in _axis_object(self.axes_ref, axis).get_ticklabels()
            ]
            if len(labels) == count and all(labels):
                return labels
        return [str(i) for i in range(count)]

    def _levels_axis(self) -> str | None:
        # grid labels live inside the data point, not in x_levels
        return None

    def _data_points(self) -> list[DataPoint]:
        values = self._grid_values()
        return [
            HeatmapGrid(
                values=values,
                row_labels=self._grid_labels("y", len(values)),
                col_labels=self._grid_labels("x", len(values[0]) if values else 0),
            )
        ]


class ScatterExtractor(Extractor):
    plot_type = PlotType.SCATTER
    element_semantics = "layer"

    def _resolve_primitives(self) -> list:
        call = self.call
        if call.api_layer == LAYER_WRAPPER:
            collections = [
                c
                for c in (call.delta.collections if call.delta else [])
                if isinstance(c, PathCollection) and len(c.get_offsets())
            ]
        else:
            collections = [call.result] if isinstance(call.result, PathCollection) else []
        return collections[:1]

    def _data_points(self) -> list[DataPoint]:
        offsets = np.asarray(self.tracked_primitives[0].get_offsets(), dtype=float)
        return [LinePoint(x=x, y=y) for x, y in offsets.tolist()]


_EXTRACTORS: dict[PlotType, type[Extractor]] = {
    PlotType.BAR: BarExtractor,
    PlotType.STACKED_BAR: StackedBarExtractor,
    PlotType.DODGED_BAR: DodgedBarExtractor,
    PlotType.HISTOGRAM: HistogramExtractor,
    PlotType.LINE: LineExtractor,
    PlotType.MULTILINE: MultilineExtractor,
    PlotType.BOX_VERTICAL: BoxVerticalExtractor,
    PlotType.BOX_HORIZONTAL: BoxHorizontalExtractor,
    PlotType.HEATMAP: HeatmapExtractor,
    PlotType.SCATTER: ScatterExtractor,
}


def create_extractor(plot_type: PlotType, axes) -> Extractor:
    """Factory: the concrete extractor for a plot type, grid-positioned.

    Raises
    ------
    ValueError
        If ``plot_type`` is not a member of the closed enumeration (the
        UNSUPPORTED sentinel must be filtered by the caller).
    """
    if not isinstance(plot_type, PlotType):
        raise ValueError(f"no extractor for unsupported plot classification: {plot_type!r}")
    return _EXTRACTORS[plot_type](axes)


# ---------------------------------------------------------------------------
# figure registry


@dataclass(slots=True)
class FigureEntry:
    token: str
    extractors: list[Extractor] = field(default_factory=list)
    # id(artist) -> element id; cached so repeated renders are identical
    assignments: dict[int, str] = field(default_factory=dict)
    element_index: dict[str, tuple] = field(default_factory=dict)
    next_element: int = 0

    @property
    def figure_id(self) -> str:
        return f"maidr-{self.token}"

    def ordered(self) -> list[tuple[tuple[int, int], list[Extractor]]]:
        groups: dict[tuple[int, int], list[Extractor]] = {}
        for extractor in self.extractors:
            groups.setdefault(extractor.grid_position, []).append(extractor)
        return sorted(groups.items())

    def assign_element_ids(self) -> None:
        self.element_index.clear()
        for position, group in self.ordered():
            for layer_index, extractor in enumerate(group):
                ids = []
                for k, primitive in enumerate(extractor.tracked_primitives):
                    eid = self.assignments.get(id(primitive))
                    if eid is None:
                        eid = f"maidr-{self.token}-{self.next_element}"
                        self.next_element += 1
                        self.assignments[id(primitive)] = eid
                    ids.append(eid)
                    self.element_index[eid] = (
                        self.figure_id,
                        position,
                        layer_index,
                        extractor.point_ref(k),
                    )
                extractor.element_ids = ids


_ENTRY_ATTR = "_a11yplot_entry"


class FigureRegistry:
    """Live-figure bookkeeping between plot calls and render time.

    Each entry lives as an attribute on its figure, so instrumentation
    state shares the figure's lifetime; the registry keeps only weak
    references for listing and close handling. The figure, its entry,
    and the recorded artists form a reference cycle, which the cycle
    collector reclaims as soon as user code drops the figure.
    """

    def __init__(self) -> None:
        self._index: dict[int, weakref.ref] = {}
        self._lock = threading.Lock()
        self._next_token = 1

    def entry_for(self, figure, create: bool = False) -> FigureEntry | None:
        entry = getattr(figure, _ENTRY_ATTR, None)
        if entry is not None or not create:
            return entry
        with self._lock:
            entry = getattr(figure, _ENTRY_ATTR, None)
            if entry is None:
                token = str(self._next_token)
                self._next_token += 1
                key = id(figure)
                self._index[key] = weakref.ref(
                    figure, lambda _ref, key=key: self._forget(key)
                )
                entry = FigureEntry(token=token)
                setattr(figure, _ENTRY_ATTR, entry)
            return entry

    def _forget(self, key: int) -> None:
        with self._lock:
            self._index.pop(key, None)

    def release(self, figure) -> None:
        self._forget(id(figure))
        if getattr(figure, _ENTRY_ATTR, None) is not None:
            delattr(figure, _ENTRY_ATTR)

    def clear(self) -> None:
        for figure in self.figures():
            self.release(figure)
        with self._lock:
            self._index.clear()

    def figures(self) -> list:
        with self._lock:
            refs = list(self._index.values())
        return [f for f in (ref() for ref in refs) if f is not None]

    def handle_close(self, target) -> None:
        """Drop registry entries matching a close request.

        Accepts the close call's own vocabulary: a figure object, a
        figure number, a figure label, "all", or nothing (the current
        figure).
        """
        if target == "all":
            self.clear()
            return
        if target is None:
            import matplotlib.pyplot as plt

            if not plt.get_fignums():
                return
            target = plt.gcf()
        for figure in self.figures():
            if (
                figure is target
                or (isinstance(target, int) and getattr(figure, "number", None) == target)
                or (isinstance(target, str) and figure.get_label() == target)
            ):
                self.release(figure)


registry = FigureRegistry()


def register_plot(figure, extractor: Extractor) -> None:
    """Append an extractor to its figure's registry entry."""
    entry = registry.entry_for(figure, create=True)
    entry.extractors.append(extractor)


def _resolve_axes(api_layer: str, args: tuple, kwargs: dict, result):
    if api_layer == LAYER_OBJECT:
        return args[0]
    ax = kwargs.get("ax")
    if ax is not None:
        return ax
    from matplotlib.axes import Axes

    if api_layer == LAYER_WRAPPER and isinstance(result, Axes):
        return result
    import matplotlib.pyplot as plt

    return plt.gca()


def register_call(descriptor, plot_type: PlotType, args, kwargs, result, snapshot) -> None:
    """Glue invoked by the interception wrappers after the original runs."""
    axes = _resolve_axes(descriptor.api_layer, args, kwargs, result)
    extractor = create_extractor(plot_type, axes)
    delta = diff_axes(axes, snapshot) if snapshot is not None else None
    extractor.bind_call(
        CallRecord(
            target=descriptor.target,
            api_layer=descriptor.api_layer,
            plot_type=plot_type,
            args=args,
            kwargs=kwargs,
            result=result,
            delta=delta,
        )
    )
    register_plot(axes.figure, extractor)


def finalize_figure(figure) -> FigureSchema:
    """Run every registered extractor and assemble the figure schema.

    Safe to call repeatedly: element id assignments are cached on the
    figure's registry entry, so an un-mutated figure serializes
    byte-identically across calls. The entry itself stays registered
    until the figure is closed or explicitly released.

    Raises
    ------
    ExtractionError
        If the figure has no registered plots ("nothing to extract"),
        or an extractor fails (the error names the subplot and layer),
        or the assembled document fails validation.
    """
    entry = registry.entry_for(figure)
    if entry is None or not entry.extractors:
        raise ExtractionError("nothing to extract: figure has no registered plots")
    entry.assign_element_ids()
    subplots = []
    for (row, col), group in entry.ordered():
        layers = []
        for layer_index, extractor in enumerate(group):
            try:
                layers.append(extractor.extract())
            except ExtractionError as exc:
                raise ExtractionError(
                    f"subplot ({row},{col}) layer {layer_index}: {exc}"
                ) from exc
        subplots.append(SubplotSchema(row=row, col=col, layers=layers))
    schema = FigureSchema(id=entry.figure_id, subplots=subplots)
    violations = validate_schema(schema)
    if violations:
        first = violations[0]
        raise ExtractionError(
            f"extracted schema invalid at {first.path}: {first.message}"
        )
    return schema
