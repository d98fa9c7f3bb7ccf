"""Declarative chart schema: value types, canonical JSON form, validation.

This is the wire contract shared by extraction, rendering, and the browser
exploration engine. Documents produced here are embedded verbatim in the
``maidr-data`` attribute of exported SVGs.
"""

from __future__ import annotations

import enum
import json
import math
import re
from dataclasses import dataclass, field


class PlotType(enum.Enum):
    """Closed set of chart kinds the instrumentation understands."""

    BAR = "bar"
    STACKED_BAR = "stacked_bar"
    DODGED_BAR = "dodged_bar"
    HISTOGRAM = "histogram"
    LINE = "line"
    MULTILINE = "multiline"
    BOX_HORIZONTAL = "box_horizontal"
    BOX_VERTICAL = "box_vertical"
    HEATMAP = "heatmap"
    SCATTER = "scatter"


class SchemaError(ValueError):
    """A schema document failed to parse, validate, or serialize."""

    def __init__(self, message: str, path: str = "$") -> None:
        super().__init__(f"{path}: {message}")
        self.message = message
        self.path = path


class UnsupportedPlotTypeError(SchemaError):
    """A document names a plot type outside the closed enumeration."""

    def __init__(self, plot_type: str, path: str = "$") -> None:
        super().__init__(f"unsupported type: {plot_type!r}", path)
        self.plot_type = plot_type


@dataclass(slots=True)
class Violation:
    """One invariant breach found by :func:`validate_schema`."""

    path: str
    message: str


@dataclass(slots=True)
class BarPoint:
    """One bar: a category label (or numeric center) and its value."""

    x: str | float | int
    y: float | int


@dataclass(slots=True)
class HistogramBin:
    """One histogram bin; ``x`` is the bin center."""

    x: float
    y: float
    xmin: float
    xmax: float


@dataclass(slots=True)
class LinePoint:
    x: float
    y: float


@dataclass(slots=True)
class SeriesPoint:
    """Multiline vertex carrying the series it belongs to."""

    x: float
    y: float
    series_label: str


@dataclass(slots=True)
class StackSegment:
    """One segment of a stacked or dodged bar group."""

    x: str | float | int
    fill: str
    y: float | int


@dataclass(slots=True)
class BoxStats:
    """Five-number summary plus outliers for one box group."""

    lower_extreme: float
    q1: float
    median: float
    q3: float
    upper_extreme: float
    outliers: list[float] = field(default_factory=list)


@dataclass(slots=True)
class HeatmapGrid:
    """Row-major value grid with its row and column labels."""

    values: list[list[float]]
    row_labels: list[str]
    col_labels: list[str]


DataPoint = (
    BarPoint
    | HistogramBin
    | LinePoint
    | SeriesPoint
    | StackSegment
    | BoxStats
    | HeatmapGrid
)

# Concrete point class required for each plot type.
POINT_TYPES: dict[PlotType, type] = {
    PlotType.BAR: BarPoint,
    PlotType.HISTOGRAM: HistogramBin,
    PlotType.LINE: LinePoint,
    PlotType.SCATTER: LinePoint,
    PlotType.MULTILINE: SeriesPoint,
    PlotType.STACKED_BAR: StackSegment,
    PlotType.DODGED_BAR: StackSegment,
    PlotType.BOX_HORIZONTAL: BoxStats,
    PlotType.BOX_VERTICAL: BoxStats,
    PlotType.HEATMAP: HeatmapGrid,
}


@dataclass(slots=True)
class AxisInfo:
    """Axis labels and title; ``x_levels`` only for categorical axes."""

    x_label: str = ""
    y_label: str = ""
    title: str = ""
    x_levels: list[str] | None = None


@dataclass(slots=True)
class LayerSchema:
    """One drawn layer: its type, axis semantics, data, and SVG selector."""

    plot_type: PlotType
    axes: AxisInfo
    data: list[DataPoint]
    selector: str


@dataclass(slots=True)
class SubplotSchema:
    """Layers sharing one cell of the figure's subplot grid."""

    row: int
    col: int
    layers: list[LayerSchema]


@dataclass(slots=True)
class FigureSchema:
    """Complete semantic description of one figure."""

    id: str
    subplots: list[SubplotSchema]


# One comma-separated list of attribute selector terms, e.g.
# [maidr-id="maidr-1-0"], [maidr-id="maidr-1-1"]
_SELECTOR_TERM = re.compile(
    r'\[[A-Za-z_][\w.-]*(?:[~^$*|]?="(?:[^"\\]|\\.)*")?\]'
)


def _is_valid_selector(selector: str) -> bool:
    if not selector:
        return False
    return all(_SELECTOR_TERM.fullmatch(term.strip()) for term in selector.split(","))


def _is_number(value: object) -> bool:
    # bool is an int subclass; it is never a chart value
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def validate_schema(schema: FigureSchema) -> list[Violation]:
    """Check every schema invariant.

    Returns an empty list iff the document is valid; otherwise one entry
    per violation, each carrying a JSON-path location. Never raises.
    """
    out: list[Violation] = []
    if not isinstance(schema.id, str) or not schema.id:
        out.append(Violation("$.id", "figure id must be a non-empty string"))
    if not schema.subplots:
        out.append(Violation("$.subplots", "no subplots"))
    seen_positions: dict[tuple[int, int], int] = {}
    for i, sub in enumerate(schema.subplots):
        spath = f"$.subplots[{i}]"
        if sub.row < 0 or sub.col < 0:
            out.append(Violation(spath, "grid position must be non-negative"))
        key = (sub.row, sub.col)
        if key in seen_positions:
            out.append(
                Violation(
                    spath,
                    f"duplicate grid position {key} (also subplot {seen_positions[key]})",
                )
            )
        else:
            seen_positions[key] = i
        if not sub.layers:
            out.append(Violation(f"{spath}.layers", "subplot has no layers"))
        for j, layer in enumerate(sub.layers):
            _validate_layer(layer, f"{spath}.layers[{j}]", out)
    return out


def _validate_layer(layer: LayerSchema, path: str, out: list[Violation]) -> None:
    if not isinstance(layer.plot_type, PlotType):
        out.append(Violation(f"{path}.plot_type", "not a member of the plot type enumeration"))
        return
    if not layer.data:
        out.append(Violation(f"{path}.data", "layer has no data"))
    if not _is_valid_selector(layer.selector):
        out.append(Violation(f"{path}.selector", "not a valid attribute selector"))
    levels = layer.axes.x_levels
    if levels is not None:
        if not levels:
            out.append(Violation(f"{path}.axes.x_levels", "present but empty"))
        if len(set(levels)) != len(levels):
            out.append(Violation(f"{path}.axes.x_levels", "duplicate category labels"))
    expected = POINT_TYPES[layer.plot_type]
    # scalar point lists are usually homogeneous; scan cheaply and only
    # walk point-by-point when something is off (or per-point checks exist)
    needs_point_walk = (
        expected is BoxStats
        or expected is HeatmapGrid
        or not all(type(p) is expected for p in layer.data)
    )
    if needs_point_walk:
        for k, point in enumerate(layer.data):
            ppath = f"{path}.data[{k}]"
            if type(point) is not expected:
                out.append(
                    Violation(
                        ppath,
                        f"expected {expected.__name__} for {layer.plot_type.value}, "
                        f"got {type(point).__name__}",
                    )
                )
                continue
            if isinstance(point, BoxStats):
                _validate_box(point, ppath, out)
            elif isinstance(point, HeatmapGrid):
                _validate_grid(point, ppath, out)
    if layer.plot_type is PlotType.HISTOGRAM:
        _validate_bins(layer.data, path, out)


def _validate_box(point: BoxStats, path: str, out: list[Violation]) -> None:
    ordered = (
        point.lower_extreme <= point.q1 <= point.median <= point.q3 <= point.upper_extreme
    )
    if not ordered:
        out.append(
            Violation(path, "box summary must be ordered lower_extreme <= q1 <= median <= q3 <= upper_extreme")
        )
    for v in point.outliers:
        if point.lower_extreme <= v <= point.upper_extreme:
            out.append(
                Violation(
                    f"{path}.outliers",
                    f"outlier {v!r} lies inside [lower_extreme, upper_extreme]",
                )
            )
            break


def _validate_grid(point: HeatmapGrid, path: str, out: list[Violation]) -> None:
    if len(point.values) != len(point.row_labels):
        out.append(
            Violation(
                f"{path}.values",
                f"{len(point.values)} rows but {len(point.row_labels)} row labels",
            )
        )
    widths = {len(row) for row in point.values}
    if len(widths) > 1:
        out.append(Violation(f"{path}.values", "ragged grid"))
    elif point.values and widths != {len(point.col_labels)}:
        out.append(
            Violation(
                f"{path}.values",
                f"{widths.pop()} columns but {len(point.col_labels)} column labels",
            )
        )


def _validate_bins(data: list[DataPoint], path: str, out: list[Violation]) -> None:
    bins = [p for p in data if isinstance(p, HistogramBin)]
    for k, b in enumerate(bins):
        if not (b.xmin < b.xmax):
            out.append(Violation(f"{path}.data[{k}]", "bin requires xmin < xmax"))
    ordered = sorted(bins, key=lambda b: b.xmin)
    for prev, nxt in zip(ordered, ordered[1:]):
        overlaps = nxt.xmin < prev.xmax and not math.isclose(
            nxt.xmin, prev.xmax, rel_tol=1e-9, abs_tol=1e-12
        )
        if overlaps:
            out.append(Violation(f"{path}.data", "bins overlap"))
            break


def _require_finite(value: object, path: str) -> object:
    if _is_number(value) and isinstance(value, float) and not math.isfinite(value):
        raise SchemaError("non-finite value cannot be serialized", path)
    return value


def _point_to_doc(point: DataPoint, path: str) -> dict:
    if isinstance(point, BarPoint):
        return {"x": _require_finite(point.x, f"{path}.x"), "y": _require_finite(point.y, f"{path}.y")}
    if isinstance(point, HistogramBin):
        return {
            "x": _require_finite(point.x, f"{path}.x"),
            "y": _require_finite(point.y, f"{path}.y"),
            "xmin": _require_finite(point.xmin, f"{path}.xmin"),
            "xmax": _require_finite(point.xmax, f"{path}.xmax"),
        }
    if isinstance(point, SeriesPoint):
        return {
            "x": _require_finite(point.x, f"{path}.x"),
            "y": _require_finite(point.y, f"{path}.y"),
            "series_label": point.series_label,
        }
    if isinstance(point, LinePoint):
        return {"x": _require_finite(point.x, f"{path}.x"), "y": _require_finite(point.y, f"{path}.y")}
    if isinstance(point, StackSegment):
        return {
            "x": _require_finite(point.x, f"{path}.x"),
            "fill": point.fill,
            "y": _require_finite(point.y, f"{path}.y"),
        }
    if isinstance(point, BoxStats):
        return {
            "lower_extreme": _require_finite(point.lower_extreme, f"{path}.lower_extreme"),
            "q1": _require_finite(point.q1, f"{path}.q1"),
            "median": _require_finite(point.median, f"{path}.median"),
            "q3": _require_finite(point.q3, f"{path}.q3"),
            "upper_extreme": _require_finite(point.upper_extreme, f"{path}.upper_extreme"),
            "outliers": [
                _require_finite(v, f"{path}.outliers[{i}]") for i, v in enumerate(point.outliers)
            ],
        }
    if isinstance(point, HeatmapGrid):
        return {
            "values": [
                [_require_finite(v, f"{path}.values[{r}][{c}]") for c, v in enumerate(row)]
                for r, row in enumerate(point.values)
            ],
            "row_labels": list(point.row_labels),
            "col_labels": list(point.col_labels),
        }
    raise SchemaError(f"unknown data point type {type(point).__name__}", path)


def _points_to_docs(data: list[DataPoint], path: str) -> list[dict]:
    """Serialize a homogeneous point list, cheaply in the common case.

    The bulk branches skip per-field path bookkeeping; whenever anything
    is unusual (mixed types, a non-finite value, a non-numeric field) the
    per-point path reruns and raises with the exact offending location.
    """
    kind = type(data[0]) if data else None
    finite = math.isfinite
    try:
        if kind is LinePoint:
            if all(finite(p.x) and finite(p.y) for p in data):
                return [{"x": p.x, "y": p.y} for p in data]
        elif kind is SeriesPoint:
            if all(finite(p.x) and finite(p.y) for p in data):
                return [
                    {"x": p.x, "y": p.y, "series_label": p.series_label} for p in data
                ]
        elif kind is BarPoint:
            if all((type(p.x) is str or finite(p.x)) and finite(p.y) for p in data):
                return [{"x": p.x, "y": p.y} for p in data]
        elif kind is StackSegment:
            if all((type(p.x) is str or finite(p.x)) and finite(p.y) for p in data):
                return [{"x": p.x, "fill": p.fill, "y": p.y} for p in data]
        elif kind is HistogramBin:
            if all(
                finite(p.x) and finite(p.y) and finite(p.xmin) and finite(p.xmax)
                for p in data
            ):
                return [
                    {"x": p.x, "y": p.y, "xmin": p.xmin, "xmax": p.xmax} for p in data
                ]
        elif kind is HeatmapGrid and len(data) == 1:
            grid = data[0]
            if all(all(map(finite, row)) for row in grid.values):
                return [
                    {
                        "values": [list(row) for row in grid.values],
                        "row_labels": list(grid.row_labels),
                        "col_labels": list(grid.col_labels),
                    }
                ]
    except TypeError:
        pass
    return [_point_to_doc(point, f"{path}[{k}]") for k, point in enumerate(data)]


def serialize_schema(schema: FigureSchema) -> str:
    """Serialize a validated schema to canonical JSON.

    Canonical means stable key order, compact separators, UTF-8 text.
    Structurally equal schemas serialize to byte-identical output, and
    ``parse_schema(serialize_schema(s))`` equals ``s``.

    Raises
    ------
    SchemaError
        If the schema fails validation, or a data value is NaN or
        infinite (the error names the offending layer and point index).
    """
    violations = validate_schema(schema)
    if violations:
        first = violations[0]
        raise SchemaError(
            f"invalid schema ({len(violations)} violation(s)): {first.message}", first.path
        )
    doc = {
        "id": schema.id,
        "subplots": [
            {
                "row": sub.row,
                "col": sub.col,
                "layers": [
                    _layer_to_doc(layer, f"$.subplots[{i}].layers[{j}]")
                    for j, layer in enumerate(sub.layers)
                ],
            }
            for i, sub in enumerate(schema.subplots)
        ],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _layer_to_doc(layer: LayerSchema, path: str) -> dict:
    axes: dict = {
        "x_label": layer.axes.x_label,
        "y_label": layer.axes.y_label,
        "title": layer.axes.title,
    }
    if layer.axes.x_levels is not None:
        axes["x_levels"] = list(layer.axes.x_levels)
    return {
        "type": layer.plot_type.value,
        "axes": axes,
        "selector": layer.selector,
        "data": _points_to_docs(layer.data, f"{path}.data"),
    }


def parse_schema(text: str) -> FigureSchema:
    """Parse canonical JSON back into a validated :class:`FigureSchema`.

    Raises
    ------
    UnsupportedPlotTypeError
        For a plot type string outside the enumeration.
    SchemaError
        For malformed JSON, a missing or unknown field (the error names
        the JSON path), or any invariant violation.
    """
    try:
        doc = json.loads(text)
    except ValueError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    schema = _figure_from_doc(doc)
    violations = validate_schema(schema)
    if violations:
        first = violations[0]
        raise SchemaError(first.message, first.path)
    return schema


def _expect(doc: dict, key: str, path: str) -> object:
    if not isinstance(doc, dict):
        raise SchemaError(f"expected an object, got {type(doc).__name__}", path)
    if key not in doc:
        raise SchemaError(f"missing required field {key!r}", path)
    return doc[key]


def _reject_unknown(doc: dict, allowed: set[str], path: str) -> None:
    unknown = set(doc) - allowed
    if unknown:
        raise SchemaError(f"unknown field(s): {sorted(unknown)}", path)


def _figure_from_doc(doc: object) -> FigureSchema:
    if not isinstance(doc, dict):
        raise SchemaError("document root must be an object")
    _reject_unknown(doc, {"id", "subplots"}, "$")
    fig_id = _expect(doc, "id", "$")
    subplots_doc = _expect(doc, "subplots", "$")
    if not isinstance(fig_id, str):
        raise SchemaError("figure id must be a string", "$.id")
    if not isinstance(subplots_doc, list):
        raise SchemaError("subplots must be an array", "$.subplots")
    subplots = [
        _subplot_from_doc(sub, f"$.subplots[{i}]") for i, sub in enumerate(subplots_doc)
    ]
    return FigureSchema(id=fig_id, subplots=subplots)


def _subplot_from_doc(doc: object, path: str) -> SubplotSchema:
    if not isinstance(doc, dict):
        raise SchemaError("subplot must be an object", path)
    _reject_unknown(doc, {"row", "col", "layers"}, path)
    row = _expect(doc, "row", path)
    col = _expect(doc, "col", path)
    layers_doc = _expect(doc, "layers", path)
    if not isinstance(row, int) or isinstance(row, bool):
        raise SchemaError("row must be an integer", f"{path}.row")
    if not isinstance(col, int) or isinstance(col, bool):
        raise SchemaError("col must be an integer", f"{path}.col")
    if not isinstance(layers_doc, list):
        raise SchemaError("layers must be an array", f"{path}.layers")
    layers = [
        _layer_from_doc(layer, f"{path}.layers[{j}]") for j, layer in enumerate(layers_doc)
    ]
    return SubplotSchema(row=row, col=col, layers=layers)


def _layer_from_doc(doc: object, path: str) -> LayerSchema:
    if not isinstance(doc, dict):
        raise SchemaError("layer must be an object", path)
    _reject_unknown(doc, {"type", "axes", "data", "selector"}, path)
    type_str = _expect(doc, "type", path)
    if not isinstance(type_str, str):
        raise SchemaError("type must be a string", f"{path}.type")
    try:
        plot_type = PlotType(type_str)
    except ValueError:
        raise UnsupportedPlotTypeError(type_str, f"{path}.type") from None
    axes = _axes_from_doc(_expect(doc, "axes", path), f"{path}.axes")
    selector = _expect(doc, "selector", path)
    if not isinstance(selector, str):
        raise SchemaError("selector must be a string", f"{path}.selector")
    data_doc = _expect(doc, "data", path)
    if not isinstance(data_doc, list):
        raise SchemaError("data must be an array", f"{path}.data")
    data = [
        _point_from_doc(p, plot_type, f"{path}.data[{k}]") for k, p in enumerate(data_doc)
    ]
    return LayerSchema(plot_type=plot_type, axes=axes, data=data, selector=selector)


def _axes_from_doc(doc: object, path: str) -> AxisInfo:
    if not isinstance(doc, dict):
        raise SchemaError("axes must be an object", path)
    _reject_unknown(doc, {"x_label", "y_label", "title", "x_levels"}, path)
    labels = {}
    for key in ("x_label", "y_label", "title"):
        value = _expect(doc, key, path)
        if not isinstance(value, str):
            raise SchemaError(f"{key} must be a string", f"{path}.{key}")
        labels[key] = value
    levels = doc.get("x_levels")
    if levels is not None:
        if not isinstance(levels, list) or not all(isinstance(v, str) for v in levels):
            raise SchemaError("x_levels must be an array of strings", f"{path}.x_levels")
    return AxisInfo(x_levels=levels, **labels)


def _number_field(doc: dict, key: str, path: str) -> float:
    value = _expect(doc, key, path)
    if not _is_number(value):
        raise SchemaError(f"{key} must be a number", f"{path}.{key}")
    return value


def _string_field(doc: dict, key: str, path: str) -> str:
    value = _expect(doc, key, path)
    if not isinstance(value, str):
        raise SchemaError(f"{key} must be a string", f"{path}.{key}")
    return value


def _point_from_doc(doc: object, plot_type: PlotType, path: str) -> DataPoint:
    if not isinstance(doc, dict):
        raise SchemaError("data point must be an object", path)
    kind = POINT_TYPES[plot_type]
    if kind is BarPoint:
        _reject_unknown(doc, {"x", "y"}, path)
        x = _expect(doc, "x", path)
        if not (_is_number(x) or isinstance(x, str)):
            raise SchemaError("x must be a category label or number", f"{path}.x")
        return BarPoint(x=x, y=_number_field(doc, "y", path))
    if kind is HistogramBin:
        _reject_unknown(doc, {"x", "y", "xmin", "xmax"}, path)
        return HistogramBin(
            x=_number_field(doc, "x", path),
            y=_number_field(doc, "y", path),
            xmin=_number_field(doc, "xmin", path),
            xmax=_number_field(doc, "xmax", path),
        )
    if kind is SeriesPoint:
        _reject_unknown(doc, {"x", "y", "series_label"}, path)
        return SeriesPoint(
            x=_number_field(doc, "x", path),
            y=_number_field(doc, "y", path),
            series_label=_string_field(doc, "series_label", path),
        )
    if kind is LinePoint:
        _reject_unknown(doc, {"x", "y"}, path)
        return LinePoint(x=_number_field(doc, "x", path), y=_number_field(doc, "y", path))
    if kind is StackSegment:
        _reject_unknown(doc, {"x", "fill", "y"}, path)
        x = _expect(doc, "x", path)
        if not (_is_number(x) or isinstance(x, str)):
            raise SchemaError("x must be a category label or number", f"{path}.x")
        return StackSegment(
            x=x, fill=_string_field(doc, "fill", path), y=_number_field(doc, "y", path)
        )
    if kind is BoxStats:
        _reject_unknown(
            doc, {"lower_extreme", "q1", "median", "q3", "upper_extreme", "outliers"}, path
        )
        outliers = _expect(doc, "outliers", path)
        if not isinstance(outliers, list) or not all(_is_number(v) for v in outliers):
            raise SchemaError("outliers must be an array of numbers", f"{path}.outliers")
        return BoxStats(
            lower_extreme=_number_field(doc, "lower_extreme", path),
            q1=_number_field(doc, "q1", path),
            median=_number_field(doc, "median", path),
            q3=_number_field(doc, "q3", path),
            upper_extreme=_number_field(doc, "upper_extreme", path),
            outliers=list(outliers),
        )
    if kind is HeatmapGrid:
        _reject_unknown(doc, {"values", "row_labels", "col_labels"}, path)
        values = _expect(doc, "values", path)
        grid_ok = isinstance(values, list) and all(
            isinstance(row, list) and all(_is_number(v) for v in row) for row in values
        )
        if not grid_ok:
            raise SchemaError("values must be a two-dimensional number array", f"{path}.values")
        labels = {}
        for key in ("row_labels", "col_labels"):
            lab = _expect(doc, key, path)
            if not isinstance(lab, list) or not all(isinstance(v, str) for v in lab):
                raise SchemaError(f"{key} must be an array of strings", f"{path}.{key}")
            labels[key] = list(lab)
        return HeatmapGrid(values=[list(row) for row in values], **labels)
    raise SchemaError(f"no parser for plot type {plot_type.value}", path)
