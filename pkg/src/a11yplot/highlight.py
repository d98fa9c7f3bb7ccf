"""Identifier flow from drawn primitives into the serialized SVG.

Element ids are assigned to artists by the figure registry; this module
carries them through the draw pass (as graphics ids, only while a scope
is active) and into the exported SVG text (as ``maidr`` attributes), so
every schema point can be located in the document and vice versa.
"""

from __future__ import annotations

import functools
import logging
import re
import threading
import xml.etree.ElementTree as ET
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field

from matplotlib.collections import PathCollection, QuadMesh
from matplotlib.lines import Line2D
from matplotlib.patches import Patch

from . import extraction

log = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class ElementRef:
    """Where one SVG element's data lives inside the figure schema.

    ``point`` is the data/series index for per-point and per-series
    elements, and None for an element that carries its whole layer
    (vertex order equals point order in that case).
    """

    figure_id: str
    row: int
    col: int
    layer: int
    point: int | None


class ElementsMap:
    """Unique element id -> schema location, for one figure's render."""

    def __init__(self, entries: Mapping[str, ElementRef] | None = None) -> None:
        self._entries: dict[str, ElementRef] = dict(entries or {})

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, element_id: str) -> bool:
        return element_id in self._entries

    def __getitem__(self, element_id: str) -> ElementRef:
        return self._entries[element_id]

    def ids(self) -> list[str]:
        return list(self._entries)

    def items(self) -> Iterator[tuple[str, ElementRef]]:
        return iter(self._entries.items())


def elements_for(figure) -> ElementsMap:
    """The figure's element map, as assembled by its last finalize."""
    entry = extraction.registry.entry_for(figure)
    if entry is None:
        return ElementsMap()
    return ElementsMap(
        {
            eid: ElementRef(
                figure_id=figure_id, row=pos[0], col=pos[1], layer=layer, point=point
            )
            for eid, (figure_id, pos, layer, point) in entry.element_index.items()
        }
    )


# ---------------------------------------------------------------------------
# draw-time tagging

_active_scopes: dict[int, "HighlightScope"] = {}
_scopes_lock = threading.Lock()


class HighlightScope:
    """Activates graphics-id tagging for one figure's draw/export pass.

    While active, patched draw paths stamp each assigned primitive with
    its element id. On exit every touched graphics id is restored, so
    the figure leaves the scope exactly as it entered.
    """

    def __init__(self, figure) -> None:
        self.figure = figure
        entry = extraction.registry.entry_for(figure)
        self.assignments: dict[int, str] = dict(entry.assignments) if entry else {}
        self.active = False
        self._saved: dict[int, tuple[object, object]] = {}

    def __enter__(self) -> "HighlightScope":
        with _scopes_lock:
            _active_scopes[id(self.figure)] = self
        self.active = True
        return self

    def __exit__(self, *exc_info) -> bool:
        self.active = False
        with _scopes_lock:
            _active_scopes.pop(id(self.figure), None)
        for artist, previous in self._saved.values():
            artist.set_gid(previous)
        self._saved.clear()
        return False

    def tag(self, primitive) -> str | None:
        element_id = self.assignments.get(id(primitive))
        if element_id is None:
            return None
        key = id(primitive)
        if key not in self._saved:
            self._saved[key] = (primitive, primitive.get_gid())
            primitive.set_gid(element_id)
        return element_id


def _scope_for(primitive) -> HighlightScope | None:
    get_figure = getattr(primitive, "get_figure", None)
    figure = get_figure() if get_figure is not None else None
    if figure is None:
        return None
    with _scopes_lock:
        return _active_scopes.get(id(figure))


def tag_primitive(primitive) -> str | None:
    """Stamp a data-bearing primitive with its element id, if assigned.

    No-op (returns None) outside an active scope or for primitives the
    registry tracks nothing about, so gridlines, spines, and every other
    decoration stay untouched.
    """
    scope = _scope_for(primitive)
    if scope is None or not scope.active:
        return None
    return scope.tag(primitive)


_HOOK_CLASSES = (Patch, Line2D, PathCollection, QuadMesh)


def install_draw_hooks() -> list[str]:
    """Patch the four data-bearing primitive classes' draw methods.

    Idempotent; returns the class names newly hooked.
    """
    hooked = []
    for cls in _HOOK_CLASSES:
        current = cls.__dict__.get("draw", cls.draw)
        if getattr(current, "__a11yplot_hooked__", False):
            continue

        @functools.wraps(current)
        def draw(artist, renderer, *args, _orig=current, **kwargs):
            tag_primitive(artist)
            return _orig(artist, renderer, *args, **kwargs)

        draw.__a11yplot_hooked__ = True
        cls.draw = draw
        hooked.append(cls.__name__)
    return hooked


# ---------------------------------------------------------------------------
# SVG text augmentation


@dataclass(slots=True)
class InjectionResult:
    """Outcome of attribute injection over one SVG document."""

    svg: str
    injected: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def inject_element_attributes(svg: str, elements: ElementsMap) -> InjectionResult:
    """Add ``maidr="true" maidr-id="..."`` to every mapped SVG element.

    Elements are located by the graphics id the draw pass stamped on
    them. A mapped id missing from the document (clipped or culled by
    the exporter) produces a warning entry, never an error. Nothing
    outside the mapped elements is touched; with an empty map the
    document is returned byte-identical.
    """
    found: list[tuple[int, int, str]] = []
    injected: list[str] = []
    warnings: list[str] = []
    for element_id in elements.ids():
        needle = f'id="{element_id}"'
        position = svg.find(needle)
        if position < 0:
            warnings.append(
                f"element {element_id} not present in SVG output (culled or clipped?)"
            )
            continue
        found.append((position, len(needle), element_id))
        injected.append(element_id)
    found.sort()
    parts: list[str] = []
    cursor = 0
    for position, length, element_id in found:
        end = position + length
        parts.append(svg[cursor:end])
        parts.append(f' maidr="true" maidr-id="{element_id}"')
        cursor = end
    parts.append(svg[cursor:])
    return InjectionResult(svg="".join(parts), injected=injected, warnings=warnings)


# quoteattr picks single quotes when the value holds double quotes, so the
# payload pattern must accept either style
_STRIP_PATTERNS = (
    re.compile(r' maidr="true"'),
    re.compile(r' maidr-id="[^"]*"'),
    re.compile(r' maidr-data="[^"]*"'),
    re.compile(r" maidr-data='[^']*'"),
)


def strip_instrumentation(svg: str) -> str:
    """Remove every injected attribute, recovering the plain export."""
    for pattern in _STRIP_PATTERNS:
        svg = pattern.sub("", svg)
    return svg


def _normalized(element: ET.Element) -> None:
    if "id" in element.attrib:
        # id values are salt- and instrumentation-dependent; presence is not
        element.set("id", "")
    for child in element:
        _normalized(child)


def structurally_equal(svg_a: str, svg_b: str) -> bool:
    """Tree equality of two SVG documents, ignoring id attribute values."""
    try:
        tree_a = ET.fromstring(svg_a)
        tree_b = ET.fromstring(svg_b)
    except ET.ParseError:
        return False
    _normalized(tree_a)
    _normalized(tree_b)
    return _elements_equal(tree_a, tree_b)


def _elements_equal(a: ET.Element, b: ET.Element) -> bool:
    if a.tag != b.tag or a.attrib != b.attrib:
        return False
    if (a.text or "").strip() != (b.text or "").strip():
        return False
    if (a.tail or "").strip() != (b.tail or "").strip():
        return False
    if len(a) != len(b):
        return False
    return all(_elements_equal(ca, cb) for ca, cb in zip(a, b))
