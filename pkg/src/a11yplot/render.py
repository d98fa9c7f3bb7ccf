"""Final document assembly and delivery.

The render pipeline: finalize the figure's schema, serialize it, export
SVG with element tagging active, inject the per-element attributes and
the root payload, and wrap everything in a self-contained HTML document
carrying the exploration engine.
"""

from __future__ import annotations

import atexit
import contextlib
import functools
import importlib.resources
import io
import logging
import os
import shutil
import sys
import tempfile
import webbrowser
from dataclasses import dataclass
from html import escape as html_escape
from pathlib import Path
from xml.sax.saxutils import quoteattr

import matplotlib as mpl

from . import extraction
from .highlight import HighlightScope, elements_for, inject_element_attributes
from .schema import serialize_schema

log = logging.getLogger(__name__)

MODE_INLINE = "inline-iframe"
MODE_BROWSER = "temp-file-browser"
MODE_RAW = "raw-html"
DELIVERY_MODES = (MODE_INLINE, MODE_BROWSER, MODE_RAW)

DISPLAY_ENV_VAR = "A11YPLOT_DISPLAY"
KEEP_TEMP_ENV_VAR = "A11YPLOT_KEEP_TEMP"

_FALLBACK_FIGURE_ID = "figure"


@dataclass(slots=True)
class RenderedDocument:
    """A fully assembled accessible figure document."""

    svg: str
    schema_json: str | None
    html: str
    delivery_mode: str
    figure_id: str

    @property
    def instrumented(self) -> bool:
        return self.schema_json is not None


def export_svg(figure, hashsalt: str | None = None) -> str:
    """Plain SVG text for a figure, deterministic for a fixed salt."""
    buffer = io.BytesIO()
    # a fixed hashsalt plus a pinned Date make repeated exports identical
    with mpl.rc_context({"svg.hashsalt": hashsalt or _FALLBACK_FIGURE_ID}):
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue().decode("utf-8")


def inject_root_payload(svg: str, schema_json: str) -> str:
    """Attach the serialized schema to the SVG root as ``maidr-data``."""
    start = svg.find("<svg")
    if start < 0:
        raise ValueError("document has no <svg> root element")
    end = svg.find(">", start)
    if end < 0:
        raise ValueError("unterminated <svg> root tag")
    insert = end - 1 if svg[end - 1] == "/" else end
    return f"{svg[:insert]} maidr-data={quoteattr(schema_json)}{svg[insert:]}"


@functools.lru_cache(maxsize=1)
def _engine_source() -> str:
    source = (
        importlib.resources.files("a11yplot").joinpath("assets/engine.js").read_text("utf-8")
    )
    # the engine is inlined into a <script> block; close tags in string
    # literals must not terminate it early
    return source.replace("</script", "<\\/script")


_RESIZE_POSTER = """\
(function () {
  if (window.parent === window) { return; }
  var post = function () {
    window.parent.postMessage(
      { type: "a11yplot:resize", height: document.documentElement.scrollHeight },
      "*"
    );
  };
  window.addEventListener("load", post);
  window.addEventListener("resize", post);
})();
"""


def _svg_element_text(svg: str) -> str:
    # standalone exports open with an XML prolog and a DOCTYPE, neither of
    # which is valid inside an HTML body; embed from the root element on
    start = svg.find("<svg")
    return svg[start:] if start >= 0 else svg


def _assemble_html(svg: str, figure_id: str, instrumented: bool) -> str:
    engine_block = (
        f"<script>\n{_engine_source()}\n</script>\n" if instrumented else ""
    )
    return (
        "<!DOCTYPE html>\n"
        '<html lang="en">\n'
        "<head>\n"
        '<meta charset="utf-8"/>\n'
        f"<title>{html_escape(figure_id)}</title>\n"
        "<style>\n"
        "body { margin: 0; }\n"
        ".a11yplot-container svg:focus { outline: 2px solid #1a73e8; }\n"
        "</style>\n"
        "</head>\n"
        "<body>\n"
        f'<div class="a11yplot-container" id="{html_escape(figure_id)}-container">\n'
        f"{_svg_element_text(svg)}\n"
        "</div>\n"
        f"{engine_block}"
        f"<script>\n{_RESIZE_POSTER}</script>\n"
        "</body>\n"
        "</html>\n"
    )


def detect_environment() -> str:
    """Pick a delivery mode from the host session.

    The ``A11YPLOT_DISPLAY`` environment variable, when set to a valid
    mode, wins over detection. A rich-display kernel selects inline
    frames; everything else falls back to a temp file plus the system
    browser.
    """
    override = os.environ.get(DISPLAY_ENV_VAR, "").strip()
    if override:
        if override in DELIVERY_MODES:
            return override
        log.warning(
            "%s=%r is not one of %s; ignoring", DISPLAY_ENV_VAR, override, DELIVERY_MODES
        )
    try:
        from IPython import get_ipython
    except ImportError:
        return MODE_BROWSER
    shell = get_ipython()
    if shell is not None and type(shell).__name__ == "ZMQInteractiveShell":
        return MODE_INLINE
    return MODE_BROWSER


def render_document(figure, delivery_mode: str | None = None) -> RenderedDocument:
    """Run the full augmentation pipeline for one figure.

    A figure with no registered plots degrades to an uninstrumented
    document: the plain SVG, no payload, no engine.
    """
    mode = delivery_mode or detect_environment()
    if mode not in DELIVERY_MODES:
        raise ValueError(f"unknown delivery mode {mode!r}; expected one of {DELIVERY_MODES}")
    try:
        schema = extraction.finalize_figure(figure)
    except extraction.ExtractionError as exc:
        log.warning("rendering without instrumentation: %s", exc)
        svg = export_svg(figure)
        return RenderedDocument(
            svg=svg,
            schema_json=None,
            html=_assemble_html(svg, _FALLBACK_FIGURE_ID, instrumented=False),
            delivery_mode=mode,
            figure_id=_FALLBACK_FIGURE_ID,
        )
    entry = extraction.registry.entry_for(figure)
    schema_json = serialize_schema(schema)
    with HighlightScope(figure):
        svg = export_svg(figure, hashsalt=entry.figure_id)
    injection = inject_element_attributes(svg, elements_for(figure))
    for warning in injection.warnings:
        log.warning("%s", warning)
    svg = inject_root_payload(injection.svg, schema_json)
    html = _assemble_html(svg, entry.figure_id, instrumented=True)
    return RenderedDocument(
        svg=svg,
        schema_json=schema_json,
        html=html,
        delivery_mode=mode,
        figure_id=entry.figure_id,
    )


def iframe_html(document: RenderedDocument) -> str:
    """Sandboxed inline frame carrying the document, with auto-resize.

    The sandbox allows scripts but denies same-origin and navigation;
    the frame grows to content height via child-to-parent messages.
    """
    frame_id = f"{document.figure_id}-frame"
    listener = (
        "<script>\n"
        'window.addEventListener("message", function (event) {\n'
        "  var data = event.data;\n"
        '  if (!data || data.type !== "a11yplot:resize") { return; }\n'
        f'  var frame = document.getElementById("{frame_id}");\n'
        '  if (frame && typeof data.height === "number") {\n'
        '    frame.style.height = data.height + "px";\n'
        "  }\n"
        "});\n"
        "</script>"
    )
    return (
        f'<iframe id="{frame_id}" sandbox="allow-scripts" '
        'style="width: 100%; border: none;" '
        f'title="accessible figure {html_escape(document.figure_id)}" '
        f'srcdoc="{html_escape(document.html, quote=True)}"></iframe>\n'
        f"{listener}"
    )


_temp_root: Path | None = None


def _temp_directory() -> Path:
    global _temp_root
    if _temp_root is None:
        _temp_root = Path(tempfile.mkdtemp(prefix="a11yplot-"))
        if not os.environ.get(KEEP_TEMP_ENV_VAR):
            atexit.register(shutil.rmtree, str(_temp_root), ignore_errors=True)
    return _temp_root


def _write_temp(document: RenderedDocument) -> Path:
    path = _temp_directory() / f"{document.figure_id}.html"
    return _atomic_write(path, document.html)


def show(figure) -> None:
    """Render and deliver a figure in the current environment.

    Rich-display hosts get a sandboxed inline frame; plain sessions get
    a temp file opened in the system browser; with no browser available
    the temp-file path is printed instead.
    """
    document = render_document(figure)
    if document.delivery_mode == MODE_INLINE:
        try:
            from IPython.display import HTML, display
        except ImportError:
            log.warning("no rich-display host available; falling back to a temp file")
        else:
            display(HTML(iframe_html(document)))
            return
    if document.delivery_mode == MODE_RAW:
        sys.stdout.write(document.html)
        return
    path = _write_temp(document)
    opened = False
    with contextlib.suppress(webbrowser.Error):
        opened = webbrowser.open(path.as_uri())
    if not opened:
        print(f"accessible figure written to {path}")


def _atomic_write(path: Path, text: str) -> Path:
    path = Path(path)
    handle, staging = tempfile.mkstemp(
        dir=str(path.parent), prefix=f".{path.name}.", suffix=".part"
    )
    try:
        with os.fdopen(handle, "w", encoding="utf-8") as stream:
            stream.write(text)
        os.replace(staging, path)
    except BaseException:
        with contextlib.suppress(OSError):
            os.unlink(staging)
        raise
    return path


def save_html(figure, path) -> Path:
    """Write the figure's self-contained HTML document atomically.

    The engine is inlined, so the file reproduces full exploration
    behavior offline. Re-saving an un-mutated figure is byte-identical.
    """
    document = render_document(figure, delivery_mode=MODE_RAW)
    if not document.instrumented:
        log.warning("saving uninstrumented document: figure has no registered plots")
    return _atomic_write(Path(path), document.html)


def save_svg(figure, path) -> Path:
    """Write the figure's augmented SVG (attributes plus payload)."""
    document = render_document(figure, delivery_mode=MODE_RAW)
    if not document.instrumented:
        log.warning("saving uninstrumented document: figure has no registered plots")
    return _atomic_write(Path(path), document.svg)
