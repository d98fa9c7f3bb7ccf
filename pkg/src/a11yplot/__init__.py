"""Transparent accessibility instrumentation for matplotlib and seaborn.

Importing this package wraps the host toolkits' plot-creation functions
in place. Plotting code keeps working unchanged; figures rendered
through :func:`show`, :func:`save_html`, or :func:`save_svg` carry a
machine-readable description of every chart layer plus per-element
markup that a browser-side engine turns into keyboard-navigable text,
braille, and sonification.

    import a11yplot
    import matplotlib.pyplot as plt

    plt.bar(["a", "b", "c"], [2, 5, 3])
    a11yplot.save_html(plt.gcf(), "chart.html")
"""

from __future__ import annotations

from . import extraction, highlight, interception
from .extraction import ExtractionError, FigureRegistry, finalize_figure, registry
from .highlight import ElementsMap, HighlightScope, elements_for, inject_element_attributes
from .interception import InstallReport, install_patches, is_user_call, with_internal_context
from .render import (
    RenderedDocument,
    detect_environment,
    render_document,
    save_html,
    save_svg,
    show,
)
from .schema import (
    FigureSchema,
    LayerSchema,
    PlotType,
    SchemaError,
    UnsupportedPlotTypeError,
    parse_schema,
    serialize_schema,
    validate_schema,
)

__version__ = "0.1.0"

__all__ = [
    "ElementsMap",
    "ExtractionError",
    "FigureRegistry",
    "FigureSchema",
    "HighlightScope",
    "InstallReport",
    "LayerSchema",
    "PlotType",
    "RenderedDocument",
    "SchemaError",
    "UnsupportedPlotTypeError",
    "detect_environment",
    "elements_for",
    "finalize_figure",
    "inject_element_attributes",
    "install_patches",
    "is_user_call",
    "parse_schema",
    "registry",
    "render_document",
    "save_html",
    "save_svg",
    "serialize_schema",
    "show",
    "validate_schema",
    "with_internal_context",
]

# instrument eagerly: importing the package is the entire setup step
INSTALL_REPORT: InstallReport = install_patches()
highlight.install_draw_hooks()
