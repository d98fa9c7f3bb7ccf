"""Transparent wrapping of plot-creation entry points.

Wrapped functions behave exactly like the originals. A user-initiated
call is classified and registered for later extraction; calls the
plotting libraries make internally while servicing it are suppressed
through a per-thread depth counter, so one user call yields one layer.
"""

from __future__ import annotations

import contextlib
import contextvars
import functools
import importlib
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import extraction
from .schema import PlotType

log = logging.getLogger(__name__)

_internal_depth: contextvars.ContextVar[int] = contextvars.ContextVar(
    "a11yplot_internal_depth", default=0
)


def internal_depth() -> int:
    """Current nesting depth of internal (library-issued) plot calls."""
    return _internal_depth.get()


def is_user_call() -> bool:
    """True iff the current call originates from user code on this thread."""
    return _internal_depth.get() == 0


@contextlib.contextmanager
def _internal_scope():
    token = _internal_depth.set(_internal_depth.get() + 1)
    try:
        yield
    finally:
        _internal_depth.reset(token)


def with_internal_context(body: Callable[[], object]) -> object:
    """Run ``body`` with the internal-call depth incremented.

    The depth is restored on every exit path, including exceptions, so
    the counter stays balanced no matter how ``body`` terminates.
    """
    with _internal_scope():
        return body()


class _UnsupportedType:
    """Sentinel for calls outside the supported chart vocabulary."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "UNSUPPORTED"


class _DeferredType:
    """Hint for targets whose plot type depends on call arguments."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "DEFERRED"


UNSUPPORTED = _UnsupportedType()
DEFERRED = _DeferredType()

LAYER_SCRIPTING = "scripting"
LAYER_OBJECT = "object-oriented"
LAYER_WRAPPER = "high-level-wrapper"


@dataclass(slots=True, frozen=True)
class PatchDescriptor:
    """One wrap target: where it lives, what it tends to draw."""

    target: str
    plot_type_hint: PlotType | _UnsupportedType | _DeferredType
    api_layer: str


# Function names whose plot type is knowable up front or needs arguments.
# Everything else in the manifest is a pass-through (UNSUPPORTED).
_HINTS: dict[str, PlotType | _DeferredType] = {
    "bar": DEFERRED,
    "barh": DEFERRED,
    "boxplot": DEFERRED,
    "hist": DEFERRED,
    "plot": DEFERRED,
    "step": DEFERRED,
    "scatter": PlotType.SCATTER,
    "pcolormesh": PlotType.HEATMAP,
    "barplot": DEFERRED,
    "countplot": DEFERRED,
    "histplot": DEFERRED,
    "lineplot": DEFERRED,
    "scatterplot": PlotType.SCATTER,
    "heatmap": PlotType.HEATMAP,
}


def _layer_for(target: str) -> str:
    if target.startswith("matplotlib.pyplot."):
        return LAYER_SCRIPTING
    if target.startswith("matplotlib.axes."):
        return LAYER_OBJECT
    if target.startswith("seaborn."):
        return LAYER_WRAPPER
    raise ValueError(f"cannot infer API layer for target {target!r}")


def _hint_for(target: str) -> PlotType | _UnsupportedType | _DeferredType:
    # seaborn and Axes share several bare names ("boxplot", "heatmap")
    # without sharing argument conventions; hints key on the bare name,
    # classify_plot_call dispatches on the full target.
    return _HINTS.get(target.rsplit(".", 1)[-1], UNSUPPORTED)


MANIFEST_PATH = Path(__file__).with_name("manifest.txt")


def load_manifest(path: Path | str | None = None) -> list[PatchDescriptor]:
    """Read the checked-in wrap-target list into descriptors."""
    text = Path(path or MANIFEST_PATH).read_text(encoding="utf-8")
    descriptors = []
    for line in text.splitlines():
        target = line.strip()
        if not target or target.startswith("#"):
            continue
        descriptors.append(
            PatchDescriptor(
                target=target,
                plot_type_hint=_hint_for(target),
                api_layer=_layer_for(target),
            )
        )
    return descriptors


_TARGET_INDEX: dict[str, PatchDescriptor] = {d.target: d for d in load_manifest()}


def _get_arg(args: tuple, kwargs: dict, name: str, index: int | None) -> object:
    if name in kwargs:
        return kwargs[name]
    if index is not None and len(args) > index:
        return args[index]
    return None


def _ncols(value: object) -> int:
    try:
        arr = np.asarray(value)
    except Exception:
        return 1
    if arr.ndim == 2 and arr.shape[1] > 1:
        return arr.shape[1]
    return 1


def _count_plot_series(args: Sequence) -> int:
    # plot-style varargs: repeated (x, y, fmt) groups where fmt is a string
    series = 0
    i = 0
    args = list(args)
    while i < len(args):
        group = []
        while i < len(args) and not isinstance(args[i], str) and len(group) < 2:
            group.append(args[i])
            i += 1
        if i < len(args) and isinstance(args[i], str):
            i += 1
        if not group:
            break
        series += _ncols(group[-1])
    return max(series, 1)


def classify_plot_call(target: str, args: tuple, kwargs: dict) -> PlotType | _UnsupportedType:
    """Map a call on a wrapped target to a plot type, from arguments alone.

    Classification is deterministic: the target identity picks the rule,
    the arguments pick the member. Anything unclassifiable, including
    every hint-less manifest entry, returns the UNSUPPORTED sentinel and
    the original function simply runs.
    """
    descriptor = _TARGET_INDEX.get(target)
    if descriptor is None:
        raise ValueError(f"not a registered patch target: {target!r}")
    hint = descriptor.plot_type_hint
    if isinstance(hint, PlotType):
        return hint
    if hint is UNSUPPORTED:
        return UNSUPPORTED

    name = target.rsplit(".", 1)[-1]
    # Axes methods receive the axes itself first
    pos = args[1:] if descriptor.api_layer == LAYER_OBJECT else args

    if descriptor.api_layer == LAYER_WRAPPER:
        return _classify_wrapper(name, kwargs)

    if name in ("bar", "barh"):
        offset_name = "bottom" if name == "bar" else "left"
        if _get_arg(pos, kwargs, offset_name, 3) is not None:
            # an explicit offset means stacking, whatever else is present
            return PlotType.STACKED_BAR
        return PlotType.BAR
    if name == "hist":
        if kwargs.get("stacked"):
            return PlotType.STACKED_BAR
        data = _get_arg(pos, kwargs, "x", 0)
        if _is_multi_dataset(data):
            return UNSUPPORTED
        return PlotType.HISTOGRAM
    if name == "boxplot":
        if kwargs.get("orientation") == "horizontal" or kwargs.get("vert") is False:
            return PlotType.BOX_HORIZONTAL
        return PlotType.BOX_VERTICAL
    if name in ("plot", "step"):
        data_args = pos if name == "plot" else pos[:2]
        return PlotType.MULTILINE if _count_plot_series(data_args) > 1 else PlotType.LINE
    return UNSUPPORTED


def _classify_wrapper(name: str, kwargs: dict) -> PlotType | _UnsupportedType:
    hue = kwargs.get("hue")
    if name in ("barplot", "countplot"):
        return PlotType.DODGED_BAR if hue is not None else PlotType.BAR
    if name == "histplot":
        # offset beats grouping: a stacked call is stacked even with hue
        multiple = kwargs.get("multiple", "layer")
        if multiple == "stack":
            return PlotType.STACKED_BAR
        if multiple == "dodge":
            return PlotType.DODGED_BAR
        if hue is not None:
            return UNSUPPORTED
        return PlotType.HISTOGRAM
    if name == "lineplot":
        return PlotType.MULTILINE if hue is not None else PlotType.LINE
    if name == "boxplot":
        orient = kwargs.get("orient")
        if orient in ("h", "horizontal", "y"):
            return PlotType.BOX_HORIZONTAL
        return PlotType.BOX_VERTICAL
    return UNSUPPORTED


def _is_multi_dataset(data: object) -> bool:
    if data is None:
        return False
    if isinstance(data, (list, tuple)) and data and all(
        hasattr(item, "__len__") and not isinstance(item, str) for item in data
    ):
        return True
    try:
        return np.asarray(data).ndim == 2
    except Exception:
        return False


@dataclass(slots=True)
class InstallReport:
    """What an install_patches call changed."""

    patched: list[str]
    skipped: list[str]
    already_patched: list[str]


_installed: dict[str, Callable] = {}
_lifecycle_installed = False


def original(target: str) -> Callable | None:
    """The pre-patch callable for a target, if it was wrapped."""
    return _installed.get(target)


def _resolve_owner(target: str) -> tuple[object | None, str]:
    parts = target.split(".")
    attr = parts[-1]
    for cut in range(len(parts) - 1, 0, -1):
        module_name = ".".join(parts[:cut])
        try:
            owner: object = importlib.import_module(module_name)
        except ImportError:
            continue
        for name in parts[cut:-1]:
            owner = getattr(owner, name, None)
            if owner is None:
                return None, attr
        return owner, attr
    return None, attr


def _make_wrapper(descriptor: PatchDescriptor, orig: Callable) -> Callable:
    # functools.wraps is load-bearing, not cosmetic: seaborn picks default
    # colors by dispatching on the __name__ of the axes method it calls,
    # so wrapper metadata must be indistinguishable from the original.
    @functools.wraps(orig)
    def wrapper(*args, **kwargs):
        if not is_user_call():
            return orig(*args, **kwargs)
        plot_type = classify_plot_call(descriptor.target, args, kwargs)
        if plot_type is UNSUPPORTED:
            log.debug("pass-through for %s: outside the supported vocabulary", descriptor.target)
            return orig(*args, **kwargs)
        snapshot = None
        if descriptor.api_layer == LAYER_WRAPPER:
            snapshot = extraction.snapshot_axes(_wrapper_axes(kwargs))
        with _internal_scope():
            result = orig(*args, **kwargs)
        try:
            extraction.register_call(descriptor, plot_type, args, kwargs, result, snapshot)
        except Exception:
            # instrumentation must never break plotting
            log.exception("registration failed for %s; figure left plain", descriptor.target)
        return result

    wrapper.__a11yplot_wrapped__ = True
    return wrapper


def _wrapper_axes(kwargs: dict):
    ax = kwargs.get("ax")
    if ax is not None:
        return ax
    import matplotlib.pyplot as plt

    return plt.gca()


def install_patches(registry: Sequence[PatchDescriptor] | None = None) -> InstallReport:
    """Wrap every target in ``registry`` (default: the checked-in manifest).

    Re-registration is a no-op: each target is patched at most once per
    process. Targets absent from the installed host libraries are listed
    as skipped, never fatal.

    Raises
    ------
    RuntimeError
        If the host plotting toolkit itself cannot be imported.
    ValueError
        If the registry is empty.
    """
    descriptors = list(registry) if registry is not None else load_manifest()
    if not descriptors:
        raise ValueError("patch registry is empty")
    try:
        importlib.import_module("matplotlib.pyplot")
    except ImportError as exc:
        raise RuntimeError("host plotting toolkit (matplotlib) is not importable") from exc

    patched: list[str] = []
    skipped: list[str] = []
    already: list[str] = []
    for descriptor in descriptors:
        target = descriptor.target
        if target in _installed:
            already.append(target)
            continue
        owner, attr = _resolve_owner(target)
        if owner is None or not hasattr(owner, attr):
            skipped.append(target)
            continue
        orig = getattr(owner, attr)
        if getattr(orig, "__a11yplot_wrapped__", False):
            already.append(target)
            continue
        _TARGET_INDEX.setdefault(target, descriptor)
        setattr(owner, attr, _make_wrapper(descriptor, orig))
        _installed[target] = orig
        patched.append(target)
    _install_lifecycle_hook()
    return InstallReport(patched=patched, skipped=skipped, already_patched=already)


def _install_lifecycle_hook() -> None:
    # pyplot.close does not reach figure close callbacks on non-GUI
    # backends, so registry cleanup hooks close directly.
    global _lifecycle_installed
    if _lifecycle_installed:
        return
    import matplotlib.pyplot as plt

    orig_close = plt.close

    @functools.wraps(orig_close)
    def close(fig=None):
        try:
            extraction.registry.handle_close(fig)
        except Exception:
            log.exception("registry cleanup on close failed")
        return orig_close(fig)

    close.__a11yplot_wrapped__ = True
    plt.close = close
    _lifecycle_installed = True
