"""Overhead benchmark: instrumented vs plain figure save timings.

Conditions execute in separate worker processes because import-time
patching cannot be undone in-process; trials interleave across several
worker invocations per condition so machine drift cancels out. The
report reproduces the reference table layout: per-fixture with/without
mean±std columns, the per-fixture delta, and an Overall row aggregated
as mean-of-means ± mean-of-stds (deltas: mean ± sample std of the row
deltas).
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import subprocess
import sys
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from .. import fixtures as fixture_corpus

WITH = "with-instrumentation"
WITHOUT = "without-instrumentation"
CONDITIONS = (WITH, WITHOUT)

LAYER_DIRECT = "direct"
LAYER_WRAPPER = "high-level-wrapper"
LAYERS = (LAYER_DIRECT, LAYER_WRAPPER)

DEFAULT_TRIALS = 30
DEFAULT_WARMUP = 3

_SCALES_PATH = Path(__file__).with_name("scales.json")
_WORKER_PATH = Path(__file__).with_name("worker.py")
_FIXTURES_DIR = Path(fixture_corpus.__file__).parent

SAMPLE_COLUMNS = ("fixture", "title", "layer", "condition", "scale", "trial", "ms")


class BenchmarkError(RuntimeError):
    """A benchmark run or report could not be completed."""


def _worker_layer(layer: str) -> str:
    # the fixture corpus names its seaborn variant "wrapper"
    return "wrapper" if layer == LAYER_WRAPPER else "direct"


def normalize_layer(layer: str) -> str:
    if layer in LAYERS:
        return layer
    if layer == "wrapper":
        return LAYER_WRAPPER
    raise BenchmarkError(f"unknown toolkit layer {layer!r}; expected direct or wrapper")


@dataclass(slots=True, frozen=True)
class BenchmarkSpec:
    """One timed cell: fixture x condition x API layer."""

    plot_type_fixture: str
    condition: str
    toolkit_layer: str = LAYER_DIRECT
    trials: int = DEFAULT_TRIALS
    warmup: int = DEFAULT_WARMUP
    data_scale: int | None = None

    def __post_init__(self) -> None:
        if self.plot_type_fixture not in fixture_corpus.slugs():
            raise BenchmarkError(
                f"unknown fixture {self.plot_type_fixture!r}; "
                f"known: {', '.join(fixture_corpus.slugs())}"
            )
        if self.condition not in CONDITIONS:
            raise BenchmarkError(
                f"unknown condition {self.condition!r}; expected one of {CONDITIONS}"
            )
        if self.toolkit_layer not in LAYERS:
            raise BenchmarkError(
                f"unknown toolkit layer {self.toolkit_layer!r}; expected one of {LAYERS}"
            )
        if self.trials < 1:
            raise BenchmarkError("trials must be >= 1")
        if self.warmup < 0:
            raise BenchmarkError("warmup must be >= 0")


@dataclass(slots=True)
class BenchmarkResult:
    """Samples and summary statistics for one benchmark cell."""

    spec: BenchmarkSpec
    samples: list[float] = field(default_factory=list)

    @property
    def mean_ms(self) -> float:
        return statistics.fmean(self.samples)

    @property
    def std_ms(self) -> float:
        # single-trial runs have zero spread by definition
        return statistics.stdev(self.samples) if len(self.samples) > 1 else 0.0


def load_scales(path: Path | str | None = None) -> dict[str, int]:
    """Desk-scale data sizes per fixture, from the checked-in config."""
    scales = json.loads(Path(path or _SCALES_PATH).read_text(encoding="utf-8"))
    return {slug: int(size) for slug, size in scales.items()}


def _run_worker(
    slugs: list[str],
    layer: str,
    condition: str,
    trials: int,
    warmup: int,
    scales: dict[str, int],
) -> dict[str, list[float]]:
    command = [
        sys.executable,
        str(_WORKER_PATH),
        "--fixtures-dir",
        str(_FIXTURES_DIR),
        "--fixtures",
        ",".join(slugs),
        "--layer",
        _worker_layer(layer),
        "--condition",
        condition,
        "--trials",
        str(trials),
        "--warmup",
        str(warmup),
        "--scales",
        json.dumps({slug: scales.get(slug) for slug in slugs}),
    ]
    completed = subprocess.run(command, capture_output=True, text=True)
    if completed.returncode != 0:
        detail = completed.stderr.strip().splitlines()
        raise BenchmarkError(
            detail[-1] if detail else f"worker exited with {completed.returncode}"
        )
    payload = json.loads(completed.stdout)
    return {entry["fixture"]: entry["samples"] for entry in payload["results"]}


def run_benchmark(spec: BenchmarkSpec) -> BenchmarkResult:
    """Time one fixture under one condition in a fresh worker process."""
    scales = load_scales()
    if spec.data_scale is not None:
        scales[spec.plot_type_fixture] = spec.data_scale
    samples_by_fixture = _run_worker(
        [spec.plot_type_fixture],
        spec.toolkit_layer,
        spec.condition,
        spec.trials,
        spec.warmup,
        scales,
    )
    return BenchmarkResult(spec=spec, samples=samples_by_fixture[spec.plot_type_fixture])


def run_matrix(
    slugs: list[str] | None = None,
    layers: tuple[str, ...] = (LAYER_DIRECT,),
    trials: int = DEFAULT_TRIALS,
    warmup: int = DEFAULT_WARMUP,
    scales: dict[str, int] | None = None,
    rounds: int = 3,
) -> list[BenchmarkResult]:
    """Run both conditions for every requested fixture and layer.

    Each worker process covers every requested fixture for one condition,
    preserving the separate-process condition isolation. Trials are split
    across ``rounds`` alternating invocations per condition, in ABBA
    order, so slow drift in machine load lands on both conditions about
    equally instead of biasing whichever ran later. Every fresh worker
    repeats the warmup.
    """
    slugs = list(slugs) if slugs else fixture_corpus.slugs()
    effective_scales = load_scales()
    effective_scales.update(scales or {})
    rounds = max(1, min(rounds, trials))
    per_round = [trials // rounds + (1 if r < trials % rounds else 0) for r in range(rounds)]
    results: list[BenchmarkResult] = []
    for layer in layers:
        layer = normalize_layer(layer)
        collected: dict[str, dict[str, list[float]]] = {
            condition: {slug: [] for slug in slugs} for condition in CONDITIONS
        }
        for index, round_trials in enumerate(per_round):
            ordering = CONDITIONS if index % 2 == 0 else tuple(reversed(CONDITIONS))
            for condition in ordering:
                samples_by_fixture = _run_worker(
                    slugs, layer, condition, round_trials, warmup, effective_scales
                )
                for slug in slugs:
                    collected[condition][slug].extend(samples_by_fixture[slug])
        for condition in CONDITIONS:
            for slug in slugs:
                spec = BenchmarkSpec(
                    plot_type_fixture=slug,
                    condition=condition,
                    toolkit_layer=layer,
                    trials=trials,
                    warmup=warmup,
                    data_scale=effective_scales.get(slug),
                )
                results.append(
                    BenchmarkResult(spec=spec, samples=collected[condition][slug])
                )
    return results


# ---------------------------------------------------------------------------
# raw-sample CSV round trip


def samples_to_csv(results: list[BenchmarkResult]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SAMPLE_COLUMNS)
    for result in results:
        spec = result.spec
        for trial, ms in enumerate(result.samples):
            writer.writerow(
                [
                    spec.plot_type_fixture,
                    fixture_corpus.title_for(spec.plot_type_fixture),
                    spec.toolkit_layer,
                    spec.condition,
                    "" if spec.data_scale is None else spec.data_scale,
                    trial,
                    repr(ms),
                ]
            )
    return buffer.getvalue()


def samples_from_csv(text: str) -> list[BenchmarkResult]:
    reader = csv.DictReader(io.StringIO(text))
    missing = set(SAMPLE_COLUMNS) - set(reader.fieldnames or [])
    if missing:
        raise BenchmarkError(f"sample CSV lacks columns: {sorted(missing)}")
    grouped: dict[tuple, list[tuple[int, float]]] = {}
    scales: dict[tuple, int | None] = {}
    for row in reader:
        key = (row["fixture"], row["layer"], row["condition"])
        grouped.setdefault(key, []).append((int(row["trial"]), float(row["ms"])))
        scales[key] = int(row["scale"]) if row["scale"] else None
    results = []
    for (slug, layer, condition), trials in sorted(grouped.items()):
        samples = [ms for _, ms in sorted(trials)]
        spec = BenchmarkSpec(
            plot_type_fixture=slug,
            condition=condition,
            toolkit_layer=layer,
            trials=len(samples),
            warmup=0,
            data_scale=scales[(slug, layer, condition)],
        )
        results.append(BenchmarkResult(spec=spec, samples=samples))
    return results


# ---------------------------------------------------------------------------
# aggregation and the published-table layout

_CENT = Decimal("0.01")


def _round2(value: Decimal) -> Decimal:
    return value.quantize(_CENT, rounding=ROUND_HALF_UP)


@dataclass(slots=True, frozen=True)
class RowStats:
    """One report row: paired with/without summary statistics."""

    slug: str
    title: str
    with_mean: Decimal
    with_std: Decimal
    without_mean: Decimal
    without_std: Decimal

    @property
    def delta_mean(self) -> Decimal:
        return self.with_mean - self.without_mean

    @property
    def relative_percent(self) -> Decimal:
        if self.without_mean == 0:
            return Decimal(0)
        return self.delta_mean / self.without_mean * 100


@dataclass(slots=True, frozen=True)
class OverallStats:
    """The Overall row: mean-of-means +- mean-of-stds per condition."""

    with_mean: Decimal
    with_std: Decimal
    without_mean: Decimal
    without_std: Decimal
    delta_mean: Decimal
    delta_std: Decimal

    @property
    def relative_percent(self) -> Decimal:
        if self.without_mean == 0:
            return Decimal(0)
        return self.delta_mean / self.without_mean * 100


def _decimal(value) -> Decimal:
    return value if isinstance(value, Decimal) else Decimal(str(value))


def make_row(slug, title, with_mean, with_std, without_mean, without_std) -> RowStats:
    return RowStats(
        slug=slug,
        title=title,
        with_mean=_decimal(with_mean),
        with_std=_decimal(with_std),
        without_mean=_decimal(without_mean),
        without_std=_decimal(without_std),
    )


def overall_row(rows: list[RowStats]) -> OverallStats:
    """Aggregate per-row statistics into the Overall row.

    Condition columns average the row means and the row stds; the delta
    column is the mean of the row deltas +- their sample standard
    deviation. Feeding the published per-row numbers through this
    reproduces the published Overall cells exactly.
    """
    if not rows:
        raise BenchmarkError("no rows to aggregate")
    deltas = [row.delta_mean for row in rows]
    return OverallStats(
        with_mean=statistics.mean([row.with_mean for row in rows]),
        with_std=statistics.mean([row.with_std for row in rows]),
        without_mean=statistics.mean([row.without_mean for row in rows]),
        without_std=statistics.mean([row.without_std for row in rows]),
        delta_mean=statistics.mean(deltas),
        delta_std=statistics.stdev(deltas) if len(deltas) > 1 else Decimal(0),
    )


def build_rows(results: list[BenchmarkResult], layer: str) -> list[RowStats]:
    """Pair with/without results for one layer into report rows.

    Rows follow the fixed corpus order. A fixture present under only
    one condition is an error listing every incomplete row.
    """
    by_key: dict[tuple[str, str], BenchmarkResult] = {}
    present: set[str] = set()
    for result in results:
        spec = result.spec
        if spec.toolkit_layer != layer:
            continue
        by_key[(spec.plot_type_fixture, spec.condition)] = result
        present.add(spec.plot_type_fixture)
    if not present:
        raise BenchmarkError(f"no results for layer {layer!r}")
    incomplete = sorted(
        slug
        for slug in present
        if (slug, WITH) not in by_key or (slug, WITHOUT) not in by_key
    )
    if incomplete:
        raise BenchmarkError(
            f"missing condition pair for: {', '.join(incomplete)}"
        )
    rows = []
    for row in fixture_corpus.ROWS:
        if row.slug not in present:
            continue
        with_result = by_key[(row.slug, WITH)]
        without_result = by_key[(row.slug, WITHOUT)]
        rows.append(
            make_row(
                row.slug,
                row.title,
                with_result.mean_ms,
                with_result.std_ms,
                without_result.mean_ms,
                without_result.std_ms,
            )
        )
    return rows


@dataclass(slots=True)
class Report:
    """Rendered report in both output formats."""

    text: str
    csv: str
    rows: list[RowStats]
    overall: OverallStats


def _pm(mean: Decimal, std: Decimal) -> str:
    return f"{_round2(mean)}±{_round2(std)}"


def report_table(results: list[BenchmarkResult], layer: str | None = None) -> Report:
    """Render paired results in the published table layout.

    ``layer`` may be omitted when the results cover exactly one layer.
    """
    if not results:
        raise BenchmarkError("no benchmark results to report")
    layers = sorted({r.spec.toolkit_layer for r in results})
    if layer is None:
        if len(layers) > 1:
            raise BenchmarkError(
                f"results span layers {layers}; pass layer= to pick one"
            )
        layer = layers[0]
    rows = build_rows(results, normalize_layer(layer))
    return render_report(rows, normalize_layer(layer))


def render_report(rows: list[RowStats], layer: str) -> Report:
    overall = overall_row(rows)
    header = ("Plot Type", "With (ms)", "Without (ms)", "Delta (ms)", "Rel (%)")
    body = [
        (
            row.title,
            _pm(row.with_mean, row.with_std),
            _pm(row.without_mean, row.without_std),
            str(_round2(row.delta_mean)),
            str(_round2(row.relative_percent)),
        )
        for row in rows
    ]
    body.append(
        (
            "Overall",
            _pm(overall.with_mean, overall.with_std),
            _pm(overall.without_mean, overall.without_std),
            _pm(overall.delta_mean, overall.delta_std),
            str(_round2(overall.relative_percent)),
        )
    )
    widths = [
        max(len(header[i]), *(len(line[i]) for line in body)) for i in range(len(header))
    ]
    lines = [f"Layer: {layer}"]
    lines.append("  ".join(header[i].ljust(widths[i]) for i in range(len(header))))
    lines.append("  ".join("-" * widths[i] for i in range(len(header))))
    for line in body:
        lines.append("  ".join(line[i].ljust(widths[i]) for i in range(len(header))))
    text = "\n".join(lines) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("layer",) + header)
    for line in body:
        writer.writerow((layer,) + line)
    return Report(text=text, csv=buffer.getvalue(), rows=rows, overall=overall)
