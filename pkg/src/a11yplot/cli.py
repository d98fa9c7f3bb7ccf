"""Command line interface: corpus rendering and the overhead benchmark."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, fixtures, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="a11yplot",
        description="Accessible-figure tooling: render corpus fixtures, "
        "measure instrumentation overhead.",
    )
    subcommands = parser.add_subparsers(dest="command", required=True)

    render_parser = subcommands.add_parser(
        "render", help="render a corpus fixture to an accessible document"
    )
    render_parser.add_argument("fixture", choices=fixtures.slugs())
    render_parser.add_argument("--out", required=True, help="output path (.html or .svg)")
    render_parser.add_argument(
        "--layer", choices=["direct", "wrapper"], default="direct"
    )
    render_parser.add_argument("--scale", type=int, default=None)
    render_parser.add_argument("--seed", type=int, default=None)
    render_parser.set_defaults(func=_cmd_render)

    bench_parser = subcommands.add_parser("bench", help="overhead benchmark")
    bench_sub = bench_parser.add_subparsers(dest="bench_command", required=True)

    run_parser = bench_sub.add_parser("run", help="time fixtures under both conditions")
    run_parser.add_argument(
        "--types",
        default="all",
        help='"all" or a comma-separated fixture list',
    )
    run_parser.add_argument(
        "--layer", choices=["direct", "wrapper", "both"], default="direct"
    )
    run_parser.add_argument("--trials", type=int, default=bench.DEFAULT_TRIALS)
    run_parser.add_argument("--warmup", type=int, default=bench.DEFAULT_WARMUP)
    run_parser.add_argument("--out", required=True, help="raw-sample CSV path")
    run_parser.add_argument(
        "--scale-config", default=None, help="JSON file overriding per-fixture sizes"
    )
    run_parser.set_defaults(func=_cmd_bench_run)

    report_parser = bench_sub.add_parser("report", help="aggregate a raw-sample CSV")
    report_parser.add_argument("results", help="CSV produced by bench run")
    report_parser.add_argument("--format", choices=["table", "csv"], default="table")
    report_parser.add_argument(
        "--figures",
        default=None,
        help="also render per-layer overhead charts into this directory",
    )
    report_parser.set_defaults(func=_cmd_bench_report)
    return parser


def _cmd_render(args: argparse.Namespace) -> int:
    figure = fixtures.build(
        args.fixture, layer=args.layer, scale=args.scale, seed=args.seed
    )
    out = Path(args.out)
    if out.suffix.lower() == ".svg":
        path = render.save_svg(figure, out)
    else:
        path = render.save_html(figure, out)
    print(path)
    return 0


def _parse_types(raw: str) -> list[str]:
    if raw.strip().lower() in ("all", ""):
        return fixtures.slugs()
    return [token.strip() for token in raw.split(",") if token.strip()]


def _layers(raw: str) -> tuple[str, ...]:
    if raw == "both":
        return (bench.LAYER_DIRECT, bench.LAYER_WRAPPER)
    return (bench.normalize_layer(raw),)


def _cmd_bench_run(args: argparse.Namespace) -> int:
    scales = bench.load_scales(args.scale_config) if args.scale_config else None
    results = bench.run_matrix(
        slugs=_parse_types(args.types),
        layers=_layers(args.layer),
        trials=args.trials,
        warmup=args.warmup,
        scales=scales,
    )
    out = Path(args.out)
    out.write_text(bench.samples_to_csv(results), encoding="utf-8")
    total = sum(len(result.samples) for result in results)
    print(f"wrote {total} samples across {len(results)} cells to {out}")
    return 0


def _cmd_bench_report(args: argparse.Namespace) -> int:
    results = bench.samples_from_csv(Path(args.results).read_text(encoding="utf-8"))
    layers = sorted(
        {result.spec.toolkit_layer for result in results},
        key=lambda layer: bench.LAYERS.index(layer),
    )
    reports = []
    for layer in layers:
        report = bench.report_table(results, layer)
        reports.append((layer, report))
        sys.stdout.write(report.text if args.format == "table" else report.csv)
        sys.stdout.write("\n")
    if args.figures:
        for path in _render_report_figures(reports, Path(args.figures)):
            print(f"figure: {path}")
    return 0


def _render_report_figures(reports, directory: Path) -> list[Path]:
    # the overhead chart itself goes through the instrumented pipeline,
    # so the delimited report ships with accessible figure documents
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for layer, report in reports:
        figure, axes = plt.subplots(figsize=(8, 4))
        axes.bar(
            [row.title for row in report.rows],
            [float(row.delta_mean) for row in report.rows],
        )
        axes.set_xlabel("plot type")
        axes.set_ylabel("overhead (ms)")
        axes.set_title(f"Instrumentation overhead, {layer} layer")
        axes.tick_params(axis="x", labelrotation=45)
        figure.tight_layout()
        slug = "direct" if layer == bench.LAYER_DIRECT else "wrapper"
        written.append(render.save_html(figure, directory / f"overhead-{slug}.html"))
        written.append(render.save_svg(figure, directory / f"overhead-{slug}.svg"))
        plt.close(figure)
    return written


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except bench.BenchmarkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
