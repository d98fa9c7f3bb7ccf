"""Benchmark worker: one process, one condition, many fixtures.

Run by file path, never imported. The fixture corpus is loaded straight
from its directory as a top-level package, so the baseline condition
executes without the instrumentation package ever being imported; the
instrumented condition imports it explicitly (which installs patches).

Prints a JSON report to stdout:
{"condition": ..., "layer": ..., "results": [{"fixture": ..., "samples": [...]}]}
"""

from __future__ import annotations

import argparse
import gc
import importlib.util
import json
import sys
import tempfile
import time
from pathlib import Path

WITH = "with-instrumentation"
WITHOUT = "without-instrumentation"


def load_fixture_corpus(fixtures_dir: Path):
    init = fixtures_dir / "__init__.py"
    spec = importlib.util.spec_from_file_location(
        "fixtures", init, submodule_search_locations=[str(fixtures_dir)]
    )
    module = importlib.util.module_from_spec(spec)
    sys.modules["fixtures"] = module
    spec.loader.exec_module(module)
    return module


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fixtures-dir", required=True)
    parser.add_argument("--fixtures", required=True, help="comma-separated slugs")
    parser.add_argument("--layer", required=True, choices=["direct", "wrapper"])
    parser.add_argument("--condition", required=True, choices=[WITH, WITHOUT])
    parser.add_argument("--trials", type=int, required=True)
    parser.add_argument("--warmup", type=int, required=True)
    parser.add_argument("--scales", required=True, help="JSON object slug -> size")
    args = parser.parse_args(argv)

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    save_augmented = None
    if args.condition == WITH:
        import a11yplot

        save_augmented = a11yplot.save_svg

    corpus = load_fixture_corpus(Path(args.fixtures_dir))
    scales = json.loads(args.scales)
    out_path = Path(tempfile.mkdtemp(prefix="a11yplot-bench-")) / "trial.svg"

    results = []
    for slug in args.fixtures.split(","):
        slug = slug.strip()
        if not slug:
            continue
        scale = scales.get(slug)
        samples = []
        try:
            for trial in range(args.warmup + args.trials):
                # collector pauses land between trials, identically for
                # both conditions, so they never skew a timed section
                gc.collect()
                gc.disable()
                start = time.perf_counter()
                figure = corpus.build(slug, layer=args.layer, scale=scale)
                if save_augmented is not None:
                    save_augmented(figure, out_path)
                else:
                    figure.savefig(out_path, format="svg")
                elapsed_ms = (time.perf_counter() - start) * 1000.0
                gc.enable()
                plt.close(figure)
                if trial >= args.warmup:
                    samples.append(elapsed_ms)
        except Exception as exc:
            print(
                f"fixture {slug!r} failed under condition {args.condition!r} "
                f"({args.layer} layer): {exc}",
                file=sys.stderr,
            )
            return 1
        results.append({"fixture": slug, "scale": scale, "samples": samples})

    json.dump(
        {"condition": args.condition, "layer": args.layer, "results": results},
        sys.stdout,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
