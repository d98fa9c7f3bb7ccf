"""Acceptance gate: the seven primary behavior criteria, one test each.

Every test prints a single uncaptured [PASS]/[FAIL] line with the
measured numbers, then asserts. The overhead criterion runs the real
benchmark at its default trial count, so this module takes a few
minutes; everything else is quick.
"""

from __future__ import annotations

import json
import re
import time
from decimal import Decimal

import pytest

from a11yplot import bench, finalize_figure, parse_schema, save_html, serialize_schema
from a11yplot.highlight import strip_instrumentation, structurally_equal
from a11yplot.render import MODE_RAW, export_svg, render_document
from a11yplot.schema import validate_schema
from helpers import (
    API_LAYERS,
    CORPUS,
    SLUGS,
    assert_matches_oracle,
    load_oracle,
    payload_of_svg,
    svg_of_html,
)
from test_bench import published_rows

TAGGED = re.compile(r' maidr="true"')
SELECTOR_ID = re.compile(r'\[maidr-id="([^"]+)"\]')


def announce(capsys, ok: bool, name: str, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


class TestPrimaryCriteria:
    def test_criterion_1_extraction_oracle_equivalence(self, build_fixture, capsys):
        failures = []
        for slug, api_layer in CORPUS:
            fig = build_fixture(slug, api_layer)
            try:
                assert_matches_oracle(finalize_figure(fig), load_oracle(slug, api_layer))
            except AssertionError as exc:
                failures.append(f"{slug}/{api_layer}: {exc}")
        announce(
            capsys,
            not failures,
            "criterion 1 (extraction equivalence)",
            f"{len(CORPUS) - len(failures)}/{len(CORPUS)} fixture/layer combinations "
            "match independently derived artist values"
            + (f"; failures: {failures[:2]}" if failures else ""),
        )

    def test_criterion_2_wrapper_suppression(self, build_fixture, capsys):
        # one seaborn call fans out into many axes-level primitive calls;
        # exactly one layer may come out the other side
        counts = {}
        for slug in ("vertical_box", "horizontal_box", "multiline", "dodged"):
            schema = finalize_figure(build_fixture(slug, "wrapper"))
            counts[slug] = sum(len(s.layers) for s in schema.subplots)
        ok = all(count == 1 for count in counts.values())
        announce(
            capsys,
            ok,
            "criterion 2 (delegation suppression)",
            f"layers registered per single wrapper call: {counts}",
        )

    def test_criterion_3_cross_modal_correspondence(self, build_fixture, capsys):
        problems = []
        checked_counts = []
        for slug in ("bar", "stacked", "dodged", "histogram"):
            for api_layer in API_LAYERS:
                fig = build_fixture(slug, api_layer)
                document = render_document(fig, delivery_mode=MODE_RAW)
                schema = finalize_figure(fig)
                points = sum(len(l.data) for s in schema.subplots for l in s.layers)
                tagged = len(TAGGED.findall(document.svg))
                checked_counts.append(f"{slug}/{api_layer}={tagged}")
                if tagged != points:
                    problems.append(
                        f"{slug}/{api_layer}: {tagged} tagged elements vs {points} points"
                    )
        for slug, api_layer in CORPUS:
            fig = build_fixture(slug, api_layer)
            document = render_document(fig, delivery_mode=MODE_RAW)
            schema = finalize_figure(fig)
            for subplot in schema.subplots:
                for layer in subplot.layers:
                    ids = SELECTOR_ID.findall(layer.selector)
                    if not ids:
                        problems.append(f"{slug}/{api_layer}: selector has no id terms")
                        continue
                    missing = [
                        i for i in ids if f'maidr-id="{i}"' not in document.svg
                    ]
                    if missing:
                        problems.append(
                            f"{slug}/{api_layer}: selector ids absent from SVG: "
                            f"{missing[:3]}"
                        )
        announce(
            capsys,
            not problems,
            "criterion 3 (cross-modal correspondence)",
            "tagged-element counts equal schema point counts and every layer "
            "selector resolves"
            + (f"; problems: {problems[:2]}" if problems else ""),
        )

    def test_criterion_4_visual_fidelity(self, build_fixture, capsys):
        failures = []
        for slug, api_layer in CORPUS:
            fig = build_fixture(slug, api_layer)
            document = render_document(fig, delivery_mode=MODE_RAW)
            plain = export_svg(fig, hashsalt=document.figure_id)
            if not structurally_equal(strip_instrumentation(document.svg), plain):
                failures.append(f"{slug}/{api_layer}")
        announce(
            capsys,
            not failures,
            "criterion 4 (visual fidelity)",
            f"{len(CORPUS) - len(failures)}/{len(CORPUS)} stripped documents are "
            "structurally identical to the plain export"
            + (f"; failures: {failures}" if failures else ""),
        )

    def test_criterion_5_payload_round_trip(self, build_fixture, tmp_path, capsys):
        failures = []
        for slug, api_layer in CORPUS:
            fig = build_fixture(slug, api_layer)
            expected = serialize_schema(finalize_figure(fig))
            target = tmp_path / f"{slug}-{api_layer}.html"
            save_html(fig, target)
            payload = payload_of_svg(svg_of_html(target.read_text(encoding="utf-8")))
            if payload is None:
                failures.append(f"{slug}/{api_layer}: no payload attribute")
                continue
            parsed = parse_schema(payload)
            if validate_schema(parsed):
                failures.append(f"{slug}/{api_layer}: payload fails validation")
            if serialize_schema(parsed) != expected or payload != expected:
                failures.append(f"{slug}/{api_layer}: payload bytes differ")
        announce(
            capsys,
            not failures,
            "criterion 5 (payload round trip)",
            f"{len(CORPUS) - len(failures)}/{len(CORPUS)} saved payloads parse, "
            "validate, and serialize byte-identically"
            + (f"; failures: {failures}" if failures else ""),
        )

    def test_criterion_6_overhead_budget(self, capsys):
        started = time.monotonic()
        results = bench.run_matrix(layers=(bench.LAYER_DIRECT, bench.LAYER_WRAPPER))
        elapsed = time.monotonic() - started
        relatives = {}
        for layer in (bench.LAYER_DIRECT, bench.LAYER_WRAPPER):
            report = bench.report_table(results, layer)
            relatives[layer] = float(report.overall.relative_percent)
            with capsys.disabled():
                print()
                print(report.text)
        ok = all(rel <= 10.0 for rel in relatives.values()) and elapsed <= 300.0
        announce(
            capsys,
            ok,
            "criterion 6 (overhead budget)",
            "mean relative overhead "
            + ", ".join(f"{layer} {rel:.2f}%" for layer, rel in relatives.items())
            + f" (limit 10%), wall time {elapsed:.0f}s (limit 300s) at "
            f"{bench.DEFAULT_TRIALS} trials over {len(SLUGS)} plot types",
        )

    def test_criterion_7_published_aggregation_arithmetic(self, capsys):
        direct = bench.overall_row(published_rows("direct"))
        wrapper = bench.overall_row(published_rows("wrapper"))
        cells = {
            "direct delta": f"{bench._round2(direct.delta_mean)}±{bench._round2(direct.delta_std)}",
            "wrapper delta": f"{bench._round2(wrapper.delta_mean)}±{bench._round2(wrapper.delta_std)}",
        }
        ok = (
            cells["direct delta"] == "1.48±1.15"
            and cells["wrapper delta"] == "3.26±2.23"
            and direct.without_mean == Decimal("40.475")
        )
        announce(
            capsys,
            ok,
            "criterion 7 (aggregation arithmetic)",
            f"published per-type cells aggregate to Overall deltas {cells}",
        )
