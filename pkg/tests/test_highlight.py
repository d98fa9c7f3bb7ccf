from __future__ import annotations

import re

import pytest

from a11yplot import finalize_figure, render_document
from a11yplot.highlight import (
    ElementRef,
    ElementsMap,
    HighlightScope,
    elements_for,
    inject_element_attributes,
    install_draw_hooks,
    strip_instrumentation,
    structurally_equal,
    tag_primitive,
    _HOOK_CLASSES,
)
from a11yplot.render import export_svg
from a11yplot.schema import PlotType
from helpers import CORPUS

TAGGED = re.compile(r'maidr="true" maidr-id="([^"]+)"')


def ref(point=0):
    return ElementRef(figure_id="maidr-9", row=0, col=0, layer=0, point=point)


class TestElementMaps:
    def test_unknown_figure_has_empty_map(self, build_fixture):
        import matplotlib.pyplot as plt

        fig = plt.figure()
        mapping = elements_for(fig)
        assert len(mapping) == 0
        assert mapping.ids() == []

    def test_bar_elements_map_point_indexes(self, build_fixture):
        fig = build_fixture("bar")
        schema = finalize_figure(fig)
        mapping = elements_for(fig)
        points = schema.subplots[0].layers[0].data
        assert len(mapping) == len(points)
        assert [mapping[eid].point for eid in mapping.ids()] == list(range(len(points)))

    def test_line_element_carries_whole_layer(self, build_fixture):
        fig = build_fixture("line")
        finalize_figure(fig)
        mapping = elements_for(fig)
        assert len(mapping) == 1
        (eid,) = mapping.ids()
        assert eid in mapping
        assert mapping[eid].point is None

    def test_multiline_elements_are_per_series(self, build_fixture):
        fig = build_fixture("multiline")
        schema = finalize_figure(fig)
        mapping = elements_for(fig)
        series = {p.series_label for p in schema.subplots[0].layers[0].data}
        assert len(mapping) == len(series)
        assert [mapping[eid].point for eid in mapping.ids()] == list(range(len(series)))

    def test_multipanel_refs_carry_grid_position(self, build_fixture):
        fig = build_fixture("multipanel")
        finalize_figure(fig)
        positions = {(r.row, r.col) for _, r in elements_for(fig).items()}
        assert positions == {(0, 0), (0, 1)}


def expected_element_count(schema) -> int:
    total = 0
    for subplot in schema.subplots:
        for layer in subplot.layers:
            if layer.plot_type in (PlotType.LINE, PlotType.SCATTER, PlotType.HEATMAP):
                total += 1
            elif layer.plot_type is PlotType.MULTILINE:
                total += len({p.series_label for p in layer.data})
            else:
                total += len(layer.data)
    return total


class TestDrawPassTagging:
    @pytest.mark.parametrize("slug, api_layer", CORPUS)
    def test_every_mapped_element_lands_in_the_svg_once(
        self, build_fixture, slug, api_layer
    ):
        fig = build_fixture(slug, api_layer)
        document = render_document(fig, delivery_mode="raw-html")
        schema = finalize_figure(fig)
        tagged = TAGGED.findall(document.svg)
        assert len(tagged) == expected_element_count(schema)
        assert sorted(tagged) == sorted(elements_for(fig).ids())
        assert len(set(tagged)) == len(tagged)

    def test_decorations_stay_untagged(self, build_fixture):
        # only mapped data primitives may carry instrumentation; axis
        # groups, ticks, and spines keep their plain exporter markup
        fig = build_fixture("bar")
        document = render_document(fig, delivery_mode="raw-html")
        mapped = set(elements_for(fig).ids())
        for match in re.finditer(r"<[^>]*maidr=\"true\"[^>]*>", document.svg):
            element_id = TAGGED.search(match.group(0))
            assert element_id is not None
            assert element_id.group(1) in mapped
        for structural in ("xtick_1", "ytick_1", "matplotlib.axis"):
            block = re.search(rf'<g id="{structural}[^"]*"[^>]*>', document.svg)
            if block is not None:
                assert "maidr" not in block.group(0)


class TestHighlightScope:
    def test_tag_swaps_gid_and_exit_restores_it(self, build_fixture):
        fig = build_fixture("bar")
        finalize_figure(fig)
        patch = fig.axes[0].containers[0].patches[0]
        patch.set_gid("user-supplied-gid")
        with HighlightScope(fig) as scope:
            element_id = scope.tag(patch)
            assert element_id is not None
            assert patch.get_gid() == element_id
        assert patch.get_gid() == "user-supplied-gid"

    def test_untracked_primitive_is_ignored(self, build_fixture):
        fig = build_fixture("bar")
        finalize_figure(fig)
        background = fig.axes[0].patch
        with HighlightScope(fig) as scope:
            assert scope.tag(background) is None
            assert background.get_gid() is None

    def test_tag_is_idempotent_inside_one_scope(self, build_fixture):
        fig = build_fixture("bar")
        finalize_figure(fig)
        patch = fig.axes[0].containers[0].patches[0]
        with HighlightScope(fig) as scope:
            first = scope.tag(patch)
            second = scope.tag(patch)
        assert first == second
        assert patch.get_gid() is None

    def test_gids_restored_when_body_raises(self, build_fixture):
        fig = build_fixture("bar")
        finalize_figure(fig)
        patch = fig.axes[0].containers[0].patches[0]
        with pytest.raises(RuntimeError):
            with HighlightScope(fig) as scope:
                scope.tag(patch)
                raise RuntimeError("export blew up")
        assert patch.get_gid() is None

    def test_tag_primitive_is_inert_outside_any_scope(self, build_fixture):
        fig = build_fixture("bar")
        finalize_figure(fig)
        patch = fig.axes[0].containers[0].patches[0]
        assert tag_primitive(patch) is None
        assert patch.get_gid() is None

    def test_scopes_are_per_figure(self, build_fixture):
        fig_a = build_fixture("bar")
        fig_b = build_fixture("bar")
        finalize_figure(fig_a)
        finalize_figure(fig_b)
        patch_b = fig_b.axes[0].containers[0].patches[0]
        with HighlightScope(fig_a):
            assert tag_primitive(patch_b) is None


class TestDrawHooks:
    def test_install_is_idempotent(self):
        # the import-time install already hooked all four classes
        assert install_draw_hooks() == []

    def test_hooks_are_marked(self):
        for cls in _HOOK_CLASSES:
            assert cls.__dict__["draw"].__a11yplot_hooked__ is True


class TestInjection:
    def test_exact_splice_format(self):
        svg = '<svg><g id="maidr-9-0"><path d="M0 0"/></g></svg>'
        result = inject_element_attributes(svg, ElementsMap({"maidr-9-0": ref()}))
        assert result.svg == (
            '<svg><g id="maidr-9-0" maidr="true" maidr-id="maidr-9-0">'
            '<path d="M0 0"/></g></svg>'
        )
        assert result.injected == ["maidr-9-0"]
        assert result.warnings == []

    def test_empty_map_returns_byte_identical_document(self):
        svg = '<svg><g id="axes_1"/></svg>'
        result = inject_element_attributes(svg, ElementsMap())
        assert result.svg == svg
        assert result.injected == []

    def test_missing_element_warns_by_name(self):
        svg = '<svg><g id="maidr-9-0"/></svg>'
        mapping = ElementsMap({"maidr-9-0": ref(0), "maidr-9-7": ref(7)})
        result = inject_element_attributes(svg, mapping)
        assert result.injected == ["maidr-9-0"]
        assert len(result.warnings) == 1
        assert "maidr-9-7" in result.warnings[0]
        assert 'id="maidr-9-0" maidr="true"' in result.svg


class TestStripAndCompare:
    @pytest.mark.parametrize("slug", ["bar", "multiline", "heatmap"])
    def test_strip_recovers_plain_export_structure(self, build_fixture, slug):
        fig = build_fixture(slug)
        document = render_document(fig, delivery_mode="raw-html")
        plain = export_svg(fig, hashsalt=document.figure_id)
        stripped = strip_instrumentation(document.svg)
        # element id values still spell out the assigned ids (they are the
        # gids stamped during export); only the injected attributes go away
        assert 'maidr="true"' not in stripped
        assert "maidr-id=" not in stripped
        assert "maidr-data=" not in stripped
        assert structurally_equal(stripped, plain)

    def test_single_quoted_payload_is_stripped(self):
        svg = '<svg maidr-data=\'{"id":"x"}\'><g maidr="true" maidr-id="maidr-1-0"/></svg>'
        assert strip_instrumentation(svg) == "<svg><g/></svg>"

    def test_structural_comparison_ignores_id_values(self):
        a = '<svg><g id="salted-one"><path d="M0 0"/></g></svg>'
        b = '<svg><g id="salted-two"><path d="M0 0"/></g></svg>'
        assert structurally_equal(a, b)

    def test_removed_element_is_detected(self):
        a = '<svg><g id="x"><path d="M0 0"/><path d="M1 1"/></g></svg>'
        b = '<svg><g id="x"><path d="M0 0"/></g></svg>'
        assert not structurally_equal(a, b)

    def test_changed_geometry_is_detected(self):
        a = '<svg><g><path d="M0 0"/></g></svg>'
        b = '<svg><g><path d="M0 1"/></g></svg>'
        assert not structurally_equal(a, b)

    def test_malformed_document_is_never_equal(self):
        assert not structurally_equal("<svg>", "<svg>")
