from __future__ import annotations

import json

import pytest

from a11yplot.bench import samples_to_csv
from a11yplot.cli import main
from helpers import payload_of_svg, svg_of_html
from test_bench import synthetic_results


class TestRenderCommand:
    def test_html_by_suffix(self, tmp_path, capsys):
        target = tmp_path / "bar.html"
        assert main(["render", "bar", "--out", str(target)]) == 0
        assert capsys.readouterr().out.strip() == str(target)
        html = target.read_text(encoding="utf-8")
        assert html.startswith("<!DOCTYPE html>")
        assert payload_of_svg(svg_of_html(html)) is not None

    def test_svg_by_suffix(self, tmp_path):
        target = tmp_path / "line.svg"
        assert main(["render", "line", "--out", str(target)]) == 0
        svg = target.read_text(encoding="utf-8")
        assert 'maidr="true"' in svg
        payload = payload_of_svg(svg)
        assert json.loads(payload)["subplots"][0]["layers"][0]["type"] == "line"

    def test_seed_and_scale_control_the_data(self, tmp_path):
        one = tmp_path / "a.svg"
        two = tmp_path / "b.svg"
        main(["render", "bar", "--out", str(one), "--seed", "7", "--scale", "4"])
        main(["render", "bar", "--out", str(two), "--seed", "7", "--scale", "4"])
        first = json.loads(payload_of_svg(one.read_text(encoding="utf-8")))
        second = json.loads(payload_of_svg(two.read_text(encoding="utf-8")))
        layer_a = first["subplots"][0]["layers"][0]
        layer_b = second["subplots"][0]["layers"][0]
        assert len(layer_a["data"]) == 4
        # figure ids advance per registry token; the content must not
        assert layer_a["data"] == layer_b["data"]
        assert layer_a["axes"] == layer_b["axes"]

    def test_wrapper_layer_renders(self, tmp_path):
        target = tmp_path / "w.svg"
        assert main(["render", "multiline", "--out", str(target), "--layer", "wrapper"]) == 0
        payload = json.loads(payload_of_svg(target.read_text(encoding="utf-8")))
        assert payload["subplots"][0]["layers"][0]["type"] == "multiline"

    def test_unknown_fixture_is_a_usage_error(self, tmp_path):
        with pytest.raises(SystemExit):
            main(["render", "pie", "--out", str(tmp_path / "x.html")])


class TestBenchReportCommand:
    @pytest.fixture
    def sample_csv(self, tmp_path):
        path = tmp_path / "samples.csv"
        path.write_text(samples_to_csv(synthetic_results()), encoding="utf-8")
        return path

    def test_table_output(self, sample_csv, capsys):
        assert main(["bench", "report", str(sample_csv)]) == 0
        out = capsys.readouterr().out
        assert out.startswith("Layer: direct")
        assert "Overall" in out
        assert "Bar" in out and "Line" in out

    def test_csv_output(self, sample_csv, capsys):
        assert main(["bench", "report", str(sample_csv), "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0].startswith("layer,Plot Type")

    def test_figures_directory_gets_accessible_charts(self, sample_csv, tmp_path, capsys):
        figures = tmp_path / "charts"
        assert main(["bench", "report", str(sample_csv), "--figures", str(figures)]) == 0
        html = figures / "overhead-direct.html"
        svg = figures / "overhead-direct.svg"
        assert html.exists() and svg.exists()
        # the overhead chart itself goes through the instrumented pipeline
        payload = payload_of_svg(svg.read_text(encoding="utf-8"))
        chart = json.loads(payload)
        assert chart["subplots"][0]["layers"][0]["type"] == "bar"
        assert capsys.readouterr().out.count("figure: ") == 2

    def test_missing_results_file_is_reported(self, tmp_path, capsys):
        missing = tmp_path / "nope.csv"
        with pytest.raises(FileNotFoundError):
            main(["bench", "report", str(missing)])

    def test_bad_csv_is_a_clean_error(self, tmp_path, capsys):
        path = tmp_path / "bad.csv"
        path.write_text("just,some,noise\n1,2,3\n", encoding="utf-8")
        assert main(["bench", "report", str(path)]) == 2
        assert "error:" in capsys.readouterr().err


class TestBenchRunCommand:
    def test_tiny_run_writes_samples(self, tmp_path, capsys):
        out = tmp_path / "run.csv"
        code = main(
            [
                "bench", "run",
                "--types", "bar",
                "--trials", "2",
                "--warmup", "0",
                "--out", str(out),
            ]
        )
        assert code == 0
        assert "wrote 4 samples across 2 cells" in capsys.readouterr().out
        text = out.read_text(encoding="utf-8")
        assert text.splitlines()[0] == "fixture,title,layer,condition,scale,trial,ms"
        assert text.count("\nbar,") == 4

    def test_scale_config_override(self, tmp_path):
        config = tmp_path / "scales.json"
        config.write_text(json.dumps({"bar": 3}), encoding="utf-8")
        out = tmp_path / "run.csv"
        main(
            [
                "bench", "run",
                "--types", "bar",
                "--trials", "1",
                "--warmup", "0",
                "--scale-config", str(config),
                "--out", str(out),
            ]
        )
        rows = out.read_text(encoding="utf-8").splitlines()[1:]
        assert all(row.split(",")[4] == "3" for row in rows)
