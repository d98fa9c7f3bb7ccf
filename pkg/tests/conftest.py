from __future__ import annotations

import matplotlib

matplotlib.use("Agg", force=True)
# acceptance criteria sweep the full corpus inside single tests
matplotlib.rcParams["figure.max_open_warning"] = 60

import matplotlib.pyplot as plt  # noqa: E402
import pytest  # noqa: E402

import a11yplot  # noqa: E402
from a11yplot import fixtures  # noqa: E402


@pytest.fixture(autouse=True)
def close_figures():
    yield
    plt.close("all")
    a11yplot.registry.clear()


@pytest.fixture
def build_fixture():
    def _build(slug: str, api_layer: str = "direct", **kwargs):
        return fixtures.build(slug, layer=api_layer, **kwargs)

    return _build
