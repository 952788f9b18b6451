import xml.etree.ElementTree as ET

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ptbath.svgplot import Panel, Series, nice_ticks, render_svg

NS = "{http://www.w3.org/2000/svg}"


@pytest.mark.parametrize(
    "lo, hi, expected",
    [(0, 10, [0, 2, 4, 6, 8, 10]), (0, 1, [0, 0.2, 0.4, 0.6, 0.8, 1.0])],
)
def test_nice_ticks(lo, hi, expected):
    assert nice_ticks(lo, hi) == pytest.approx(expected)


@given(st.floats(-1e6, 1e6), st.floats(1e-6, 1e6))
def test_nice_ticks_cover_range(lo, span):
    assume(span >= 1e-6 * abs(lo))
    t = nice_ticks(lo, lo + span)
    assert t[0] <= lo and t[-1] >= lo + span
    assert 2 <= len(t) <= 12
    steps = np.diff(t)
    assert np.allclose(steps, steps[0], rtol=1e-6)
    mantissa = steps[0] / 10 ** np.floor(np.log10(steps[0]))
    assert any(np.isclose(mantissa, m) for m in (1, 2, 2.5, 5, 10))


def test_nice_ticks_degenerate():
    t = nice_ticks(3.0, 3.0)
    assert t[0] < 3.0 < t[-1]


def test_render_structure():
    p = Panel("t", "x", "y", [Series("a", [0, 1, 2], [0, 1, 4], "a"), Series("b", [0, 1, 2], [1, 1, 1])], vline=1.5)
    svg = render_svg([p, p])
    root = ET.fromstring(svg)
    assert root.get("viewBox") == "0 0 800 1200"
    assert len(root.findall(f".//{NS}polyline")) == 4
    assert len([e for e in root.iter(f"{NS}line") if e.get("class") == "marker"]) == 2
    assert svg == render_svg([p, p])


def test_escapes_text():
    svg = render_svg([Panel("<a&b>", "x", "y", [Series("s", [0, 1], [0, 1])])])
    ET.fromstring(svg)
    assert "&lt;a&amp;b&gt;" in svg


def test_empty_panel():
    with pytest.raises(ValueError):
        render_svg([Panel("t", "x", "y")])
