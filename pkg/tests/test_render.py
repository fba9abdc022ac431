import math
import re

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from harmocass.figures import cassini_scene, oscillator_scene, projectile_scene
from harmocass.geom_core import CurveSamples
from harmocass.oscillator import OscillatorParams
from harmocass.projectile import ProjectileParams
from harmocass.render import CSV_HEADER, Scene, fit_viewport, fmt, read_csv, render_svg, write_csv


def test_fmt_is_nine_significant_digits():
    assert fmt(math.pi) == "3.14159265"
    assert fmt(-0.0) == "0"
    assert fmt(1e-12) == "1e-12"


def test_viewport_validation():
    with pytest.raises(ValueError):
        Scene([], viewport=(0, 0, 0, 1))
    with pytest.raises(ValueError):
        Scene([], viewport=(0, 1, 2, 1))
    with pytest.raises(ValueError):
        Scene([(CurveSamples([[0, 0]]), "wiggly", "x")])


def test_viewport_fit_pads_five_percent():
    cs = CurveSamples([[0, 0], [10, 2]])
    assert fit_viewport([(cs, "family", "c")]) == pytest.approx((-0.5, 10.5, -0.1, 2.1))
    # a single point still gives an open box
    xmin, xmax, ymin, ymax = fit_viewport([(CurveSamples([[1, 1]]), "marker", "m")])
    assert xmax > xmin and ymax > ymin


def test_projectile_figure_contents():
    scene = projectile_scene(ProjectileParams(10, 10), 16)
    svg = render_svg(scene)
    assert svg.count('<path class="family"') == 16
    assert svg.count('<path class="envelope"') == 1
    assert svg.count('<path class="locus"') == 1
    circle = next(cs for cs, style, _ in scene.curves if style == "locus")
    assert np.hypot(circle.x, circle.y) == pytest.approx(np.full(len(circle), 5.0))
    one = render_svg(projectile_scene(ProjectileParams(10, 10), 1))
    assert one.count('<path class="family"') == 1 and 'class="envelope"' in one


@pytest.mark.parametrize("v0,shape,ovals", [(1.0, "Lemniscate", 1), (0.5, "TwoOvals", 2),
                                            (2.0, "OneOval", 1)])
def test_oscillator_figure_contents(v0, shape, ovals):
    svg = render_svg(oscillator_scene(OscillatorParams(1.0, v0), 24))
    assert svg.count('<path class="family"') == 24
    assert svg.count('<path class="oval"') == ovals
    assert shape in svg
    for label in ("A", "B", "F1", "F2"):
        assert f">{label}</text>" in svg


def test_svg_is_deterministic_and_well_formed():
    import xml.etree.ElementTree as ET

    a = render_svg(oscillator_scene(OscillatorParams(1.0, 0.5), 8, 90))
    b = render_svg(oscillator_scene(OscillatorParams(1.0, 0.5), 8, 90))
    assert a == b
    root = ET.fromstring(a.encode())
    assert root.get("version") == "1.1"
    nums = re.findall(r"-?\d+\.\d+(?:e-?\d+)?", a)
    assert all(len(n.lstrip("-").replace(".", "").split("e")[0].lstrip("0")) <= 9 for n in nums)


def test_cassini_figure():
    svg = render_svg(cassini_scene(OscillatorParams(1.0, 1.0), 12))
    assert svg.count('class="dots"') >= 1 and "Lemniscate" in svg


def test_csv_header_and_round_trip():
    scene = projectile_scene(ProjectileParams(9.81, 7.0), 3, 40)
    text = write_csv(scene)
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    back = read_csv(text)
    assert len(back) == len(scene.curves)
    for k, (cs, _, label) in enumerate(scene.curves):
        got = back[f"{k}:{label}"]
        np.testing.assert_allclose(got.points, cs.points, rtol=1e-8, atol=1e-12)
        np.testing.assert_allclose(got.param, cs.param, rtol=1e-8, equal_nan=True)


def test_csv_requires_header():
    with pytest.raises(ValueError):
        read_csv("a,b,c\n1,2,3\n")


@given(arrays(float, (7, 2), elements=st.floats(-1e6, 1e6)))
def test_csv_round_trip_property(pts):
    scene = Scene([(CurveSamples(pts), "family", "c")], viewport=(-1, 1, -1, 1))
    got = read_csv(write_csv(scene))["0:c"].points
    np.testing.assert_allclose(got, pts, rtol=5e-9, atol=1e-300)
