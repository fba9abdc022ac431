import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from harmocass.errors import InvalidParams, OutOfFamily, VerticalTrajectory
from harmocass.geom_core import Point2
from harmocass.projectile import (ProjectileParams, family_angles, range_on_axis, safety_parabola,
                                  sample_focus_circle, sample_trajectory, tan_alpha_discriminant,
                                  tangency_abscissa, trajectory_focus, trajectory_height,
                                  trajectory_parabola, trajectory_position)

P = ProjectileParams(10.0, 10.0)
params = st.builds(ProjectileParams, st.floats(0.5, 20), st.floats(0.5, 20))
family = st.floats(0.01, math.pi - 0.01)


@pytest.mark.parametrize("g,v0", [(0, 1), (-1, 1), (1, 0), (math.inf, 1), (1, math.nan)])
def test_params_must_be_positive(g, v0):
    with pytest.raises(InvalidParams):
        ProjectileParams(g, v0)


def test_position_examples():
    assert tuple(trajectory_position(P, math.pi / 2, 1.0)) == pytest.approx((0, 5), abs=1e-12)
    assert tuple(trajectory_position(P, 0.7, 0.0)) == (0, 0)
    assert tuple(trajectory_position(P, math.pi / 4, math.sqrt(2))) == pytest.approx((10, 0), abs=1e-12)
    with pytest.raises(ValueError):
        trajectory_position(P, 0.3, -1.0)


def test_height_examples():
    assert trajectory_height(P, math.pi / 4, 5.0) == pytest.approx(2.5)
    assert trajectory_height(P, 1.1, 0.0) == 0
    assert trajectory_height(P, math.pi / 4, 10.0) == pytest.approx(0, abs=1e-12)
    with pytest.raises(VerticalTrajectory):
        trajectory_height(P, math.pi / 2, 1.0)


def test_range_examples():
    assert range_on_axis(P, math.pi / 4) == pytest.approx(10)
    assert range_on_axis(P, math.pi / 2) == pytest.approx(0, abs=1e-12)
    assert range_on_axis(P, 3 * math.pi / 4) == pytest.approx(-10)


def test_safety_parabola_examples():
    par = safety_parabola(P)
    assert (par.q2, par.q1, par.q0) == (-0.05, 0.0, 5.0)
    assert par.x_intercepts() == pytest.approx([-10, 10])
    assert par.focus.norm() == pytest.approx(0, abs=1e-12)
    assert safety_parabola(ProjectileParams(9.8, 9.8)).q0 == pytest.approx(4.9)


def test_tangency_examples():
    assert tangency_abscissa(P, math.pi / 2) == 0.0
    assert tangency_abscissa(P, math.pi / 4) == pytest.approx(10)
    assert tangency_abscissa(P, 0.01) == pytest.approx(10 / math.tan(0.01))
    for bad in (0.0, math.pi, -0.2, 4.0):
        with pytest.raises(OutOfFamily):
            tangency_abscissa(P, bad)


def test_focus_examples():
    assert tuple(trajectory_focus(P, math.pi / 4)) == pytest.approx((5, 0), abs=1e-12)
    assert tuple(trajectory_focus(P, math.pi / 2)) == pytest.approx((0, 5), abs=1e-12)
    circle = sample_focus_circle(P, 360)
    assert np.hypot(circle.x, circle.y) == pytest.approx(np.full(360, 5.0))


def test_sample_trajectory_lands_on_axis():
    s = sample_trajectory(P, 0.4, 100)
    assert tuple(s.points[0]) == (0, 0)
    assert s.points[-1, 1] == pytest.approx(0, abs=1e-12)
    assert s.points[-1, 0] == pytest.approx(range_on_axis(P, 0.4))
    with pytest.raises(OutOfFamily):
        sample_trajectory(P, -0.4)


def test_family_angles_are_interior():
    a = family_angles(16)
    assert len(a) == 16 and a.min() > 0 and a.max() < math.pi
    assert family_angles(1)[0] == pytest.approx(math.pi / 2)


@given(params, family)
def test_tangency_point_on_both_curves(p, alpha):
    x = tangency_abscissa(p, alpha)
    env = safety_parabola(p)
    if abs(math.cos(alpha)) > 1e-9:
        y = trajectory_height(p, alpha, x)
        assert abs(y - env(x)) <= 1e-9 * max(1.0, abs(env(x)), x * x * abs(env.q2))
        xs = np.linspace(-2 * p.reach, 2 * p.reach, 401)
        gap = env(xs) - trajectory_height(p, alpha, xs)
        assert gap.min() >= -1e-9 * max(1.0, p.reach)


@given(params, family)
def test_envelope_gap_is_square(p, alpha):
    # safety - trajectory = (g / 2v0^2) (x tan(alpha) - v0^2/g)^2 / tan^2(alpha) * ...
    xs = np.linspace(-p.reach, p.reach, 50)
    traj = trajectory_parabola(p, alpha)
    env = safety_parabola(p)
    t = math.tan(alpha)
    expect = p.g / (2 * p.v0 ** 2) * (xs * t - p.reach) ** 2
    np.testing.assert_allclose(env(xs) - traj(xs), expect, atol=1e-8 * max(1, p.reach) * (1 + t * t))


def test_discriminant_law_grid():
    env = safety_parabola(P)
    xs = np.linspace(-9.5, 9.5, 50)
    xs = xs[np.abs(xs) > 1e-6]
    offsets = np.linspace(-3, 3, 50)
    offsets = offsets[np.abs(offsets) > 1e-6]
    for x in xs:
        assert abs(tan_alpha_discriminant(P, Point2(x, env(x)))) < 1e-9 * x * x
        for dy in offsets:
            d = tan_alpha_discriminant(P, Point2(x, env(x) + dy))
            assert (d < 0) if dy > 0 else (d > 0)


@given(params, st.floats(0.0, math.pi))
def test_focus_circle_and_mirror(p, alpha):
    f = trajectory_focus(p, alpha)
    assert abs(f.norm() / p.focus_radius - 1) <= 1e-12
    m = trajectory_focus(p, math.pi - alpha)
    assert m.x == pytest.approx(-f.x, abs=1e-12 * p.reach)
    assert m.y == pytest.approx(f.y, abs=1e-12 * p.reach)


@given(params, family)
def test_focus_matches_parabola_vertex_construction(p, alpha):
    if abs(math.cos(alpha)) > 1e-3:
        f = trajectory_parabola(p, alpha).focus
        assert f.dist(trajectory_focus(p, alpha)) <= 1e-10 * max(1.0, p.reach / math.cos(alpha) ** 2)
