import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from harmocass.cassini import (CassiniOval, Shape, cassini_sample_polar, classify, foci_cassini,
                               lemniscate_alpha_theta, lemniscate_focus, orbit_axes, orbit_foci,
                               safety_contact_points, sample_foci, sample_vertex_locus,
                               vertex_locus)
from harmocass.errors import DomainError, UnsupportedCase
from harmocass.geom_core import Point2, cassini_residual, ellipse_from_parametric
from harmocass.oracle import numeric_extrema_r
from harmocass.oscillator import OscillatorParams, orbit_generators, orbit_position, safety_ellipse

O = OscillatorParams(1.0, 1.0)
params = st.builds(OscillatorParams, st.floats(0.2, 5), st.floats(0.2, 5), st.floats(0.25, 4))
angle = st.floats(-math.pi, math.pi)


def test_axes_examples():
    ax = orbit_axes(O, math.pi / 3)
    assert (ax.a2, ax.b2) == pytest.approx((1.5, 0.5))
    ax = orbit_axes(O, math.pi / 2)
    assert (ax.a2, ax.b2) == pytest.approx((1, 1))
    ax = orbit_axes(OscillatorParams(1, 2), 0.0)
    assert (ax.a2, ax.b2) == pytest.approx((5, 0))
    a, b, _ = numeric_extrema_r(Point2(1, 0), Point2(2, 0))
    assert a ** 2 == pytest.approx(5) and b == pytest.approx(0, abs=1e-9)


def test_near_circle_keeps_focus_direction():
    # float pi/2 leaves cos(alpha) ~ 6e-17: a tiny but real focal distance
    ax = orbit_axes(O, math.pi / 2)
    assert ax.a2 == pytest.approx(1) and ax.b2 == pytest.approx(1)
    F = orbit_foci(O, math.pi / 2)[0]
    assert F.dist(lemniscate_focus(1.0, math.pi / 2)) < 1e-15


def test_foci_examples():
    f1, f2 = orbit_foci(O, math.pi / 3)
    assert tuple(f1) == pytest.approx((math.sqrt(3) / 2, 0.5))
    assert tuple(f2) == pytest.approx((-math.sqrt(3) / 2, -0.5))
    f1, f2 = orbit_foci(O, math.pi / 2)
    assert f1.norm() < 1e-7 and f2.norm() < 1e-7
    f1, f2 = orbit_foci(O, 0.0)
    assert tuple(f1) == pytest.approx((math.sqrt(2), 0))
    assert tuple(f2) == pytest.approx((-math.sqrt(2), 0))


def test_shape_examples():
    assert foci_cassini(O).shape is Shape.LEMNISCATE
    assert foci_cassini(OscillatorParams(1, 0.5)).shape is Shape.TWO_OVALS
    assert foci_cassini(OscillatorParams(1, 2)).shape is Shape.ONE_OVAL
    # classification uses p = v0/omega
    assert foci_cassini(OscillatorParams(1, 2, 2)).shape is Shape.LEMNISCATE
    assert classify(1.0, 1.0 + 1e-13) is Shape.LEMNISCATE
    assert classify(1.0, 1.0 + 1e-9) is Shape.ONE_OVAL


def test_polar_examples():
    lem = CassiniOval(1.0, 1.0)
    assert lem.polar_radii(0.0)[0] == pytest.approx(math.sqrt(2))
    assert lem.polar_radii(math.pi / 4)[0] == pytest.approx(0, abs=1e-7)
    one = CassiniOval(1.0, 4.0)
    assert one.polar_radii(math.pi / 2) == pytest.approx([math.sqrt(3)])
    assert cassini_residual(Point2(0, math.sqrt(3)), 1, 4) == pytest.approx(0, abs=1e-12)
    two = CassiniOval(1.0, 0.25)
    assert two.polar_radii(math.pi / 2) == []
    assert len(two.polar_radii(0.0)) == 2


@pytest.mark.parametrize("v0,pieces", [(0.5, 2), (1.0, 1), (2.0, 1)])
def test_polar_sampling_lies_on_oval(v0, pieces):
    cv = foci_cassini(OscillatorParams(1.0, v0))
    s = cassini_sample_polar(cv, 360)
    assert np.abs(cv.residual(s.x, s.y)).max() < 1e-12
    assert len(s.pieces()) == pieces
    assert s.closed
    # consecutive samples stay close: the ordering follows the curve
    for piece in s.pieces():
        steps = np.hypot(*np.diff(piece, axis=0).T)
        assert steps.max() < 0.2


def test_sampling_needs_eight_points():
    with pytest.raises(ValueError):
        cassini_sample_polar(CassiniOval(1, 1), 7)


def test_lemniscate_alpha_theta():
    assert lemniscate_alpha_theta(0.0) == 0
    assert lemniscate_alpha_theta(math.pi / 2) == math.pi / 4
    assert lemniscate_alpha_theta(math.pi / 3) == pytest.approx(math.pi / 6)
    assert orbit_foci(O, math.pi / 3)[0].polar_angle() == pytest.approx(math.pi / 6)
    with pytest.raises(DomainError):
        lemniscate_alpha_theta(2.0)
    with pytest.raises(DomainError):
        lemniscate_focus(1.0, 2.5)


def test_vertex_locus_examples():
    assert tuple(vertex_locus(O, 0.0)) == pytest.approx((math.sqrt(2), 0))
    assert tuple(vertex_locus(O, math.pi / 2)) == pytest.approx((1 / math.sqrt(2), 1 / math.sqrt(2)))
    assert tuple(vertex_locus(O, -math.pi / 2)) == pytest.approx((1 / math.sqrt(2), -1 / math.sqrt(2)))
    V = orbit_position(O, 0.0, math.pi / 4)
    assert tuple(V) == pytest.approx(tuple(vertex_locus(O, 0.0)))
    with pytest.raises(UnsupportedCase):
        vertex_locus(OscillatorParams(1, 2), 0.3)


def test_contact_points():
    o = OscillatorParams(1.0, 0.5)
    for P in safety_contact_points(o):
        assert abs(foci_cassini(o).residual(P.x, P.y)) < 1e-12
        assert abs(safety_ellipse(o).residual(P.x, P.y)) < 1e-12


def test_focus_and_vertex_samples():
    s = sample_foci(O, 48)
    cv = foci_cassini(O)
    assert len(s) == 96 and np.abs(cv.residual(s.x, s.y)).max() < 1e-12
    v = sample_vertex_locus(O, 60)
    assert len(v) == 60


@given(params, angle)
def test_orbit_foci_distance_product(o, alpha):
    A, B = Point2(-o.x0, 0), Point2(o.x0, 0)
    for F in orbit_foci(o, alpha):
        assert abs(F.dist(A) * F.dist(B) - o.p ** 2) <= 1e-9 * max(o.p ** 2, o.x0 ** 2)


@given(params, angle)
def test_axis_sum(o, alpha):
    ax = orbit_axes(o, alpha)
    total = o.x0 ** 2 + o.p ** 2
    assert abs(ax.a2 + ax.b2 - total) <= 1e-12 * total
    assert ax.a2 >= ax.b2 >= 0 and 0 <= ax.t_star < math.pi


@given(params, angle)
def test_axes_match_geom_core_and_oracle(o, alpha):
    P, Q = orbit_generators(o, alpha)
    e = ellipse_from_parametric(P, Q)
    ax = orbit_axes(o, alpha)
    assert ax.a == pytest.approx(e.a, rel=1e-12)
    assert ax.b == pytest.approx(e.b, rel=1e-9, abs=1e-9 * e.a)
    V = orbit_position(o, alpha, ax.t_star / o.omega)
    assert V.norm() == pytest.approx(ax.a, rel=1e-12)


@given(st.floats(0.1, 3), st.floats(0.05, 9), st.floats(-3, 3), st.floats(-3, 3))
def test_bipolar_equals_expanded(lam, mu2, x, y):
    cv = CassiniOval(lam, mu2)
    assert abs(cv.residual(x, y) - cv.residual_expanded(x, y)) <= 1e-10 * max(1.0, (x * x + y * y + lam * lam) ** 2)


@given(st.floats(0.1, 3), st.floats(0.02, 20))
def test_axis_root_count(lam, ratio):
    cv = CassiniOval(lam, lam * lam * ratio)
    expected = {Shape.TWO_OVALS: 4, Shape.LEMNISCATE: 3, Shape.ONE_OVAL: 2}[cv.shape]
    assert len(cv.axis_roots()) == expected
    assert len(CassiniOval(lam, lam * lam).axis_roots()) == 3


@given(st.floats(0.2, 5), st.floats(0.001, math.pi / 2))
def test_lemniscate_focus_and_angle(x0, alpha):
    o = OscillatorParams(x0, x0)
    F = orbit_foci(o, alpha)[0]
    assert F.dist(lemniscate_focus(x0, alpha)) <= 1e-10 * x0
    assert abs(F.polar_angle() - lemniscate_alpha_theta(alpha)) <= 1e-9


@given(st.floats(0.2, 5), st.floats(-math.pi / 2, math.pi / 2))
def test_vertex_semicircle(x0, alpha):
    o = OscillatorParams(x0, x0)
    k = x0 / math.sqrt(2)
    V = vertex_locus(o, alpha)
    assert abs(V.dist(Point2(k, 0)) - k) <= 1e-10 * x0
    ax = orbit_axes(o, alpha)
    if abs(math.cos(alpha)) > 1e-6:
        W = orbit_position(o, alpha, ax.t_star)
        assert min(W.dist(V), W.dist(-V)) <= 1e-9 * x0


@given(params, angle)
def test_parallelogram_law(o, alpha):
    A, B = Point2(-o.x0, 0), Point2(o.x0, 0)
    F1, F2 = orbit_foci(o, alpha)
    lhs = A.dist(B) ** 2 + F1.dist(F2) ** 2
    rhs = 2 * (F1.dist(B) ** 2 + F2.dist(B) ** 2)
    assert abs(lhs - rhs) <= 1e-9 * rhs


@given(params)
def test_shared_foci_and_single_contact_pair(o):
    # for very unequal x0, p the two curves differ by less than the 1e-7 band
    assume(0.25 <= o.x0 / o.p <= 4)
    oval, env = foci_cassini(o), safety_ellipse(o)
    f = sorted(oval.foci, key=lambda p: -p.x)
    assert env.foci[0] == f[0] and env.foci[1] == f[1]
    s = cassini_sample_polar(oval, 720)
    er = np.abs(env.residual(s.x, s.y))
    hit = er <= 1e-7
    # the curves are tangent there, so samples right next to the contact also pass
    near = np.hypot(np.abs(s.x[hit]) - o.amplitude, s.y[hit])
    assert np.all(near < 1e-3 * o.amplitude)
