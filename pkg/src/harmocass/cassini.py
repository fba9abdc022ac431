"""Axes and foci of the oscillator orbits, and the Cassini oval the foci trace.

For the orbit ``P cos s + Q sin s`` with ``P = (x0, 0)`` and
``Q = p (cos a, sin a)`` (``s = omega t``)::

    |r(s)|^2 = (x0^2 + p^2)/2 + (x0^2 - p^2)/2 cos 2s + x0 p cos(a) sin 2s

so ``a^2 + b^2 = x0^2 + p^2`` for every launch direction, and both foci
satisfy ``d(F, (-x0, 0)) * d(F, (x0, 0)) = p^2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedCase
from .geom_core import ORIGIN, CurveSamples, Point2
from .oracle import quadratic_real_roots
from .oscillator import OscillatorParams, orbit_position

LEMNISCATE_TOL = 1e-12


class Shape(enum.Enum):
    TWO_OVALS = "TwoOvals"
    LEMNISCATE = "Lemniscate"
    ONE_OVAL = "OneOval"


def classify(lam: float, mu2: float, tol: float = LEMNISCATE_TOL) -> Shape:
    lam2 = lam * lam
    if abs(mu2 - lam2) <= tol * max(mu2, lam2):
        return Shape.LEMNISCATE
    return Shape.TWO_OVALS if mu2 < lam2 else Shape.ONE_OVAL


@dataclass(frozen=True)
class CassiniOval:
    """Points whose distances to ``(-lam, 0)`` and ``(lam, 0)`` multiply to ``mu2``."""

    lam: float
    mu2: float

    def __post_init__(self):
        if not (self.lam >= 0 and self.mu2 >= 0):
            raise ValueError(f"need lam >= 0 and mu2 >= 0, got {self.lam}, {self.mu2}")

    @property
    def shape(self) -> Shape:
        return classify(self.lam, self.mu2)

    @property
    def foci(self) -> tuple[Point2, Point2]:
        return Point2(-self.lam, 0.0), Point2(self.lam, 0.0)

    def residual(self, x, y):
        """Bipolar form ``[(x+l)^2+y^2][(x-l)^2+y^2] - mu^4``; works on arrays."""
        lam, mu2 = self.lam, self.mu2
        return ((x + lam) ** 2 + y * y) * ((x - lam) ** 2 + y * y) - mu2 * mu2

    def residual_expanded(self, x, y):
        """Same curve as ``(x^2+y^2)^2 - 2 l^2 (x^2-y^2) - (mu^4 - l^4)``."""
        lam2, mu2 = self.lam ** 2, self.mu2
        return (x * x + y * y) ** 2 - 2.0 * lam2 * (x * x - y * y) - (mu2 - lam2) * (mu2 + lam2)

    def polar_radii(self, theta: float) -> list[float]:
        """Radii r >= 0 on the ray at polar angle ``theta``, largest first."""
        lam2 = self.lam ** 2
        roots = quadratic_real_roots(1.0, -2.0 * lam2 * math.cos(2.0 * theta),
                                     -(self.mu2 - lam2) * (self.mu2 + lam2), rel_tol=1e-15)
        return [math.sqrt(u) for u in roots if u >= 0]

    def axis_roots(self, tol: float = LEMNISCATE_TOL) -> list[float]:
        """Distinct real x with (x, 0) on the curve, ascending."""
        lam2 = self.lam ** 2
        us = quadratic_real_roots(1.0, -2.0 * lam2, -(self.mu2 - lam2) * (self.mu2 + lam2))
        scale = max(lam2, self.mu2)
        xs = set()
        for u in us:
            if abs(u) <= tol * scale:
                xs.add(0.0)
            elif u > 0:
                xs.update((math.sqrt(u), -math.sqrt(u)))
        return sorted(xs)


@dataclass(frozen=True)
class OrbitAxes:
    a2: float
    b2: float
    t_star: float  # phase omega*t of the major vertex, in [0, pi)

    @property
    def a(self) -> float:
        return math.sqrt(self.a2)

    @property
    def b(self) -> float:
        return math.sqrt(self.b2)

    @property
    def c(self) -> float:
        return math.sqrt(max(self.a2 - self.b2, 0.0))


def _amplitude_phase(o: OscillatorParams, alpha: float) -> tuple[float, float, float]:
    """``(S, hypot(D, E), t_star)`` for ``|r(s)|^2 = S + D cos 2s + E sin 2s``."""
    x0, p = o.x0, o.p
    D = 0.5 * (x0 * x0 - p * p)
    E = x0 * p * math.cos(alpha)
    amp = math.hypot(D, E)
    t_star = (0.5 * math.atan2(E, D)) % math.pi if amp > 0 else 0.0
    return 0.5 * (x0 * x0 + p * p), amp, t_star


def orbit_axes(o: OscillatorParams, alpha: float) -> OrbitAxes:
    """Squared semi-axes and major-vertex phase of orbit ``alpha``.

    The minor axis comes from ``a b = x0 p |sin alpha|`` (area of the
    orbit), which is free of the cancellation in
    ``S - sqrt(D^2 + E^2)``.  ``alpha = 0`` gives the collapsed orbit with
    ``b2 = 0``; an exact circle gets ``t_star = 0``.
    """
    S, amp, t_star = _amplitude_phase(o, alpha)
    if amp == 0:
        return OrbitAxes(S, S, 0.0)
    a2 = S + amp
    ab = o.x0 * o.p * math.sin(alpha)
    return OrbitAxes(a2, min(ab * ab / a2, a2), t_star)


def orbit_foci(o: OscillatorParams, alpha: float) -> tuple[Point2, Point2]:
    """Foci ``+/-(c/a) V`` of orbit ``alpha``, V the major vertex at phase ``t_star``.

    ``c^2 = a^2 - b^2`` is taken as ``2 hypot(D, E)``, exact even for nearly
    circular orbits.  For x0 = p and cos(alpha) > 0 the first element is the
    first-quadrant focus.  Circular orbits return the origin twice.
    """
    S, amp, t_star = _amplitude_phase(o, alpha)
    if amp == 0:
        return ORIGIN, ORIGIN
    V = orbit_position(o, alpha, t_star / o.omega)
    F = V.scaled(math.sqrt(2.0 * amp / (S + amp)))
    return F, -F


def foci_cassini(o: OscillatorParams) -> CassiniOval:
    """Cassini oval of the orbit foci: foci (+/-x0, 0), distance product p^2."""
    return CassiniOval(o.x0, o.p * o.p)


def safety_contact_points(o: OscillatorParams) -> tuple[Point2, Point2]:
    """Where the focus oval meets the safety ellipse: ends of the alpha = 0 segment."""
    a = o.amplitude
    return Point2(a, 0.0), Point2(-a, 0.0)


def lemniscate_focus(x0: float, alpha: float) -> Point2:
    """First-quadrant focus for x0 = p in closed form; needs cos(alpha) >= 0."""
    ca = math.cos(alpha)
    # cos(pi/2) rounds to +/-6e-17; treat that as the node itself
    if -1e-15 < ca < 0:
        ca = 0.0
    if ca < 0:
        raise DomainError(f"closed form needs cos(alpha) >= 0, got alpha = {alpha}")
    return Point2(x0 * math.sqrt(ca * (1.0 + ca)),
                  x0 * math.sin(alpha) * math.sqrt(ca) / math.sqrt(1.0 + ca))


def lemniscate_alpha_theta(alpha: float) -> float:
    """Polar angle alpha / 2 of the first-quadrant focus when x0 = p."""
    if not (-0.5 * math.pi <= alpha <= 0.5 * math.pi):
        raise DomainError(f"alpha = {alpha} outside [-pi/2, pi/2]")
    return 0.5 * alpha


def vertex_locus(o: OscillatorParams, alpha: float) -> Point2:
    """Vertex at phase pi/4 when x0 = p: on the circle of radius x0/sqrt 2 about (x0/sqrt 2, 0)."""
    if abs(o.x0 - o.p) > LEMNISCATE_TOL * max(o.x0, o.p):
        raise UnsupportedCase("vertex circle only holds for x0 = v0/omega; "
                              "use orbit_position at orbit_axes().t_star")
    k = o.x0 / math.sqrt(2.0)
    return Point2(k * (1.0 + math.cos(alpha)), k * math.sin(alpha))


def cassini_sample_polar(cv: CassiniOval, n: int = 360) -> CurveSamples:
    """Sample the oval from its polar equation ``r^4 - 2 l^2 r^2 cos 2t = mu^4 - l^4``.

    Pieces follow the shape: one closed loop for ONE_OVAL, one figure-eight
    path through the origin for LEMNISCATE, two closed loops for TWO_OVALS
    (outer branch out, inner branch back, restricted to the admissible
    band ``cos 2t >= sqrt(l^4 - mu^4) / l^2``).
    """
    if n < 8:
        raise ValueError(f"n must be >= 8, got {n}")
    lam2, mu2 = cv.lam ** 2, cv.mu2
    shape = cv.shape

    def outer(theta):
        c2 = np.cos(2.0 * theta)
        disc = np.maximum(lam2 * lam2 * c2 * c2 + (mu2 - lam2) * (mu2 + lam2), 0.0)
        return lam2 * c2 + np.sqrt(disc)

    def to_xy(theta, u):
        r = np.sqrt(np.maximum(u, 0.0))
        return np.stack([r * np.cos(theta), r * np.sin(theta)], axis=-1)

    if shape is Shape.ONE_OVAL:
        th = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
        return CurveSamples(to_xy(th, outer(th)), param=th, closed=True)

    if shape is Shape.LEMNISCATE:
        m = (n // 2) | 1  # odd, so theta = 0 (the contact point) is sampled
        right = np.linspace(-0.25 * math.pi, 0.25 * math.pi, m)
        th = np.concatenate([right, right + math.pi])
        u = 2.0 * lam2 * np.clip(np.cos(2.0 * th), 0.0, None)
        return CurveSamples(to_xy(th, u), param=th, closed=True)

    m = max(n // 4, 3) | 1
    half = 0.5 * math.acos(math.sqrt((lam2 - mu2) * (lam2 + mu2)) / lam2)
    band = np.linspace(-half, half, m)
    u_out = outer(band)
    u_in = np.divide((lam2 - mu2) * (lam2 + mu2), u_out)
    loop_th = np.concatenate([band, band[::-1]])
    loop_u = np.concatenate([u_out, u_in[::-1]])
    th = np.concatenate([loop_th, loop_th + math.pi])
    u = np.concatenate([loop_u, loop_u])
    piece = np.repeat([0, 1], len(loop_th))
    return CurveSamples(to_xy(th, u), param=th, piece=piece, closed=True)


def sample_foci(o: OscillatorParams, n: int = 360) -> CurveSamples:
    """Both foci of ``n`` orbits with alpha spread over (-pi, pi]."""
    alphas = -math.pi + 2.0 * math.pi * (np.arange(n) + 1) / n
    pts, al = [], []
    for a in alphas:
        f1, f2 = orbit_foci(o, float(a))
        pts += [tuple(f1), tuple(f2)]
        al += [a, a]
    tstar = np.repeat([orbit_axes(o, float(a)).t_star for a in alphas], 2)
    return CurveSamples(np.array(pts), al, tstar)


def sample_vertex_locus(o: OscillatorParams, n: int = 180) -> CurveSamples:
    """Major vertices ``V(alpha)`` over (-pi, pi], from orbit_position at t_star."""
    alphas = -math.pi + 2.0 * math.pi * (np.arange(n) + 1) / n
    pts, ts = [], []
    for a in alphas:
        ax = orbit_axes(o, float(a))
        pts.append(tuple(orbit_position(o, float(a), ax.t_star / o.omega)))
        ts.append(ax.t_star)
    return CurveSamples(np.array(pts), alphas, ts)
