"""Planar isotropic oscillator started at (x0, 0) with fixed speed in every direction."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateOrbit, InvalidParams
from .geom_core import ConicCoeffs, CurveSamples, Ellipse, ORIGIN, Point2
from .oracle import quadratic_real_roots

AXIS_TOL = 1e-12
DEGENERATE_SIN = 1e-12
# scaled discriminant below which a point counts as on the safety ellipse
BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class OscillatorParams:
    x0: float
    v0: float
    omega: float = 1.0

    def __post_init__(self):
        for name in ("x0", "v0", "omega"):
            val = getattr(self, name)
            if not (math.isfinite(val) and val > 0):
                raise InvalidParams(f"{name} must be positive and finite, got {val}")

    @property
    def p(self) -> float:
        """Velocity amplitude v0 / omega; orbits depend on v0 only through it."""
        return self.v0 / self.omega

    @property
    def amplitude(self) -> float:
        """Largest distance from the origin reached by any orbit."""
        return math.hypot(self.x0, self.p)


class Reach(enum.Enum):
    EXTERIOR = "Exterior"
    BOUNDARY = "Boundary"
    INTERIOR = "Interior"


@dataclass(frozen=True)
class Reachability:
    """Which orbits of the family pass through a point.

    Off the x-axis ``angles`` holds 0, 1 or 2 launch directions in (0, pi)
    matching EXTERIOR, BOUNDARY, INTERIOR.  On the x-axis (``on_axis``) the
    count rule does not apply: the nodes (+/-x0, 0) lie on every orbit
    (``every_angle``) and the rest of the segment |x| <= amplitude is
    covered only by the collapsed alpha = 0 orbit, reported as ``(0.0,)``.
    """

    tag: Reach
    angles: tuple[float, ...] = ()
    on_axis: bool = False
    every_angle: bool = False


def orbit_generators(o: OscillatorParams, alpha: float) -> tuple[Point2, Point2]:
    """``(P, Q)`` with orbit(t) = P cos(omega t) + Q sin(omega t)."""
    return Point2(o.x0, 0.0), Point2(o.p * math.cos(alpha), o.p * math.sin(alpha))


def orbit_position(o: OscillatorParams, alpha: float, t):
    """Position at time ``t``; scalar gives a :class:`Point2`, arrays an ``(n, 2)`` array."""
    if np.ndim(t) == 0:
        wt = o.omega * t
        s = math.sin(wt)
        return Point2(o.x0 * math.cos(wt) + o.p * math.cos(alpha) * s, o.p * math.sin(alpha) * s)
    wt = o.omega * np.asarray(t, dtype=float)
    s = np.sin(wt)
    return np.stack([o.x0 * np.cos(wt) + o.p * math.cos(alpha) * s,
                     o.p * math.sin(alpha) * s], axis=-1)


def orbit_implicit(o: OscillatorParams, alpha: float) -> ConicCoeffs:
    """Expanded ``((x - y cot a)/x0)^2 + (y/(p sin a))^2 - 1 = 0``.

    Raises
    ------
    DegenerateOrbit
        when ``|sin alpha| < 1e-12``; that orbit is a segment of the x-axis.
    """
    sa = math.sin(alpha)
    if abs(sa) < DEGENERATE_SIN:
        raise DegenerateOrbit(f"alpha = {alpha}: orbit collapses to a segment")
    cot = math.cos(alpha) / sa
    ix2 = 1.0 / (o.x0 * o.x0)
    return ConicCoeffs(ix2, -2.0 * cot * ix2, cot * cot * ix2 + 1.0 / (o.p * sa) ** 2, 0.0, 0.0, -1.0)


def cot_alpha_quadratic(o: OscillatorParams, pt: Point2) -> tuple[float, float, float]:
    """Orbit equation through ``pt`` written as ``c2 z^2 + c1 z + c0`` in z = cot(alpha)."""
    x, y = pt
    p2, x02 = o.p * o.p, o.x0 * o.x0
    return y * y * (p2 + x02), -2.0 * x * y * p2, (x * x - x02) * p2 + x02 * y * y


def cot_alpha_discriminant(o: OscillatorParams, pt: Point2, scaled: bool = False) -> float:
    """Discriminant of :func:`cot_alpha_quadratic`.

    It factors as ``4 y^2 x0^2 p^2 (x0^2 + p^2) (1 - E)`` with ``E`` the
    safety-ellipse form, so with ``scaled`` that prefactor is divided out,
    leaving a value that is 0 on the envelope, 1 at the centre and does not
    depend on the size of the orbits.  Points on the x-axis give 0.
    """
    c2, c1, c0 = cot_alpha_quadratic(o, pt)
    disc = c1 * c1 - 4.0 * c2 * c0
    if not scaled:
        return disc
    scale = 4.0 * c2 * (o.x0 * o.p) ** 2
    return disc / scale if scale > 0 else 0.0


def _cot_to_alpha(z: float) -> float:
    return math.atan2(1.0, z)


def reach_classification(o: OscillatorParams, pt: Point2, tol: float = BOUNDARY_TOL) -> Reachability:
    """Count launch directions whose orbit passes through ``pt``.

    Off the axis the tag follows the sign of the scaled discriminant, with
    ``|disc| <= tol`` counted as tangency to the safety ellipse.
    """
    x, y = pt
    if abs(y) < AXIS_TOL:
        a = o.amplitude
        if abs(abs(x) - o.x0) <= tol * o.x0:
            return Reachability(Reach.INTERIOR, (), on_axis=True, every_angle=True)
        if abs(x) > a * (1.0 + tol):
            return Reachability(Reach.EXTERIOR, (), on_axis=True)
        tag = Reach.BOUNDARY if abs(abs(x) - a) <= tol * a else Reach.INTERIOR
        return Reachability(tag, (0.0,), on_axis=True)

    c2, c1, c0 = cot_alpha_quadratic(o, pt)
    d = cot_alpha_discriminant(o, pt, scaled=True)
    if abs(d) <= tol:
        return Reachability(Reach.BOUNDARY, (_cot_to_alpha(-c1 / (2.0 * c2)),))
    if d < 0:
        return Reachability(Reach.EXTERIOR)
    roots = quadratic_real_roots(c2, c1, c0)
    return Reachability(Reach.INTERIOR, tuple(sorted(_cot_to_alpha(z) for z in roots)))


def safety_ellipse(o: OscillatorParams) -> Ellipse:
    """Envelope of the family: semi-axes sqrt(x0^2 + p^2) and p, foci (+/-x0, 0)."""
    return Ellipse(ORIGIN, o.amplitude, o.p, 0.0, focal=o.x0)


def envelope_residual(o: OscillatorParams, x, y):
    """``x^2/(x0^2+p^2) + y^2/p^2 - 1``; non-positive on every orbit."""
    return np.asarray(x) ** 2 / (o.x0 ** 2 + o.p ** 2) + (np.asarray(y) / o.p) ** 2 - 1.0


def sample_orbit(o: OscillatorParams, alpha: float, n: int = 360) -> CurveSamples:
    """One period at ``n`` evenly spaced times, starting from (x0, 0)."""
    t = np.linspace(0.0, 2.0 * math.pi / o.omega, n, endpoint=False)
    return CurveSamples(orbit_position(o, alpha, t), alpha, t, closed=True)
