"""Projectiles launched from the origin with fixed speed and varying angle."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams, OutOfFamily, VerticalTrajectory
from .geom_core import CurveSamples, Parabola, Point2

VERTICAL_TOL = 1e-12


@dataclass(frozen=True)
class ProjectileParams:
    g: float
    v0: float

    def __post_init__(self):
        for name in ("g", "v0"):
            val = getattr(self, name)
            if not (math.isfinite(val) and val > 0):
                raise InvalidParams(f"{name} must be positive and finite, got {val}")

    @property
    def reach(self) -> float:
        """Largest range along the x-axis, v0^2 / g."""
        return self.v0 * self.v0 / self.g

    @property
    def focus_radius(self) -> float:
        return 0.5 * self.reach


def trajectory_position(p: ProjectileParams, alpha: float, t):
    """Position at time ``t``; scalar ``t`` gives a :class:`Point2`, arrays an ``(n, 2)`` array."""
    if np.ndim(t) == 0:
        if t < 0:
            raise ValueError(f"t must be >= 0, got {t}")
        return Point2(p.v0 * math.cos(alpha) * t,
                      p.v0 * math.sin(alpha) * t - 0.5 * p.g * t * t)
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValueError("t must be >= 0")
    return np.stack([p.v0 * math.cos(alpha) * t,
                     p.v0 * math.sin(alpha) * t - 0.5 * p.g * t * t], axis=-1)


def trajectory_parabola(p: ProjectileParams, alpha: float) -> Parabola:
    """The trajectory as ``y = x tan(alpha) - g x^2 / (2 v0^2 cos^2 alpha)``."""
    ca = math.cos(alpha)
    if abs(ca) < VERTICAL_TOL:
        raise VerticalTrajectory(f"alpha = {alpha} is vertical; y(x) does not exist")
    return Parabola(-p.g / (2.0 * p.v0 * p.v0 * ca * ca), math.tan(alpha), 0.0)


def trajectory_height(p: ProjectileParams, alpha: float, x):
    return trajectory_parabola(p, alpha)(x)


def range_on_axis(p: ProjectileParams, alpha: float) -> float:
    """Signed second x-intercept (v0^2/g) sin 2 alpha."""
    return p.reach * math.sin(2.0 * alpha)


def safety_parabola(p: ProjectileParams) -> Parabola:
    """Envelope ``y = -g x^2/(2 v0^2) + v0^2/(2g)``: vertex (0, v0^2/2g), focus at the origin."""
    return Parabola(-p.g / (2.0 * p.v0 * p.v0), 0.0, 0.5 * p.reach)


def tan_alpha_quadratic(p: ProjectileParams, pt: Point2) -> tuple[float, float, float]:
    """Coefficients of the trajectory equation through ``pt`` as a quadratic in tan(alpha)."""
    k = p.g * pt.x * pt.x / (2.0 * p.v0 * p.v0)
    return k, -pt.x, pt.y + k


def tan_alpha_discriminant(p: ProjectileParams, pt: Point2) -> float:
    """Zero on the safety parabola, positive below it, negative above (for x != 0)."""
    a2, a1, a0 = tan_alpha_quadratic(p, pt)
    return a1 * a1 - 4.0 * a2 * a0


def tangency_abscissa(p: ProjectileParams, alpha: float) -> float:
    """Abscissa where trajectory ``alpha`` touches the safety parabola, v0^2/(g tan alpha).

    Raises
    ------
    OutOfFamily
        for alpha outside (0, pi).
    """
    if not (0.0 < alpha < math.pi):
        raise OutOfFamily(f"alpha = {alpha} is outside (0, pi); no contact with the envelope")
    if alpha == 0.5 * math.pi:
        return 0.0
    return p.reach * math.cos(alpha) / math.sin(alpha)


def trajectory_focus(p: ProjectileParams, alpha: float) -> Point2:
    R = p.focus_radius
    return Point2(R * math.sin(2.0 * alpha), -R * math.cos(2.0 * alpha))


def sample_trajectory(p: ProjectileParams, alpha: float, n: int = 360) -> CurveSamples:
    """Flight from launch back to y = 0 (or to the apex and back for alpha = pi/2)."""
    T = 2.0 * p.v0 * math.sin(alpha) / p.g
    if T <= 0:
        raise OutOfFamily(f"alpha = {alpha} never rises above the x-axis")
    t = np.linspace(0.0, T, n)
    return CurveSamples(trajectory_position(p, alpha, t), alpha, t)


def sample_safety_parabola(p: ProjectileParams, n: int = 360) -> CurveSamples:
    """Envelope over its x-intercept span [-v0^2/g, v0^2/g]."""
    par = safety_parabola(p)
    x = np.linspace(-p.reach, p.reach, n)
    return CurveSamples(np.stack([x, par(x)], axis=-1), param=x)


def sample_focus_circle(p: ProjectileParams, n: int = 360) -> CurveSamples:
    al = np.linspace(0.0, math.pi, n, endpoint=False)
    R = p.focus_radius
    return CurveSamples(np.stack([R * np.sin(2 * al), -R * np.cos(2 * al)], axis=-1), al, al,
                        closed=True)


def family_angles(n: int) -> np.ndarray:
    """``n`` launch angles evenly spread over (0, pi), cell midpoints."""
    return (np.arange(n) + 0.5) * math.pi / n
