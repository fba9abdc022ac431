"""Envelopes of projectile and oscillator families, and the Cassini oval of orbit foci."""

from .cassini import (CassiniOval, OrbitAxes, Shape, foci_cassini, lemniscate_alpha_theta,
                      lemniscate_focus, orbit_axes, orbit_foci, vertex_locus)
from .errors import HarmocassError
from .geom_core import ConicCoeffs, CurveSamples, Ellipse, Parabola, Point2
from .oscillator import OscillatorParams, Reach, reach_classification, safety_ellipse
from .projectile import ProjectileParams, safety_parabola, tangency_abscissa, trajectory_focus

__version__ = "0.1.0"

__all__ = [
    "CassiniOval", "ConicCoeffs", "CurveSamples", "Ellipse", "HarmocassError",
    "OrbitAxes", "OscillatorParams", "Parabola", "Point2", "ProjectileParams", "Reach",
    "Shape", "foci_cassini", "lemniscate_alpha_theta", "lemniscate_focus", "orbit_axes",
    "orbit_foci", "reach_classification", "safety_ellipse", "safety_parabola",
    "tangency_abscissa", "trajectory_focus", "vertex_locus",
]
