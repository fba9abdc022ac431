"""Scene builders for the three figure families."""

from __future__ import annotations

import numpy as np

from .cassini import (cassini_sample_polar, foci_cassini, orbit_foci, safety_contact_points,
                      sample_foci, sample_vertex_locus)
from .errors import InvalidParams
from .geom_core import CurveSamples
from .oscillator import OscillatorParams, safety_ellipse, sample_orbit
from .projectile import (ProjectileParams, family_angles, sample_focus_circle,
                         sample_safety_parabola, sample_trajectory, trajectory_focus)
from .render import Scene


def _check_counts(n_angles: int, n_samples: int):
    if n_angles < 1:
        raise InvalidParams(f"need at least one angle, got {n_angles}")
    if n_samples < 8:
        raise InvalidParams(f"need at least 8 samples per curve, got {n_samples}")


def _marker(x: float, y: float, label: str):
    return CurveSamples([[x, y]]), "marker", label


def projectile_scene(p: ProjectileParams, n_angles: int = 24, n_samples: int = 360) -> Scene:
    """Trajectories, their safety parabola and the circle of their foci."""
    _check_counts(n_angles, n_samples)
    curves = []
    for al in family_angles(n_angles):
        curves.append((sample_trajectory(p, float(al), n_samples), "family",
                       f"trajectory alpha={al:.9g}"))
    foci = np.array([tuple(trajectory_focus(p, float(al))) for al in family_angles(n_angles)])
    curves.append((sample_safety_parabola(p, n_samples), "envelope", "safety parabola"))
    curves.append((sample_focus_circle(p, n_samples), "locus",
                   f"focus circle R={p.focus_radius:.9g}"))
    curves.append((CurveSamples(foci, family_angles(n_angles)), "dots", "trajectory foci"))
    curves.append(_marker(0.0, 0.0, "O"))
    return Scene(curves, title=f"Projectiles g={p.g:.9g} v0={p.v0:.9g}, {n_angles} angles")


def _orbit_angles(n: int) -> np.ndarray:
    # alpha and alpha + pi trace the same ellipse, so (0, pi) covers the family
    return family_angles(n)


def oscillator_scene(o: OscillatorParams, n_angles: int = 24, n_samples: int = 360) -> Scene:
    """Orbit family, safety ellipse, Cassini oval of foci and the points A, B, F1, F2."""
    _check_counts(n_angles, n_samples)
    curves = []
    foci = []
    for al in _orbit_angles(n_angles):
        curves.append((sample_orbit(o, float(al), n_samples), "family", f"orbit alpha={al:.9g}"))
        foci += [tuple(f) for f in orbit_foci(o, float(al))]
    env = safety_ellipse(o)
    curves.append((CurveSamples(env.sample(n_samples), closed=True), "envelope", "safety ellipse"))
    cv = foci_cassini(o)
    curves.append((cassini_sample_polar(cv, n_samples), "oval", f"Cassini oval {cv.shape.value}"))
    curves.append((CurveSamples(foci, np.repeat(_orbit_angles(n_angles), 2)), "dots", "orbit foci"))
    curves.append(_marker(-o.x0, 0.0, "A"))
    curves.append(_marker(o.x0, 0.0, "B"))
    f1, f2 = safety_contact_points(o)
    curves.append(_marker(f1.x, f1.y, "F1"))
    curves.append(_marker(f2.x, f2.y, "F2"))
    return Scene(curves, title=f"Oscillator x0={o.x0:.9g} v0={o.v0:.9g} omega={o.omega:.9g}, "
                               f"{n_angles} angles, {cv.shape.value}")


def cassini_scene(o: OscillatorParams, n_angles: int = 24, n_samples: int = 360) -> Scene:
    """The focus oval with computed foci and major vertices of ``n_angles`` orbits."""
    _check_counts(n_angles, n_samples)
    cv = foci_cassini(o)
    env = safety_ellipse(o)
    curves = [
        (CurveSamples(env.sample(n_samples), closed=True), "envelope", "safety ellipse"),
        (cassini_sample_polar(cv, n_samples), "oval", f"Cassini oval {cv.shape.value}"),
        (sample_foci(o, n_angles), "dots", "orbit foci"),
        (sample_vertex_locus(o, n_angles), "vertices", "major vertices"),
        _marker(-o.x0, 0.0, "A"),
        _marker(o.x0, 0.0, "B"),
    ]
    return Scene(curves, title=f"Foci of the orbits x0={o.x0:.9g} p={o.p:.9g}: {cv.shape.value}")
