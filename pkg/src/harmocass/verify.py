"""Invariant suites behind ``harmocass verify``.

Each check reports a measured worst-case value against a tolerance.
Checks marked as residual checks take the ``--tol`` override; count and
sign checks keep their own thresholds.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import cassini as cs
from . import oracle
from .errors import UnknownSuite
from .geom_core import Point2, ellipse_from_parametric
from .oscillator import (OscillatorParams, Reach, cot_alpha_discriminant, envelope_residual,
                         orbit_implicit, reach_classification, safety_ellipse, sample_orbit)
from .projectile import (ProjectileParams, safety_parabola, sample_safety_parabola,
                         tan_alpha_discriminant, tangency_abscissa, trajectory_focus,
                         trajectory_parabola)

SUITES = ("projectile", "oscillator", "cassini", "oracle")
GRID = (0.5, 1.0, 2.0)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    measured: float
    tolerance: float

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass(frozen=True)
class VerifyReport:
    checks: list = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "checks": [{"name": c.name, "status": c.status, "measured": c.measured,
                        "tolerance": c.tolerance} for c in self.checks],
            "overall": self.overall,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        w = max([len(c.name) for c in self.checks] + [5])
        lines = [f"{'check':<{w}}  status  {'measured':>12}  {'tolerance':>12}"]
        for c in self.checks:
            lines.append(f"{c.name:<{w}}  {c.status:<6}  {c.measured:>12.3e}  {c.tolerance:>12.3e}")
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'} "
                     f"({sum(c.passed for c in self.checks)}/{len(self.checks)})")
        return "\n".join(lines) + "\n"


class _Collector:
    def __init__(self, tol):
        self.tol = tol
        self.checks = []

    def at_most(self, name, measured, tolerance, residual=True):
        if residual and self.tol is not None:
            tolerance = self.tol
        measured = float(measured)
        self.checks.append(Check(name, bool(measured <= tolerance), measured, float(tolerance)))

    def count(self, name, bad):
        """Pass when ``bad`` (a number of violations) is zero."""
        self.checks.append(Check(name, bad == 0, float(bad), 0.0))


def _projectile(c: _Collector):
    p = ProjectileParams(10.0, 10.0)
    angles = np.linspace(0.0, math.pi, 362)[1:-1]
    env = safety_parabola(p)
    worst = 0.0
    for al in angles:
        if abs(math.cos(al)) < 1e-9:
            continue
        x = tangency_abscissa(p, al)
        y = env(x)
        worst = max(worst, abs(trajectory_parabola(p, al)(x) - y) / max(1.0, abs(y)))
    c.at_most("projectile.tangency_on_both_curves", worst, 1e-9)

    radii = [abs(trajectory_focus(p, al).norm() / p.focus_radius - 1.0)
             for al in np.arange(360) * math.pi / 360]
    c.at_most("projectile.focus_circle_radius_rel", max(radii), 1e-12)

    diffs = []
    for al in angles:
        if abs(math.cos(al)) < 1e-6:
            continue
        diffs.append(trajectory_parabola(p, al).focus.dist(trajectory_focus(p, al)))
    c.at_most("projectile.vertex_focus_matches_closed_form", max(diffs), 1e-10)
    c.at_most("projectile.safety_focus_at_origin", env.focus.norm(), 1e-12)

    gen = oracle.rng()
    xs = gen.uniform(-10, 10, 200)
    xs = xs[np.abs(xs) > 1e-3]
    below = sum(tan_alpha_discriminant(p, Point2(x, env(x) - gen.uniform(0.01, 5))) <= 0 for x in xs)
    above = sum(tan_alpha_discriminant(p, Point2(x, env(x) + gen.uniform(0.01, 5))) >= 0 for x in xs)
    c.count("projectile.discriminant_sign_below_and_above", below + above)

    c.at_most("projectile.numeric_envelope_hausdorff", envelope_distances((2000,))["projectile"][0],
              1e-3, residual=False)


def _oscillator(c: _Collector):
    worst_disc, bad_sign, bad_tag, worst_orbit = 0.0, 0, 0, 0.0
    gen = oracle.rng()
    for x0 in GRID:
        for v0 in GRID:
            o = OscillatorParams(x0, v0)
            pts = safety_ellipse(o).sample(360)
            worst_disc = max(worst_disc, max(abs(cot_alpha_discriminant(o, Point2(*q), scaled=True))
                                             for q in pts))
            bad_tag += sum(reach_classification(o, Point2(*q), tol=1e-9).tag is not Reach.BOUNDARY
                           for q in pts if abs(q[1]) > 1e-9)
            th = gen.uniform(0.05, math.pi - 0.05, 100) * gen.choice([-1, 1], 100)
            for scale, sign in ((gen.uniform(0.05, 0.95, 100), 1), (gen.uniform(1.05, 3.0, 100), -1)):
                q = np.stack([o.amplitude * scale * np.cos(th), o.p * scale * np.sin(th)], axis=-1)
                bad_sign += sum(sign * cot_alpha_discriminant(o, Point2(*r)) <= 0 for r in q)
            for al in (0.3, 1.2, 2.5):
                orb = sample_orbit(o, al, 90)
                conic = orbit_implicit(o, al)
                worst_orbit = max(worst_orbit, np.abs(conic.evaluate(orb.x, orb.y)).max())
                if envelope_residual(o, orb.x, orb.y).max() > 1e-12:
                    bad_sign += 1
    c.at_most("oscillator.discriminant_zero_on_safety_ellipse", worst_disc, 1e-9)
    c.count("oscillator.boundary_tag_on_safety_ellipse", bad_tag)
    c.count("oscillator.discriminant_sign_inside_outside", bad_sign)
    c.at_most("oscillator.orbit_implicit_residual", worst_orbit, 1e-12)

    c.at_most("oscillator.numeric_envelope_hausdorff", envelope_distances((2000,))["oscillator"][0],
              1e-3, residual=False)


def _cassini(c: _Collector):
    worst = 0.0
    alphas = -math.pi + 2.0 * math.pi * (np.arange(48) + 1) / 48
    for x0 in GRID:
        for v0 in GRID:
            o = OscillatorParams(x0, v0)
            A, B = Point2(-x0, 0.0), Point2(x0, 0.0)
            for al in alphas:
                for F in cs.orbit_foci(o, float(al)):
                    worst = max(worst, abs(F.dist(A) * F.dist(B) - v0 * v0) / max(v0 * v0, x0 * x0))
    c.at_most("cassini.focus_distance_product_is_p2", worst, 1e-9)

    gen = oracle.rng()
    worst = 0.0
    for _ in range(1000):
        o = OscillatorParams(gen.uniform(0.1, 10), gen.uniform(0.1, 10), gen.uniform(0.2, 5))
        ax = cs.orbit_axes(o, gen.uniform(-math.pi, math.pi))
        worst = max(worst, abs(ax.a2 + ax.b2 - (o.x0 ** 2 + o.p ** 2)) / (o.x0 ** 2 + o.p ** 2))
    c.at_most("cassini.axis_sum_identity_rel", worst, 1e-12)

    o = OscillatorParams(1.0, 1.0)
    worst_pt, worst_ang = 0.0, 0.0
    for al in np.linspace(0.0, 0.5 * math.pi, 101)[1:]:
        F = cs.orbit_foci(o, float(al))[0]
        worst_pt = max(worst_pt, F.dist(cs.lemniscate_focus(1.0, float(al))))
        worst_ang = max(worst_ang, abs(F.polar_angle() - cs.lemniscate_alpha_theta(float(al))))
    c.at_most("cassini.lemniscate_closed_form_focus", worst_pt, 1e-10)
    c.at_most("cassini.lemniscate_focus_angle_half_alpha", worst_ang, 1e-9)

    worst = 0.0
    for al in np.linspace(-0.5 * math.pi, 0.5 * math.pi, 100):
        V = cs.vertex_locus(o, float(al))
        k = 1.0 / math.sqrt(2.0)
        worst = max(worst, abs(V.dist(Point2(k, 0.0)) - k))
    c.at_most("cassini.vertex_semicircle", worst, 1e-10)

    bad = 0
    expected = {cs.Shape.TWO_OVALS: 4, cs.Shape.LEMNISCATE: 3, cs.Shape.ONE_OVAL: 2}
    for x0, v0 in _classification_pairs(gen):
        cv = cs.foci_cassini(OscillatorParams(x0, v0))
        bad += len(cv.axis_roots()) != expected[cv.shape]
    c.count("cassini.shape_matches_axis_root_count", bad)

    cv = cs.CassiniOval(1.3, 0.9)
    q = gen.uniform(-3, 3, (500, 2))
    diff = np.abs(cv.residual(q[:, 0], q[:, 1]) - cv.residual_expanded(q[:, 0], q[:, 1]))
    c.at_most("cassini.bipolar_and_expanded_forms_agree", diff.max(), 1e-10)

    worst_pl, worst_contact, bad_contact, worst_foci = 0.0, 0.0, 0, 0.0
    for x0 in GRID:
        for v0 in GRID:
            o = OscillatorParams(x0, v0)
            A, B = Point2(-x0, 0.0), Point2(x0, 0.0)
            for al in gen.uniform(-math.pi, math.pi, 20):
                F1, F2 = cs.orbit_foci(o, float(al))
                lhs = A.dist(B) ** 2 + F1.dist(F2) ** 2
                rhs = 2.0 * (F1.dist(B) ** 2 + F2.dist(B) ** 2)
                worst_pl = max(worst_pl, abs(lhs - rhs) / max(rhs, 1e-300))
            oval, env = cs.foci_cassini(o), safety_ellipse(o)
            for P in cs.safety_contact_points(o):
                scale = max(o.x0, o.p) ** 4
                worst_contact = max(worst_contact, abs(oval.residual(P.x, P.y)) / scale,
                                    abs(env.residual(P.x, P.y)))
            s = cs.cassini_sample_polar(oval, 720)
            er = np.abs(env.residual(s.x, s.y))
            near_contact = (np.abs(np.abs(s.x) - o.amplitude) < 1e-9) & (np.abs(s.y) < 1e-9)
            bad_contact += int(np.sum((er <= 1e-7) & ~near_contact))
            shared = max(f.dist(g) for f, g in zip(env.foci, sorted(oval.foci, key=lambda f: -f.x)))
            worst_foci = max(worst_foci, shared / x0)
    c.at_most("cassini.parallelogram_law_rel", worst_pl, 1e-9)
    c.at_most("cassini.contact_points_on_oval_and_ellipse", worst_contact, 1e-9)
    c.count("cassini.no_other_contact_with_ellipse", bad_contact)
    c.at_most("cassini.ellipse_and_oval_share_foci_rel", worst_foci, 1e-15, residual=False)


def _classification_pairs(gen) -> list[tuple[float, float]]:
    """50 (x0, v0) pairs: 20 below, 10 on and 20 above the lemniscate line."""
    x0 = gen.uniform(0.2, 5.0, 50)
    ratio = np.concatenate([gen.uniform(0.1, 0.95, 20), np.ones(10), gen.uniform(1.05, 4.0, 20)])
    return list(zip(x0.tolist(), (x0 * ratio).tolist()))


def _oracle(c: _Collector):
    gen = oracle.rng()
    worst = 0.0
    for _ in range(200):
        P = Point2(*gen.uniform(-3, 3, 2))
        Q = Point2(*gen.uniform(-3, 3, 2))
        a, b, _ = oracle.numeric_extrema_r(P, Q)
        e = ellipse_from_parametric(P, Q)
        worst = max(worst, abs(a - e.a), abs(b - e.b))
    c.at_most("oracle.extrema_vs_closed_form_axes", worst, 1e-6)

    worst = 0.0
    for _ in range(500):
        co = gen.uniform(-10, 10, 3)
        for z in oracle.quadratic_real_roots(*co):
            worst = max(worst, abs((co[0] * z + co[1]) * z + co[2]) / np.abs(co).max() / max(1.0, z * z))
    c.at_most("oracle.quadratic_root_residual", worst, 1e-10)

    ratios = envelope_halving_ratios()
    spread = max(max(r) for r in ratios.values())
    low = min(min(r) for r in ratios.values())
    c.at_most("oracle.envelope_distance_halves_max_ratio", spread, 4.0, residual=False)
    c.checks.append(Check("oracle.envelope_distance_halves_min_ratio", low >= 1.0, low, 1.0))


@lru_cache(maxsize=None)
def _envelope_distance(family: str, n: int) -> float:
    """Hausdorff error of the n x n numeric envelope (g = v0 = 10, or x0 = p = 1)."""
    if family == "projectile":
        p = ProjectileParams(10.0, 10.0)
        est = oracle.numeric_envelope(oracle.projectile_curves(p.g, p.v0), 0.0, math.pi, n, n,
                                      window=(0.0, math.pi))
        return est.hausdorff_to(sample_safety_parabola(p, 2000))
    est = oracle.numeric_envelope(oracle.oscillator_curves(1.0, 1.0), 0.0, math.pi, n, n)
    return est.hausdorff_to(safety_ellipse(OscillatorParams(1.0, 1.0)).sample(2000), closed=True)


def envelope_distances(ns=(256, 512, 1024, 2048)) -> dict[str, list[float]]:
    """Envelope errors for both families; results are memoized per (family, n)."""
    return {k: [_envelope_distance(k, n) for n in ns] for k in ("projectile", "oscillator")}


def envelope_halving_ratios(ns=(256, 512, 1024, 2048)) -> dict[str, list[float]]:
    """Ratios d(n)/d(2n) of envelope Hausdorff errors for both families."""
    return {k: [d[i] / d[i + 1] for i in range(len(d) - 1)]
            for k, d in envelope_distances(ns).items()}


_RUNNERS = {"projectile": _projectile, "oscillator": _oscillator, "cassini": _cassini,
            "oracle": _oracle}


def run_suite(name: str, tol: float | None = None) -> VerifyReport:
    if name == "all":
        names = SUITES
    elif name in _RUNNERS:
        names = (name,)
    else:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    c = _Collector(tol)
    for n in names:
        _RUNNERS[n](c)
    return VerifyReport(c.checks)
