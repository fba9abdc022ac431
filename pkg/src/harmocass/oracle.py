"""Brute-force verifiers that never touch the closed-form envelopes.

Everything here works from the raw equations of motion by sampling: axis
lengths by scanning ``|r(t)|`` and golden-section refinement, envelopes by
keeping the farthest sample per angular bin around the family's centre.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import IdenticallyZero, InsufficientSamples
from .geom_core import ORIGIN, CurveSamples, Point2

SEED = 20130323
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

# family evaluator: (alpha, u) -> (len(u), 2) points, u in [0, 1]
Family = Callable[[float, np.ndarray], np.ndarray]


def rng(seed: int = SEED) -> np.random.Generator:
    """Deterministic generator used by every randomized check."""
    return np.random.default_rng(seed)


def quadratic_real_roots(a2: float, a1: float, a0: float, rel_tol: float = 0.0) -> list[float]:
    """Real roots of ``a2 z^2 + a1 z + a0``, with multiplicity, largest first.

    Uses ``q = -(a1 + sign(a1) sqrt(disc)) / 2`` and the pair ``q/a2``,
    ``a0/q``.  A discriminant within ``rel_tol * max(a1^2, |4 a2 a0|)`` of
    zero is treated as a double root.  Linear and constant polynomials are
    accepted.
    """
    if a2 == 0:
        if a1 == 0:
            if a0 == 0:
                raise IdenticallyZero("all coefficients are zero")
            return []
        return [-a0 / a1]
    disc = a1 * a1 - 4.0 * a2 * a0
    scale = max(a1 * a1, abs(4.0 * a2 * a0))
    if disc == 0 or abs(disc) <= rel_tol * scale:
        r = -a1 / (2.0 * a2)
        return [r, r]
    if disc < 0:
        return []
    q = -0.5 * (a1 + math.copysign(math.sqrt(disc), a1))
    return sorted([q / a2, a0 / q], reverse=True)


def golden_section_max(f: Callable[[float], float], lo: float, hi: float,
                       iters: int = 60) -> tuple[float, float]:
    """Maximize a unimodal ``f`` on ``[lo, hi]``; returns ``(t, f(t))``."""
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = f(x1)
    t = 0.5 * (lo + hi)
    return t, f(t)


def numeric_extrema_r(P: Point2, Q: Point2, refine_iters: int = 60,
                      n_scan: int = 10_000) -> tuple[float, float, float]:
    """Max and min of ``|P cos t + Q sin t|`` over ``[0, pi)``.

    Returns ``(a, b, t_at_max)``.  A uniform scan locates both extrema to
    within one grid step, then golden-section search refines each inside
    the bracket of its two neighbours.
    """
    px, py, qx, qy = P.x, P.y, Q.x, Q.y

    def r2(t):
        c, s = np.cos(t), np.sin(t)
        return (px * c + qx * s) ** 2 + (py * c + qy * s) ** 2

    t = np.linspace(0.0, math.pi, n_scan, endpoint=False)
    vals = r2(t)
    h = math.pi / n_scan
    t_hi = float(t[np.argmax(vals)])
    t_lo = float(t[np.argmin(vals)])
    t_max, r2_max = golden_section_max(lambda s: float(r2(s)), t_hi - h, t_hi + h, refine_iters)
    _, neg_min = golden_section_max(lambda s: -float(r2(s)), t_lo - h, t_lo + h, refine_iters)
    return math.sqrt(r2_max), math.sqrt(max(-neg_min, 0.0)), t_max % math.pi


def _point_polyline_dist(points: np.ndarray, line: np.ndarray, closed: bool,
                         chunk: int = 512) -> np.ndarray:
    if closed:
        line = np.vstack([line, line[:1]])
    if len(line) == 1:
        return np.hypot(*(points - line[0]).T)
    a = line[:-1]
    d = line[1:] - a
    dd = np.einsum("ij,ij->i", d, d)
    dd = np.where(dd > 0, dd, 1.0)
    out = np.empty(len(points))
    for i in range(0, len(points), chunk):
        p = points[i:i + chunk, None, :]
        w = p - a[None]
        s = np.clip(np.einsum("kij,ij->ki", w, d) / dd, 0.0, 1.0)
        diff = w - s[..., None] * d[None]
        out[i:i + chunk] = np.sqrt(np.einsum("kij,kij->ki", diff, diff).min(axis=1))
    return out


def hausdorff_distance(a, b, *, polyline: bool = False, closed_a: bool = False,
                       closed_b: bool = False) -> float:
    """Symmetric Hausdorff distance between two sampled curves.

    With ``polyline=True`` each point is measured against the other curve's
    chain of segments instead of its vertices, so sampling gaps do not
    count as distance.
    """
    a = a.points if isinstance(a, CurveSamples) else np.asarray(a, dtype=float).reshape(-1, 2)
    b = b.points if isinstance(b, CurveSamples) else np.asarray(b, dtype=float).reshape(-1, 2)
    if polyline:
        d_ab = _point_polyline_dist(a, b, closed_b).max()
        d_ba = _point_polyline_dist(b, a, closed_a).max()
    else:
        d_ab = _nearest(a, b).max()
        d_ba = _nearest(b, a).max()
    return float(max(d_ab, d_ba))


def _nearest(a: np.ndarray, b: np.ndarray, chunk: int = 1024) -> np.ndarray:
    out = np.empty(len(a))
    for i in range(0, len(a), chunk):
        diff = a[i:i + chunk, None, :] - b[None]
        out[i:i + chunk] = np.sqrt(np.einsum("kij,kij->ki", diff, diff).min(axis=1))
    return out


@dataclass(frozen=True)
class EnvelopeEstimate:
    boundary: CurveSamples
    closed: bool = False

    def hausdorff_to(self, reference, closed: bool | None = None) -> float:
        """Polyline Hausdorff distance to a densely sampled reference curve."""
        return hausdorff_distance(self.boundary, reference, polyline=True,
                                  closed_a=self.closed,
                                  closed_b=self.closed if closed is None else closed)


def numeric_envelope(family: Family, lo: float, hi: float, n_alpha: int, n_t: int, *,
                     center: Point2 = ORIGIN, window: tuple[float, float] = (-math.pi, math.pi),
                     n_bins: int | None = None, densify: int = 4,
                     chunk: int = 256) -> EnvelopeEstimate:
    """Outer boundary of a sampled curve family by radial binning.

    Family members are taken at the midpoints of ``n_alpha`` equal cells of
    ``(lo, hi)`` (a single curve when ``lo == hi``), each sampled at
    ``n_t`` parameter values.  Polar angles about ``center`` inside
    ``window`` are split into ``n_bins`` bins and the farthest point of each
    bin is kept.  Each sampled curve is treated as a polyline and densified
    ``densify``-fold by linear interpolation before binning, which shrinks
    the along-curve gaps that otherwise bias the per-bin maximum.  Valid for
    families whose swept region is star-shaped about ``center``.

    The estimate is one-sided (every boundary point is a sampled point of
    the family) and its error decays like ``1 / n_t``.
    """
    if n_t < 64:
        raise ValueError(f"n_t must be >= 64, got {n_t}")
    if densify < 1:
        raise ValueError(f"densify must be >= 1, got {densify}")
    if lo == hi:
        alphas = np.array([float(lo)])
    else:
        if n_alpha < 64:
            raise ValueError(f"n_alpha must be >= 64, got {n_alpha}")
        alphas = lo + (np.arange(n_alpha) + 0.5) * (hi - lo) / n_alpha
    if n_bins is None:
        n_bins = n_t if len(alphas) == 1 else min(len(alphas), n_t)
    w0, w1 = window
    full = math.isclose(w1 - w0, 2.0 * math.pi)
    u = np.linspace(0.0, 1.0, n_t, endpoint=not full)
    if full:
        u = np.append(u, 1.0)
    c = np.array([center.x, center.y])

    def polar(pts):
        rel = pts - c
        phi = np.arctan2(rel[..., 1], rel[..., 0])
        if full:
            phi = (phi - w0) % (2.0 * math.pi) + w0
        inside = (phi >= w0) & (phi <= w1)
        bins = np.minimum(((phi - w0) * (n_bins / (w1 - w0))).astype(np.intp), n_bins - 1)
        r2 = np.where(inside, np.einsum("...i,...i->...", rel, rel), -np.inf)
        return np.where(inside, bins, 0), r2

    def sampled(block):
        pts = np.stack([family(float(al), u[:n_t]) for al in block])
        return np.concatenate([pts, pts[:, :1]], axis=1) if full else pts

    # pass 1: per-bin maxima over the raw samples
    floor = np.full(n_bins, -np.inf)
    for i in range(0, len(alphas), chunk):
        bins, r2 = polar(sampled(alphas[i:i + chunk]))
        np.maximum.at(floor, bins.ravel(), r2.ravel())

    # pass 2: distance from the centre is convex along a segment, so only
    # segments with an endpoint at or above a bin floor can improve on it
    s = np.linspace(0.0, 1.0, densify + 1)
    best = np.full(n_bins, -np.inf)
    best_pt = np.zeros((n_bins, 2))
    best_alpha = np.zeros(n_bins)
    best_u = np.zeros(n_bins)
    for i in range(0, len(alphas), chunk):
        block = alphas[i:i + chunk]
        pts = sampled(block)
        bins, r2 = polar(pts)
        b0, b1 = bins[:, :-1], bins[:, 1:]
        top = np.maximum(r2[:, :-1], r2[:, 1:])
        keep = (top > -np.inf) & ((np.abs(b1 - b0) > 1)
                                  | (top >= np.minimum(floor[b0], floor[b1])))
        ia, iseg = np.nonzero(keep)
        p0 = pts[ia, iseg]
        cand = p0[:, None, :] + s[None, :, None] * (pts[ia, iseg + 1] - p0)[:, None, :]
        cu = u[iseg][:, None] + s[None, :] * (u[iseg + 1] - u[iseg])[:, None]
        cb, cr2 = polar(cand)
        np.maximum.at(best, cb.ravel(), cr2.ravel())
        hit = (cr2 > -np.inf) & (cr2 == best[cb])
        k, j = np.nonzero(hit)
        slot = cb[k, j]
        best_pt[slot] = cand[k, j]
        best_alpha[slot] = block[ia[k]]
        best_u[slot] = cu[k, j]

    empty = np.flatnonzero(~np.isfinite(best))
    if len(empty):
        raise InsufficientSamples(f"{len(empty)} of {n_bins} angular bins received no points")
    return EnvelopeEstimate(CurveSamples(best_pt, best_alpha, best_u % 1.0 if full else best_u),
                            closed=full)


def projectile_curves(g: float, v0: float) -> Family:
    """Trajectories from the launch equations, cut at the return to y = 0."""
    def curve(alpha: float, u: np.ndarray) -> np.ndarray:
        t = u * (2.0 * v0 * math.sin(alpha) / g)
        return np.stack([v0 * math.cos(alpha) * t,
                         v0 * math.sin(alpha) * t - 0.5 * g * t * t], axis=-1)
    return curve


def oscillator_curves(x0: float, v0: float, omega: float = 1.0) -> Family:
    """One full period of the planar oscillator orbit launched from (x0, 0)."""
    def curve(alpha: float, u: np.ndarray) -> np.ndarray:
        wt = 2.0 * math.pi * u
        s = np.sin(wt)
        return np.stack([x0 * np.cos(wt) + (v0 / omega) * math.cos(alpha) * s,
                         (v0 / omega) * math.sin(alpha) * s], axis=-1)
    return curve
