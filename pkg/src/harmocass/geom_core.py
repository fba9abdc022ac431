"""Point and conic primitives, and ellipse geometry extraction.

Ellipses are recovered from either an implicit quadratic or an
origin-centred (optionally translated) parametric form
``r(t) = P cos t + Q sin t``.  Both routes go through the amplitude-phase
reduction of ``|r(t)|^2``; no eigen-decomposition is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateConic, NotAnEllipse

DEFAULT_TOL = 1e-9
# a == b test for the circle case, relative to (a^2 + b^2) / 2
CIRCLE_TOL = 1e-12


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point2:
        return Point2(-self.x, -self.y)

    def scaled(self, k: float) -> Point2:
        return Point2(k * self.x, k * self.y)

    def dot(self, other: Point2) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point2) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: Point2) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def polar_angle(self) -> float:
        return math.atan2(self.y, self.x)


ORIGIN = Point2(0.0, 0.0)


@dataclass(frozen=True)
class ConicCoeffs:
    """Coefficients of ``A x^2 + B xy + C y^2 + D x + E y + F = 0``."""

    A: float
    B: float
    C: float
    D: float = 0.0
    E: float = 0.0
    F: float = 0.0

    def __post_init__(self):
        if self.A == 0 and self.B == 0 and self.C == 0:
            raise ValueError("quadratic part of the conic is identically zero")

    @property
    def discriminant(self) -> float:
        return self.B * self.B - 4.0 * self.A * self.C

    def evaluate(self, x, y):
        """Evaluate the conic polynomial; works on scalars and arrays."""
        return (self.A * x * x + self.B * x * y + self.C * y * y
                + self.D * x + self.E * y + self.F)

    def as_tuple(self) -> tuple[float, ...]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)


def _normalize_axis_angle(angle: float) -> float:
    a = math.fmod(angle, math.pi)
    if a < 0:
        a += math.pi
    # fmod + shift can round up to exactly pi
    if a >= math.pi:
        a = 0.0
    return a


@dataclass(frozen=True)
class Ellipse:
    """Ellipse with semi-axes ``a >= b >= 0`` and major-axis direction ``angle``.

    ``angle`` is normalized to ``[0, pi)``.  ``degenerate`` marks the b = 0
    case, where the curve is the segment between the two foci.  ``focal``
    lets a caller that knows ``c`` exactly supply it; otherwise it is
    derived from ``a`` and ``b``, which loses digits when ``a`` is close to ``b``.
    """

    center: Point2
    a: float
    b: float
    angle: float = 0.0
    degenerate: bool = False
    focal: float | None = None

    def __post_init__(self):
        if not (self.a > 0 and math.isfinite(self.a)):
            raise ValueError(f"semi-major axis must be positive, got {self.a}")
        if not (0 <= self.b <= self.a):
            raise ValueError(f"need 0 <= b <= a, got a={self.a}, b={self.b}")
        object.__setattr__(self, "angle", _normalize_axis_angle(self.angle))
        if self.focal is not None:
            c2 = (self.a - self.b) * (self.a + self.b)
            if not (self.focal >= 0 and abs(self.focal ** 2 - c2) <= 1e-9 * self.a ** 2):
                raise ValueError(f"focal distance {self.focal} inconsistent with a, b")

    @property
    def c(self) -> float:
        """Focal distance sqrt(a^2 - b^2)."""
        if self.focal is not None:
            return self.focal
        return math.sqrt((self.a - self.b) * (self.a + self.b))

    @property
    def axis(self) -> Point2:
        return Point2(math.cos(self.angle), math.sin(self.angle))

    @property
    def foci(self) -> tuple[Point2, Point2]:
        off = self.axis.scaled(self.c)
        return self.center + off, self.center - off

    def point_at(self, t):
        """Boundary point(s) at eccentric anomaly ``t`` as an ``(..., 2)`` array."""
        t = np.asarray(t, dtype=float)
        ca, sa = math.cos(self.angle), math.sin(self.angle)
        u = self.a * np.cos(t)
        v = self.b * np.sin(t)
        x = self.center.x + u * ca - v * sa
        y = self.center.y + u * sa + v * ca
        return np.stack([x, y], axis=-1)

    def sample(self, n: int = 360) -> np.ndarray:
        t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
        return self.point_at(t)

    def implicit(self) -> ConicCoeffs:
        """Expanded implicit coefficients with ``F`` normalized so that the
        centred equation reads ``... = a^2 b^2``."""
        ca, sa = math.cos(self.angle), math.sin(self.angle)
        a2, b2 = self.a * self.a, self.b * self.b
        A = a2 * sa * sa + b2 * ca * ca
        B = 2.0 * (b2 - a2) * sa * ca
        C = a2 * ca * ca + b2 * sa * sa
        xc, yc = self.center.x, self.center.y
        D = -2.0 * A * xc - B * yc
        E = -B * xc - 2.0 * C * yc
        F = A * xc * xc + B * xc * yc + C * yc * yc - a2 * b2
        return ConicCoeffs(A, B, C, D, E, F)

    def residual(self, x, y):
        """``x'^2/a^2 + y'^2/b^2 - 1`` in the ellipse's own frame."""
        ca, sa = math.cos(self.angle), math.sin(self.angle)
        dx = np.asarray(x, dtype=float) - self.center.x
        dy = np.asarray(y, dtype=float) - self.center.y
        u = dx * ca + dy * sa
        v = -dx * sa + dy * ca
        return (u / self.a) ** 2 + (v / self.b) ** 2 - 1.0


@dataclass(frozen=True)
class Parabola:
    """Graph of ``y = q2 x^2 + q1 x + q0``."""

    q2: float
    q1: float = 0.0
    q0: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.q2) and self.q2 != 0):
            raise ValueError(f"leading coefficient must be finite and nonzero, got {self.q2}")

    def __call__(self, x):
        return (self.q2 * x + self.q1) * x + self.q0

    @property
    def vertex(self) -> Point2:
        xv = -self.q1 / (2.0 * self.q2)
        return Point2(xv, self(xv))

    @property
    def focus(self) -> Point2:
        v = self.vertex
        return Point2(v.x, v.y + 1.0 / (4.0 * self.q2))

    def x_intercepts(self) -> list[float]:
        from .oracle import quadratic_real_roots

        return sorted(quadratic_real_roots(self.q2, self.q1, self.q0))


@dataclass(frozen=True, eq=False)
class CurveSamples:
    """Ordered sample points with per-point provenance.

    ``alpha`` is the family parameter (NaN when the curve is not a family
    member), ``param`` the sample parameter (t or theta).  ``piece``
    labels connected components; consecutive points with the same label
    are joined when drawn, and ``closed`` joins each piece's last point
    back to its first.
    """

    points: np.ndarray
    alpha: np.ndarray = field(default=None)
    param: np.ndarray = field(default=None)
    piece: np.ndarray = field(default=None)
    closed: bool = False

    def __post_init__(self):
        pts = np.array(self.points, dtype=float).reshape(-1, 2)
        n = len(pts)
        if n == 0:
            raise ValueError("CurveSamples must be nonempty")
        if not np.all(np.isfinite(pts)):
            raise ValueError("CurveSamples contains non-finite points")

        def column(values, fill, dtype):
            if values is None:
                arr = np.full(n, fill, dtype=dtype)
            else:
                arr = np.broadcast_to(np.asarray(values, dtype=dtype), (n,)).copy()
            arr.flags.writeable = False
            return arr

        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "alpha", column(self.alpha, np.nan, float))
        object.__setattr__(self, "param", column(self.param, np.nan, float))
        object.__setattr__(self, "piece", column(self.piece, 0, int))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def x(self) -> np.ndarray:
        return self.points[:, 0]

    @property
    def y(self) -> np.ndarray:
        return self.points[:, 1]

    def pieces(self) -> list[np.ndarray]:
        """Split into runs of equal ``piece`` label, preserving order."""
        cuts = np.flatnonzero(np.diff(self.piece)) + 1
        return np.split(self.points, cuts)

    @classmethod
    def concat(cls, parts: list[CurveSamples]) -> CurveSamples:
        """Join samples, relabelling pieces so they stay distinct."""
        pieces, offset = [], 0
        for p in parts:
            _, labels = np.unique(p.piece, return_inverse=True)
            pieces.append(labels + offset)
            offset += labels.max() + 1
        return cls(
            np.concatenate([p.points for p in parts]),
            np.concatenate([p.alpha for p in parts]),
            np.concatenate([p.param for p in parts]),
            np.concatenate(pieces),
            closed=all(p.closed for p in parts),
        )


def ellipse_from_parametric(P: Point2, Q: Point2, center: Point2 = ORIGIN,
                            tol: float = DEFAULT_TOL) -> Ellipse:
    """Ellipse traced by ``center + P cos t + Q sin t``.

    Writes ``|r(t)|^2 = S + D cos 2t + E sin 2t`` with ``S = (|P|^2+|Q|^2)/2``,
    ``D = (|P|^2-|Q|^2)/2`` and ``E = P.Q``; the semi-axes are ``S +/- hypot(D, E)``
    and the major vertex sits at ``t* = atan2(E, D)/2``.  The minor axis is
    taken from ``a b = |P x Q|`` to avoid cancellation in ``S - hypot(D, E)``.

    Parallel generators give ``degenerate=True`` with ``b = 0``.
    """
    pp, qq = P.dot(P), Q.dot(Q)
    if pp + qq == 0:
        raise DegenerateConic("both generators are zero")
    S = 0.5 * (pp + qq)
    D = 0.5 * (pp - qq)
    E = P.dot(Q)
    amp = math.hypot(D, E)
    a = math.sqrt(S + amp)

    if amp <= CIRCLE_TOL * S:
        return Ellipse(center, a, a, 0.0)

    b = min(abs(P.cross(Q)) / a, a)
    t_star = 0.5 * math.atan2(E, D)
    vertex = P.scaled(math.cos(t_star)) + Q.scaled(math.sin(t_star))
    degenerate = b <= tol * a
    return Ellipse(center, a, 0.0 if degenerate else b, vertex.polar_angle(), degenerate)


def ellipse_from_implicit(conic: ConicCoeffs, tol: float = DEFAULT_TOL) -> Ellipse:
    """Geometric ellipse of an implicit conic.

    The centred quadratic form is factored as ``L L^T`` (2x2 Cholesky), which
    gives generators ``P, Q`` = columns of ``L^-T``; the rest is
    :func:`ellipse_from_parametric`.

    Raises
    ------
    NotAnEllipse
        if ``B^2 - 4AC >= 0``.
    DegenerateConic
        if the real zero set is empty or a single point.
    """
    if conic.discriminant >= 0:
        raise NotAnEllipse(f"B^2 - 4AC = {conic.discriminant} >= 0")
    A, B, C, D, E, F = conic.as_tuple()
    if A < 0:
        A, B, C, D, E, F = -A, -B, -C, -D, -E, -F

    det4 = 4.0 * A * C - B * B
    xc = (B * E - 2.0 * C * D) / det4
    yc = (B * D - 2.0 * A * E) / det4
    # the conic is stationary at its centre, so evaluating it there keeps
    # centre rounding out of k to first order
    k = -(A * xc * xc + B * xc * yc + C * yc * yc + D * xc + E * yc + F)
    magnitude = max(abs(F), abs(D * xc), abs(E * yc))
    if k <= tol * magnitude:
        kind = "empty" if k < -tol * magnitude else "a single point"
        raise DegenerateConic(f"real zero set is {kind}")

    m11 = A / k
    l11 = math.sqrt(m11)
    l21 = B / (2.0 * k) / l11
    l22 = math.sqrt(det4 / (4.0 * k * k) / m11)
    P = Point2(1.0 / l11, 0.0)
    Q = Point2(-l21 / (l11 * l22), 1.0 / l22)
    return ellipse_from_parametric(P, Q, Point2(xc, yc), tol)


def cassini_residual(pt: Point2, lam: float, mu2: float) -> float:
    """Bipolar Cassini residual ``d1^2 d2^2 - mu^4`` for foci ``(+/-lam, 0)``."""
    x, y = pt
    return ((x + lam) ** 2 + y * y) * ((x - lam) ** 2 + y * y) - mu2 * mu2
