"""Core hyperbolic-plane kernel.

Everything works in the hyperboloid model: points are vectors
x = (x0, x1, x2) with

    <x, x> = -x0^2 + x1^2 + x2^2 = -1,   x0 > 0,

where <.,.> is the Minkowski bilinear form of signature (-,+,+).
Isometries are 3x3 matrices preserving the form (Lorentz matrices with
M[0][0] > 0); the inverse of such a matrix is J M^T J with
J = diag(-1, 1, 1).

Distance uses a hybrid formula: acosh(-<p,q>) is accurate for far
pairs but loses all digits as q -> p, so for nearby points we switch to
2*asinh(|q - p|_M / 2), which is computed from coordinate differences
and has no cancellation.  The two branches agree to ~1e-15 near the
switch point.

Isometry images are returned raw, never snapped back onto the
hyperboloid: evaluating the constraint x0^2 - x1^2 - x2^2 cancels
catastrophically for far points (error ~ e^(2r) * eps), so "fixing" a
point by rescaling injects far more error than the drift it removes.
Validity checks are therefore relative to x0^2, which is exactly the
scale at which the constraint can be tested in floating point.
Explicit renormalization is available for points near the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Tolerances used across the package.
EPS_POINT = 1e-12   # hyperboloid constraint / vertex coincidence
EPS_ANGLE = 1e-9    # angle comparisons
EPS_AREA = 1e-9     # area comparisons

# Above this value of cosh(d) the acosh branch of dist() is safe.
_FAR_COSH = 1.0005

_J = np.diag([-1.0, 1.0, 1.0])


@dataclass(frozen=True)
class HPoint:
    """A point on the upper sheet of the unit hyperboloid."""

    x0: float
    x1: float
    x2: float

    def coords(self):
        return (self.x0, self.x1, self.x2)

    def minkowski_norm_error(self) -> float:
        """|<x,x> + 1|, the defect from the hyperboloid constraint."""
        return abs(-self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + 1.0)

    def is_valid(self, tol: float = EPS_POINT) -> bool:
        scale = max(1.0, self.x0 * self.x0)
        return self.x0 > 0 and self.minkowski_norm_error() <= tol * scale

    def renormalized(self) -> "HPoint":
        """Scale back onto the hyperboloid (keeps the direction)."""
        q = self.x0 * self.x0 - self.x1 * self.x1 - self.x2 * self.x2
        if q <= 0:
            raise DomainError("point is not inside the light cone")
        s = 1.0 / math.sqrt(q)
        return HPoint(self.x0 * s, self.x1 * s, self.x2 * s)


ORIGIN = HPoint(1.0, 0.0, 0.0)


def lift(x1: float, x2: float) -> HPoint:
    """Lift planar coordinates onto the hyperboloid."""
    return HPoint(math.sqrt(1.0 + x1 * x1 + x2 * x2), x1, x2)


def from_polar(r: float, phi: float) -> HPoint:
    """Point at hyperbolic distance r from the origin, azimuth phi."""
    if r < 0:
        raise DomainError("radius must be >= 0")
    return HPoint(math.cosh(r), math.sinh(r) * math.cos(phi), math.sinh(r) * math.sin(phi))


def mdot(p: HPoint, q: HPoint) -> float:
    """Minkowski inner product <p, q>."""
    return -p.x0 * q.x0 + p.x1 * q.x1 + p.x2 * q.x2


def dist(p: HPoint, q: HPoint) -> float:
    """Hyperbolic distance between two points.

    Uses acosh(-<p,q>) when the points are clearly separated and the
    cancellation-free chordal form 2*asinh(|q-p|_M/2) otherwise.
    """
    c = -mdot(p, q)
    if not math.isfinite(c):
        raise DomainError("non-finite coordinates in dist()")
    if c >= _FAR_COSH:
        return math.acosh(c)
    d0 = q.x0 - p.x0
    d1 = q.x1 - p.x1
    d2 = q.x2 - p.x2
    s = -d0 * d0 + d1 * d1 + d2 * d2
    if s <= 0.0:
        return 0.0
    return 2.0 * math.asinh(0.5 * math.sqrt(s))


def point_reflect(m: HPoint, x: HPoint) -> HPoint:
    """Half-turn of x about the point m: -2<x,m>m - x.

    This formula is exact in the model (no trig), which matters when
    doubling polygons whose vertices sit far from the origin.
    """
    k = -2.0 * mdot(x, m)
    return HPoint(k * m.x0 - x.x0, k * m.x1 - x.x1, k * m.x2 - x.x2)


class Isometry:
    """Orientation-preserving isometry as a Lorentz matrix."""

    __slots__ = ("m",)

    def __init__(self, m):
        self.m = np.asarray(m, dtype=float)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(self.m @ other.m)

    def inverse(self) -> "Isometry":
        return Isometry(_J @ self.m.T @ _J)

    def apply(self, p: HPoint) -> HPoint:
        v = self.m @ np.array(p.coords())
        return HPoint(float(v[0]), float(v[1]), float(v[2]))

    def orthogonality_error(self) -> float:
        """max-norm defect of M^T J M = J."""
        return float(np.max(np.abs(self.m.T @ _J @ self.m - _J)))


def identity() -> Isometry:
    return Isometry(np.eye(3))


def translation(t: float) -> Isometry:
    """Translation by t along the x1-axis geodesic through the origin."""
    c, s = math.cosh(t), math.sinh(t)
    return Isometry([[c, s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def rotation(a: float) -> Isometry:
    """Rotation by angle a about the origin (counterclockwise)."""
    c, s = math.cos(a), math.sin(a)
    return Isometry([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def boost_from(p: HPoint) -> Isometry:
    """The symmetric boost taking the origin to p."""
    d = 1.0 + p.x0
    return Isometry([
        [p.x0, p.x1, p.x2],
        [p.x1, 1.0 + p.x1 * p.x1 / d, p.x1 * p.x2 / d],
        [p.x2, p.x1 * p.x2 / d, 1.0 + p.x2 * p.x2 / d],
    ])


def boost_to(p: HPoint) -> Isometry:
    """The symmetric boost taking p to the origin (inverse of boost_from)."""
    d = 1.0 + p.x0
    return Isometry([
        [p.x0, -p.x1, -p.x2],
        [-p.x1, 1.0 + p.x1 * p.x1 / d, p.x1 * p.x2 / d],
        [-p.x2, p.x1 * p.x2 / d, 1.0 + p.x2 * p.x2 / d],
    ])


def azimuth_from(center: HPoint, q: HPoint) -> float:
    """Direction of q as seen from center, in (-pi, pi].

    The frame is centered at `center` by the symmetric boost, so the
    reference direction is the boosted x1-axis.  Differences of two
    azimuths from the same center are frame-independent.

    Far-out input pairs are evaluated in mpmath: the boost product
    cancels entries of size ~x0(center) * x0(q) down to the transverse
    part, and the float64 noise left behind passes 1e-10 rad once
    coordinates reach ~1e4.  Angle tolerances downstream sit at 1e-10,
    so the switch happens a decade earlier.
    """
    m = max(center.x0, q.x0)
    if math.isfinite(m) and m > _AZIMUTH_MP_X0:
        return _azimuth_mp(center, q)
    b = boost_to(center)
    v = b.m @ np.array(q.coords())
    return math.atan2(float(v[2]), float(v[1]))


_AZIMUTH_MP_X0 = 1e3


def _azimuth_mp(center: HPoint, q: HPoint) -> float:
    import mpmath as mp

    x0 = max(center.x0, q.x0)
    with mp.workdps(30 + int(2.0 * math.log10(x0))):
        d = 1 + mp.mpf(center.x0)
        x1, x2 = mp.mpf(center.x1), mp.mpf(center.x2)
        q0, q1, q2 = mp.mpf(q.x0), mp.mpf(q.x1), mp.mpf(q.x2)
        y1 = -x1 * q0 + (1 + x1 * x1 / d) * q1 + (x1 * x2 / d) * q2
        y2 = -x2 * q0 + (x1 * x2 / d) * q1 + (1 + x2 * x2 / d) * q2
        return float(mp.atan2(y2, y1))


def angle_at(v: HPoint, a: HPoint, b: HPoint) -> float:
    """Unsigned angle at vertex v between the geodesics to a and b, in [0, pi]."""
    d = azimuth_from(v, a) - azimuth_from(v, b)
    d = abs(math.remainder(d, 2.0 * math.pi))
    return d


def side_from_angles(t1: float, t2: float, t3: float) -> float:
    """Side length of the hyperbolic triangle with angles (t1, t2, t3).

    Returns the length of the side joining the two vertices with angles
    t1 and t2 (the side opposite t3), via

        cosh(l) = (cos t3 + cos t1 cos t2) / (sin t1 sin t2).

    A triangle with these angles exists iff each angle is in (0, pi)
    and t1 + t2 + t3 < pi.
    """
    for t in (t1, t2, t3):
        if not (0.0 < t < math.pi):
            raise DomainError("triangle angles must lie in (0, pi)")
    if t1 + t2 + t3 >= math.pi:
        raise DomainError("triangle angle sum must be < pi in the hyperbolic plane")
    c = (math.cos(t3) + math.cos(t1) * math.cos(t2)) / (math.sin(t1) * math.sin(t2))
    return math.acosh(max(c, 1.0))


def triangle_from_angles(a: float, b: float, c: float):
    """Vertices (A, B, C) of a triangle with angles a, b, c, ccw.

    A sits at the origin, B on the positive x1-axis.
    """
    side_ab = side_from_angles(a, b, c)
    side_ac = side_from_angles(a, c, b)
    pa = ORIGIN
    pb = from_polar(side_ab, 0.0)
    pc = from_polar(side_ac, a)
    return pa, pb, pc


@dataclass(frozen=True)
class RegularMetrics:
    """Closed-form data for the regular n-gon with a given interior angle."""

    n: int
    angle: float
    area: float
    side: float
    perimeter: float
    circumradius: float
    inradius: float


def regular_metrics(n: int, angle: float) -> RegularMetrics:
    """Metrics of the regular hyperbolic n-gon with interior angle `angle`.

    All lengths come from the right triangle cut out by the center, a
    vertex and the midpoint of an adjacent side, which has angles
    (pi/n, angle/2, pi/2).
    """
    if not isinstance(n, int) or n < 3:
        raise DomainError("need an integer n >= 3")
    flat = (n - 2) * math.pi / n
    if not (0.0 < angle < flat):
        raise DomainError(
            f"interior angle of a hyperbolic regular {n}-gon must be in (0, {flat:.6f})"
        )
    half = 0.5 * angle
    beta = math.pi / n
    area = (n - 2) * math.pi - n * angle
    side = 2.0 * math.acosh(math.cos(beta) / math.sin(half))
    circum = math.acosh(1.0 / (math.tan(beta) * math.tan(half)))
    inrad = math.acosh(math.cos(half) / math.sin(beta))
    return RegularMetrics(n, angle, area, side, n * side, circum, inrad)


def regular_angle_for_area(n: int, area: float) -> float:
    """Interior angle of the regular n-gon with the given area."""
    if not isinstance(n, int) or n < 3:
        raise DomainError("need an integer n >= 3")
    if not (0.0 < area < (n - 2) * math.pi):
        raise DomainError(f"regular {n}-gon area must be in (0, {(n - 2)}*pi)")
    return ((n - 2) * math.pi - area) / n
