"""Random polygon generators for stress tests and verification suites.

Samplers take an explicit numpy Generator so suites stay reproducible.
Star polygons about the origin with strictly increasing vertex azimuths
and azimuth gaps below pi are simple by construction: in the Klein disk
the edges are straight chords confined to disjoint azimuth wedges, so
only adjacent edges can touch, and only at their shared vertex.
"""

import math

import numpy as np

from .core import ORIGIN, azimuth_from, boost_from, dist, from_polar, rotation, translation
from .errors import ConstructionError, DomainError
from .polygon import Polygon

_TWO_PI = 2.0 * math.pi


def random_half_angles(rng, k):
    """Half-sequence angles for an equilateral 2k-gon.

    Each angle is uniform on (0.2, pi - 0.2); vectors whose sum is too
    close to the hyperbolicity bound (k-1)*pi are redrawn."""
    if k < 2:
        raise DomainError("need k >= 2")
    while True:
        ths = [float(t) for t in rng.uniform(0.2, math.pi - 0.2, size=k)]
        if sum(ths) < (k - 1) * math.pi - 0.1:
            return ths


def star_vertices(radii, azimuths):
    """Vertices of a star polygon from per-vertex radii and azimuths."""
    return [from_polar(float(r), float(a)) for r, a in zip(radii, azimuths)]


def _star_azimuths(rng, n):
    # jittered grid: gaps stay in (0.6, 1.4) * 2pi/n, which is below pi
    # for every n >= 3, so the star construction stays simple
    return _TWO_PI * (np.arange(n) + rng.uniform(0.3, 0.7, size=n)) / n


def random_star_polygon(rng, n, r_lo=0.4, r_hi=2.2):
    """Random simple n-gon, star-shaped about the origin."""
    if n < 3:
        raise DomainError("need n >= 3")
    radii = rng.uniform(r_lo, r_hi, size=n)
    return Polygon(star_vertices(radii, _star_azimuths(rng, n)))


def random_polygon_with_complementary_pair(rng, n_base=None):
    """Simple polygon carrying an exact complementary vertex pair.

    A bump and a dent cut from congruent isosceles triangles are
    planted on the first edge of a star polygon.  The two apex angles
    sum to 2*pi by construction and their incident edges are congruent,
    so the pair can be flattened away without changing the area.
    Returns (polygon, bump_index, dent_index).
    """
    if n_base is None:
        n_base = int(rng.integers(4, 8))
    if n_base < 3:
        raise DomainError("need a base polygon with at least 3 vertices")
    for _ in range(32):
        radii = rng.uniform(1.2, 2.2, size=n_base)
        base = star_vertices(radii, _star_azimuths(rng, n_base))
        a, b = base[0], base[1]
        ell = dist(a, b)
        frame = boost_from(a) @ rotation(azimuth_from(a, b))
        seg = ell / 8.0
        t1 = ell * float(rng.uniform(0.05, 0.18))
        t3 = ell * float(rng.uniform(0.55, 0.68))
        h = seg * float(rng.uniform(0.15, 0.45))

        def on_edge(t):
            return frame.apply(from_polar(t, 0.0))

        def apex(t_mid, side):
            off = translation(t_mid) @ rotation(side * 0.5 * math.pi) @ translation(h)
            return frame.apply(off.apply(ORIGIN))

        # the boundary runs counter-clockwise, so the interior lies at
        # azimuth +pi/2 from the edge direction: the bump points out
        # (-), the dent points in (+)
        bump = apex(t1 + 0.5 * seg, -1.0)
        dent = apex(t3 + 0.5 * seg, +1.0)
        verts = (
            [a, on_edge(t1), bump, on_edge(t1 + seg)]
            + [on_edge(t3), dent, on_edge(t3 + seg)]
            + base[1:]
        )
        poly = Polygon(verts)
        ang = poly.angles
        if abs(ang[2] + ang[5] - _TWO_PI) > 1e-10:
            continue
        if poly.is_embedded:
            return poly, 2, 5
    raise ConstructionError("could not place a complementary pair on a simple polygon")


# ---------------------------------------------------------------------------
# vectorized star-polygon batches


def star_area_batch(radii, azimuths):
    """Areas of star polygons, one per row of (radii, azimuths).

    Fan-triangulates about the origin and applies the angle-deficit
    formula to each triangle; everything is plain numpy on (m, n)
    arrays."""
    r = np.asarray(radii, dtype=float)
    az = np.asarray(azimuths, dtype=float)
    r2 = np.roll(r, -1, axis=-1)
    dphi = (np.roll(az, -1, axis=-1) - az) % _TWO_PI
    cosh_c = np.cosh(r) * np.cosh(r2) - np.sinh(r) * np.sinh(r2) * np.cos(dphi)
    # angles at the two rim vertices, by the side-side-side law
    sinh_c = np.sqrt(np.maximum(cosh_c * cosh_c - 1.0, 0.0))
    with np.errstate(divide="ignore", invalid="ignore"):
        cos_a = (np.cosh(r) * cosh_c - np.cosh(r2)) / (np.sinh(r) * sinh_c)
        cos_b = (np.cosh(r2) * cosh_c - np.cosh(r)) / (np.sinh(r2) * sinh_c)
    alpha = np.arccos(np.clip(cos_a, -1.0, 1.0))
    beta = np.arccos(np.clip(cos_b, -1.0, 1.0))
    return np.sum(math.pi - dphi - alpha - beta, axis=-1)


def star_perimeter_batch(radii, azimuths):
    """Perimeters of star polygons, one per row of (radii, azimuths)."""
    r = np.asarray(radii, dtype=float)
    az = np.asarray(azimuths, dtype=float)
    r2 = np.roll(r, -1, axis=-1)
    dphi = (np.roll(az, -1, axis=-1) - az) % _TWO_PI
    cosh_c = np.cosh(r) * np.cosh(r2) - np.sinh(r) * np.sinh(r2) * np.cos(dphi)
    return np.sum(np.arccosh(np.maximum(cosh_c, 1.0)), axis=-1)


def isoperimetric_samples(rng, count, n, target_area):
    """Perimeters of `count` random simple n-gons rescaled to target_area.

    Radial rescaling of a star polygon changes its area monotonically,
    so each sample is driven onto the target by a vectorized bisection
    (to well below 1e-9, far tighter than the samples themselves vary).
    Returns (perimeters, areas), both (count,) arrays."""
    if n < 3:
        raise DomainError("need n >= 3")
    total = float((n - 2) * math.pi)
    if not (0.0 < target_area < total):
        raise DomainError(f"target area must lie in (0, {total:.6f}) for n={n}")
    az = _TWO_PI * (np.arange(n) + rng.uniform(0.3, 0.7, size=(count, n))) / n
    shape = rng.uniform(0.35, 1.0, size=(count, n))  # relative radii
    lo = np.full(count, 1e-6)
    hi = np.full(count, 0.5)
    # grow the upper bound until every sample overshoots the target
    for _ in range(60):
        small = star_area_batch(hi[:, None] * shape, az) < target_area
        if not small.any():
            break
        hi[small] *= 1.5
    else:
        raise ConstructionError("area bracket failed to cover the target")
    for _ in range(90):
        mid = 0.5 * (lo + hi)
        below = star_area_batch(mid[:, None] * shape, az) < target_area
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    s = 0.5 * (lo + hi)
    radii = s[:, None] * shape
    return star_perimeter_batch(radii, az), star_area_batch(radii, az)
