"""Hyperbolic polygons and operations on them.

A Polygon is an ordered cycle of hyperboloid points, stored
counterclockwise (the constructor reverses clockwise input).  Interior
angles are measured per vertex in a frame boosted to that vertex, so
they are valid in (0, 2pi) and reflex vertices are detected by
orientation, not guessed.

Self-intersection testing subdivides every edge into pieces at most one
unit long and runs a segment-crossing test on pieces in the Klein model
of a frame centered at one piece.  The naive approach (one global Klein
projection) silently fails for polygons whose vertices sit more than
~10 units out, because Klein coordinates saturate toward the unit
circle; the piecewise test has no such limit.
"""

from __future__ import annotations

import json
import math
from functools import cached_property

import numpy as np

from .core import (
    EPS_ANGLE,
    EPS_AREA,
    EPS_POINT,
    HPoint,
    azimuth_from,
    boost_from,
    boost_to,
    dist,
    mdot,
)
from .errors import DataError, DegeneracyError, DomainError, GeometryError

_TWO_PI = 2.0 * math.pi


class Polygon:
    """Simple-polygon candidate: a cycle of at least 3 distinct vertices.

    Treat instances as immutable; all operations return new polygons.
    """

    def __init__(self, vertices):
        verts = tuple(vertices)
        if len(verts) < 3:
            raise DomainError("a polygon needs at least 3 vertices")
        for v in verts:
            if not isinstance(v, HPoint):
                raise DomainError("polygon vertices must be HPoint instances")
        n = len(verts)
        for i in range(n):
            if dist(verts[i], verts[(i + 1) % n]) <= EPS_POINT:
                raise DomainError(f"consecutive vertices {i} and {(i + 1) % n} coincide")
        if _angle_sum_raw(verts) > n * math.pi:
            verts = tuple(reversed(verts))  # stored ccw
        self.vertices = verts

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __repr__(self):
        return f"Polygon(<{len(self.vertices)} vertices>)"

    @cached_property
    def sides(self):
        """Side lengths; sides[i] joins vertex i to vertex i+1."""
        v = self.vertices
        n = len(v)
        return tuple(dist(v[i], v[(i + 1) % n]) for i in range(n))

    @cached_property
    def angles(self):
        """Interior angles in (0, 2pi), reflex included, ccw convention."""
        return _interior_angles(self.vertices)

    @cached_property
    def perimeter(self):
        return sum(self.sides)

    @cached_property
    def is_embedded(self):
        """True iff the boundary has no self-crossing."""
        return not _has_self_crossing(self.vertices)


def _angle_sum_raw(verts):
    # Sum of (az_in - az_out) mod 2pi over the cycle.  For a ccw simple
    # polygon this is the interior angle sum (n-2)pi - area < n*pi; for
    # a cw one it exceeds n*pi, which is the orientation test.
    n = len(verts)
    total = 0.0
    for i in range(n):
        a_in = azimuth_from(verts[i], verts[i - 1])
        a_out = azimuth_from(verts[i], verts[(i + 1) % n])
        total += (a_in - a_out) % _TWO_PI
    return total


def _interior_angles(verts):
    n = len(verts)
    out = []
    for i in range(n):
        a_in = azimuth_from(verts[i], verts[i - 1])
        a_out = azimuth_from(verts[i], verts[(i + 1) % n])
        out.append((a_in - a_out) % _TWO_PI)
    return tuple(out)


def area(p: Polygon) -> float:
    """Gauss-Bonnet area (n-2)pi - sum(angles); requires a simple polygon."""
    if not p.is_embedded:
        raise GeometryError("area is defined here only for non-self-intersecting polygons")
    n = len(p)
    return (n - 2) * math.pi - sum(p.angles)


def fan_area(p: Polygon) -> float:
    """Area by fan triangulation from vertex 0 (independent of area()).

    Each fan triangle contributes pi minus its angle sum, signed by its
    orientation, so the overlaps of a non-convex fan cancel exactly.
    """
    verts = p.vertices
    n = len(verts)
    b = boost_to(verts[0])
    klein = []
    for v in verts:
        w = b.m @ np.array(v.coords())
        klein.append((w[1] / w[0], w[2] / w[0]))
    total = 0.0
    for i in range(1, n - 1):
        tri = (verts[0], verts[i], verts[i + 1])
        cross = klein[i][0] * klein[i + 1][1] - klein[i + 1][0] * klein[i][1]
        defect = math.pi - _triangle_angle_sum(tri)
        total += math.copysign(defect, cross) if cross != 0.0 else 0.0
    return total


def _triangle_angle_sum(tri):
    a, b, c = tri
    return (
        _angle_unsigned(a, b, c) + _angle_unsigned(b, c, a) + _angle_unsigned(c, a, b)
    )


def _angle_unsigned(v, p, q):
    d = azimuth_from(v, p) - azimuth_from(v, q)
    return abs(math.remainder(d, _TWO_PI))


def perimeter(p: Polygon) -> float:
    return p.perimeter


def is_embedded(p: Polygon) -> bool:
    return p.is_embedded


class AngleClassification:
    """Vertices split by interior angle: straight (= pi) vs reflex (> pi)."""

    def __init__(self, straight, reflex):
        self.straight = tuple(straight)
        self.reflex = tuple(reflex)

    @property
    def l1(self):
        return len(self.straight)

    @property
    def l2(self):
        return len(self.reflex)


def concave_vertices(p: Polygon, tol: float = EPS_ANGLE) -> AngleClassification:
    """Classify vertices: straight if |angle - pi| <= tol, reflex if angle > pi + tol."""
    straight, reflex = [], []
    for i, a in enumerate(p.angles):
        if abs(a - math.pi) <= tol:
            straight.append(i)
        elif a > math.pi + tol:
            reflex.append(i)
    return AngleClassification(straight, reflex)


def reduce_equivalent(p: Polygon, tol: float = EPS_ANGLE) -> Polygon:
    """Drop straight (angle == pi) vertices; idempotent."""
    cls = concave_vertices(p, tol)
    if not cls.straight:
        return p
    keep = [v for i, v in enumerate(p.vertices) if i not in set(cls.straight)]
    if len(keep) < 3:
        raise DegeneracyError("reduction would leave fewer than 3 vertices")
    return Polygon(keep)


def from_side_angle_data(sides, angles, tol_point: float = EPS_POINT, tol_angle: float = EPS_ANGLE) -> Polygon:
    """Build a polygon by walking the given side lengths and interior angles.

    Walks counterclockwise: go forward sides[i], turn left by the
    exterior angle pi - angles[i+1].  Raises ClosureError (with the
    holonomy residuals attached) if the walk does not return to its
    start with the starting heading.
    """
    from .construct import walk_polygon  # local import, construct depends on us

    return walk_polygon(sides, angles, tol_point=tol_point, tol_angle=tol_angle)


def convex_hull(p: Polygon) -> Polygon:
    """Convex hull of the vertex set (monotone chain in the Klein model).

    Geodesics are Klein straight lines, so Euclidean hull = hyperbolic
    hull.  Collinear ties drop the middle point.  Hull vertices are
    returned as the original HPoint objects.
    """
    verts = p.vertices
    pts = []
    for idx, v in enumerate(verts):
        pts.append((v.x1 / v.x0, v.x2 / v.x0, idx))
    pts.sort()

    def half(chain_pts):
        out = []
        for pt in chain_pts:
            while len(out) >= 2:
                ox, oy, _ = out[-2]
                ax, ay, _ = out[-1]
                cross = (ax - ox) * (pt[1] - oy) - (ay - oy) * (pt[0] - ox)
                if cross <= 1e-18:  # right turn or collinear: drop middle
                    out.pop()
                else:
                    break
            out.append(pt)
        return out

    lower = half(pts)
    upper = half(list(reversed(pts)))
    hull_idx = [t[2] for t in lower[:-1]] + [t[2] for t in upper[:-1]]
    if len(hull_idx) < 3:
        raise GeometryError("vertex set is collinear; hull is degenerate")
    return Polygon([verts[i] for i in hull_idx])


def flatten(p: Polygon, i_from: int, i_to: int) -> Polygon:
    """Replace the vertex run strictly between i_from and i_to by one edge.

    Indices are cyclic; the removed run goes forward from i_from.  The
    new edge must not cross the retained boundary.
    """
    n = len(p)
    i_from %= n
    i_to %= n
    if i_from == i_to:
        raise DomainError("flatten endpoints must differ")
    removed = (i_to - i_from) % n - 1
    if removed < 1:
        raise DomainError("flatten must remove at least one vertex")
    if n - removed < 3:
        raise DegeneracyError("flatten would leave fewer than 3 vertices")
    keep = []
    i = i_to
    while True:
        keep.append(p.vertices[i])
        if i == i_from:
            break
        i = (i + 1) % n
    q = Polygon(keep)
    if not q.is_embedded:
        raise GeometryError("flattened edge crosses the retained boundary")
    return q


def flatten_complementary_pair(p: Polygon, v: int, w: int) -> Polygon:
    """Remove a complementary vertex pair (angles summing to 2pi).

    Preconditions checked: m(v) + m(w) = 2pi within EPS_ANGLE, and the
    edges incident to v are congruent to those at w (either order).
    The result keeps the area (checked to 1e-9) and is strictly shorter.
    """
    n = len(p)
    v %= n
    w %= n
    if v == w:
        raise DomainError("need two distinct vertices")
    if (w - v) % n == 1 or (v - w) % n == 1:
        raise DomainError("complementary pair vertices must not be adjacent")
    ang = p.angles
    if abs(ang[v] + ang[w] - _TWO_PI) > EPS_ANGLE:
        raise DomainError(
            f"angles at {v} and {w} sum to {ang[v] + ang[w]:.12f}, not 2*pi"
        )
    s = p.sides
    in_v, out_v = s[v - 1], s[v]
    in_w, out_w = s[w - 1], s[w]

    def close(a, b):
        return abs(a - b) <= EPS_POINT * max(1.0, a, b)

    if not ((close(in_v, out_w) and close(out_v, in_w)) or (close(in_v, in_w) and close(out_v, out_w))):
        raise DomainError("edges incident to the pair are not congruent")
    old_area = area(p)
    keep = [pt for i, pt in enumerate(p.vertices) if i not in (v, w)]
    q = Polygon(keep)
    if not q.is_embedded:
        raise GeometryError("flattening the pair produced a self-intersection")
    new_area = area(q)
    if abs(new_area - old_area) > 1e-9 * max(1.0, abs(old_area)):
        raise GeometryError(
            f"area changed by {new_area - old_area:.3e}; inputs were not a true complementary pair"
        )
    if not q.perimeter < p.perimeter:
        raise GeometryError("perimeter did not decrease")
    return q


def insert_degenerate_vertices(p: Polygon, edge: int, count: int) -> Polygon:
    """Subdivide edge `edge` by `count` equally spaced straight vertices."""
    if not isinstance(count, int) or count < 1:
        raise DomainError("count must be an integer >= 1")
    n = len(p)
    edge %= n
    a = p.vertices[edge]
    b = p.vertices[(edge + 1) % n]
    new_pts = _points_along(a, b, count)
    verts = list(p.vertices[: edge + 1]) + new_pts + list(p.vertices[edge + 1:])
    return Polygon(verts)


def _points_along(a: HPoint, b: HPoint, count: int):
    """count points strictly between a and b, equally spaced on the geodesic."""
    to_o = boost_to(a)
    bt = to_o.apply(b)
    d = math.acosh(max(bt.x0, 1.0))
    h = math.hypot(bt.x1, bt.x2)
    if h == 0.0 or d == 0.0:
        raise DomainError("cannot subdivide a zero-length edge")
    ux, uy = bt.x1 / h, bt.x2 / h
    back = boost_from(a)
    out = []
    for j in range(1, count + 1):
        t = d * j / (count + 1)
        out.append(back.apply(HPoint(math.cosh(t), math.sinh(t) * ux, math.sinh(t) * uy)))
    return out


# ---------------------------------------------------------------------------
# self-intersection via edge subdivision


def _subdivide_edge(a: HPoint, b: HPoint, max_piece: float = 1.0):
    """Split edge a->b into pieces of length <= max_piece.

    Work happens in the frame boosted to a; endpoints are pinned to the
    exact inputs so shared polygon vertices stay shared bitwise.
    """
    to_o = boost_to(a)
    bt = to_o.apply(b)
    d = math.acosh(max(bt.x0, 1.0))
    k = max(1, math.ceil(d / max_piece))
    if k == 1:
        return [a, b]
    h = math.hypot(bt.x1, bt.x2)
    if h == 0.0:
        return [a, b]
    ux, uy = bt.x1 / h, bt.x2 / h
    back = boost_from(a)
    pts = [a]
    for j in range(1, k):
        t = d * j / k
        pts.append(back.apply(HPoint(math.cosh(t), math.sinh(t) * ux, math.sinh(t) * uy)))
    pts.append(b)
    return pts


# beyond this vertex size the float64 subdivision points smear: an
# edge launched from a far-out vertex has azimuth ~e^(-r) whose
# cancellation error, amplified by sinh of the edge length, displaces
# pieces by O(1) and fabricates (or masks) crossings
_CROSSING_MP_X0 = 1e4


def _has_self_crossing(verts) -> bool:
    x0max = max(v.x0 for v in verts)
    if math.isfinite(x0max) and x0max > _CROSSING_MP_X0:
        # the vertices themselves are honest data (each is a rounded
        # point, in error by ~1 ulp); only the float64 walk *between*
        # them is smeared, so subdivide in mpmath instead
        r = math.acosh(x0max)
        return _mp_has_crossing(
            [(v.x0, v.x1, v.x2) for v in verts], 25 + int(1.1 * r)
        )
    n = len(verts)
    starts, ends, edge_of = [], [], []
    for e in range(n):
        pts = _subdivide_edge(verts[e], verts[(e + 1) % n])
        for j in range(len(pts) - 1):
            starts.append(pts[j].coords())
            ends.append(pts[j + 1].coords())
            edge_of.append(e)
    a = np.array(starts)
    b = np.array(ends)
    edge_of = np.array(edge_of)
    with np.errstate(over="ignore", invalid="ignore"):
        m = a + b
        norm = np.sqrt(np.maximum(m[:, 0] ** 2 - m[:, 1] ** 2 - m[:, 2] ** 2, 1e-300))
        mn = m / norm[:, None]
        # piece half-lengths from the endpoint Lorentz product
        cosh_len = np.maximum(
            a[:, 0] * b[:, 0] - a[:, 1] * b[:, 1] - a[:, 2] * b[:, 2], 1.0
        )
        halves = 0.5 * np.arccosh(cosh_len)
        # pairwise cosh(distance) between piece midpoints
        g = mn[:, 0:1] * mn[:, 0:1].T - mn[:, 1:2] * mn[:, 1:2].T - mn[:, 2:3] * mn[:, 2:3].T
        cutoff = np.cosh(np.minimum(halves[:, None] + halves[None, :] + 1.0, 700.0))
        # a non-finite entry means the midpoint prefilter overflowed;
        # keep the pair and let the exact straddle test decide
        cand = (g < cutoff) | ~np.isfinite(g)
    cand_i, cand_j = np.nonzero(np.triu(cand, k=1))
    for i, j in zip(cand_i, cand_j):
        if edge_of[i] == edge_of[j]:
            continue
        if _pieces_share_endpoint(a[i], b[i], a[j], b[j]):
            continue
        if _pieces_cross(a[i], b[i], a[j], b[j]):
            return True
    return False


def _pieces_share_endpoint(a1, b1, a2, b2):
    for u in (a1, b1):
        for w in (a2, b2):
            if u[0] == w[0] and u[1] == w[1] and u[2] == w[2]:
                return True
    return False


def _pieces_cross(a1, b1, a2, b2):
    """Strict segment crossing, tested in the Klein model centered at a1."""
    p = HPoint(float(a1[0]), float(a1[1]), float(a1[2]))
    f = boost_to(p).m

    def klein(x):
        w = f @ x
        return w[1] / w[0], w[2] / w[0]

    qx, qy = klein(b1)
    rx, ry = klein(a2)
    sx, sy = klein(b2)
    # segment 1 runs from the origin to (qx, qy)
    d3 = qx * ry - qy * rx
    d4 = qx * sy - qy * sx
    if d3 * d4 >= 0.0 or d3 == 0.0 or d4 == 0.0:
        return False
    ex, ey = sx - rx, sy - ry
    d1 = ex * (0.0 - ry) - ey * (0.0 - rx)
    d2 = ex * (qy - ry) - ey * (qx - rx)
    return d1 * d2 < 0.0 and d1 != 0.0 and d2 != 0.0


def _mp_has_crossing(pts, dps):
    """Self-intersection test run on the unrounded (mpmath) cycle points.

    Mirrors the float64 test: split every edge into pieces of length
    <= 1 and check piece pairs for a strict straddle in the Klein chart
    centered on one piece endpoint.  The subdivision happens at working
    precision, so pieces stay on the geodesic they belong to even when
    the endpoints sit at e^15 and the launch azimuth is ~1e-6 rad.
    Candidate pairs are prefiltered in float64 polar form of the piece
    midpoints -- positions round off harmlessly; it is only the float64
    walk *between* far-out points that smears."""
    import mpmath as mp

    with mp.workdps(dps):
        one = mp.mpf(1)

        def on_shell(p):
            # project onto the sheet: float64-rounded vertices sit off the
            # hyperboloid by ~x0^2 * eps, and a boost built from an
            # off-shell point is not an isometry -- its subdivision points
            # drift off the cone and fabricate straddles
            x0, x1, x2 = (mp.mpf(c) for c in p)
            q = x0 * x0 - x1 * x1 - x2 * x2
            if q > 0.5:
                s = mp.sqrt(q)
                return (x0 / s, x1 / s, x2 / s)
            # beyond x0 ~ 5e7 the rounded quadratic form is pure noise;
            # the polar form survives (radius verbatim, azimuth to ~eps)
            x0 = max(x0, one)
            s = mp.sqrt((x0 - 1) * (x0 + 1))
            phi = mp.atan2(x2, x1)
            return (x0, s * mp.cos(phi), s * mp.sin(phi))

        pts = [on_shell(p) for p in pts]

        def boost_rows(v, sgn):
            # core.boost_to (sgn=-1) / boost_from (sgn=+1) on an mp triple
            x0, x1, x2 = v
            d = 1 + x0
            return (
                (x0, sgn * x1, sgn * x2),
                (sgn * x1, one + x1 * x1 / d, x1 * x2 / d),
                (sgn * x2, x1 * x2 / d, one + x2 * x2 / d),
            )

        def apply(m, x):
            return (
                m[0][0] * x[0] + m[0][1] * x[1] + m[0][2] * x[2],
                m[1][0] * x[0] + m[1][1] * x[1] + m[1][2] * x[2],
                m[2][0] * x[0] + m[2][1] * x[1] + m[2][2] * x[2],
            )

        def subdivide(a, b):
            bt = apply(boost_rows(a, -1), b)
            d = mp.acosh(max(bt[0], one))
            k = max(1, int(mp.ceil(d)))
            h = mp.hypot(bt[1], bt[2])
            if k == 1 or h == 0:
                return [a, b], d
            ux, uy = bt[1] / h, bt[2] / h
            back = boost_rows(a, 1)
            out = [a]
            for j in range(1, k):
                t = d * j / k
                s = mp.sinh(t)
                out.append(apply(back, (mp.cosh(t), s * ux, s * uy)))
            out.append(b)
            return out, d / k

        n = len(pts)
        starts, ends, edge_of, halves, mids = [], [], [], [], []
        for e in range(n):
            seg, piece_len = subdivide(pts[e], pts[(e + 1) % n])
            for j in range(len(seg) - 1):
                starts.append(seg[j])
                ends.append(seg[j + 1])
                edge_of.append(e)
                halves.append(0.5 * float(piece_len))
                m = [seg[j][i] + seg[j + 1][i] for i in range(3)]
                nrm = mp.sqrt(max(m[0] * m[0] - m[1] * m[1] - m[2] * m[2], mp.mpf("1e-300")))
                mids.append((float(m[0] / nrm), float(m[1] / nrm), float(m[2] / nrm)))

    # float64 polar prefilter on piece midpoints, same cutoff as the
    # float64 test: midpoints further apart than the piece half-lengths
    # plus a unit of slack cannot belong to crossing pieces
    mids = np.array(mids)
    halves = np.array(halves)
    edge_arr = np.array(edge_of)
    r = np.arccosh(np.maximum(mids[:, 0], 1.0))
    phi = np.arctan2(mids[:, 2], mids[:, 1])
    with np.errstate(over="ignore", invalid="ignore"):
        g = np.cosh(r[:, None] - r[None, :]) + np.sinh(r[:, None]) * np.sinh(r[None, :]) * (
            1.0 - np.cos(phi[:, None] - phi[None, :])
        )
        cutoff = np.cosh(np.minimum(halves[:, None] + halves[None, :] + 1.0, 700.0))
        cand = (g < cutoff) | ~np.isfinite(g)
    cand &= edge_arr[:, None] != edge_arr[None, :]
    cand_i, cand_j = np.nonzero(np.triu(cand, k=1))

    with mp.workdps(dps):
        def klein(m, x):
            w = apply(m, x)
            return w[1] / w[0], w[2] / w[0]

        for i, j in zip(cand_i, cand_j):
            a1, b1, a2, b2 = starts[i], ends[i], starts[j], ends[j]
            if a1 == a2 or a1 == b2 or b1 == a2 or b1 == b2:
                continue
            f = boost_rows(a1, -1)
            qx, qy = klein(f, b1)
            rx, ry = klein(f, a2)
            sx, sy = klein(f, b2)
            # segment 1 runs from the origin to (qx, qy); strict signs only
            d3 = qx * ry - qy * rx
            d4 = qx * sy - qy * sx
            if d3 * d4 >= 0 or d3 == 0 or d4 == 0:
                continue
            ex, ey = sx - rx, sy - ry
            d1 = ex * (0 - ry) - ey * (0 - rx)
            d2 = ex * (qy - ry) - ey * (qx - rx)
            if d1 * d2 < 0 and d1 != 0 and d2 != 0:
                return True
    return False


# ---------------------------------------------------------------------------
# interchange format


def polygon_to_json(p: Polygon) -> dict:
    """Plain-dict form: {"model": "hyperboloid", "vertices": [[x0,x1,x2], ...]}."""
    return {
        "model": "hyperboloid",
        "vertices": [[v.x0, v.x1, v.x2] for v in p.vertices],
    }


def polygon_from_json(obj) -> Polygon:
    """Parse and validate the dict form produced by polygon_to_json."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as e:
            raise DataError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict):
        raise DataError("polygon JSON must be an object")
    if obj.get("model") != "hyperboloid":
        raise DataError('polygon JSON must declare "model": "hyperboloid"')
    verts = obj.get("vertices")
    if not isinstance(verts, list) or len(verts) < 3:
        raise DataError("polygon JSON needs a list of at least 3 vertices")
    pts = []
    for i, row in enumerate(verts):
        if not (isinstance(row, list) and len(row) == 3):
            raise DataError(f"vertex {i} is not a 3-vector")
        try:
            x0, x1, x2 = (float(c) for c in row)
        except (TypeError, ValueError):
            raise DataError(f"vertex {i} has non-numeric coordinates") from None
        if not all(math.isfinite(c) for c in (x0, x1, x2)):
            raise DataError(f"vertex {i} has non-finite coordinates")
        pt = HPoint(x0, x1, x2)
        if not pt.is_valid(tol=EPS_POINT):
            raise DataError(
                f"vertex {i} is off the hyperboloid (defect {pt.minkowski_norm_error():.3e})"
            )
        # kept raw: rescaling far vertices would amplify rounding
        pts.append(pt)
    return Polygon(pts)


def save_polygon(p: Polygon, path) -> None:
    with open(path, "w") as fh:
        json.dump(polygon_to_json(p), fh, indent=1)
        fh.write("\n")


def load_polygon(path) -> Polygon:
    with open(path) as fh:
        return polygon_from_json(json.load(fh))
