"""Constructors for hyperbolic polygons and equilateral tiles.

The central tool is a turtle walk: starting at the origin heading along
the x1-axis, alternately translate by a side length and rotate by an
exterior angle.  The running pose is a single Lorentz matrix and the
vertices are its images of the origin, taken raw.  Nothing is
renormalized mid-walk -- the raw matrix product carries a relative
error of only ~n*eps, while snapping far vertices back onto the
hyperboloid would cost ~e^(2r)*eps.

Equilateral 2k-gons with prescribed half-sequence of interior angles
(theta1 at two opposite "junction" vertices, theta2..thetak in between,
repeated by a half-turn) are found by solving for the common side
length.  For one k-edge open chain at side length l, let m1 be the
angle at the start vertex between the first edge and the closing
diagonal, and mend the corresponding angle at the end vertex.  The
closing condition is g(l) = m1 + mend - theta1 = 0: gluing the chain
to its half-turn image about the diagonal midpoint then produces
interior angle theta1 at both junction vertices.

g is evaluated from chain walks anchored at the middle vertex, not an
end: the usable accuracy of a pose walk is ~e^(L - d) * eps (excursion
against net displacement), and near the largest root of a spiky chain
the one-ended figure can exceed the margin separating an embedded
polygon from a self-crossing one.  g can oscillate many times for
spiky angle data (each spike sweeping past the diagonal), and
sign-change pairs can be only ~1e-2 wide on side lengths of ~10, so
the scan is a dense log-spaced grid plus parabolic refinement of every
local |g| minimum that plausibly dips through zero.  Candidate roots
are validated from the largest down: positive gap angles at both
junctions, then the interior-angle pattern of the doubled polygon
(which a mislocated root or a dented spike breaks by whole radians),
then a full self-intersection test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    EPS_ANGLE,
    EPS_POINT,
    HPoint,
    ORIGIN,
    angle_at,
    dist,
    from_polar,
    point_reflect,
    regular_angle_for_area,
    regular_metrics,
    side_from_angles,
    triangle_from_angles,
)
from .errors import ClosureError, ConstructionError, DomainError, GeometryError
from .polygon import Polygon, _has_self_crossing, _mp_has_crossing

_PI = math.pi

# scan defaults for the side-length search; the grid step must stay
# well under the ~1e-2 width of the narrowest embedded/dented root pair
# seen on spiky tiles (side lengths ~10)
SCAN_LO = 1e-6
SCAN_HI = 1e3
SCAN_POINTS = 60000
REFINE_FACTOR = 64
REFINE_DEPTH = 2

# reject doubled polygons whose coordinates would exhaust float64
_COSH_DIAG_LIMIT = 1e60
_VERTEX_X0_LIMIT = 1e70

# beyond this vertex size the float64 crossing test is advisory only:
# subdividing an edge between far-out vertices launches the pieces
# along an azimuth of order e^(-r) whose float64 cancellation error,
# amplified by sinh of the edge length, displaces pieces by O(1)
_F64_CROSSING_X0 = 1e4

# rescue sweep for root pairs the float64 scan lost to noise
_RESCUE_POINTS = 64
_RESCUE_DEPTH = 2
_RESCUE_PAD = 10.0  # padding around a phantom-bracket cluster, in bracket widths

# half-chain pose excursion k*ell/2 beyond which a tile is too large
# to be worth representing at all
_MAX_EXCURSION = 250.0


# ---------------------------------------------------------------------------
# scalar pose walk


def _mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)]
        for i in range(3)
    ]


def _trans_mat(t):
    c, s = math.cosh(t), math.sinh(t)
    return [[c, s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]


def _rot_mat(a):
    c, s = math.cos(a), math.sin(a)
    return [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]]


def _chain_vertices(ell, interior_angles):
    """Vertices of the open chain: edges of length ell, left turns of
    pi - theta at each interior vertex.  Start vertex is the origin."""
    pose = _trans_mat(ell)
    verts = [ORIGIN, HPoint(pose[0][0], pose[1][0], pose[2][0])]
    for th in interior_angles:
        pose = _mat_mul(pose, _rot_mat(_PI - th))
        pose = _mat_mul(pose, _trans_mat(ell))
        verts.append(HPoint(pose[0][0], pose[1][0], pose[2][0]))
    return verts, pose


def walk_polygon(sides, angles, tol_point: float = EPS_POINT, tol_angle: float = EPS_ANGLE) -> Polygon:
    """Polygon from side lengths and interior angles, checked for closure.

    sides[i] joins vertex i to i+1; angles[i] is the interior angle at
    vertex i.  The walk starts at vertex 0 along the x1-axis, so the
    data must traverse the boundary counterclockwise.  Raises
    ClosureError if the walk does not return to the start pose; the
    tolerances are scaled by the squared coordinate size of the walk,
    which is the precision floor for testing closure in floats.
    """
    sides = [float(s) for s in sides]
    angles = [float(a) for a in angles]
    n = len(sides)
    if n < 3 or len(angles) != n:
        raise DomainError("need matching side and angle lists of length >= 3")
    for s in sides:
        if not (s > 0.0 and math.isfinite(s)):
            raise DomainError("side lengths must be positive and finite")
    for a in angles:
        if not (0.0 < a < 2.0 * _PI):
            raise DomainError("interior angles must lie in (0, 2*pi)")
    pose = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
    verts = []
    x0_max = 1.0
    for i in range(n):
        verts.append(HPoint(pose[0][0], pose[1][0], pose[2][0]))
        x0_max = max(x0_max, pose[0][0])
        pose = _mat_mul(pose, _trans_mat(sides[i]))
        pose = _mat_mul(pose, _rot_mat(_PI - angles[(i + 1) % n]))
    scale = x0_max * x0_max
    end = HPoint(pose[0][0], pose[1][0], pose[2][0])
    point_residual = dist(ORIGIN, end)
    angle_residual = abs(math.atan2(pose[2][1], pose[1][1]))
    if point_residual > tol_point * scale or angle_residual > tol_angle * scale:
        raise ClosureError(
            f"walk does not close: end point off by {point_residual:.3e}, "
            f"heading off by {angle_residual:.3e} (allowed {tol_point * scale:.1e} / {tol_angle * scale:.1e})",
            point_residual=point_residual,
            angle_residual=angle_residual,
        )
    return Polygon(verts)


# ---------------------------------------------------------------------------
# vectorized gap-angle evaluation


def _chain_gaps(ells, rest):
    """Gap angles (m1, mend) and diagonal cosh for a batch of side lengths.

    ells is a 1-d array; rest holds the chain's interior angles
    theta2..thetak.  Walks all poses in parallel as nine coordinate
    arrays; returns (m1, mend, cosh_diag) arrays.

    The one-ended walk carries rounding noise of ~e^(L - d)*eps
    (pose excursion against net displacement), which on large spiky
    chains reaches ~1e-5.  That is fine for locating sign-change
    brackets but not for the roots themselves -- candidate roots are
    re-refined against the measured junction angle of the recentered
    doubled polygon (_junction_excess), which is rounding-limited.
    """
    ells = np.asarray(ells, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        ch, sh = np.cosh(ells), np.sinh(ells)
        one = np.ones_like(ells)
        zero = np.zeros_like(ells)
        # pose = trans(ell), row-major
        p = [ch.copy(), sh.copy(), zero.copy(),
             sh.copy(), ch.copy(), zero.copy(),
             zero.copy(), zero.copy(), one.copy()]
        for th in rest:
            c, s = math.cos(_PI - th), math.sin(_PI - th)
            # right-multiply by rot(pi - th): mixes columns 1 and 2
            for r in range(3):
                c1, c2 = p[3 * r + 1], p[3 * r + 2]
                p[3 * r + 1] = c1 * c + c2 * s
                p[3 * r + 2] = -c1 * s + c2 * c
            # right-multiply by trans(ell): mixes columns 0 and 1
            for r in range(3):
                c0, c1 = p[3 * r], p[3 * r + 1]
                p[3 * r] = c0 * ch + c1 * sh
                p[3 * r + 1] = c0 * sh + c1 * ch
        m1 = np.abs(np.arctan2(p[6], p[3]))
        mend = _PI - np.abs(np.arctan2(-p[2], -p[1]))
    return m1, mend, p[0]


def _gap_excess(ells, theta1, rest):
    """g(l) = m1 + mend - theta1, nan where the diagonal degenerates."""
    m1, mend, coshd = _chain_gaps(ells, rest)
    g = m1 + mend - theta1
    bad = ~np.isfinite(coshd) | (coshd < 1.0 + 1e-13)
    g = np.where(bad, np.nan, g)
    return g


def _scan_brackets(theta1, rest, lo, hi, n_points, depth, factor):
    """Sign-change brackets of g on a log grid, with parabolic dip refinement.

    Spiky chains make g oscillate with bumps narrower than any fixed
    grid, so every same-sign local |g| minimum whose fitted parabola
    dips through (or near) zero is rescanned on a denser subgrid.
    """
    xs = np.geomspace(lo, hi, n_points)
    g = _gap_excess(xs, theta1, rest)
    brackets = []
    finite = np.isfinite(g)
    sign = np.sign(g)
    for i in range(len(xs) - 1):
        if finite[i] and finite[i + 1] and sign[i] != 0 and sign[i + 1] != 0 and sign[i] != sign[i + 1]:
            brackets.append((xs[i], xs[i + 1]))
    if depth > 0:
        for i in range(1, len(xs) - 1):
            if not (finite[i - 1] and finite[i] and finite[i + 1]):
                continue
            g0, g1, g2 = g[i - 1], g[i], g[i + 1]
            if not (sign[i - 1] == sign[i] == sign[i + 1]):
                continue
            if abs(g1) >= abs(g0) or abs(g1) >= abs(g2):
                continue
            a = 0.5 * (g0 + g2) - g1
            b = 0.5 * (g2 - g0)
            if a == 0.0:
                continue
            ext = g1 - b * b / (4.0 * a)
            # refine when the parabola through the dip crosses zero, or
            # comes close enough that the grid may have missed a pair
            if (math.copysign(1.0, ext) != sign[i]) or (abs(ext) < 0.05 * abs(g1)):
                brackets.extend(
                    _scan_brackets(theta1, rest, xs[i - 1], xs[i + 1],
                                   2 * factor + 1, depth - 1, factor)
                )
    return brackets


def _junction_excess(ell, theta1, rest):
    """The gap excess measured on the recentered doubled polygon.

    Identical to _gap_excess in exact arithmetic (the doubled polygon's
    junction angle is m1 + mend at any side length), but walked and
    measured in mpmath before any float64 rounding.  Near the fat end
    of a tile family the root is nearly tangent (|g'| can be ~1e-5), so
    float64 measurement noise alone would shift the bisected root by
    ~1e-10 and the off-junction angles with it; the mp measurement
    leaves the root limited by bisection width instead."""
    import mpmath as mp

    excursion = 0.5 * (len(rest) + 1) * ell
    if excursion > _MAX_EXCURSION:
        return float("nan")
    with mp.workdps(25 + int(0.5 * excursion)):
        half = _mp_recentered_chain(ell, rest, mp)
        if half is None:
            return float("nan")
        w0, w1, wp = half[0], half[1], half[-2]
        wr = (wp[0], -wp[1], -wp[2])  # half-turn image of W_{k-1}: W0's other neighbor
        ang = _mp_angle_at(w0, w1, wr, mp)
        return float(ang - theta1)


def _mp_angle_at(v, a, b, mp):
    """Unsigned angle at v between directions to a and b (mp triples)."""
    d = 1 + v[0]
    bo = [
        [v[0], -v[1], -v[2]],
        [-v[1], 1 + v[1] * v[1] / d, v[1] * v[2] / d],
        [-v[2], v[1] * v[2] / d, 1 + v[2] * v[2] / d],
    ]

    def az(p):
        x1 = bo[1][0] * p[0] + bo[1][1] * p[1] + bo[1][2] * p[2]
        x2 = bo[2][0] * p[0] + bo[2][1] * p[1] + bo[2][2] * p[2]
        return mp.atan2(x2, x1)

    diff = abs(az(a) - az(b))
    if diff > mp.pi:
        diff = 2 * mp.pi - diff
    return diff


def _bisect_root(theta1, rest, a, b):
    """Refine a scan bracket against the measured junction excess.

    Returns None when the accurate residual has no sign change over
    [a, b] -- which is how phantom brackets (sign flips of scan noise,
    clustered around large spiky roots) get pruned."""
    ga = _junction_excess(a, theta1, rest)
    gb = _junction_excess(b, theta1, rest)
    if not (math.isfinite(ga) and math.isfinite(gb)):
        return None
    if ga == 0.0:
        return a
    if gb == 0.0:
        return b
    if (ga > 0) == (gb > 0):
        return None
    for _ in range(200):
        mid = 0.5 * (a + b)
        if (b - a) <= 1e-15 * max(1.0, a):
            break
        gm = _junction_excess(mid, theta1, rest)
        if not math.isfinite(gm):
            # shrink toward the finite side
            b = mid
            continue
        if gm == 0.0:
            return mid
        if (gm > 0) == (ga > 0):
            a, ga = mid, gm
        else:
            b = mid
    return 0.5 * (a + b)


# ---------------------------------------------------------------------------
# chains and doubling


@dataclass(frozen=True)
class Chain:
    """Open equilateral chain plus its closing-diagonal data."""

    vertices: tuple
    ell: float
    angles: tuple
    m1: float
    mend: float
    closed_embedded: bool

    @property
    def gap_sum(self) -> float:
        return self.m1 + self.mend


def build_chain(ell: float, angles) -> Chain:
    """Walk an open chain of equal sides and given interior angles.

    Reports the two gap angles against the closing diagonal and whether
    the naively closed polygon (chain plus diagonal) is embedded.
    """
    angles = tuple(float(a) for a in angles)
    if not (ell > 0 and math.isfinite(ell)):
        raise DomainError("side length must be positive and finite")
    if len(angles) < 1:
        raise DomainError("a chain needs at least one interior angle")
    for a in angles:
        if not (0.0 < a < _PI):
            raise DomainError("chain interior angles must lie in (0, pi)")
    verts, _ = _chain_vertices(ell, angles)
    m1_arr, mend_arr, coshd = _chain_gaps(np.array([ell]), angles)
    m1, mend = float(m1_arr[0]), float(mend_arr[0])
    try:
        closed = Polygon(verts)
        embedded = closed.is_embedded
    except DomainError:
        embedded = False
    return Chain(tuple(verts), float(ell), angles, m1, mend, embedded)


def _doubled_polygon(ell, rest):
    """Close the chain by gluing its half-turn image about the diagonal
    midpoint; returns (vertices, unrounded mp triples, excursion), or
    None when the chain is too large to represent.  The mp triples let
    validation re-derive anything whose float64 form is too smeared
    (notably the self-intersection test on far-out spikes).

    The result is expressed in the frame centered at the diagonal
    midpoint -- the polygon's symmetry point.  There the half-turn is
    exact ((x1, x2) -> (-x1, -x2)), and every vertex sits within the
    circumradius of the frame origin, which is where float64 angle and
    crossing predicates are sharpest.

    A float64 pose walk loses ~excursion/ln(10) decimal digits to
    rounding (the turn angles of a far-out pose are encoded in matrix
    entries of size e^r), which downstream angle measurements amplify
    further; so the chain is walked in mpmath with enough working
    digits that the only error left is the final rounding of the
    recentered coordinates.  Only the scan stage needs to be fast, and
    it has its own vectorized float64 walk."""
    excursion = 0.5 * (len(rest) + 1) * ell
    if excursion > _MAX_EXCURSION:
        return None
    import mpmath as mp

    with mp.workdps(25 + int(0.5 * excursion)):
        half = _mp_recentered_chain(ell, rest, mp)
        if half is None:
            return None
        pts = half + [(x0, -x1, -x2) for (x0, x1, x2) in half[1:-1]]
        full = [HPoint(float(x0), float(x1), float(x2)) for (x0, x1, x2) in pts]
    for v in full:
        if not (math.isfinite(v.x0) and v.x0 < _VERTEX_X0_LIMIT):
            return None
    return full, tuple(pts), excursion


def _mp_recentered_chain(ell, rest, mp):
    """The centered chain W0..Wk, walked in mpmath and re-expressed in
    the frame of the diagonal midpoint.  Returns mp coordinate triples,
    or None when the diagonal degenerates.  Caller sets the precision
    (the walk loses ~excursion/ln(10) digits to the pose magnitudes)."""
    k = len(rest) + 1
    m = k // 2
    one, zero = mp.mpf(1), mp.mpf(0)

    def trans(t):
        c, s = mp.cosh(t), mp.sinh(t)
        return mp.matrix([[c, s, zero], [s, c, zero], [zero, zero, one]])

    def rot(a):
        c, s = mp.cos(a), mp.sin(a)
        return mp.matrix([[one, zero, zero], [zero, c, -s], [zero, s, c]])

    ell_mp = mp.mpf(ell)
    pi_mp = mp.pi
    # forward half: W_{m+1} .. W_k
    fwd = []
    pose = trans(ell_mp)
    for e in range(m, k):
        fwd.append((pose[0, 0], pose[1, 0], pose[2, 0]))
        if e < k - 1:
            pose = pose * rot(pi_mp - rest[e]) * trans(ell_mp)
    # backward half: W_{m-1} .. W_0
    back = []
    pose = rot(mp.mpf(rest[m - 1])) * trans(ell_mp)
    for e in range(m - 1, -1, -1):
        back.append((pose[0, 0], pose[1, 0], pose[2, 0]))
        if e > 0:
            pose = pose * rot(-(pi_mp - rest[e - 1])) * trans(ell_mp)
    verts = list(reversed(back)) + [(one, zero, zero)] + fwd
    w0, wk = verts[0], verts[-1]
    coshd = w0[0] * wk[0] - w0[1] * wk[1] - w0[2] * wk[2]
    if not (1 <= coshd < _COSH_DIAG_LIMIT):
        return None
    s = mp.sqrt(2 + 2 * coshd)
    mid = ((w0[0] + wk[0]) / s, (w0[1] + wk[1]) / s, (w0[2] + wk[2]) / s)
    # the symmetric boost taking mid to the origin (core.boost_to in mp)
    d = 1 + mid[0]
    b = [
        [mid[0], -mid[1], -mid[2]],
        [-mid[1], one + mid[1] * mid[1] / d, mid[1] * mid[2] / d],
        [-mid[2], mid[1] * mid[2] / d, one + mid[2] * mid[2] / d],
    ]
    out = []
    for (x0, x1, x2) in verts:
        out.append((
            b[0][0] * x0 + b[0][1] * x1 + b[0][2] * x2,
            b[1][0] * x0 + b[1][1] * x1 + b[1][2] * x2,
            b[2][0] * x0 + b[2][1] * x1 + b[2][2] * x2,
        ))
    return out


def _candidate_crossing(verts, mp_pts, excursion):
    """Embedding verdict for a candidate doubled polygon.

    The float64 subdivision test is definitive only while every vertex
    is modest; a clean verdict there is accepted as-is.  A claimed
    crossing, or any vertex beyond the float64 smear threshold, is
    settled by re-running the same test on the unrounded chain points
    at a precision that keeps the subdivision smear (~eps * e^(2.4 r))
    far below any honest clearance."""
    compact = max(v.x0 for v in verts) <= _F64_CROSSING_X0
    if compact and not _has_self_crossing(verts):
        return False
    return _mp_has_crossing(mp_pts, 25 + int(excursion))


def _mp_sweep_signs(theta1, rest, lo, hi, depth):
    """Sign-change cells of the measured junction excess on [lo, hi].

    Evenly spaced mp evaluations; a one-sample dip toward zero without
    a sign change is re-swept at finer spacing (a spike narrower than
    the spacing shows up as such a dip first)."""
    xs = [lo + (hi - lo) * i / _RESCUE_POINTS for i in range(_RESCUE_POINTS + 1)]
    gs = [_junction_excess(x, theta1, rest) for x in xs]
    cells = []
    for i in range(_RESCUE_POINTS):
        ga, gb = gs[i], gs[i + 1]
        if math.isfinite(ga) and math.isfinite(gb) and (ga < 0.0) != (gb < 0.0):
            cells.append((xs[i], xs[i + 1]))
    if depth > 0:
        for i in range(1, _RESCUE_POINTS):
            trio = gs[i - 1 : i + 2]
            if not all(math.isfinite(t) for t in trio):
                continue
            same_side = (trio[0] < 0.0) == (trio[1] < 0.0) == (trio[2] < 0.0)
            if same_side and abs(trio[1]) < abs(trio[0]) and abs(trio[1]) <= abs(trio[2]):
                cells.extend(_mp_sweep_signs(theta1, rest, xs[i - 1], xs[i + 1], depth - 1))
    return cells


def _mp_rescue_roots(theta1, rest, pruned, known_roots):
    """Roots recovered by re-sweeping phantom-bracket windows in mpmath.

    A pruned bracket marks a stretch where scan noise flipped sign.
    When the true excess has a spike crossing zero twice within a few
    scan cells (a near-collapsing diagonal), the noise can displace
    both crossings into phantoms whose accurate endpoint values agree
    in sign, so the pair is silently lost.  Sweeping a padded window
    around each phantom cluster with exact evaluations recovers such
    pairs.  Runs only after every scanned root failed, so the usual
    path never pays for it."""
    if not pruned:
        return []
    spans = sorted(
        (a - _RESCUE_PAD * (b - a), b + _RESCUE_PAD * (b - a)) for a, b in pruned
    )
    windows = [list(spans[0])]
    for lo, hi in spans[1:]:
        if lo <= windows[-1][1]:
            windows[-1][1] = max(windows[-1][1], hi)
        else:
            windows.append([lo, hi])
    out = []
    for lo, hi in windows:
        for a, b in _mp_sweep_signs(theta1, rest, lo, hi, _RESCUE_DEPTH):
            ell = _bisect_root(theta1, rest, a, b)
            if ell is None:
                continue
            ell = float(ell)
            if any(abs(ell - r) <= 1e-9 * max(1.0, r) for r in known_roots):
                continue
            known_roots = known_roots + [ell]
            out.append(ell)
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class EvenGonSolution:
    polygon: Polygon
    ell: float
    roots_seen: tuple
    rejected: tuple  # (ell, reason) pairs for roots that failed validation


def _vet_candidate(ell, rest, k, patterns, rejected):
    """Build the doubled polygon at side length ell and run the
    validation gates; returns the Polygon, or None with the reason
    appended to rejected."""
    built = _doubled_polygon(ell, rest)
    if built is None:
        rejected.append((ell, "coordinates overflow"))
        return None
    doubled, mp_pts, excursion = built
    # junction sub-gaps, measured against the diagonal W0--Wk: both
    # must be genuinely positive or the junction vertex is flat
    try:
        m1 = angle_at(doubled[0], doubled[1], doubled[k])
        mend = angle_at(doubled[k], doubled[k - 1], doubled[0])
    except DomainError:
        rejected.append((ell, "degenerate junction gap"))
        return None
    if m1 <= 1e-12 or mend <= 1e-12:
        rejected.append((ell, "degenerate junction gap"))
        return None
    try:
        poly = Polygon(doubled)
        measured = poly.angles
    except (DomainError, GeometryError, ValueError, OverflowError):
        rejected.append((ell, "degenerate doubled polygon"))
        return None
    # a dented spike (interior angle 2pi - theta) or a root shifted
    # by scan noise breaks the angle pattern by whole radians; an
    # honest root reproduces it to ~1e-8
    mism = min(
        max(abs(ma - ea) for ma, ea in zip(measured, pat))
        for pat in patterns
    )
    if not (mism <= 1e-4):
        rejected.append((ell, f"angle pattern off by {mism:.2e}"))
        return None
    if _candidate_crossing(doubled, mp_pts, excursion):
        rejected.append((ell, "doubled polygon self-intersects"))
        return None
    return poly


def solve_equilateral_even_gon(half_angles, lo: float = SCAN_LO, hi: float = SCAN_HI) -> EvenGonSolution:
    """Equilateral 2k-gon with interior angle pattern (t1, t2..tk) * 2.

    half_angles = (theta1, theta2, ..., thetak); theta1 sits at the two
    junction vertices where the chain meets its half-turn image.  Roots
    of the gap excess are validated from the largest side length down;
    the first that yields positive junction gaps and an embedded
    doubled polygon wins.
    """
    ths = tuple(float(t) for t in half_angles)
    k = len(ths)
    if k < 2:
        raise DomainError("need at least two half-sequence angles (a quadrilateral)")
    for t in ths:
        if not (0.0 < t <= _PI):
            raise DomainError("half-sequence angles must lie in (0, pi]")
    if sum(ths) >= (k - 1) * _PI:
        raise DomainError(
            f"angle sum {sum(ths):.6f} is not hyperbolic: need sum < (k-1)*pi = {(k - 1) * _PI:.6f}"
        )
    theta1, rest = ths[0], ths[1:]
    brackets = _scan_brackets(theta1, rest, lo, hi, SCAN_POINTS, REFINE_DEPTH, REFINE_FACTOR)
    expected = list(ths) + list(ths)
    patterns = (expected, list(reversed(expected)))
    rejected = []
    roots = []
    pruned = []
    # refine lazily from the largest bracket down: each refinement
    # bisects the measured junction angle of the rebuilt polygon, which
    # walks the chain in mpmath for long excursions, so only the
    # candidates actually examined pay for that
    for a, b in sorted(brackets, key=lambda ab: ab[1], reverse=True):
        ell = _bisect_root(theta1, rest, a, b)
        if ell is None:  # phantom bracket: a sign flip of scan noise
            pruned.append((a, b))
            continue
        ell = float(ell)
        roots.append(ell)
        poly = _vet_candidate(ell, rest, k, patterns, rejected)
        if poly is not None:
            return EvenGonSolution(poly, ell, tuple(roots), tuple(rejected))
    # the scan can lose a root pair outright: a spike of the excess
    # crossing zero twice within a few cells reads as noise in float64,
    # and the displaced phantom brackets are then pruned by the exact
    # bisection.  Re-sweep padded windows around the phantoms in mpmath
    # before giving up.
    for ell in _mp_rescue_roots(theta1, rest, pruned, roots):
        roots.append(ell)
        poly = _vet_candidate(ell, rest, k, patterns, rejected)
        if poly is not None:
            return EvenGonSolution(poly, ell, tuple(roots), tuple(rejected))
    if not roots:
        raise ConstructionError(
            f"no side length closes the chain: gap excess has no sign change on "
            f"[{lo:g}, {hi:g}] ({SCAN_POINTS} log-spaced samples, refinement depth {REFINE_DEPTH})"
        )
    raise GeometryError(
        "every closing side length yields a self-intersecting polygon; "
        + "roots tried: " + ", ".join(f"{r:.6g} ({why})" for r, why in rejected)
    )


def equilateral_even_gon(half_angles, lo: float = SCAN_LO, hi: float = SCAN_HI) -> Polygon:
    """Polygon-only wrapper around solve_equilateral_even_gon."""
    return solve_equilateral_even_gon(half_angles, lo=lo, hi=hi).polygon


# ---------------------------------------------------------------------------
# closed-form constructors


def regular_polygon(n: int, angle: float) -> Polygon:
    """Regular n-gon with the given interior angle, centered at the origin."""
    met = regular_metrics(n, angle)  # validates the domain
    verts = [from_polar(met.circumradius, 2.0 * _PI * i / n) for i in range(n)]
    return Polygon(verts)


@dataclass(frozen=True)
class IsoTriangleParams:
    """Isosceles triangle with apex theta1 and base angles theta2 = pi/2 - k*theta1."""

    k: int
    theta1: float
    theta2: float
    area: float

    def tri211(self) -> bool:
        """Does 2k copies of the apex angle plus the two base angles fill pi?"""
        return abs(2 * self.k * self.theta1 + 2 * self.theta2 - _PI) <= 1e-12


def iso_triangle_params(area: float, k=None) -> IsoTriangleParams:
    if not (0.0 < area < _PI):
        raise DomainError("triangle area must lie in (0, pi)")
    if k is None:
        k = 2
        while True:
            th1 = area / (2 * k - 1)
            th2 = 0.5 * _PI - k * th1
            if th2 > 0.0 and th1 < th2:
                break
            k += 1
            if k > 10**6:  # unreachable: th1 -> 0, th2 -> pi/2
                raise ConstructionError("no admissible k found")
    else:
        if not isinstance(k, int) or k < 1:
            raise DomainError("k must be a positive integer")
        th1 = area / (2 * k - 1)
        th2 = 0.5 * _PI - k * th1
        if th2 <= 0.0:
            raise DomainError(f"k={k} makes the base angle non-positive")
        if not th1 < th2:
            raise DomainError(f"k={k} does not give apex angle < base angle")
    return IsoTriangleParams(k, th1, th2, area)


def isosceles_triangle_tile(area: float, k=None):
    """Isosceles triangle of the given area, apex angle area/(2k-1).

    Returns (polygon, params).  The angles satisfy
    theta1 + 2*theta2 = pi - area (Gauss-Bonnet) exactly by choice of
    theta2 = pi/2 - k*theta1.
    """
    par = iso_triangle_params(area, k)
    a, b, c = triangle_from_angles(par.theta1, par.theta2, par.theta2)
    return Polygon([a, b, c]), par


def rhombic_tile(area: float) -> Polygon:
    """Rhombus of the given area: an isosceles triangle of area/2 doubled
    across its base by the half-turn about the base midpoint."""
    if not (0.0 < area < 2.0 * _PI):
        raise DomainError("rhombus area must lie in (0, 2*pi)")
    tri, _ = isosceles_triangle_tile(0.5 * area)
    apex, b1, b2 = tri.vertices
    coshd = -(-b1.x0 * b2.x0 + b1.x1 * b2.x1 + b1.x2 * b2.x2)
    s = math.sqrt(2.0 + 2.0 * coshd)
    mid = HPoint((b1.x0 + b2.x0) / s, (b1.x1 + b2.x1) / s, (b1.x2 + b2.x2) / s)
    apex2 = point_reflect(mid, apex)
    return Polygon([apex, b1, apex2, b2])


@dataclass(frozen=True)
class TileParams:
    """Angle data (theta1 at two opposite vertices, theta elsewhere) for an
    equilateral n-gon tile of prescribed area."""

    n: int
    area: float
    sigma: float
    m: float
    theta1: float
    theta: float


def equilateral_tile_params(n: int, area: float) -> TileParams:
    """Angle parameters for the equilateral n-gon tile of the given area.

    sigma = (n-2) - area/pi measures how far the area is from the
    maximal (n-2)*pi; the multiplicity m is an integer chosen in
    (4/((n-2)*sigma), 2/sigma) when that window reaches past the
    integers, and the rational 4/(n-2) otherwise.  Then

        theta1 = (pi / (m(n-4))) * (2 - m*sigma),
        theta  = 2*pi / (m(n-2)) - theta1.

    The hexagon with area exactly 3*pi falls outside this family (its
    parameters degenerate) and is served by the regular hexagon with
    angle pi/6 instead; ask equilateral_tile for it.
    """
    if not isinstance(n, int) or n < 6 or n % 2 != 0:
        raise DomainError("tile needs an even integer n >= 6")
    if not (0.0 < area < (n - 2) * _PI):
        raise DomainError(f"n-gon area must lie in (0, {(n - 2)}*pi)")
    sigma = (n - 2) - area / _PI
    if n == 6 and abs(sigma - 1.0) < 1e-12:
        raise DomainError(
            "the hexagon of area 3*pi degenerates in this family; "
            "it is the regular hexagon with angle pi/6 (see equilateral_tile)"
        )
    if not (0.0 < sigma < 0.5 * (n - 2)):
        raise DomainError(
            f"tile area must lie in ((n-2)*pi/2, (n-2)*pi); got sigma={sigma:.6f}"
        )
    if sigma < 2.0 * (n - 4) / (n - 2) - 1e-12:
        q = 4.0 / ((n - 2) * sigma)
        # smallest integer strictly above q; the 1e-9 snap keeps areas
        # that make q an exact integer on paper (but not in floats)
        # from selecting the degenerate endpoint
        if abs(q - round(q)) < 1e-9:
            m = int(round(q)) + 1
        else:
            m = int(math.floor(q)) + 1
        if not m < 2.0 / sigma:
            raise DomainError(f"no admissible integer multiplicity for sigma={sigma:.6f}")
        m_val = float(m)
        theta1 = (_PI / (m_val * (n - 4))) * (2.0 - m_val * sigma)
        theta = 2.0 * _PI / (m_val * (n - 2)) - theta1
    else:
        # Same two formulas with m = 4/(n-2) substituted symbolically;
        # going through the rounded quotient costs an ulp on reference
        # inputs like (12, 6*pi) whose angles are exact binary fractions
        # of pi.
        m_val = 4.0 / (n - 2)
        theta1 = _PI * ((n - 2) - 2.0 * sigma) / (2.0 * (n - 4))
        theta = 0.5 * _PI - theta1
    if not (0.0 < theta1 < 0.5 * _PI and 0.0 < theta < 0.5 * _PI):
        raise DomainError(
            f"angle parameters fall outside (0, pi/2): theta1={theta1:.6g}, theta={theta:.6g}"
        )
    return TileParams(n, area, sigma, m_val, theta1, theta)


def equilateral_tile(n: int, area: float) -> Polygon:
    """Embedded equilateral n-gon of the given area whose angles are
    theta1 at two opposite vertices and theta at the rest.

    The hexagon of area exactly 3*pi is returned as the regular
    hexagon with angle pi/6 (the family's parameters degenerate there
    but the regular polygon has the required angle pattern trivially).
    """
    if n == 6 and abs(area - 3.0 * _PI) < 1e-12:
        return regular_polygon(6, regular_angle_for_area(6, area))
    par = equilateral_tile_params(n, area)
    half = (par.theta1,) + (par.theta,) * (n // 2 - 1)
    return equilateral_even_gon(half)
