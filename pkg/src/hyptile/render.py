"""Poincaré-disk SVG rendering.

Hyperboloid points map to the disk by (x1, x2)/(1 + x0).  A geodesic
maps to the arc of the circle through its endpoints orthogonal to the
unit circle; geodesics through the origin are diameters and render as
straight chords.  Geometry is computed in disk-centered screen units
(so the orthogonal-circle construction, which is scale-covariant but
not translation-covariant, stays valid) and the screen offset is added
only when formatting path commands.
"""

import math

_CHORD_EPS = 1e-12  # |p x q| below this: treat the geodesic as a diameter


def disk_point(p):
    """Poincaré-disk coordinates of a hyperboloid point.

    Exact images lie strictly inside the unit circle, but for very far
    points (r beyond ~18) the quotient rounds onto the rim; those are
    nudged just inside so the rendering keeps the invariant."""
    s = 1.0 + p.x0
    u, v = p.x1 / s, p.x2 / s
    nrm = math.hypot(u, v)
    if nrm >= 1.0:
        f = (1.0 - 1e-9) / nrm
        u, v = u * f, v * f
    return u, v


def _implied_center(p, q, rho, large_arc, sweep):
    """Center of the SVG arc (rx=ry=rho, no rotation) for the flag pair,
    per the standard endpoint-to-center conversion."""
    hx, hy = 0.5 * (p[0] - q[0]), 0.5 * (p[1] - q[1])
    d2 = hx * hx + hy * hy
    num = rho * rho - d2
    c = math.sqrt(max(num, 0.0) / d2) if d2 > 0 else 0.0
    if large_arc == sweep:
        c = -c
    mx, my = 0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1])
    return mx + c * hy, my - c * hx


def _edge_segment(p, q, scale, off):
    """SVG path command from p to q along the hyperbolic geodesic.

    p and q are disk-centered screen points (disk radius = scale); off
    is the screen position of the disk center."""
    px, py = p
    qx, qy = q
    cross = px * qy - py * qx
    if abs(cross) < _CHORD_EPS * scale * scale:
        return f"L {qx + off:.6f} {qy + off:.6f}"
    # orthogonal circle through p and q: 2 w.x = |x|^2 + scale^2
    bp = px * px + py * py + scale * scale
    bq = qx * qx + qy * qy + scale * scale
    wx = 0.5 * (bp * qy - bq * py) / cross
    wy = 0.5 * (bq * px - bp * qx) / cross
    rho = math.sqrt(max((wx - px) ** 2 + (wy - py) ** 2, 0.0))
    # minor arc around w: pick the sweep flag whose implied center is w
    c0 = _implied_center(p, q, rho, 0, 0)
    c1 = _implied_center(p, q, rho, 0, 1)
    d0 = (c0[0] - wx) ** 2 + (c0[1] - wy) ** 2
    d1 = (c1[0] - wx) ** 2 + (c1[1] - wy) ** 2
    sweep = 0 if d0 <= d1 else 1
    return f"A {rho:.6f} {rho:.6f} 0 0 {sweep} {qx + off:.6f} {qy + off:.6f}"


def polygon_svg(polygon, size=560, margin=24, stroke="#1d4f73", fill="#9ec7e0"):
    """Standalone SVG document drawing the polygon in the Poincaré disk."""
    half = size / 2.0
    scale = half - margin

    def _centered(v):
        u, w = disk_point(v)
        return scale * u, -scale * w  # SVG y runs downward

    pts = [_centered(v) for v in polygon.vertices]
    d = [f"M {pts[0][0] + half:.6f} {pts[0][1] + half:.6f}"]
    for i in range(len(pts)):
        d.append(_edge_segment(pts[i], pts[(i + 1) % len(pts)], scale, half))
    d.append("Z")
    path = " ".join(d)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">\n'
        f'  <rect width="{size}" height="{size}" fill="white"/>\n'
        f'  <circle cx="{half}" cy="{half}" r="{scale}" fill="none" '
        f'stroke="#888888" stroke-width="1"/>\n'
        f'  <path d="{path}" fill="{fill}" fill-opacity="0.45" '
        f'stroke="{stroke}" stroke-width="1.5" stroke-linejoin="round"/>\n'
        f"</svg>\n"
    )


def save_svg(polygon, path, **kwargs):
    """Write polygon_svg output to a file."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(polygon_svg(polygon, **kwargs))
