"""Tests for the hyperboloid-model primitives.

Covers the point/isometry layer (Minkowski products, boosts, azimuths,
the point reflection) and the regular-polygon closed forms against
50-digit oracles computed independently with mpmath.
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyptile.core import (
    HPoint,
    ORIGIN,
    angle_at,
    azimuth_from,
    boost_from,
    boost_to,
    dist,
    from_polar,
    identity,
    lift,
    mdot,
    point_reflect,
    regular_angle_for_area,
    regular_metrics,
    rotation,
    side_from_angles,
    translation,
    triangle_from_angles,
)
from hyptile.errors import DomainError

# 50-digit oracles for the regular heptagon with interior angle 2*pi/3
# (mpmath: side = 2*acosh(cos(pi/7)/sin(pi/3)), etc.)
R7_SIDE = "0.56625630673531475233318440733680887439657299419132"
R7_PERIMETER = "3.9637941471472032663322908513576621207760109593392"
R7_CIRCUMRADIUS = "0.62067173755638587163513348933865362118526286487644"
R7_INRADIUS = "0.54527483175354308723044745025066872408608222344419"


finite_radius = st.floats(min_value=0.0, max_value=5.0, allow_nan=False)
azimuth = st.floats(min_value=-math.pi, max_value=math.pi, allow_nan=False)


def hpoints(max_r=5.0):
    return st.builds(
        from_polar,
        st.floats(min_value=0.0, max_value=max_r),
        azimuth,
    )


# ---------------------------------------------------------------------------
# points and products


def test_origin_is_unit_timelike():
    assert ORIGIN.coords() == (1.0, 0.0, 0.0)
    assert mdot(ORIGIN, ORIGIN) == -1.0


@given(x1=st.floats(-20, 20), x2=st.floats(-20, 20))
def test_lift_lands_on_hyperboloid(x1, x2):
    p = lift(x1, x2)
    assert mdot(p, p) == pytest.approx(-1.0, abs=1e-9)
    assert p.x0 >= 1.0


@given(r=finite_radius, phi=azimuth)
def test_from_polar_radius_roundtrip(r, phi):
    p = from_polar(r, phi)
    assert dist(ORIGIN, p) == pytest.approx(r, abs=1e-12)


@given(p=hpoints(), q=hpoints())
def test_dist_symmetric_nonnegative(p, q):
    d = dist(p, q)
    assert d >= 0.0
    assert dist(q, p) == pytest.approx(d, rel=1e-12, abs=1e-12)


@given(p=hpoints(3.0), q=hpoints(3.0), r=hpoints(3.0))
def test_triangle_inequality(p, q, r):
    assert dist(p, r) <= dist(p, q) + dist(q, r) + 1e-9


# ---------------------------------------------------------------------------
# isometries


@given(p=hpoints())
def test_boost_to_sends_point_to_origin(p):
    q = boost_to(p).apply(p)
    assert q.x0 == pytest.approx(1.0, rel=1e-9)
    assert abs(q.x1) <= 1e-7 * max(1.0, p.x0)
    assert abs(q.x2) <= 1e-7 * max(1.0, p.x0)


@given(p=hpoints(), q=hpoints())
def test_boosts_are_mutually_inverse(p, q):
    w = boost_from(p).apply(boost_to(p).apply(q))
    assert w.x0 == pytest.approx(q.x0, rel=1e-9, abs=1e-9)
    assert w.x1 == pytest.approx(q.x1, rel=1e-9, abs=1e-7)
    assert w.x2 == pytest.approx(q.x2, rel=1e-9, abs=1e-7)


@given(p=hpoints(3.0), q=hpoints(3.0), t=st.floats(-2, 2), a=azimuth)
def test_isometries_preserve_distance(p, q, t, a):
    g = translation(t) @ rotation(a)
    assert dist(g.apply(p), g.apply(q)) == pytest.approx(dist(p, q), abs=1e-9)


def test_identity_is_identity():
    m = identity().m
    assert np.allclose(m, np.eye(3))


@given(m=hpoints(3.0), x=hpoints(3.0))
def test_point_reflection_is_involutive_isometry(m, x):
    y = point_reflect(m, x)
    assert dist(m, y) == pytest.approx(dist(m, x), abs=1e-9)
    z = point_reflect(m, y)
    assert dist(z, x) <= 1e-8


def test_point_reflection_about_origin_flips_space_coords():
    p = from_polar(1.3, 0.4)
    q = point_reflect(ORIGIN, p)
    assert q.x0 == pytest.approx(p.x0, rel=1e-15)
    assert q.x1 == pytest.approx(-p.x1, rel=1e-15)
    assert q.x2 == pytest.approx(-p.x2, rel=1e-15)


# ---------------------------------------------------------------------------
# azimuths and angles


@given(p=hpoints(2.0), q=hpoints(2.0), a=azimuth)
def test_azimuth_differences_are_rotation_invariant(p, q, a):
    c = from_polar(0.7, -0.3)
    g = rotation(a)
    d0 = azimuth_from(c, p) - azimuth_from(c, q)
    d1 = azimuth_from(g.apply(c), g.apply(p)) - azimuth_from(g.apply(c), g.apply(q))
    delta = abs(math.remainder(d0 - d1, 2.0 * math.pi))
    assert delta <= 1e-9


def test_azimuth_mp_fallback_agrees_with_float64_path():
    # points straddling the precision-switch radius must give the same
    # azimuth through either evaluation path
    c = from_polar(7.4, 0.3)  # x0 ~ 8.2e2: float64 path
    q = from_polar(7.6, 1.1)  # max x0 ~ 1.0e3: near the switch
    from hyptile.core import _azimuth_mp

    assert azimuth_from(c, q) == pytest.approx(_azimuth_mp(c, q), abs=5e-11)


@given(t1=st.floats(0.05, 1.0), t2=st.floats(0.05, 1.0), t3=st.floats(0.05, 1.0))
def test_triangle_from_angles_reproduces_angles(t1, t2, t3):
    if t1 + t2 + t3 >= math.pi - 1e-3:
        return
    a, b, c = triangle_from_angles(t1, t2, t3)
    assert angle_at(a, b, c) == pytest.approx(t1, abs=1e-9)
    assert angle_at(b, c, a) == pytest.approx(t2, abs=1e-9)
    assert angle_at(c, a, b) == pytest.approx(t3, abs=1e-9)


def test_side_from_angles_euclidean_limit():
    # angle sum -> pi from below forces the side length to zero
    eps = 1e-7
    ln = side_from_angles(math.pi / 3 - eps, math.pi / 3, math.pi / 3)
    assert 0.0 < ln < 1e-3


def test_side_from_angles_rejects_euclidean_and_beyond():
    with pytest.raises(DomainError):
        side_from_angles(math.pi / 3, math.pi / 3, math.pi / 3)
    with pytest.raises(DomainError):
        side_from_angles(1.5, 1.5, 1.5)


# ---------------------------------------------------------------------------
# regular-polygon closed forms


def test_regular_heptagon_matches_oracles():
    met = regular_metrics(7, 2.0 * math.pi / 3.0)
    assert met.side == pytest.approx(float(R7_SIDE), rel=1e-12)
    assert met.perimeter == pytest.approx(float(R7_PERIMETER), rel=1e-12)
    assert met.circumradius == pytest.approx(float(R7_CIRCUMRADIUS), rel=1e-12)
    assert met.inradius == pytest.approx(float(R7_INRADIUS), rel=1e-12)
    assert met.area == pytest.approx(math.pi / 3.0, abs=1e-12)


@given(n=st.integers(3, 40), frac=st.floats(0.02, 0.98))
@settings(max_examples=120)
def test_regular_metrics_internal_consistency(n, frac):
    angle = frac * (n - 2) * math.pi / n
    met = regular_metrics(n, angle)
    # Gauss-Bonnet
    assert met.area == pytest.approx((n - 2) * math.pi - n * angle, rel=1e-12)
    assert met.perimeter == pytest.approx(n * met.side, rel=1e-12)
    # the inradius-circumradius right triangle: cosh R = cosh r * cosh(s/2)
    assert math.cosh(met.circumradius) == pytest.approx(
        math.cosh(met.inradius) * math.cosh(met.side / 2.0), rel=1e-11
    )
    assert regular_angle_for_area(n, met.area) == pytest.approx(angle, rel=1e-12, abs=1e-12)


def test_regular_metrics_rejects_euclidean_square():
    with pytest.raises(DomainError):
        regular_metrics(4, math.pi / 2.0)


def test_regular_metrics_rejects_bad_n_and_angles():
    with pytest.raises(DomainError):
        regular_metrics(2, 0.3)
    with pytest.raises(DomainError):
        regular_metrics(7, 0.0)
    with pytest.raises(DomainError):
        regular_metrics(7, -0.1)
