"""Tests for the polygon constructors.

The closed-form families (regular polygons, isosceles triangles,
rhombi) are checked against their defining identities; the equilateral
even-gon solver is checked on reference tiles whose angle parameters
are exact binary fractions of pi, plus one ultra-spiky regression case
that exercises the multiprecision rescue paths.
"""

from __future__ import annotations

import math

import pytest

from hyptile.construct import (
    Chain,
    EvenGonSolution,
    build_chain,
    equilateral_even_gon,
    equilateral_tile,
    equilateral_tile_params,
    iso_triangle_params,
    isosceles_triangle_tile,
    regular_polygon,
    rhombic_tile,
    solve_equilateral_even_gon,
    walk_polygon,
)
from hyptile.errors import (
    ClosureError,
    ConstructionError,
    DomainError,
    GeometryError,
)
from hyptile.polygon import area

ANGLE_TOL = 1e-10
AREA_TOL = 1e-10


def angle_pattern_error(p, expected):
    """Worst deviation of measured interior angles from the expected list."""
    return max(abs(a - e) for a, e in zip(p.angles, expected))


# ---------------------------------------------------------------------------
# angle parameter families (closed forms)


def test_tile_params_reference_dodecagon_is_bit_exact():
    # area 6*pi sits in the non-integer-multiplicity branch: m = 4/(n-2)
    par = equilateral_tile_params(12, 6 * math.pi)
    assert par.sigma == 4.0
    assert par.m == 0.4
    assert par.theta1 == math.pi / 8
    assert par.theta == 3 * math.pi / 8


def test_tile_params_large_area_dodecagon_is_bit_exact():
    # area 9.5*pi selects integer multiplicity m = 1
    par = equilateral_tile_params(12, 9.5 * math.pi)
    assert par.m == 1.0
    assert par.theta1 == 3 * math.pi / 16
    assert par.theta == math.pi / 80


def test_tile_params_angle_sum_matches_gauss_bonnet():
    for n, frac in [(6, 0.55), (8, 0.71), (10, 0.9), (14, 0.62)]:
        a = frac * (n - 2) * math.pi
        par = equilateral_tile_params(n, a)
        total = 2 * par.theta1 + (n - 2) * par.theta
        assert abs(total - ((n - 2) * math.pi - a)) <= 1e-12 * n


def test_tile_params_domain_errors():
    with pytest.raises(DomainError):
        equilateral_tile_params(7, 4.0)  # odd n
    with pytest.raises(DomainError):
        equilateral_tile_params(4, 1.0)  # n too small
    with pytest.raises(DomainError):
        equilateral_tile_params(8, 2 * math.pi)  # at the half-area floor
    with pytest.raises(DomainError):
        equilateral_tile_params(8, 6 * math.pi)  # at the Gauss-Bonnet ceiling
    with pytest.raises(DomainError):
        equilateral_tile_params(8, -1.0)
    with pytest.raises(DomainError):
        equilateral_tile_params(6, 3 * math.pi)  # degenerate in this family


def test_iso_triangle_params_default_multiplicity():
    par = iso_triangle_params(0.3)
    assert par.k == 2
    assert par.theta1 == 0.3 / 3
    assert par.theta2 == 0.5 * math.pi - 2 * par.theta1
    # theta1 + 2*theta2 = pi - area holds identically by construction
    assert par.tri211()


def test_iso_triangle_params_explicit_multiplicity():
    par = iso_triangle_params(0.3, k=5)
    assert par.theta1 == 0.3 / 9
    assert par.tri211()
    with pytest.raises(DomainError):
        iso_triangle_params(0.3, k=0)
    with pytest.raises(DomainError):
        iso_triangle_params(3.0, k=2)  # base angle driven negative
    with pytest.raises(DomainError):
        iso_triangle_params(1.5, k=1)  # apex not smaller than base
    with pytest.raises(DomainError):
        iso_triangle_params(0.0)
    with pytest.raises(DomainError):
        iso_triangle_params(math.pi)


# ---------------------------------------------------------------------------
# closed-form constructors


def test_isosceles_triangle_tile_realizes_its_parameters():
    tri, par = isosceles_triangle_tile(0.3)
    assert abs(area(tri) - 0.3) <= AREA_TOL
    assert angle_pattern_error(tri, [par.theta1, par.theta2, par.theta2]) <= ANGLE_TOL
    s = tri.sides
    assert abs(s[0] - s[2]) <= 1e-12  # legs flanking the apex match
    assert s[1] < s[0]  # short base opposite the small apex angle


def test_rhombic_tile_shape():
    rh = rhombic_tile(1.0)
    assert len(rh.vertices) == 4
    assert abs(area(rh) - 1.0) <= AREA_TOL
    assert max(rh.sides) - min(rh.sides) <= 1e-12
    # doubling the (area/2 = 0.5, k=2) triangle: its apex angle 0.5/3
    # survives at the two reflected vertices, and the base pair carries
    # 2*theta2 = pi - 4*(0.5/3)
    expected = [0.5 / 3.0, math.pi - 2.0 / 3.0, 0.5 / 3.0, math.pi - 2.0 / 3.0]
    assert angle_pattern_error(rh, expected) <= ANGLE_TOL


def test_rhombic_tile_domain():
    with pytest.raises(DomainError):
        rhombic_tile(0.0)
    with pytest.raises(DomainError):
        rhombic_tile(2 * math.pi)


def test_regular_polygon_validation():
    with pytest.raises(DomainError):
        regular_polygon(2, 0.3)
    with pytest.raises(DomainError):
        regular_polygon(6, 2 * math.pi / 3)  # Euclidean angle sum
    with pytest.raises(DomainError):
        regular_polygon(6, 0.0)


# ---------------------------------------------------------------------------
# open chains and side/angle walks


def test_build_chain_gap_sum_hits_theta1_at_the_solved_root():
    half = (math.pi / 8,) + (3 * math.pi / 8,) * 5
    sol = solve_equilateral_even_gon(half)
    ch = build_chain(sol.ell, half[1:])
    assert isinstance(ch, Chain)
    assert len(ch.vertices) == len(half) + 1
    assert abs(ch.gap_sum - half[0]) <= 1e-9
    assert ch.closed_embedded


def test_build_chain_validation():
    with pytest.raises(DomainError):
        build_chain(0.0, [0.3])
    with pytest.raises(DomainError):
        build_chain(1.0, [])
    with pytest.raises(DomainError):
        build_chain(1.0, [0.3, math.pi])


def test_walk_polygon_reproduces_a_solved_tile():
    tile = equilateral_tile(12, 6 * math.pi)
    q = walk_polygon(tile.sides, tile.angles)
    assert len(q.vertices) == 12
    # the float64 walk re-accumulates rounding over the whole boundary,
    # so the reproduction is loose compared to the solver's own output
    assert abs(area(q) - 6 * math.pi) <= 1e-5


def test_walk_polygon_rejects_non_closing_data():
    with pytest.raises(ClosureError) as exc:
        walk_polygon([1.0, 1.0, 1.0], [0.3, 0.3, 0.4])
    assert exc.value.point_residual > 0


# ---------------------------------------------------------------------------
# equilateral even-gon solver


def test_reference_dodecagon_tile():
    tile = equilateral_tile(12, 6 * math.pi)
    assert abs(area(tile) - 6 * math.pi) <= 1e-12
    assert max(tile.sides) - min(tile.sides) <= 1e-12
    pat = [math.pi / 8] + [3 * math.pi / 8] * 5
    assert angle_pattern_error(tile, pat + pat) <= 1e-12
    assert tile.is_embedded


@pytest.mark.parametrize(
    "n,area_frac",
    [(6, 0.55), (8, 0.8), (10, 0.7), (12, 0.95)],
)
def test_tile_family_area_and_pattern(n, area_frac):
    a = area_frac * (n - 2) * math.pi
    par = equilateral_tile_params(n, a)
    tile = equilateral_tile(n, a)
    assert abs(area(tile) - a) <= AREA_TOL
    pat = [par.theta1] + [par.theta] * (n // 2 - 1)
    assert angle_pattern_error(tile, pat + pat) <= ANGLE_TOL
    assert max(tile.sides) - min(tile.sides) <= 1e-10
    assert tile.is_embedded


def test_hexagon_of_area_three_pi_is_the_regular_one():
    tile = equilateral_tile(6, 3 * math.pi)
    assert abs(area(tile) - 3 * math.pi) <= AREA_TOL
    assert angle_pattern_error(tile, [math.pi / 6] * 6) <= ANGLE_TOL


def test_solver_reports_roots_and_rejections():
    half = (math.pi / 8,) + (3 * math.pi / 8,) * 5
    sol = solve_equilateral_even_gon(half)
    assert isinstance(sol, EvenGonSolution)
    assert sol.ell in sol.roots_seen
    assert all(r > 0 for r in sol.roots_seen)
    assert all(why for _, why in sol.rejected)


def test_solver_validation():
    with pytest.raises(DomainError):
        solve_equilateral_even_gon((0.3,))  # too short
    with pytest.raises(DomainError):
        solve_equilateral_even_gon((0.3, -0.1))
    with pytest.raises(DomainError):
        solve_equilateral_even_gon((3.0, 3.0, 3.0))  # not hyperbolic


def test_solver_raises_when_no_root_in_window():
    half = (math.pi / 8,) + (3 * math.pi / 8,) * 5
    with pytest.raises(ConstructionError):
        solve_equilateral_even_gon(half, lo=1e-6, hi=1e-4)


def test_ultra_spiky_octagon_regression():
    # area just under the 6*pi ceiling: the excess spike is invisible to
    # the float64 scan and the surviving root self-intersects, so both
    # the mpmath rescue sweep and the mpmath crossing verdict must fire
    a = 18.613936069308308
    par = equilateral_tile_params(8, a)
    half = (par.theta1,) + (par.theta,) * 3
    sol = solve_equilateral_even_gon(half)
    assert abs(sol.ell - 16.534872404234136) <= 1e-9
    assert abs(area(sol.polygon) - a) <= 1e-12
    assert any("self-intersects" in why for _, why in sol.rejected)


def test_spiky_octagon_crossing_root_is_refused():
    # restrict the scan window to the self-intersecting root: the solver
    # must refuse it rather than return a bad polygon
    a = 18.613936069308308
    par = equilateral_tile_params(8, a)
    half = (par.theta1,) + (par.theta,) * 3
    with pytest.raises(GeometryError, match="self-intersect"):
        solve_equilateral_even_gon(half, lo=10.0, hi=12.0)


def test_polygon_only_wrapper_matches_solver():
    half = (0.3, 0.5, 0.7)
    assert equilateral_even_gon(half) == solve_equilateral_even_gon(half).polygon
