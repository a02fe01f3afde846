"""Tests for the combinatorial tiling conditions.

The angle-combination enumerator is checked against a brute-force
triple loop; the graph-side audits are checked on the Klein-quartic
heptagon tiling (which attains the average-degree bound) and on a flat
square torus control.
"""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from hyptile.errors import DataError, DomainError, InfeasibleError
from hyptile.tiling import (
    ComboSolution,
    DegreeAudit,
    Face,
    TilingGraph,
    angle_combinations,
    angle_combinations_rational,
    degree_audit,
    graph_from_json,
    graph_to_json,
    gs_condition,
    klein_quartic,
    margulis_check,
    regular_tiles,
    scalene_witness,
    square_torus,
)

TWO_PI = 2.0 * math.pi


def brute_force_combinations(angles, tol):
    """Independent O(prod k_max) recount of nonnegative solutions."""
    kmax = [int(math.floor((TWO_PI + tol) / a)) for a in angles]
    found = set()
    for k1 in range(kmax[0] + 1):
        for k2 in range(kmax[1] + 1):
            for k3 in range(kmax[2] + 1):
                s = k1 * angles[0] + k2 * angles[1] + k3 * angles[2]
                if abs(s - TWO_PI) <= tol:
                    found.add((k1, k2, k3))
    return found


def test_combinations_of_the_right_angle_family():
    angles = [math.pi / 2, math.pi / 3, math.pi / 7]
    sols = angle_combinations(angles)
    got = {s.coefficients for s in sols}
    assert got == {(0, 0, 14), (0, 3, 7), (0, 6, 0), (2, 0, 7), (2, 3, 0), (4, 0, 0)}
    assert got == brute_force_combinations(angles, 1e-9)
    assert all(s.residual <= 1e-9 for s in sols)
    # sorted lexicographically by coefficients
    assert [s.coefficients for s in sols] == sorted(got)


@pytest.mark.parametrize(
    "fracs",
    [
        (Fraction(1, 2), Fraction(1, 3), Fraction(1, 7)),
        (Fraction(2, 5), Fraction(1, 4), Fraction(1, 6)),
        (Fraction(1, 3), Fraction(1, 3), Fraction(1, 5)),
    ],
)
def test_rational_enumeration_agrees_with_float(fracs):
    exact = {s.coefficients for s in angle_combinations_rational(fracs)}
    floats = [float(f) * math.pi for f in fracs]
    approx = {s.coefficients for s in angle_combinations(floats)}
    assert exact == approx
    assert all(s.residual == 0.0 for s in angle_combinations_rational(fracs))


def test_combination_validation():
    with pytest.raises(DomainError):
        angle_combinations([])
    with pytest.raises(DomainError):
        angle_combinations([0.5, -0.1])
    with pytest.raises(DomainError):
        angle_combinations([0.5], tolerance=0.0)
    with pytest.raises(DomainError):
        angle_combinations_rational([Fraction(0)])


def test_gs_condition_cases():
    assert gs_condition([(4, 4, 4)]) is True  # all >= 2, even parity
    assert gs_condition([(3, 3, 3)]) is True  # all >= 2, odd parity
    assert gs_condition([(2, 3, 2)]) is False  # mixed parity
    assert gs_condition([(1, 4, 4)]) is False  # a coefficient below 2
    assert gs_condition([]) is None
    assert gs_condition([(2, 2, 2), (4, 0, 0)]) is None
    # ComboSolution inputs work the same as bare tuples
    assert gs_condition([ComboSolution((3, 3, 3), 0.0)]) is True


def test_regular_tiles_divisibility():
    assert regular_tiles(2 * math.pi / 7)
    assert regular_tiles(math.pi / 2)
    assert not regular_tiles(1.0)
    with pytest.raises(DomainError):
        regular_tiles(0.0)
    with pytest.raises(DomainError):
        regular_tiles(math.pi)


def test_margulis_check_on_right_angles():
    assert margulis_check([math.pi / 2] * 4)
    # 4 * 1.5 leaves 2*pi - 4.5, not a multiple of 1.5
    assert not margulis_check([1.5] * 4)
    assert not margulis_check([math.pi / 2] * 3)  # fewer than 4 angles
    assert not margulis_check([math.pi / 2] * 3 + [2.0])  # an obtuse entry


def test_margulis_check_mixed_values():
    # angles pi/2 and pi/4: any triple's completion exists (everything
    # is a multiple of pi/4)
    assert margulis_check([math.pi / 2, math.pi / 2, math.pi / 4, math.pi / 4])


def test_scalene_witness_realizes_unique_combination():
    ks = (2, 3, 7)
    th = scalene_witness(ks, seed=0)
    assert len(th) == 3
    assert abs(sum(k * t for k, t in zip(ks, th)) - TWO_PI) <= 1e-9
    assert sum(th) < math.pi  # hyperbolic triangle
    gaps = (abs(th[0] - th[1]), abs(th[0] - th[2]), abs(th[1] - th[2]))
    assert min(gaps) > 1e-6  # scalene
    sols = angle_combinations(th)
    assert [s.coefficients for s in sols] == [ks]
    # deterministic for a fixed seed
    assert scalene_witness(ks, seed=0) == th
    assert scalene_witness(ks, seed=1) != th


def test_scalene_witness_needs_a_large_coefficient():
    with pytest.raises(InfeasibleError):
        scalene_witness((2, 2, 2))
    with pytest.raises(DomainError):
        scalene_witness((2, 2))


def test_klein_quartic_counts():
    g = klein_quartic()
    g.validate()
    assert len(g.faces) == 24
    assert all(f.sides == 7 for f in g.faces)
    assert g.edges == 84
    assert len(g.vertex_degrees) == 56
    assert g.chi == -4


def test_klein_quartic_attains_the_degree_bound():
    audit = degree_audit(klein_quartic(), 7)
    assert isinstance(audit, DegreeAudit)
    assert audit.applicability == "hyperbolic"
    assert audit.vbar == 7.0  # 56 vertices of degree 3 over 24 faces
    assert audit.bound_satisfied
    assert audit.equality


def test_square_torus_is_euclidean_control():
    g = square_torus(4)
    g.validate()
    audit = degree_audit(g, 4)
    assert audit.applicability == "euclidean"
    assert audit.vbar == 4.0
    assert audit.bound_satisfied
    assert not audit.equality  # degree-4 vertices


def test_degree_audit_counts_face_labels():
    # one square on a torus: F=1, E=2, V=1 (degree 4), chi = 0
    g = TilingGraph(
        chi=0,
        faces=(Face(4, ("convex", "pi", "convex", "reflex")),),
        vertex_degrees=(4,),
        edges=2,
    )
    audit = degree_audit(g, 2)
    assert (audit.l1, audit.l2) == (1, 1)
    assert audit.face_bound_satisfied  # 1 + 2*1 >= 4 - 2
    tight = degree_audit(g, 1)
    assert tight.l1 == 1 and tight.l2 == 1
    assert tight.face_bound_satisfied  # 3 >= 3
    g_bad = TilingGraph(
        chi=0,
        faces=(Face(4, ("convex", "convex", "convex", "pi")),),
        vertex_degrees=(4,),
        edges=2,
    )
    assert not degree_audit(g_bad, 1).face_bound_satisfied  # 1 < 3


def test_graph_validation_catches_bad_counts():
    with pytest.raises(DataError):
        TilingGraph(0, (Face(4),), (4,), 3).validate()  # sides != 2E
    with pytest.raises(DataError):
        TilingGraph(0, (Face(4),), (3,), 2).validate()  # degrees != 2E
    with pytest.raises(DataError):
        TilingGraph(5, (Face(4),), (4,), 2).validate()  # chi mismatch
    with pytest.raises(DataError):
        TilingGraph(0, (Face(4, ("pi",)),), (4,), 2).validate()  # label count


def test_graph_json_roundtrip():
    for g in (klein_quartic(), square_torus(3)):
        assert graph_from_json(graph_to_json(g)) == g
    labeled = TilingGraph(
        chi=0,
        faces=(Face(4, ("convex", "pi", "convex", "reflex")),),
        vertex_degrees=(4,),
        edges=2,
    )
    assert graph_from_json(graph_to_json(labeled)) == labeled


def test_graph_json_rejects_garbage():
    with pytest.raises(DataError):
        graph_from_json("{broken")
    with pytest.raises(DataError):
        graph_from_json({"chi": 0})
    with pytest.raises(DataError):
        graph_from_json({"chi": 0, "edges": 2, "faces": [{"sides": 4}], "vertices": [{"degree": 5}]})
