"""Named verification suites with machine-readable reports.

Each suite re-derives its expectations independently — closed forms,
brute-force enumeration, frozen high-precision oracles — and emits one
record per check: id, description, pass/fail status, the measured
values, and the tolerances applied.  Reports are plain dicts ready for
json.dumps.  Given the same seed a report is reproducible bit for bit;
only the ``timestamp`` and ``runtime_seconds`` fields vary from run to
run.
"""

from __future__ import annotations

import math
import time
from datetime import datetime, timezone

import numpy as np

from . import euclid, sample, tiling
from .construct import (
    equilateral_tile,
    equilateral_tile_params,
    regular_polygon,
    solve_equilateral_even_gon,
)
from .core import regular_angle_for_area, regular_metrics
from .errors import DomainError, InfeasibleError
from .polygon import (
    area,
    concave_vertices,
    convex_hull,
    flatten,
    flatten_complementary_pair,
    insert_degenerate_vertices,
    perimeter,
)

_PI = math.pi

# 50-digit evaluations of the regular-heptagon closed forms at interior
# angle 2*pi/3, frozen from an mpmath run so the float formulas below
# are checked against something sharper than they can produce.
_R7_PERIMETER = "3.9637941471472032663322908513576621207760109593392"
_R7_SIDE = "0.56625630673531475233318440733680887439657299419132"
_R7_CIRCUMRADIUS = "0.62067173755638587163513348933865362118526286487644"
_R7_INRADIUS = "0.54527483175354308723044745025066872408608222344419"


def _rec(checks, cid, description, ok, measured, tolerances):
    checks.append(
        {
            "id": cid,
            "description": description,
            "status": "pass" if bool(ok) else "fail",
            "measured": measured,
            "tolerances": tolerances,
        }
    )


def _pattern_mismatch(angles, expected):
    """Max angle deviation against the expected cycle, orientation-blind."""
    fwd = max(abs(a - e) for a, e in zip(angles, expected))
    rev = max(abs(a - e) for a, e in zip(angles, expected[::-1]))
    return min(fwd, rev)


# ---------------------------------------------------------------------------
# suites


def _suite_heptagon(seed, checks):
    angle = 2.0 * _PI / 3.0
    p = regular_polygon(7, angle)
    gb_area = 5.0 * _PI - math.fsum(p.angles)
    _rec(
        checks,
        "heptagon.area",
        "regular heptagon with interior angle 2pi/3 has angle-deficit area pi/3",
        abs(gb_area - _PI / 3.0) <= 1e-12,
        {"angle_deficit_area": gb_area, "fan_area": area(p), "target": _PI / 3.0},
        {"abs": 1e-12},
    )
    closed = 14.0 * math.acosh(math.cos(_PI / 7.0) / math.sin(_PI / 3.0))
    meas = perimeter(p)
    _rec(
        checks,
        "heptagon.perimeter",
        "measured perimeter of the built heptagon matches 2n*acosh(cos(pi/n)/sin(theta/2))",
        abs(meas - closed) <= 1e-10,
        {"measured": meas, "closed_form": closed, "diff": meas - closed},
        {"abs": 1e-10},
    )
    oracle = float(_R7_PERIMETER)
    _rec(
        checks,
        "heptagon.oracle",
        "closed-form perimeter agrees with the frozen 50-digit value",
        abs(closed - oracle) <= 1e-12 * oracle,
        {"closed_form": closed, "oracle": oracle, "rel_diff": (closed - oracle) / oracle},
        {"rel": 1e-12},
    )
    met = regular_metrics(7, angle)
    devs = {
        "side": abs(met.side - float(_R7_SIDE)) / float(_R7_SIDE),
        "circumradius": abs(met.circumradius - float(_R7_CIRCUMRADIUS)) / float(_R7_CIRCUMRADIUS),
        "inradius": abs(met.inradius - float(_R7_INRADIUS)) / float(_R7_INRADIUS),
    }
    _rec(
        checks,
        "heptagon.metrics",
        "side, circumradius and inradius agree with their frozen 50-digit values",
        max(devs.values()) <= 1e-12,
        {"rel_diffs": devs, "side": met.side, "circumradius": met.circumradius, "inradius": met.inradius},
        {"rel": 1e-12},
    )


def _suite_monotonicity(seed, checks):
    target = _PI / 3.0
    per = []
    for n in range(3, 31):
        met = regular_metrics(n, regular_angle_for_area(n, target))
        per.append(met.perimeter)
    diffs = [b - a for a, b in zip(per, per[1:])]
    _rec(
        checks,
        "monotonicity.decreasing-in-n",
        "at area pi/3 the regular perimeter strictly decreases over n = 3..30",
        all(d < 0.0 for d in diffs),
        {"P_3": per[0], "P_30": per[-1], "max_consecutive_diff": max(diffs)},
        {"strict": "P(n+1) < P(n)"},
    )
    areas = [j / 10.0 * target for j in range(1, 51)]
    areas = [a for a in areas if 0.0 < a < 5.0 * _PI]
    per7 = [regular_metrics(7, regular_angle_for_area(7, a)).perimeter for a in areas]
    diffs7 = [b - a for a, b in zip(per7, per7[1:])]
    _rec(
        checks,
        "monotonicity.increasing-in-area",
        "for n = 7 the regular perimeter strictly increases over areas 0.1..5.0 times pi/3",
        all(d > 0.0 for d in diffs7),
        {"grid_size": len(areas), "P_first": per7[0], "P_last": per7[-1], "min_consecutive_diff": min(diffs7)},
        {"strict": "P(A_{j+1}) > P(A_j)"},
    )


def _suite_evengon(seed, checks):
    rng = np.random.default_rng(seed)
    successes = 0
    worst_spread = 0.0
    worst_angle = 0.0
    embedded_all = True
    trials = 200
    for _ in range(trials):
        k = int(rng.integers(2, 7))
        ths = sample.random_half_angles(rng, k)
        sol = solve_equilateral_even_gon(ths)
        p = sol.polygon
        successes += 1
        worst_spread = max(worst_spread, max(p.sides) - min(p.sides))
        worst_angle = max(worst_angle, _pattern_mismatch(p.angles, list(ths) + list(ths)))
        embedded_all = embedded_all and p.is_embedded
    _rec(
        checks,
        "evengon.success-rate",
        "all 200 random admissible half-angle vectors produce a polygon",
        successes == trials,
        {"successes": successes, "trials": trials},
        {"required": "100%"},
    )
    _rec(
        checks,
        "evengon.equilateral",
        "side-length spread of every solution stays below 1e-9",
        worst_spread < 1e-9,
        {"worst_spread": worst_spread},
        {"abs": 1e-9},
    )
    _rec(
        checks,
        "evengon.angles",
        "interior angles reproduce the doubled half-angle cycle",
        worst_angle <= 1e-8,
        {"worst_angle_mismatch": worst_angle},
        {"abs": 1e-8},
    )
    _rec(
        checks,
        "evengon.embedded",
        "every solution is embedded (no self-crossings)",
        embedded_all,
        {"all_embedded": embedded_all},
        {"required": "all"},
    )
    worst_side = 0.0
    worst_reg_angle = 0.0
    for k in range(2, 7):
        theta = 0.6 * _PI * (k - 1) / k
        sol = solve_equilateral_even_gon([theta] * k)
        met = regular_metrics(2 * k, theta)
        worst_side = max(worst_side, abs(sol.ell - met.side))
        worst_reg_angle = max(worst_reg_angle, max(abs(a - theta) for a in sol.polygon.angles))
    _rec(
        checks,
        "evengon.regular-reproduction",
        "all-equal half-angle inputs reproduce the regular 2k-gon (k = 2..6)",
        worst_side <= 1e-8 and worst_reg_angle <= 1e-8,
        {"worst_side_diff": worst_side, "worst_angle_diff": worst_reg_angle},
        {"abs": 1e-8},
    )


def _suite_tileparams(seed, checks):
    tp1 = equilateral_tile_params(12, 6.0 * _PI)
    exact1 = (
        tp1.sigma == 4.0 and tp1.m == 0.4 and tp1.theta1 == _PI / 8.0 and tp1.theta == 3.0 * _PI / 8.0
    )
    tp2 = equilateral_tile_params(12, 9.5 * _PI)
    exact2 = tp2.m == 1.0 and tp2.theta1 == 3.0 * _PI / 16.0 and tp2.theta == _PI / 80.0
    _rec(
        checks,
        "tileparams.fixtures",
        "(12, 6pi) -> (sigma 4, m 0.4, pi/8, 3pi/8) and (12, 9.5pi) -> (m 1, 3pi/16, pi/80), bit-exact",
        exact1 and exact2,
        {
            "first": {"sigma": tp1.sigma, "m": tp1.m, "theta1": tp1.theta1, "theta": tp1.theta},
            "second": {"m": tp2.m, "theta1": tp2.theta1, "theta": tp2.theta},
        },
        {"comparison": "exact float equality"},
    )
    worst_identity = 0.0
    worst_defect = 0.0
    worst_area = 0.0
    worst_anglesum = 0.0
    min_margin = math.inf
    built = 0
    for n in (6, 8, 10, 12):
        lo, hi = (n - 2) * _PI / 2.0, (n - 2) * _PI
        for j in range(20):
            a = lo + (j + 0.5) / 20.0 * (hi - lo)
            tp = equilateral_tile_params(n, a)
            worst_identity = max(
                worst_identity, abs(tp.m * (n - 2) * (tp.theta1 + tp.theta) - 2.0 * _PI)
            )
            worst_defect = max(
                worst_defect,
                abs(2.0 * tp.theta1 + (n - 2) * tp.theta - ((n - 2) * _PI - a)),
            )
            p = equilateral_tile(n, a)
            built += 1
            worst_area = max(worst_area, abs(area(p) - a))
            min_margin = min(min_margin, _PI / 2.0 - max(p.angles))
            worst_anglesum = max(worst_anglesum, abs(math.fsum(p.angles) - ((n - 2) * _PI - a)))
    _rec(
        checks,
        "tileparams.identities",
        "vertex identity m(n-2)(theta1+theta) = 2pi and the area-angle identity hold on the 80-tile grid",
        worst_identity <= 1e-12 and worst_defect <= 1e-12,
        {"worst_vertex_identity": worst_identity, "worst_area_identity": worst_defect},
        {"abs": 1e-12},
    )
    _rec(
        checks,
        "tileparams.built-area",
        "each built tile's measured area matches the request (n in {6,8,10,12} x 20 areas)",
        built == 80 and worst_area <= 1e-8,
        {"built": built, "worst_area_error": worst_area},
        {"abs": 1e-8},
    )
    _rec(
        checks,
        "tileparams.acute",
        "every interior angle of every built tile is strictly below pi/2",
        min_margin > 0.0,
        {"min_margin_below_half_pi": min_margin},
        {"strict": "max angle < pi/2"},
    )
    _rec(
        checks,
        "tileparams.angle-sum",
        "each built tile's angle sum matches (n-2)pi - area",
        worst_anglesum <= 1e-10,
        {"worst_angle_sum_error": worst_anglesum},
        {"abs": 1e-10},
    )


def _suite_flattening(seed, checks):
    rng = np.random.default_rng(seed)
    trials = 500
    worst_area = 0.0
    min_drop = math.inf
    for _ in range(trials):
        p, v, w = sample.random_polygon_with_complementary_pair(rng)
        q = flatten_complementary_pair(p, v, w)
        worst_area = max(worst_area, abs(area(q) - area(p)))
        min_drop = min(min_drop, perimeter(p) - perimeter(q))
    _rec(
        checks,
        "flattening.area-preserved",
        "flattening an exact complementary pair preserves area (500 random polygons)",
        worst_area <= 1e-9,
        {"trials": trials, "worst_area_change": worst_area},
        {"abs": 1e-9},
    )
    _rec(
        checks,
        "flattening.perimeter-reduced",
        "flattening an exact complementary pair strictly shortens the perimeter",
        min_drop > 0.0,
        {"min_perimeter_drop": min_drop},
        {"strict": "perimeter decreases"},
    )
    worst_dev = 0.0
    sizes_ok = True
    rounds = 100
    for _ in range(rounds):
        n = int(rng.integers(4, 9))
        p = sample.random_star_polygon(rng, n)
        q = insert_degenerate_vertices(p, 0, 3)
        r = flatten(q, 0, 4)
        sizes_ok = sizes_ok and len(r) == len(p)
        # flatten keeps the surviving vertices verbatim but starts its
        # list at the far end of the removed run, so compare as cyclic
        # sequences: the best rotation must match to the tolerance
        dev = min(
            max(
                max(abs(u.x0 - v2.x0), abs(u.x1 - v2.x1), abs(u.x2 - v2.x2))
                for u, v2 in zip(r.vertices, p.vertices[k:] + p.vertices[:k])
            )
            for k in range(len(p))
        )
        worst_dev = max(worst_dev, dev)
    _rec(
        checks,
        "flattening.pi-vertex-noop",
        "flattening across inserted straight-angle vertices restores the original polygon",
        sizes_ok and worst_dev <= 1e-12,
        {"rounds": rounds, "worst_coordinate_change": worst_dev},
        {"abs": 1e-12},
    )


def _suite_hull(seed, checks):
    rng = np.random.default_rng(seed)
    trials = 500
    min_area_slack = math.inf
    min_per_slack = math.inf
    nonconvex = 0
    strict_ok = True
    for _ in range(trials):
        n = int(rng.integers(4, 13))
        p = sample.random_star_polygon(rng, n)
        h = convex_hull(p)
        da = area(h) - area(p)
        dp = perimeter(p) - perimeter(h)
        min_area_slack = min(min_area_slack, da)
        min_per_slack = min(min_per_slack, dp)
        if concave_vertices(p).l2 > 0:
            nonconvex += 1
            strict_ok = strict_ok and da > 0.0 and dp > 0.0
    _rec(
        checks,
        "hull.dominates",
        "convex hull has at least the area and at most the perimeter of the input (500 random polygons)",
        min_area_slack >= -1e-10 and min_per_slack >= -1e-10,
        {"trials": trials, "min_area_slack": min_area_slack, "min_perimeter_slack": min_per_slack},
        {"slack": -1e-10},
    )
    _rec(
        checks,
        "hull.strict-when-reflex",
        "both inequalities are strict whenever the input has a reflex vertex",
        nonconvex > 0 and strict_ok,
        {"nonconvex_inputs": nonconvex, "all_strict": strict_ok},
        {"strict": "area grows, perimeter shrinks"},
    )
    target = _PI / 3.0
    per_n = 1250
    worst_margin = math.inf
    worst_area_dev = 0.0
    for n in range(3, 11):
        pers, areas = sample.isoperimetric_samples(rng, per_n, n, target)
        reg = regular_metrics(n, regular_angle_for_area(n, target)).perimeter
        worst_margin = min(worst_margin, float(pers.min() - reg))
        worst_area_dev = max(worst_area_dev, float(np.abs(areas - target).max()))
    _rec(
        checks,
        "hull.regular-not-beaten",
        "10^4 random simple n-gons (n = 3..10) at area pi/3 never undercut the regular perimeter",
        worst_area_dev <= 1e-6 and worst_margin >= -1e-9,
        {
            "samples": 8 * per_n,
            "worst_area_deviation": worst_area_dev,
            "worst_perimeter_margin": worst_margin,
        },
        {"area_abs": 1e-6, "margin": -1e-9},
    )


def _suite_combinatorics(seed, checks):
    rng = np.random.default_rng(seed)
    angles = [_PI / 2.0, _PI / 3.0, _PI / 7.0]
    sols = {s.coefficients for s in tiling.angle_combinations(angles)}
    brute = set()
    for k1 in range(5):
        for k2 in range(7):
            for k3 in range(15):
                if abs(k1 * angles[0] + k2 * angles[1] + k3 * angles[2] - 2.0 * _PI) <= 1e-9:
                    brute.add((k1, k2, k3))
    expected = {(0, 0, 14), (0, 3, 7), (0, 6, 0), (2, 0, 7), (2, 3, 0), (4, 0, 0)}
    _rec(
        checks,
        "combinatorics.enumeration",
        "angle_combinations on [pi/2, pi/3, pi/7] equals the brute-force solution set",
        sols == brute == expected,
        {"solutions": sorted(sols), "brute_force": sorted(brute)},
        {"residual": 1e-9},
    )
    gs_ok = (
        tiling.gs_condition([(2, 4, 6)]) is True
        and tiling.gs_condition([(1, 3, 5)]) is False
        and tiling.gs_condition([(2, 3, 4)]) is False
        and tiling.gs_condition([(2, 4, 6), (4, 2, 6)]) is None
    )
    _rec(
        checks,
        "combinatorics.gs-condition",
        "unique-solution parity test: (2,4,6) passes, (1,3,5) and (2,3,4) fail, two solutions give None",
        gs_ok,
        {"fixtures_ok": gs_ok},
        {"comparison": "exact"},
    )
    reg_ok = (
        tiling.regular_tiles(2.0 * _PI / 3.0) is True
        and tiling.regular_tiles(_PI / 6.0) is True
        and tiling.regular_tiles(2.0 * _PI / 7.5) is False
    )
    _rec(
        checks,
        "combinatorics.regular-tiles",
        "divides-2pi predicate: 2pi/3 and pi/6 tile, 2pi/7.5 does not",
        reg_ok,
        {"fixtures_ok": reg_ok},
        {"rel": 1e-9},
    )
    tp = equilateral_tile_params(12, 9.5 * _PI)
    marg_ok = (
        tiling.margulis_check([tp.theta1] * 2 + [tp.theta] * 10) is True
        and tiling.margulis_check([_PI / 2.0] * 4) is True
        and tiling.margulis_check([_PI / 2.0] * 3 + [0.7]) is False
    )
    _rec(
        checks,
        "combinatorics.margulis",
        "triple-completion predicate on the (12, 9.5pi) tile angles, four right angles, and a failing set",
        marg_ok,
        {"fixtures_ok": marg_ok},
        {"residual": 1e-9},
    )
    triples = 0
    worst_resid = 0.0
    min_gap = math.inf
    recheck_ok = True
    while triples < 50:
        k = tuple(int(x) for x in rng.integers(2, 9, size=3))
        if max(k) < 3:
            continue
        wit = tiling.scalene_witness(k, seed=int(rng.integers(0, 2**31)))
        ss = tiling.angle_combinations(wit)
        recheck_ok = recheck_ok and len(ss) == 1 and ss[0].coefficients == k
        worst_resid = max(worst_resid, abs(math.fsum(ki * t for ki, t in zip(k, wit)) - 2.0 * _PI))
        gaps = (abs(wit[0] - wit[1]), abs(wit[0] - wit[2]), abs(wit[1] - wit[2]))
        min_gap = min(min_gap, min(gaps))
        triples += 1
    _rec(
        checks,
        "combinatorics.scalene-witnesses",
        "witness triples for 50 random coefficient sets survive the enumeration recheck",
        recheck_ok and worst_resid <= 1e-12 and min_gap > 1e-6,
        {"triples": triples, "worst_residual": worst_resid, "min_pairwise_gap": min_gap},
        {"residual": 1e-12, "gap": 1e-6},
    )
    try:
        tiling.scalene_witness((1, 1, 1))
        infeasible_ok = False
    except InfeasibleError:
        infeasible_ok = True
    _rec(
        checks,
        "combinatorics.scalene-infeasible",
        "coefficients (1,1,1) put the constraint plane outside the open triangle region",
        infeasible_ok,
        {"raises": "InfeasibleError"},
        {"comparison": "exception type"},
    )


def _suite_klein_quartic(seed, checks):
    g = tiling.klein_quartic()
    counts_ok = (
        len(g.faces) == 24
        and all(f.sides == 7 for f in g.faces)
        and g.edges == 84
        and len(g.vertex_degrees) == 56
        and g.chi == -4
    )
    _rec(
        checks,
        "klein-quartic.counts",
        "24 heptagons meeting three per vertex give E = 84, V = 56, chi = -4",
        counts_ok,
        {
            "faces": len(g.faces),
            "edges": g.edges,
            "vertices": len(g.vertex_degrees),
            "chi": g.chi,
        },
        {"comparison": "exact"},
    )
    aud = tiling.degree_audit(g, 7)
    _rec(
        checks,
        "klein-quartic.degree-audit",
        "average heavy-vertex count per face is exactly 7 with the equality flag set",
        aud.vbar == 7.0 and aud.equality and aud.bound_satisfied and aud.applicability == "hyperbolic",
        {
            "vbar": aud.vbar,
            "equality": aud.equality,
            "bound_satisfied": aud.bound_satisfied,
            "applicability": aud.applicability,
        },
        {"comparison": "exact"},
    )
    torus = tiling.degree_audit(tiling.square_torus(4), 7)
    _rec(
        checks,
        "klein-quartic.flat-torus-control",
        "the square flat torus is routed to the Euclidean bound (chi = 0), vbar = 4 <= 6",
        torus.applicability == "euclidean" and torus.vbar == 4.0 and torus.bound_satisfied and not torus.equality,
        {
            "applicability": torus.applicability,
            "vbar": torus.vbar,
            "bound_satisfied": torus.bound_satisfied,
        },
        {"comparison": "exact"},
    )


def _suite_euclid_hex(seed, checks):
    rng = np.random.default_rng(seed)
    a44 = euclid.A_of_n(4.0, 4.0)
    a66 = euclid.A_of_n(6.0, 6.0)
    _rec(
        checks,
        "euclid-hex.closed-forms",
        "A(4, P=4) = 1 and A(6, P=6) = 1.5*sqrt(3)",
        abs(a44 - 1.0) <= 1e-12 and abs(a66 - 1.5 * math.sqrt(3.0)) <= 1e-12,
        {"A_4_4": a44, "A_6_6": a66, "target_6_6": 1.5 * math.sqrt(3.0)},
        {"abs": 1e-12},
    )
    rep = euclid.concavity_report(2.1, 200.0, 1.0)
    _rec(
        checks,
        "euclid-hex.concavity",
        "A(n) is strictly increasing and strictly concave on [2.1, 200]",
        rep.all_concave and rep.all_increasing,
        {
            "samples": rep.samples,
            "max_second_difference": rep.max_second,
            "min_first_difference": rep.min_first,
        },
        {"strict": "first differences > 0, second differences < 0"},
    )
    ns = np.geomspace(6.0, 1e4, 400)
    margins = [
        2.0 * euclid.A_of_n(float(n) / 2.0, 1.0) - euclid.A_of_n(float(n), 1.0) for n in ns
    ]
    halving_ok = all(euclid.halving_inequality(float(n), 1.0) for n in ns)
    _rec(
        checks,
        "euclid-hex.halving",
        "two regular n/2-gons beat one regular n-gon of the same total perimeter on [6, 1e4]",
        halving_ok and min(margins) > 0.0,
        {"grid_size": len(margins), "min_margin": min(margins)},
        {"strict": "A(n) < 2*A(n/2)"},
    )
    trials = 10000
    chain_all = True
    min_jensen = math.inf
    min_six = math.inf
    for _ in range(trials):
        m = int(rng.integers(1, 25))
        counts = rng.integers(2, 11, size=m)
        while counts.mean() > 6.0:
            counts = rng.integers(2, 11, size=m)
        rep_j = euclid.jensen_audit([int(c) for c in counts], 1.0, 0.0)
        chain_all = chain_all and rep_j.chain_holds
        min_jensen = min(min_jensen, rep_j.slack_jensen)
        min_six = min(min_six, rep_j.slack_six)
    _rec(
        checks,
        "euclid-hex.jensen-chain",
        "the area chain holds for 10^4 random side-count vectors with mean <= 6",
        chain_all,
        {"trials": trials, "min_jensen_slack": min_jensen, "min_six_slack": min_six},
        {"slack": -1e-12},
    )
    equality_ok = True
    worst = 0.0
    for m in (1, 2, 3, 5, 8, 16, 37):
        six_rhs = m * euclid.A_of_n(6.0, 1.0)
        rep_j = euclid.jensen_audit([6] * m, 1.0, six_rhs)
        equality_ok = (
            equality_ok
            and rep_j.all_six
            and rep_j.slack_target == 0.0
            and rep_j.slack_jensen == 0.0
            and rep_j.slack_six == 0.0
        )
        worst = max(worst, abs(rep_j.slack_target), abs(rep_j.slack_jensen), abs(rep_j.slack_six))
    _rec(
        checks,
        "euclid-hex.jensen-equality",
        "the chain is tight exactly (all slacks are floating-point zero) at all-6 vectors",
        equality_ok,
        {"worst_slack": worst},
        {"comparison": "exact zero"},
    )


_SUITES = {
    "heptagon": _suite_heptagon,
    "monotonicity": _suite_monotonicity,
    "evengon": _suite_evengon,
    "tileparams": _suite_tileparams,
    "flattening": _suite_flattening,
    "hull": _suite_hull,
    "combinatorics": _suite_combinatorics,
    "klein-quartic": _suite_klein_quartic,
    "euclid-hex": _suite_euclid_hex,
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def run_suite(name: str, seed: int = 0) -> dict:
    """Run one named suite (or 'all') and return its report dict."""
    if name not in SUITE_NAMES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    t0 = time.perf_counter()
    checks = []
    if name == "all":
        for fn in _SUITES.values():
            fn(seed, checks)
    else:
        _SUITES[name](seed, checks)
    failed = sum(1 for c in checks if c["status"] != "pass")
    return {
        "suite": name,
        "seed": int(seed),
        "passed": failed == 0,
        "checks_total": len(checks),
        "checks_failed": failed,
        "checks": checks,
        "runtime_seconds": round(time.perf_counter() - t0, 3),
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
